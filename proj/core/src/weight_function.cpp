#include "itdom/weight_function.hpp"

#include <numeric>
#include <sstream>

namespace itdom {

WeightFunction::WeightFunction(std::vector<int> values) : values_(std::move(values)) {
    for (int v : values_)
        if (v < 0 || v > 2)
            throw Error(ErrorKind::ShapeError, "label " + std::to_string(v) + " not in {0,1,2}");
}

int WeightFunction::weight() const {
    return std::accumulate(values_.begin(), values_.end(), 0);
}

std::vector<int> WeightFunction::level_set(int value) const {
    std::vector<int> out;
    for (int v = 0; v < size(); ++v)
        if (values_[static_cast<std::size_t>(v)] == value) out.push_back(v);
    return out;
}

std::string to_string(const WeightFunction& f) {
    std::ostringstream out;
    for (int v = 0; v < f.size(); ++v) {
        if (v) out << ' ';
        out << f[v];
    }
    return out.str();
}

} // namespace itdom
