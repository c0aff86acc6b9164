#pragma once

#include <string>
#include <vector>

#include "itdom/error.hpp"

namespace itdom {

// Vertex labeling f : V -> {0,1,2}, index-aligned with the graph it was
// built for. The induced level sets V_0, V_1, V_2 partition the vertex set
// and the weight is |V_1| + 2|V_2|.
class WeightFunction {
public:
    WeightFunction() = default;
    explicit WeightFunction(std::vector<int> values);

    int size() const { return static_cast<int>(values_.size()); }
    int operator[](int v) const { return values_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& values() const { return values_; }

    int weight() const;
    std::vector<int> level_set(int value) const;

    bool operator==(const WeightFunction&) const = default;

private:
    std::vector<int> values_;
};

std::string to_string(const WeightFunction& f);

} // namespace itdom
