#include "itdom/verify.hpp"

#include <chrono>
#include <sstream>

#include <nlohmann/json.hpp>

#include "itdom/closed_form.hpp"
#include "itdom/products.hpp"
#include "itdom/solver.hpp"

namespace itdom {

namespace {

using nlohmann::json;

// Copy-weight diagnostics for one optimal witness. Checks, against
// m = gamma_I(copy):
//   - every copy weighs at least m - 1, and weight m - 1 forces root label 0
//   - light copies present => heavy copies dominate the base
//   - light copies present => heavy buckets are exactly the four admissible
//     (root label, copy weight) shapes
//   - light copies present => gamma_I(copy - root) = m - 1
//   - light copies absent <=> the exact value is n * m
bool check_witness(const RootedProduct& rp, const WeightFunction& f, int exact_value, int m_prime,
                   bool& light_nonempty, std::vector<std::string>& problems) {
    bool ok = true;
    auto part = partition_copies_by_weight(rp, f);
    const int m = part.m;

    for (int x = 0; x < rp.base_n(); ++x) {
        int w = part.copy_weights[static_cast<std::size_t>(x)];
        if (w < m - 1) {
            problems.push_back("copy " + std::to_string(x) + " weighs " + std::to_string(w) +
                               " < m-1");
            ok = false;
        }
        if (w == m - 1 && f[rp.labeling().forward(x, rp.root())] != 0) {
            problems.push_back("copy " + std::to_string(x) +
                               " weighs m-1 but its root is labeled positive");
            ok = false;
        }
    }
    if (static_cast<int>(part.heavy.size() + part.light.size()) != rp.base_n()) {
        problems.push_back("heavy/light split does not cover the base");
        ok = false;
    }

    light_nonempty = !part.light.empty();
    if (light_nonempty) {
        if (!is_dominating_set(rp.base(), part.heavy)) {
            problems.push_back("heavy copies fail to dominate the base");
            ok = false;
        }
        if (!part.heavy_other.empty()) {
            problems.push_back("heavy copy outside the four admissible buckets");
            ok = false;
        }
        if (m_prime != m - 1) {
            problems.push_back("light copies present but gamma_I(copy - root) != m-1");
            ok = false;
        }
    }
    if (light_nonempty != (exact_value != rp.base_n() * m)) {
        problems.push_back("light-copy presence disagrees with the value being n*m");
        ok = false;
    }
    return ok;
}

InstanceRecord check_instance(const std::string& base_expr, const Graph& base,
                              const std::string& copy_expr, const Graph& copy, int root,
                              const VerifyOptions& options) {
    InstanceRecord rec;
    rec.base_expr = base_expr;
    rec.copy_expr = copy_expr;
    rec.root = root;
    rec.n_product = base.n() * copy.n();
    rec.degenerate_base = max_degree(base) < 2;

    auto started = std::chrono::steady_clock::now();
    RootedProduct rp = rooted_product(base, copy, root);
    SolveResult exact = rp.product_italian();
    rec.solve_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                             started)
                       .count();
    rec.exact_value = exact.value;
    rec.solver_nodes = exact.nodes_explored;

    const int n = base.n();
    const int m = rp.copy_gamma_i();
    int m_prime = copy.n() == 1 ? 0 : italian_domination_number(remove_vertex(copy, root).graph).value;
    int gamma_g = domination_number(base).value;
    int gamma_i_g = italian_domination_number(base).value;

    rec.membership_ok = exact.value == n * (m - 1) + gamma_g ||
                        exact.value == n * (m - 1) + gamma_i_g || exact.value == n * m;
    if (!rec.membership_ok)
        rec.problems.push_back("exact value outside the three closed-form candidates");

    if (rec.degenerate_base) {
        rec.agree = true; // no classifier claim to contradict
    } else {
        Classification cls = classify(base, copy, root);
        rec.case_tag = to_string(cls.case_tag);
        rec.classified_value = cls.value;
        rec.agree = cls.value == exact.value;
        if (!rec.agree)
            rec.problems.push_back("classifier value " + std::to_string(cls.value) +
                                   " != exact " + std::to_string(exact.value));
    }

    bool witness_light = false;
    rec.witness_ok =
        check_witness(rp, exact.witness, exact.value, m_prime, witness_light, rec.problems);

    if (options.enumerate_small && rec.n_product <= options.enumerate_limit) {
        int count = 0;
        bool all_ok = true;
        bool first = true;
        bool light_uniform = true;
        bool light_first = false;
        for_each_optimal_idf(rp.product(), [&](const WeightFunction& f) {
            ++count;
            bool light = false;
            all_ok = check_witness(rp, f, exact.value, m_prime, light, rec.problems) && all_ok;
            if (first) {
                light_first = light;
                first = false;
            } else if (light != light_first) {
                light_uniform = false;
            }
        });
        if (!light_uniform)
            rec.problems.push_back("light-copy presence differs between optimal witnesses");
        rec.optimal_count = count;
        rec.enumeration_ok = all_ok && light_uniform && count > 0;
    }
    return rec;
}

} // namespace

bool InstanceRecord::clean() const {
    return membership_ok && agree && witness_ok && enumeration_ok;
}

std::string InstanceRecord::describe() const {
    std::ostringstream out;
    out << base_expr << " o_" << root << " " << copy_expr;
    return out.str();
}

ReportSummary summarize(const std::vector<InstanceRecord>& records, double total_ms) {
    ReportSummary s;
    s.total = static_cast<int>(records.size());
    s.total_ms = total_ms;
    for (const auto& rec : records) {
        if (rec.degenerate_base) ++s.degenerate;
        else if (rec.case_tag == "full") ++s.cases_full;
        else if (rec.case_tag == "gamma") ++s.cases_gamma;
        else if (rec.case_tag == "italian") ++s.cases_italian;
        else if (rec.case_tag == "tie") ++s.cases_tie;
        if (!rec.clean()) s.disagreements.push_back(rec.describe());
    }
    s.all_verified = s.disagreements.empty();
    return s;
}

Report run_verify(const InstanceFamily& family, const VerifyOptions& options) {
    auto started = std::chrono::steady_clock::now();
    int cap = std::min(family.max_product_size, options.max_product_size);
    Report report;
    for (const auto& [base_expr, base] : family.bases) {
        for (const auto& copy : family.copies) {
            if (base.n() * copy.graph.n() > cap) continue;
            for (int root : copy.roots)
                report.instances.push_back(
                    check_instance(base_expr, base, copy.expr, copy.graph, root, options));
        }
    }
    double total_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
            .count();
    report.summary = summarize(report.instances, total_ms);
    return report;
}

namespace {

json record_to_json(const InstanceRecord& r) {
    return json{{"base", r.base_expr},
                {"copy", r.copy_expr},
                {"root", r.root},
                {"n_product", r.n_product},
                {"degenerate_base", r.degenerate_base},
                {"exact_value", r.exact_value},
                {"solver_nodes", r.solver_nodes},
                {"solve_ms", r.solve_ms},
                {"case", r.case_tag},
                {"classified_value", r.classified_value},
                {"agree", r.agree},
                {"membership_ok", r.membership_ok},
                {"witness_ok", r.witness_ok},
                {"optimal_count", r.optimal_count},
                {"enumeration_ok", r.enumeration_ok},
                {"problems", r.problems}};
}

InstanceRecord record_from_json(const json& j) {
    InstanceRecord r;
    r.base_expr = j.at("base").get<std::string>();
    r.copy_expr = j.at("copy").get<std::string>();
    r.root = j.at("root").get<int>();
    r.n_product = j.at("n_product").get<int>();
    r.degenerate_base = j.at("degenerate_base").get<bool>();
    r.exact_value = j.at("exact_value").get<int>();
    r.solver_nodes = j.at("solver_nodes").get<std::uint64_t>();
    r.solve_ms = j.at("solve_ms").get<double>();
    r.case_tag = j.at("case").get<std::string>();
    r.classified_value = j.at("classified_value").get<int>();
    r.agree = j.at("agree").get<bool>();
    r.membership_ok = j.at("membership_ok").get<bool>();
    r.witness_ok = j.at("witness_ok").get<bool>();
    r.optimal_count = j.at("optimal_count").get<int>();
    r.enumeration_ok = j.at("enumeration_ok").get<bool>();
    r.problems = j.at("problems").get<std::vector<std::string>>();
    return r;
}

} // namespace

std::string report_to_json(const Report& report) {
    json instances = json::array();
    for (const auto& rec : report.instances) instances.push_back(record_to_json(rec));
    const auto& s = report.summary;
    json j{{"instances", std::move(instances)},
           {"summary",
            {{"total", s.total},
             {"cases_full", s.cases_full},
             {"cases_gamma", s.cases_gamma},
             {"cases_italian", s.cases_italian},
             {"cases_tie", s.cases_tie},
             {"degenerate", s.degenerate},
             {"disagreements", s.disagreements},
             {"all_verified", s.all_verified},
             {"total_ms", s.total_ms}}}};
    return j.dump(2);
}

Report report_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("report JSON: ") + e.what());
    }
    Report report;
    for (const auto& rec : j.at("instances")) report.instances.push_back(record_from_json(rec));
    const auto& s = j.at("summary");
    report.summary.total = s.at("total").get<int>();
    report.summary.cases_full = s.at("cases_full").get<int>();
    report.summary.cases_gamma = s.at("cases_gamma").get<int>();
    report.summary.cases_italian = s.at("cases_italian").get<int>();
    report.summary.cases_tie = s.at("cases_tie").get<int>();
    report.summary.degenerate = s.at("degenerate").get<int>();
    report.summary.disagreements = s.at("disagreements").get<std::vector<std::string>>();
    report.summary.all_verified = s.at("all_verified").get<bool>();
    report.summary.total_ms = s.at("total_ms").get<double>();
    return report;
}

} // namespace itdom
