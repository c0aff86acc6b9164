#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "itdom/family.hpp"

namespace itdom {

// One (base, copy, root) instance of a verification sweep. The classifier
// result is compared against the exact product solve; on top of that every
// instance gets structural diagnostics on one optimal witness, and small
// products (n <= 12) on all optimal witnesses.
struct InstanceRecord {
    std::string base_expr;
    std::string copy_expr;
    int root = 0;
    int n_product = 0;
    bool degenerate_base = false; // max degree of base < 2: membership check only

    int exact_value = 0;
    std::uint64_t solver_nodes = 0;
    double solve_ms = 0.0;

    std::string case_tag;       // "full" | "gamma" | "italian" | "tie"; empty when degenerate
    int classified_value = -1;  // -1 when degenerate
    bool agree = false;         // classifier matched the exact value (vacuously true when degenerate)
    bool membership_ok = false; // exact value is one of the three closed-form candidates

    bool witness_ok = false;    // copy-weight diagnostics on the returned witness
    int optimal_count = -1;     // optimal IDFs of the product, when enumerated (n <= 12)
    bool enumeration_ok = true; // diagnostics over all optimal witnesses, when enumerated

    std::vector<std::string> problems; // human-readable reasons for any failed flag

    bool clean() const;
    std::string describe() const;

    bool operator==(const InstanceRecord&) const = default;
};

struct ReportSummary {
    int total = 0;
    int cases_full = 0;
    int cases_gamma = 0;
    int cases_italian = 0;
    int cases_tie = 0;
    int degenerate = 0;
    std::vector<std::string> disagreements;
    bool all_verified = false;
    double total_ms = 0.0;

    bool operator==(const ReportSummary&) const = default;
};

struct Report {
    std::vector<InstanceRecord> instances;
    ReportSummary summary;

    bool operator==(const Report&) const = default;
};

struct VerifyOptions {
    int max_product_size = 30; // overrides the family cap when smaller
    bool enumerate_small = true;
    int enumerate_limit = 12; // full enumeration of optimal witnesses up to this order
};

// Runs the sweep over the family and assembles the report in family order.
Report run_verify(const InstanceFamily& family, const VerifyOptions& options = {});

ReportSummary summarize(const std::vector<InstanceRecord>& records, double total_ms);

std::string report_to_json(const Report& report);
Report report_from_json(const std::string& text);

} // namespace itdom
