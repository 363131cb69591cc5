#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace rainbow {

using Rational = boost::rational<long long>;

long long floor_of(const Rational& x);
long long ceil_of(const Rational& x);
std::string to_string(const Rational& x);

struct BoundParams {
    int n = 0;
    int k = 0;
    int q = 0;
};

struct BoundRecord {
    std::string tag;
    /// "P8", "C6", "W7,C6", ...
    std::string family;
    /// "ar" for anti-Ramsey values, "ex" for planar Turan numbers.
    std::string quantity = "ar";
    BoundParams params;
    /// Residue used by the formula, when it has one.
    std::optional<int> r;
    std::optional<Rational> lower;
    std::optional<Rational> upper;
    /// Human-readable name of the result the formula comes from.
    std::string source;
};

/// Every tag eval_bound understands.
const std::vector<std::string>& bound_tags();

/// Exact evaluation; OutOfRange when the parameters fall outside the
/// formula's stated range.
BoundRecord eval_bound(std::string_view tag, const BoundParams& params);

/// Whether eval_bound(tag, params) would succeed.
bool in_range(std::string_view tag, const BoundParams& params);

struct ConsistencyGrid {
    int n_min = 8;
    int n_max = 200;
    std::vector<int> cycle_lengths{5, 6, 7};
    /// Also compare the wheel corollary, as printed, with the wheel bounds.
    bool wheel_corollary = false;
    int wheel_q_max = 30;
};

struct Violation {
    std::string what;
    BoundRecord first;
    BoundRecord second;
};

struct ConsistencyReport {
    int comparisons = 0;
    std::vector<BoundRecord> records;
    std::vector<Violation> violations;
};

ConsistencyReport consistency_report(const ConsistencyGrid& grid = {});

enum class TableFormat { Text, Csv };

/// Columns: family, params, lower, upper, source.
std::string format_table(const std::vector<BoundRecord>& records, TableFormat format);

} // namespace rainbow
