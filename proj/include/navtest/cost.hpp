#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace navtest {

/// Exact edge-cost arithmetic. Link weights are rationals so that sums and
/// comparisons in tour costing never drift.
using Cost = boost::rational<std::int64_t>;

/// Parses "3", "-2", "0.25" or "3/4" into an exact rational.
/// Throws Error(fixture_syntax) on anything else.
Cost parse_cost(const std::string& text);

/// "3", "3/4" — integers print without a denominator.
std::string cost_to_string(const Cost& c);

/// Decimal rendering for CSV output ("1.5"); falls back to num/den when the
/// denominator is not a power of 2 or 5 times a power of 10 within 6 digits.
std::string cost_to_decimal(const Cost& c);

} // namespace navtest
