#pragma once

// Exact counting over finite function spaces: binomials, orbit sizes, the
// number of permutation-closed subsets and their fraction of all subsets.

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nfl/core.hpp"

namespace nfl {

/// Arbitrary-precision non-negative integer.
using BigCount = boost::multiprecision::cpp_int;

/// log10 of a ratio in (0, 1] together with the bit lengths of the exact
/// numerator and denominator it was derived from.
struct LogFraction {
    double log10_value = 0.0;
    BigCount numerator_bits;
    BigCount denominator_bits;
};

BigCount binomial(std::uint64_t n, std::uint64_t k);

/// |X|! / prod_y h(y)!, the size of the basis class of `h`.
BigCount multinomial(const Histogram& h);

/// Number of Y-histograms, C(|X|+|Y|-1, |X|).
BigCount count_histograms(SpaceSignature sig);

/// |Y|^|X| as an exact integer.
BigCount count_functions(SpaceSignature sig);

/// Non-empty subsets of Y^X closed under permutation: 2^C(|X|+|Y|-1,|X|) - 1.
/// Throws CapacityError if the exponent exceeds limits.max_count_bits.
BigCount count_cup_subsets(SpaceSignature sig, const Limits& limits = {});

/// All non-empty subsets of Y^X: 2^(|Y|^|X|) - 1.
/// Throws CapacityError if the exponent exceeds limits.max_count_bits.
BigCount count_all_subsets(SpaceSignature sig, const Limits& limits = {});

/// log10(count_cup_subsets / count_all_subsets).
///
/// Both counts have the form 2^k - 1, whose bit length is exactly k, so the
/// ratio is evaluated as
///   (k_cup - k_all) * log10(2) + log10(1 - 2^-k_cup) - log10(1 - 2^-k_all)
/// with the exponent difference formed exactly before conversion. Neither
/// count has to be materialized, so this works past max_count_bits.
LogFraction cup_fraction(SpaceSignature sig);

struct FractionCell {
    SpaceSignature signature;
    BigCount num_histograms;
    LogFraction fraction;
};

/// One cell per (|X|, |Y|) pair; |X| is the outer loop, rows follow the order
/// of the input ranges.
std::vector<FractionCell> fraction_table(std::span<const std::size_t> x_range,
                                         std::span<const std::size_t> y_range);

}  // namespace nfl
