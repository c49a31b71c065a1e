#include "nfl/combinatorics.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace nfl {

namespace {

// log10(1 - 2^-k) for k >= 1.
double log10_one_minus_pow2(const BigCount& k) {
    if (k > 1100) return 0.0;  // below double resolution
    const double eps = std::ldexp(1.0, -static_cast<int>(k));
    return std::log1p(-eps) / std::numbers::ln10;
}

BigCount mersenne(const BigCount& exponent, const Limits& limits, const char* what) {
    if (exponent > limits.max_count_bits)
        throw CapacityError(std::string(what) + " needs 2^" + exponent.str() +
                            " which exceeds the bit cap " + std::to_string(limits.max_count_bits));
    BigCount one = 1;
    return (one << static_cast<unsigned>(exponent)) - 1;
}

}  // namespace

BigCount binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigCount result = 1;
    // After step i the accumulator is C(n-k+i, i), so every division is exact.
    for (std::uint64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

BigCount multinomial(const Histogram& h) {
    BigCount result = 1;
    std::uint64_t placed = 0;
    for (std::size_t c : h.counts()) {
        placed += c;
        result *= binomial(placed, c);
    }
    return result;
}

BigCount count_histograms(SpaceSignature sig) {
    return binomial(sig.domain_size + sig.codomain_size - 1, sig.domain_size);
}

BigCount count_functions(SpaceSignature sig) {
    return boost::multiprecision::pow(BigCount(sig.codomain_size),
                                      static_cast<unsigned>(sig.domain_size));
}

BigCount count_cup_subsets(SpaceSignature sig, const Limits& limits) {
    return mersenne(count_histograms(sig), limits, "count_cup_subsets");
}

BigCount count_all_subsets(SpaceSignature sig, const Limits& limits) {
    return mersenne(count_functions(sig), limits, "count_all_subsets");
}

LogFraction cup_fraction(SpaceSignature sig) {
    LogFraction out;
    out.numerator_bits = count_histograms(sig);
    out.denominator_bits = count_functions(sig);
    const BigCount gap = out.denominator_bits - out.numerator_bits;  // >= 0
    const double main_term = -static_cast<double>(gap) * (std::numbers::ln2 / std::numbers::ln10);
    const double value = main_term + log10_one_minus_pow2(out.numerator_bits) -
                         log10_one_minus_pow2(out.denominator_bits);
    // Equal exponents give exactly 0; never report a positive rounding residue.
    out.log10_value = gap == 0 ? 0.0 : std::min(value, 0.0);
    return out;
}

std::vector<FractionCell> fraction_table(std::span<const std::size_t> x_range,
                                         std::span<const std::size_t> y_range) {
    if (x_range.empty() || y_range.empty())
        throw InvalidArgument("fraction_table needs non-empty |X| and |Y| ranges");
    std::vector<FractionCell> rows;
    rows.reserve(x_range.size() * y_range.size());
    for (std::size_t x : x_range)
        for (std::size_t y : y_range) {
            SpaceSignature sig(x, y);
            rows.push_back({sig, count_histograms(sig), cup_fraction(sig)});
        }
    return rows;
}

}  // namespace nfl
