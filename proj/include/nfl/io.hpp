#pragma once

// Text formats: the JSON function-set document and the fraction CSV.
//
// Function-set document:
//   {
//     "domain_size": 4,
//     "codomain_size": 2,
//     "functions": [[0, 1, 1, 0], [1, 0, 0, 1]],
//     "neighborhood": [[0, 1], [0, 2], [1, 3], [2, 3]],   (optional edge list)
//     "metric": [1, 2, 1]                                  (optional)
//   }
// "metric" holds the strictly-upper-triangular distances in row-major order,
// or the string "absolute" for d(i, j) = |i - j|.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nfl/combinatorics.hpp"
#include "nfl/core.hpp"
#include "nfl/landscape.hpp"

namespace nfl {

struct FunctionSetFile {
    FunctionSet functions;
    std::optional<Neighborhood> neighborhood;
    std::optional<ValueMetric> metric;
    /// Functions in document order, duplicates kept.
    std::vector<FiniteFunction> listed;
};

/// Throws ParseError naming the line/column (syntax) or the field path
/// (schema), e.g. "functions[2][1]: value 5 outside [0,2)".
FunctionSetFile parse_function_set(std::string_view text);
FunctionSetFile read_function_set(const std::string& path);

/// Deterministic rendering, one function per line, LF line endings.
std::string emit_function_set(const FunctionSetFile& doc);

struct FractionRow {
    std::size_t x_size = 0;
    std::size_t y_size = 0;
    BigCount num_histograms;
    /// log10 fraction rendered with exactly six decimals.
    std::string log10_fraction;

    friend bool operator==(const FractionRow&, const FractionRow&) = default;
};

inline constexpr std::string_view kFractionHeader = "x_size,y_size,num_histograms,log10_fraction";

/// "%.6f" without a negative zero.
std::string format_log10(double value);

FractionRow to_row(const FractionCell& cell);
std::string emit_fraction_csv(const std::vector<FractionRow>& rows);
std::vector<FractionRow> parse_fraction_csv(std::string_view text);

}  // namespace nfl
