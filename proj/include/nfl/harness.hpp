#pragma once

// Deterministic non-repeating black-box search algorithms, the traces they
// produce, performance tables, and an exhaustive check that every algorithm
// pair sees the same multiset of value sequences over a function set.

#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <boost/rational.hpp>

#include "nfl/combinatorics.hpp"
#include "nfl/core.hpp"
#include "nfl/landscape.hpp"

namespace nfl {

using TraceStep = std::pair<Point, Value>;

/// Visited points with their values; points are pairwise distinct.
using Trace = std::vector<TraceStep>;

/// Values of a trace in visiting order.
using ValueSequence = std::vector<Value>;

using Rational = boost::rational<std::int64_t>;

/// Visits 0, 1, 2, ...
struct Lexicographic {};
/// Visits n-1, n-2, ...
struct ReverseLexicographic {};
/// Picks uniformly-ish among unvisited points using xorshift64*.
struct SeededRandom {
    std::uint64_t seed = 1;
};
/// Best-first walk: expands the best visited point that still has unvisited
/// neighbors (lowest value, then lowest index) by its lowest unvisited
/// neighbor. Starts at 0 and jumps to the lowest unvisited point when no
/// visited point has an unvisited neighbor.
struct GreedyNeighbor {
    Neighborhood neighborhood;
};
/// Next point keyed by the value sequence observed so far.
struct DecisionTree {
    std::map<ValueSequence, Point> next;
};

class SearchAlgorithm {
public:
    using Variant =
        std::variant<Lexicographic, ReverseLexicographic, SeededRandom, GreedyNeighbor, DecisionTree>;

    template <class Alg>
        requires std::constructible_from<Variant, Alg>
    SearchAlgorithm(Alg alg) : v_(std::move(alg)) {}

    [[nodiscard]] const Variant& variant() const noexcept { return v_; }
    /// "lexicographic", "random:7", "tree{...}"
    [[nodiscard]] std::string name() const;

private:
    Variant v_;
};

struct PerformanceMeasure {
    enum class Kind { minimum_value, value_at_step, sum_of_values };
    Kind kind = Kind::minimum_value;
    /// 1-based step for value_at_step.
    std::size_t step = 1;

    static PerformanceMeasure minimum() { return {Kind::minimum_value, 1}; }
    static PerformanceMeasure value_at(std::size_t j) { return {Kind::value_at_step, j}; }
    static PerformanceMeasure sum() { return {Kind::sum_of_values, 1}; }

    [[nodiscard]] std::string name() const;
};

/// Performance value -> number of functions attaining it.
using PerformanceTable = std::map<Rational, BigCount>;

/// Value sequence -> multiplicity.
using SequenceMultiset = std::map<ValueSequence, std::uint64_t>;

struct RunResult {
    Trace trace;
    ValueSequence values;
};

/// Runs `a` on `f` for m steps. Throws ProtocolViolation if the algorithm
/// proposes a visited or out-of-range point, PreconditionError if m > |X|.
RunResult run(const SearchAlgorithm& a, const FiniteFunction& f, std::size_t m);

/// One xorshift64* step: state ^= state >> 12; state ^= state << 25;
/// state ^= state >> 27; output = state * 2685821657736338717 (mod 2^64).
/// Returns (output mod unvisited_count, new state).
std::pair<std::size_t, std::uint64_t> seeded_random_next(std::uint64_t state,
                                                         std::size_t unvisited_count);

/// Replacement used for seed 0, which is a fixed point of xorshift.
inline constexpr std::uint64_t kZeroSeedReplacement = 0x9E3779B97F4A7C15ULL;

Rational performance(const PerformanceMeasure& c, const ValueSequence& ys);

PerformanceTable performance_table(const SearchAlgorithm& a, const FunctionSet& F, std::size_t m,
                                   const PerformanceMeasure& c);

SequenceMultiset sequence_multiset(const SearchAlgorithm& a, const FunctionSet& F, std::size_t m);

/// Number of depth-m decision trees over `sig`:
/// prod_{t<m} (|X|-t)^(|Y|^t).
BigCount count_algorithms(SpaceSignature sig, std::size_t m);

/// Every deterministic non-repeating decision tree of depth m, each once.
/// Throws CapacityError above limits.enumeration_cap.
std::vector<SearchAlgorithm> enumerate_algorithms(SpaceSignature sig, std::size_t m,
                                                  const Limits& limits = {});

struct NflReport {
    bool equal_for_all_pairs = true;
    /// First pair of algorithm indices (i < j) with differing multisets.
    std::optional<std::pair<std::size_t, std::size_t>> witness;
    /// equal[i][j]: algorithms i and j produce the same sequence multiset.
    std::vector<std::vector<bool>> equal;
};

NflReport verify_nfl(const FunctionSet& F, std::size_t m,
                     const std::vector<SearchAlgorithm>& algorithms);

}  // namespace nfl
