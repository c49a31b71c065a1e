#pragma once

// Finite function spaces Y^X, permutations of X, Y-histograms and the
// permutation orbits they index.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nfl/errors.hpp"

namespace nfl {

/// Index of a search point in X.
using Point = std::uint32_t;
/// Index of a cost value in Y.
using Value = std::uint32_t;

/// Enumeration caps. Every exhaustive routine checks its input against these
/// and throws CapacityError instead of running away.
struct Limits {
    /// Maximum number of functions / orbit members / algorithms materialized.
    std::uint64_t enumeration_cap = std::uint64_t{1} << 24;
    /// Maximum |X| accepted by orbit().
    std::size_t max_orbit_domain = 12;
    /// Maximum bit count accepted by hypercube_neighborhood().
    std::size_t max_hypercube_bits = 20;
    /// Maximum exponent for which 2^k - 1 subset counts are materialized.
    std::uint64_t max_count_bits = std::uint64_t{1} << 24;
};

struct SpaceSignature {
    std::size_t domain_size = 1;
    std::size_t codomain_size = 1;

    SpaceSignature() = default;
    SpaceSignature(std::size_t domain, std::size_t codomain);

    /// |Y|^|X| if it does not exceed `cap`, otherwise nullopt.
    [[nodiscard]] std::optional<std::uint64_t> function_count(std::uint64_t cap) const;
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const SpaceSignature&, const SpaceSignature&) = default;
    friend auto operator<=>(const SpaceSignature&, const SpaceSignature&) = default;
};

/// A total map X -> Y stored as its value array.
class FiniteFunction {
public:
    FiniteFunction(SpaceSignature sig, std::vector<Value> values);

    [[nodiscard]] const SpaceSignature& signature() const noexcept { return sig_; }
    [[nodiscard]] std::span<const Value> values() const noexcept { return values_; }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] Value operator()(Point x) const { return values_.at(x); }
    [[nodiscard]] Value operator[](std::size_t x) const noexcept { return values_[x]; }

    /// "[0,1,1]"
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const FiniteFunction&, const FiniteFunction&) = default;
    friend auto operator<=>(const FiniteFunction& a, const FiniteFunction& b) {
        if (auto c = a.sig_ <=> b.sig_; c != 0) return c;
        return a.values_ <=> b.values_;
    }

private:
    SpaceSignature sig_;
    std::vector<Value> values_;
};

/// A bijection of {0, ..., n-1}.
class Permutation {
public:
    explicit Permutation(std::vector<Point> mapping);

    static Permutation identity(std::size_t n);

    [[nodiscard]] std::span<const Point> mapping() const noexcept { return mapping_; }
    [[nodiscard]] std::size_t size() const noexcept { return mapping_.size(); }
    [[nodiscard]] Point operator()(Point x) const { return mapping_.at(x); }
    [[nodiscard]] Point operator[](std::size_t x) const noexcept { return mapping_[x]; }
    [[nodiscard]] Permutation inverse() const;
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<Point> mapping_;
};

/// Preimage sizes h(y) = |f^{-1}(y)|; sums to |X|.
class Histogram {
public:
    Histogram(SpaceSignature sig, std::vector<std::size_t> counts);

    [[nodiscard]] const SpaceSignature& signature() const noexcept { return sig_; }
    [[nodiscard]] std::span<const std::size_t> counts() const noexcept { return counts_; }
    [[nodiscard]] std::size_t operator[](Value y) const noexcept { return counts_[y]; }

    /// The lexicographically smallest function with this histogram
    /// (values sorted ascending).
    [[nodiscard]] FiniteFunction canonical_function() const;
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Histogram&, const Histogram&) = default;

private:
    SpaceSignature sig_;
    std::vector<std::size_t> counts_;
};

/// Canonical histogram order: the order enumerate_histograms() yields, i.e.
/// descending lexicographic on the count vector ([2,0] before [1,1]).
struct HistogramOrder {
    bool operator()(const Histogram& a, const Histogram& b) const;
};

/// A deduplicated set of functions over one signature, kept sorted by value
/// array.
class FunctionSet {
public:
    explicit FunctionSet(SpaceSignature sig);
    FunctionSet(SpaceSignature sig, std::vector<FiniteFunction> members);

    [[nodiscard]] const SpaceSignature& signature() const noexcept { return sig_; }
    [[nodiscard]] std::span<const FiniteFunction> members() const noexcept { return members_; }
    [[nodiscard]] std::size_t size() const noexcept { return members_.size(); }
    [[nodiscard]] bool empty() const noexcept { return members_.empty(); }
    [[nodiscard]] bool contains(const FiniteFunction& f) const;
    [[nodiscard]] bool is_subset_of(const FunctionSet& other) const;

    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }

    /// Union of two sets over the same signature.
    [[nodiscard]] FunctionSet merged_with(const FunctionSet& other) const;

    friend bool operator==(const FunctionSet&, const FunctionSet&) = default;

private:
    SpaceSignature sig_;
    std::vector<FiniteFunction> members_;
};

/// (f o p)(x) = f(p(x)), i.e. result[i] = f[p[i]].
FiniteFunction compose(const FiniteFunction& f, const Permutation& p);

/// (p o q)[i] = p[q[i]], so compose(compose(f, p), q) == compose(f, compose(p, q)).
Permutation compose(const Permutation& p, const Permutation& q);

Histogram histogram_of(const FiniteFunction& f);

/// Returns p with compose(f, p) == g when the histograms agree, nullopt
/// otherwise. Inside every preimage class g^{-1}(y) the k-th smallest point is
/// sent to the k-th smallest point of f^{-1}(y).
std::optional<Permutation> find_permutation(const FiniteFunction& f, const FiniteFunction& g);

/// The permutation orbit of f, which is the basis class of its histogram.
/// Enumerates distinct rearrangements of the value array.
FunctionSet orbit(const FiniteFunction& f, const Limits& limits = {});

/// Calls visit(values) for every distinct rearrangement of `h`'s canonical
/// value array, in lexicographic order, without materializing the orbit.
/// Stops early when visit returns false.
template <class Visitor>
void for_each_rearrangement(const Histogram& h, Visitor&& visit) {
    auto seed = h.canonical_function();
    std::vector<Value> values(seed.values().begin(), seed.values().end());
    do {
        if (!visit(std::span<const Value>(values))) return;
    } while (std::next_permutation(values.begin(), values.end()));
}

/// Input range over all of Y^X in lexicographic order of value arrays.
class FunctionRange {
public:
    class iterator {
    public:
        using value_type = FiniteFunction;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        FiniteFunction operator*() const { return FiniteFunction(sig_, values_); }
        iterator& operator++();
        void operator++(int) { ++*this; }
        bool operator==(std::default_sentinel_t) const noexcept { return done_; }

    private:
        friend class FunctionRange;
        iterator(SpaceSignature sig) : sig_(sig), values_(sig.domain_size, 0) {}
        SpaceSignature sig_;
        std::vector<Value> values_;
        bool done_ = false;
    };

    [[nodiscard]] iterator begin() const { return iterator(sig_); }
    [[nodiscard]] std::default_sentinel_t end() const noexcept { return {}; }
    [[nodiscard]] std::uint64_t size() const noexcept { return count_; }

private:
    friend FunctionRange enumerate_functions(SpaceSignature, const Limits&);
    FunctionRange(SpaceSignature sig, std::uint64_t count) : sig_(sig), count_(count) {}
    SpaceSignature sig_;
    std::uint64_t count_;
};

FunctionRange enumerate_functions(SpaceSignature sig, const Limits& limits = {});

/// The whole space Y^X as a FunctionSet.
FunctionSet full_space(SpaceSignature sig, const Limits& limits = {});

/// Input range over all C(|X|+|Y|-1, |X|) histograms in HistogramOrder.
class HistogramRange {
public:
    class iterator {
    public:
        using value_type = Histogram;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        Histogram operator*() const { return Histogram(sig_, counts_); }
        iterator& operator++();
        void operator++(int) { ++*this; }
        bool operator==(std::default_sentinel_t) const noexcept { return done_; }

    private:
        friend class HistogramRange;
        explicit iterator(SpaceSignature sig);
        SpaceSignature sig_;
        std::vector<std::size_t> counts_;
        bool done_ = false;
    };

    explicit HistogramRange(SpaceSignature sig) : sig_(sig) {}
    [[nodiscard]] iterator begin() const { return iterator(sig_); }
    [[nodiscard]] std::default_sentinel_t end() const noexcept { return {}; }

private:
    SpaceSignature sig_;
};

inline HistogramRange enumerate_histograms(SpaceSignature sig) { return HistogramRange(sig); }

}  // namespace nfl
