#pragma once

// Neighborhood relations on X and the function measures defined on top of
// them: maximum steepness, range diameter and local minima, plus the
// constraint classes they induce and constructive witnesses that such
// classes are not closed under permutation.

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "nfl/core.hpp"

namespace nfl {

using Edge = std::pair<Point, Point>;

/// Symmetric, irreflexive relation on {0, ..., n-1}, stored as sorted
/// adjacency lists.
class Neighborhood {
public:
    /// Self-loops are rejected; duplicate and reversed edges collapse.
    static Neighborhood from_edges(std::size_t domain_size, std::span<const Edge> edges);
    /// Requires a square, symmetric matrix with a false diagonal.
    static Neighborhood from_matrix(const std::vector<std::vector<bool>>& adjacency);

    [[nodiscard]] std::size_t domain_size() const noexcept { return adj_.size(); }
    [[nodiscard]] bool adjacent(Point a, Point b) const;
    [[nodiscard]] std::span<const Point> neighbors(Point x) const { return adj_.at(x); }
    [[nodiscard]] std::size_t edge_count() const noexcept { return edge_count_; }
    /// Edges (a, b) with a < b, lexicographically ordered.
    [[nodiscard]] std::vector<Edge> edges() const;

    friend bool operator==(const Neighborhood&, const Neighborhood&) = default;

private:
    friend Neighborhood hypercube_neighborhood(std::size_t, const Limits&);
    friend Neighborhood product_neighborhood(std::span<const std::size_t>, std::size_t,
                                             const Neighborhood&, const Limits&);
    explicit Neighborhood(std::vector<std::vector<Point>> adj);
    std::vector<std::vector<Point>> adj_;
    std::size_t edge_count_ = 0;
};

/// Distances between cost values: symmetric, zero diagonal, positive
/// off-diagonal. The triangle inequality is not required.
class ValueMetric {
public:
    /// d(i, j) = |i - j|.
    static ValueMetric absolute_difference(std::size_t codomain_size);
    /// Strictly-upper-triangular entries in row-major order:
    /// d(0,1), d(0,2), ..., d(0,m-1), d(1,2), ...
    static ValueMetric from_upper_triangle(std::size_t codomain_size,
                                           std::span<const double> distances);

    [[nodiscard]] std::size_t codomain_size() const noexcept { return size_; }
    [[nodiscard]] double operator()(Value a, Value b) const { return d_[a * size_ + b]; }
    [[nodiscard]] bool satisfies_triangle_inequality() const;
    [[nodiscard]] std::vector<double> upper_triangle() const;

    friend bool operator==(const ValueMetric&, const ValueMetric&) = default;

private:
    ValueMetric(std::size_t size, std::vector<double> d) : size_(size), d_(std::move(d)) {}
    std::size_t size_;
    std::vector<double> d_;
};

enum class ConstraintKind { steepness, local_minima };

/// { f in Y^X : measure(f) < bound } for a neighborhood-based measure.
struct ConstraintClass {
    SpaceSignature signature;
    Neighborhood neighborhood;
    ConstraintKind kind = ConstraintKind::steepness;
    /// Compared with max_steepness(f) or count_local_minima(f).
    double bound = 0.0;
    /// Required for steepness classes.
    std::optional<ValueMetric> metric;

    static ConstraintClass steepness(SpaceSignature sig, Neighborhood nb, ValueMetric metric,
                                     double bound);
    static ConstraintClass local_minima(SpaceSignature sig, Neighborhood nb, std::size_t bound);

    [[nodiscard]] double measure(const FiniteFunction& f) const;
    [[nodiscard]] bool admits(const FiniteFunction& f) const { return measure(f) < bound; }
};

/// Some distinct pair is neighbored and some distinct pair is not.
bool is_nontrivial(const Neighborhood& nb);

/// Lowest pair (a, b), a < b, with n(a, b) != n(p(a), p(b)), if any.
std::optional<Edge> invariance_violation(const Neighborhood& nb, const Permutation& p);

/// Maps the lowest non-neighbor pair (i, j) onto the lowest neighbor pair
/// (k, l), i.e. p(i) = k and p(j) = l, and fills the remaining positions with
/// the remaining targets in ascending order. Invariance then fails at (i, j).
/// Throws PreconditionError for trivial neighborhoods.
Permutation find_noninvariant_permutation(const Neighborhood& nb);

/// Hamming-distance-one relation on {0,1}^bits, points read as bit strings.
Neighborhood hypercube_neighborhood(std::size_t bits, const Limits& limits = {});

/// Relation on the product X_1 x ... x X_l (first component most significant)
/// in which two points are neighbors iff their `component_index`-th
/// coordinates are neighbors under `component_nb`.
Neighborhood product_neighborhood(std::span<const std::size_t> component_sizes,
                                  std::size_t component_index, const Neighborhood& component_nb,
                                  const Limits& limits = {});

/// Largest metric distance across a neighbor pair; 0 without edges.
double max_steepness(const FiniteFunction& f, const Neighborhood& nb, const ValueMetric& dm);

/// Largest metric distance across any pair of points.
double range_diameter(const FiniteFunction& f, const ValueMetric& dm);

/// Points whose value is strictly below every neighbor's value. Isolated
/// points qualify vacuously.
std::size_t count_local_minima(const FiniteFunction& f, const Neighborhood& nb);
std::size_t count_local_minima(std::span<const Value> values, const Neighborhood& nb);

/// Maximum of count_local_minima over the basis class of `h`.
std::size_t max_minima_over_histogram(const Histogram& h, const Neighborhood& nb,
                                      const Limits& limits = {});

/// First member of the basis class of `h` (lexicographic order) attaining
/// max_minima_over_histogram.
FiniteFunction max_minima_arrangement(const Histogram& h, const Neighborhood& nb,
                                      const Limits& limits = {});

/// Filters Y^X by the class constraint.
FunctionSet build_constraint_class(const ConstraintClass& cc, const Limits& limits = {});

struct NotCupWitness {
    /// Member of F.
    FiniteFunction g;
    Permutation p;
    /// compose(g, p), which lies outside F.
    FiniteFunction image;
    /// cc.measure(image), at least cc.bound.
    double violated_value;
};

/// Builds g in F and p such that compose(g, p) breaks the class constraint.
///
/// Steepness: g is the first member with maximal range diameter D; p sends
/// the lowest neighbor pair (k, l) onto g's lowest extremal pair (i, j), so
/// compose(g, p) has steepness D. Requires a non-trivial neighborhood and
/// bound <= D.
///
/// Local minima: g is the first member whose basis class has the largest
/// l^max = L; p = find_permutation(g, t) for the first arrangement t of that
/// class with L minima. Requires bound <= L.
///
/// Throws PreconditionError when F is empty or the bound is not binding.
NotCupWitness witness_not_cup(const FunctionSet& F, const ConstraintClass& cc,
                              const Limits& limits = {});

}  // namespace nfl
