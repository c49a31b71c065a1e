#include "nfl/landscape.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nfl/combinatorics.hpp"

namespace nfl {

namespace {

void require_domain(const Neighborhood& nb, std::size_t n, const char* what) {
    if (nb.domain_size() != n)
        throw SignatureMismatch(std::string(what) + ": neighborhood over " +
                                std::to_string(nb.domain_size()) + " points, function over " +
                                std::to_string(n));
}

void require_codomain(const ValueMetric& dm, std::size_t m, const char* what) {
    if (dm.codomain_size() != m)
        throw SignatureMismatch(std::string(what) + ": metric over " +
                                std::to_string(dm.codomain_size()) + " values, function over " +
                                std::to_string(m));
}

// p(from_a) = to_a, p(from_b) = to_b; remaining positions take the remaining
// targets in ascending order.
Permutation pair_mapping(std::size_t n, Point from_a, Point to_a, Point from_b, Point to_b) {
    std::vector<Point> mapping(n);
    std::vector<bool> taken(n, false);
    mapping[from_a] = to_a;
    mapping[from_b] = to_b;
    taken[to_a] = taken[to_b] = true;
    Point next = 0;
    for (std::size_t x = 0; x < n; ++x) {
        if (x == from_a || x == from_b) continue;
        while (taken[next]) ++next;
        mapping[x] = next;
        taken[next] = true;
    }
    return Permutation(std::move(mapping));
}

std::optional<Edge> first_pair(const Neighborhood& nb, bool neighbored) {
    const auto n = static_cast<Point>(nb.domain_size());
    for (Point a = 0; a < n; ++a)
        for (Point b = a + 1; b < n; ++b)
            if (nb.adjacent(a, b) == neighbored) return Edge{a, b};
    return std::nullopt;
}

}  // namespace

Neighborhood::Neighborhood(std::vector<std::vector<Point>> adj) : adj_(std::move(adj)) {
    std::size_t degree_sum = 0;
    for (auto& list : adj_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        degree_sum += list.size();
    }
    edge_count_ = degree_sum / 2;
}

Neighborhood Neighborhood::from_edges(std::size_t domain_size, std::span<const Edge> edges) {
    std::vector<std::vector<Point>> adj(domain_size);
    for (auto [a, b] : edges) {
        if (a >= domain_size || b >= domain_size)
            throw InvalidArgument("edge (" + std::to_string(a) + "," + std::to_string(b) +
                                  ") outside domain of size " + std::to_string(domain_size));
        if (a == b)
            throw InvalidArgument("self-loop at point " + std::to_string(a) +
                                  "; neighborhoods are irreflexive");
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return Neighborhood(std::move(adj));
}

Neighborhood Neighborhood::from_matrix(const std::vector<std::vector<bool>>& adjacency) {
    const std::size_t n = adjacency.size();
    std::vector<std::vector<Point>> adj(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (adjacency[i].size() != n) throw InvalidArgument("adjacency matrix is not square");
        if (adjacency[i][i])
            throw InvalidArgument("adjacency diagonal must be false at " + std::to_string(i));
        for (std::size_t j = 0; j < n; ++j) {
            if (adjacency[i][j] != adjacency[j][i])
                throw InvalidArgument("adjacency matrix is not symmetric at (" +
                                      std::to_string(i) + "," + std::to_string(j) + ")");
            if (adjacency[i][j]) adj[i].push_back(static_cast<Point>(j));
        }
    }
    return Neighborhood(std::move(adj));
}

bool Neighborhood::adjacent(Point a, Point b) const {
    const auto& list = adj_.at(a);
    return std::binary_search(list.begin(), list.end(), b);
}

std::vector<Edge> Neighborhood::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Point a = 0; a < adj_.size(); ++a)
        for (Point b : adj_[a])
            if (a < b) out.emplace_back(a, b);
    return out;
}

ValueMetric ValueMetric::absolute_difference(std::size_t codomain_size) {
    std::vector<double> d(codomain_size * codomain_size);
    for (std::size_t i = 0; i < codomain_size; ++i)
        for (std::size_t j = 0; j < codomain_size; ++j)
            d[i * codomain_size + j] = std::abs(static_cast<double>(i) - static_cast<double>(j));
    return ValueMetric(codomain_size, std::move(d));
}

ValueMetric ValueMetric::from_upper_triangle(std::size_t m, std::span<const double> distances) {
    const std::size_t expected = m * (m - 1) / 2;
    if (distances.size() != expected)
        throw InvalidArgument("metric over " + std::to_string(m) + " values needs " +
                              std::to_string(expected) + " upper-triangular entries, got " +
                              std::to_string(distances.size()));
    std::vector<double> d(m * m, 0.0);
    std::size_t k = 0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j, ++k) {
            const double v = distances[k];
            if (!(v > 0.0) || !std::isfinite(v))
                throw InvalidArgument("metric distance d(" + std::to_string(i) + "," +
                                      std::to_string(j) + ") must be finite and positive");
            d[i * m + j] = d[j * m + i] = v;
        }
    return ValueMetric(m, std::move(d));
}

bool ValueMetric::satisfies_triangle_inequality() const {
    for (std::size_t a = 0; a < size_; ++a)
        for (std::size_t b = 0; b < size_; ++b)
            for (std::size_t c = 0; c < size_; ++c)
                if (d_[a * size_ + c] > d_[a * size_ + b] + d_[b * size_ + c]) return false;
    return true;
}

std::vector<double> ValueMetric::upper_triangle() const {
    std::vector<double> out;
    for (std::size_t i = 0; i < size_; ++i)
        for (std::size_t j = i + 1; j < size_; ++j) out.push_back(d_[i * size_ + j]);
    return out;
}

ConstraintClass ConstraintClass::steepness(SpaceSignature sig, Neighborhood nb, ValueMetric metric,
                                           double bound) {
    require_domain(nb, sig.domain_size, "steepness class");
    require_codomain(metric, sig.codomain_size, "steepness class");
    return ConstraintClass{sig, std::move(nb), ConstraintKind::steepness, bound, std::move(metric)};
}

ConstraintClass ConstraintClass::local_minima(SpaceSignature sig, Neighborhood nb,
                                              std::size_t bound) {
    require_domain(nb, sig.domain_size, "local-minima class");
    return ConstraintClass{sig, std::move(nb), ConstraintKind::local_minima,
                           static_cast<double>(bound), std::nullopt};
}

double ConstraintClass::measure(const FiniteFunction& f) const {
    if (kind == ConstraintKind::steepness) {
        if (!metric) throw PreconditionError("steepness class without a value metric");
        return max_steepness(f, neighborhood, *metric);
    }
    return static_cast<double>(count_local_minima(f, neighborhood));
}

bool is_nontrivial(const Neighborhood& nb) {
    return first_pair(nb, true).has_value() && first_pair(nb, false).has_value();
}

std::optional<Edge> invariance_violation(const Neighborhood& nb, const Permutation& p) {
    require_domain(nb, p.size(), "invariance_violation");
    const auto n = static_cast<Point>(nb.domain_size());
    for (Point a = 0; a < n; ++a)
        for (Point b = a + 1; b < n; ++b)
            if (nb.adjacent(a, b) != nb.adjacent(p[a], p[b])) return Edge{a, b};
    return std::nullopt;
}

Permutation find_noninvariant_permutation(const Neighborhood& nb) {
    const auto far = first_pair(nb, false);
    const auto near = first_pair(nb, true);
    if (!far || !near)
        throw PreconditionError("neighborhood is trivial; every permutation preserves it");
    return pair_mapping(nb.domain_size(), far->first, near->first, far->second, near->second);
}

Neighborhood hypercube_neighborhood(std::size_t bits, const Limits& limits) {
    if (bits == 0) throw InvalidArgument("hypercube needs at least one bit");
    if (bits > limits.max_hypercube_bits)
        throw CapacityError("hypercube with " + std::to_string(bits) + " bits exceeds cap " +
                            std::to_string(limits.max_hypercube_bits));
    const std::size_t n = std::size_t{1} << bits;
    std::vector<std::vector<Point>> adj(n);
    for (std::size_t x = 0; x < n; ++x) {
        adj[x].reserve(bits);
        for (std::size_t b = 0; b < bits; ++b) adj[x].push_back(static_cast<Point>(x ^ (std::size_t{1} << b)));
    }
    return Neighborhood(std::move(adj));
}

Neighborhood product_neighborhood(std::span<const std::size_t> component_sizes,
                                  std::size_t component_index, const Neighborhood& component_nb,
                                  const Limits& limits) {
    if (component_index >= component_sizes.size())
        throw InvalidArgument("component index " + std::to_string(component_index) +
                              " out of range for " + std::to_string(component_sizes.size()) +
                              " components");
    if (component_nb.domain_size() != component_sizes[component_index])
        throw SignatureMismatch("component neighborhood over " +
                                std::to_string(component_nb.domain_size()) +
                                " points, component has " +
                                std::to_string(component_sizes[component_index]));

    std::uint64_t total = 1;
    for (std::size_t s : component_sizes) {
        if (s == 0) throw InvalidArgument("component sizes must be positive");
        if (total > limits.enumeration_cap / s)
            throw CapacityError("product space exceeds enumeration cap " +
                                std::to_string(limits.enumeration_cap));
        total *= s;
    }
    // Points sharing every coordinate except the chosen one form blocks of
    // `stride` consecutive indices per coordinate value.
    std::uint64_t stride = 1;
    for (std::size_t i = component_index + 1; i < component_sizes.size(); ++i)
        stride *= component_sizes[i];
    const std::uint64_t size_i = component_sizes[component_index];
    const std::uint64_t neighbors_per_edge = total / size_i;
    if (2 * component_nb.edge_count() * neighbors_per_edge * neighbors_per_edge >
        limits.enumeration_cap)
        throw CapacityError("product neighborhood edge count exceeds enumeration cap " +
                            std::to_string(limits.enumeration_cap));

    std::vector<std::vector<Point>> adj(total);
    for (std::uint64_t x = 0; x < total; ++x) {
        const auto cx = static_cast<Point>((x / stride) % size_i);
        for (std::uint64_t z = 0; z < total; ++z) {
            const auto cz = static_cast<Point>((z / stride) % size_i);
            if (component_nb.adjacent(cx, cz)) adj[x].push_back(static_cast<Point>(z));
        }
    }
    return Neighborhood(std::move(adj));
}

double max_steepness(const FiniteFunction& f, const Neighborhood& nb, const ValueMetric& dm) {
    require_domain(nb, f.size(), "max_steepness");
    require_codomain(dm, f.signature().codomain_size, "max_steepness");
    double best = 0.0;
    for (Point a = 0; a < f.size(); ++a)
        for (Point b : nb.neighbors(a))
            if (a < b) best = std::max(best, dm(f[a], f[b]));
    return best;
}

double range_diameter(const FiniteFunction& f, const ValueMetric& dm) {
    require_codomain(dm, f.signature().codomain_size, "range_diameter");
    // Only the distinct values matter.
    std::vector<bool> present(dm.codomain_size(), false);
    for (Value v : f.values()) present[v] = true;
    double best = 0.0;
    for (Value a = 0; a < present.size(); ++a)
        for (Value b = a + 1; b < present.size(); ++b)
            if (present[a] && present[b]) best = std::max(best, dm(a, b));
    return best;
}

std::size_t count_local_minima(std::span<const Value> values, const Neighborhood& nb) {
    require_domain(nb, values.size(), "count_local_minima");
    std::size_t count = 0;
    for (Point x = 0; x < values.size(); ++x) {
        const auto ns = nb.neighbors(x);
        if (std::all_of(ns.begin(), ns.end(), [&](Point z) { return values[x] < values[z]; }))
            ++count;
    }
    return count;
}

std::size_t count_local_minima(const FiniteFunction& f, const Neighborhood& nb) {
    return count_local_minima(f.values(), nb);
}

FiniteFunction max_minima_arrangement(const Histogram& h, const Neighborhood& nb,
                                      const Limits& limits) {
    require_domain(nb, h.signature().domain_size, "max_minima_over_histogram");
    if (multinomial(h) > limits.enumeration_cap)
        throw CapacityError("basis class of " + h.to_string() + " exceeds enumeration cap " +
                            std::to_string(limits.enumeration_cap));
    std::vector<Value> best_values;
    std::size_t best = 0;
    bool first = true;
    for_each_rearrangement(h, [&](std::span<const Value> values) {
        const std::size_t m = count_local_minima(values, nb);
        if (first || m > best) {
            best = m;
            best_values.assign(values.begin(), values.end());
            first = false;
        }
        return true;
    });
    return FiniteFunction(h.signature(), std::move(best_values));
}

std::size_t max_minima_over_histogram(const Histogram& h, const Neighborhood& nb,
                                      const Limits& limits) {
    return count_local_minima(max_minima_arrangement(h, nb, limits), nb);
}

FunctionSet build_constraint_class(const ConstraintClass& cc, const Limits& limits) {
    require_domain(cc.neighborhood, cc.signature.domain_size, "build_constraint_class");
    if (cc.kind == ConstraintKind::steepness) {
        if (!cc.metric) throw PreconditionError("steepness class without a value metric");
        require_codomain(*cc.metric, cc.signature.codomain_size, "build_constraint_class");
    }
    std::vector<FiniteFunction> members;
    for (auto f : enumerate_functions(cc.signature, limits))
        if (cc.admits(f)) members.push_back(std::move(f));
    return FunctionSet(cc.signature, std::move(members));
}

NotCupWitness witness_not_cup(const FunctionSet& F, const ConstraintClass& cc,
                              const Limits& limits) {
    if (F.signature() != cc.signature)
        throw SignatureMismatch("function set over " + F.signature().to_string() +
                                ", constraint class over " + cc.signature.to_string());
    if (F.empty()) throw PreconditionError("witness not guaranteed: the class is empty");

    if (cc.kind == ConstraintKind::steepness) {
        if (!cc.metric) throw PreconditionError("steepness class without a value metric");
        const auto edge = first_pair(cc.neighborhood, true);
        if (!is_nontrivial(cc.neighborhood) || !edge)
            throw PreconditionError("witness not guaranteed: neighborhood is trivial");

        const FiniteFunction* g = nullptr;
        double diameter = -1.0;
        for (const auto& f : F) {
            const double d = range_diameter(f, *cc.metric);
            if (d > diameter) {
                diameter = d;
                g = &f;
            }
        }
        if (diameter < cc.bound)
            throw PreconditionError("witness not guaranteed: steepness bound " +
                                    std::to_string(cc.bound) +
                                    " exceeds the largest range diameter " +
                                    std::to_string(diameter) + " in the class");

        // Lowest pair of points realizing the diameter.
        const auto n = static_cast<Point>(g->size());
        Edge extremal{0, 0};
        for (Point a = 0; a < n && extremal == Edge{0, 0}; ++a)
            for (Point b = a + 1; b < n; ++b)
                if ((*cc.metric)((*g)[a], (*g)[b]) == diameter) {
                    extremal = {a, b};
                    break;
                }
        // compose(g, p)(k) = g(i) and compose(g, p)(l) = g(j).
        Permutation p = pair_mapping(n, edge->first, extremal.first, edge->second, extremal.second);
        FiniteFunction image = compose(*g, p);
        const double value = cc.measure(image);
        return {*g, std::move(p), std::move(image), value};
    }

    // Local minima: pick the basis class present in F with the largest l^max.
    const FiniteFunction* g = nullptr;
    std::optional<FiniteFunction> target;
    std::size_t best = 0;
    std::vector<std::vector<std::size_t>> seen;
    for (const auto& f : F) {
        const Histogram h = histogram_of(f);
        std::vector<std::size_t> key(h.counts().begin(), h.counts().end());
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
        seen.push_back(std::move(key));
        auto t = max_minima_arrangement(h, cc.neighborhood, limits);
        const std::size_t m = count_local_minima(t, cc.neighborhood);
        if (!g || m > best) {
            best = m;
            g = &f;
            target = std::move(t);
        }
    }
    if (static_cast<double>(best) < cc.bound)
        throw PreconditionError("witness not guaranteed: minima bound " +
                                std::to_string(cc.bound) + " exceeds the largest l^max " +
                                std::to_string(best) + " over the class");
    auto p = find_permutation(*g, *target);
    FiniteFunction image = compose(*g, *p);
    const double value = cc.measure(image);
    return {*g, std::move(*p), std::move(image), value};
}

}  // namespace nfl
