#include "nfl/harness.hpp"

#include <algorithm>
#include <sstream>

namespace nfl {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

std::string sequence_string(const ValueSequence& ys) {
    std::ostringstream os;
    os << '<';
    for (std::size_t i = 0; i < ys.size(); ++i) os << (i ? "," : "") << ys[i];
    os << '>';
    return os.str();
}

// Per-run cursor: proposes the next point given the trace so far.
class Proposer {
public:
    Proposer(const SearchAlgorithm& a, std::size_t n) : a_(a), n_(n) {
        if (const auto* r = std::get_if<SeededRandom>(&a.variant()))
            state_ = r->seed == 0 ? kZeroSeedReplacement : r->seed;
    }

    Point next(const Trace& trace, const std::vector<bool>& visited) {
        return std::visit(
            overloaded{
                [&](const Lexicographic&) { return lowest_unvisited(visited); },
                [&](const ReverseLexicographic&) {
                    for (std::size_t x = n_; x-- > 0;)
                        if (!visited[x]) return static_cast<Point>(x);
                    return static_cast<Point>(n_);
                },
                [&](const SeededRandom&) {
                    const auto unvisited = static_cast<std::size_t>(
                        std::count(visited.begin(), visited.end(), false));
                    auto [rank, state] = seeded_random_next(state_, unvisited);
                    state_ = state;
                    for (std::size_t x = 0; x < n_; ++x)
                        if (!visited[x] && rank-- == 0) return static_cast<Point>(x);
                    return static_cast<Point>(n_);
                },
                [&](const GreedyNeighbor& g) { return greedy(g.neighborhood, trace, visited); },
                [&](const DecisionTree& t) {
                    ValueSequence prefix;
                    prefix.reserve(trace.size());
                    for (const auto& step : trace) prefix.push_back(step.second);
                    auto it = t.next.find(prefix);
                    if (it == t.next.end())
                        throw ProtocolViolation("decision tree has no node for observed prefix " +
                                                sequence_string(prefix));
                    return it->second;
                },
            },
            a_.variant());
    }

private:
    Point lowest_unvisited(const std::vector<bool>& visited) const {
        for (std::size_t x = 0; x < n_; ++x)
            if (!visited[x]) return static_cast<Point>(x);
        return static_cast<Point>(n_);
    }

    Point greedy(const Neighborhood& nb, const Trace& trace, const std::vector<bool>& visited) const {
        if (nb.domain_size() != n_)
            throw SignatureMismatch("greedy-neighbor neighborhood over " +
                                    std::to_string(nb.domain_size()) + " points, function over " +
                                    std::to_string(n_));
        if (trace.empty()) return 0;
        std::optional<TraceStep> anchor;
        for (const auto& step : trace) {
            const auto ns = nb.neighbors(step.first);
            const bool open = std::any_of(ns.begin(), ns.end(), [&](Point z) { return !visited[z]; });
            if (!open) continue;
            if (!anchor || step.second < anchor->second ||
                (step.second == anchor->second && step.first < anchor->first))
                anchor = step;
        }
        if (!anchor) return lowest_unvisited(visited);
        for (Point z : nb.neighbors(anchor->first))
            if (!visited[z]) return z;
        return lowest_unvisited(visited);
    }

    const SearchAlgorithm& a_;
    std::size_t n_;
    std::uint64_t state_ = 0;
};

}  // namespace

std::string SearchAlgorithm::name() const {
    return std::visit(
        overloaded{
            [](const Lexicographic&) { return std::string("lexicographic"); },
            [](const ReverseLexicographic&) { return std::string("reverse"); },
            [](const SeededRandom& r) { return "random:" + std::to_string(r.seed); },
            [](const GreedyNeighbor&) { return std::string("greedy"); },
            [](const DecisionTree& t) {
                std::string s = "tree{";
                bool first = true;
                for (const auto& [prefix, point] : t.next) {
                    if (!first) s += ' ';
                    s += sequence_string(prefix) + ":" + std::to_string(point);
                    first = false;
                }
                return s + "}";
            },
        },
        v_);
}

std::string PerformanceMeasure::name() const {
    switch (kind) {
        case Kind::minimum_value: return "minimum";
        case Kind::value_at_step: return "value-at-step(" + std::to_string(step) + ")";
        case Kind::sum_of_values: return "sum";
    }
    return "?";
}

std::pair<std::size_t, std::uint64_t> seeded_random_next(std::uint64_t state,
                                                         std::size_t unvisited_count) {
    if (unvisited_count == 0) throw PreconditionError("seeded_random_next: nothing left to visit");
    if (state == 0) throw PreconditionError("seeded_random_next: zero state");
    state ^= state >> 12;
    state ^= state << 25;
    state ^= state >> 27;
    const std::uint64_t output = state * 2685821657736338717ULL;
    return {static_cast<std::size_t>(output % unvisited_count), state};
}

RunResult run(const SearchAlgorithm& a, const FiniteFunction& f, std::size_t m) {
    const std::size_t n = f.size();
    if (m > n)
        throw PreconditionError("run: m = " + std::to_string(m) + " exceeds |X| = " +
                                std::to_string(n));
    RunResult out;
    out.trace.reserve(m);
    out.values.reserve(m);
    std::vector<bool> visited(n, false);
    Proposer proposer(a, n);
    for (std::size_t t = 0; t < m; ++t) {
        const Point x = proposer.next(out.trace, visited);
        if (x >= n)
            throw ProtocolViolation(a.name() + " proposed out-of-range point " + std::to_string(x));
        if (visited[x])
            throw ProtocolViolation(a.name() + " revisited point " + std::to_string(x));
        visited[x] = true;
        out.trace.emplace_back(x, f[x]);
        out.values.push_back(f[x]);
    }
    return out;
}

Rational performance(const PerformanceMeasure& c, const ValueSequence& ys) {
    using Kind = PerformanceMeasure::Kind;
    switch (c.kind) {
        case Kind::minimum_value:
            if (ys.empty()) throw PreconditionError("minimum of an empty value sequence");
            return Rational(*std::min_element(ys.begin(), ys.end()));
        case Kind::value_at_step:
            if (c.step == 0 || c.step > ys.size())
                throw PreconditionError("value-at-step(" + std::to_string(c.step) +
                                        ") on a sequence of length " + std::to_string(ys.size()));
            return Rational(ys[c.step - 1]);
        case Kind::sum_of_values: {
            std::int64_t total = 0;
            for (Value v : ys) total += v;
            return Rational(total);
        }
    }
    throw PreconditionError("unknown performance measure");
}

PerformanceTable performance_table(const SearchAlgorithm& a, const FunctionSet& F, std::size_t m,
                                   const PerformanceMeasure& c) {
    PerformanceTable table;
    for (const auto& f : F) table[performance(c, run(a, f, m).values)] += 1;
    return table;
}

SequenceMultiset sequence_multiset(const SearchAlgorithm& a, const FunctionSet& F, std::size_t m) {
    SequenceMultiset out;
    for (const auto& f : F) ++out[run(a, f, m).values];
    return out;
}

BigCount count_algorithms(SpaceSignature sig, std::size_t m) {
    BigCount total = 1;
    BigCount nodes = 1;  // |Y|^t
    for (std::size_t t = 0; t < m; ++t) {
        if (t >= sig.domain_size) return 0;
        // Each of the |Y|^t nodes at depth t chooses among |X|-t points.
        total *= boost::multiprecision::pow(BigCount(sig.domain_size - t),
                                            static_cast<unsigned>(nodes));
        nodes *= sig.codomain_size;
    }
    return total;
}

namespace {

struct PendingNode {
    ValueSequence prefix;
    std::vector<bool> visited;
};

void expand(std::size_t index, std::vector<PendingNode>& pending, DecisionTree& tree,
            SpaceSignature sig, std::size_t m, std::vector<SearchAlgorithm>& out) {
    if (index == pending.size()) {
        out.emplace_back(tree);
        return;
    }
    const PendingNode node = pending[index];
    const std::size_t depth = node.prefix.size();
    for (Point x = 0; x < sig.domain_size; ++x) {
        if (node.visited[x]) continue;
        tree.next[node.prefix] = x;
        const std::size_t restore = pending.size();
        if (depth + 1 < m) {
            for (Value y = 0; y < sig.codomain_size; ++y) {
                PendingNode child = node;
                child.prefix.push_back(y);
                child.visited[x] = true;
                pending.push_back(std::move(child));
            }
        }
        expand(index + 1, pending, tree, sig, m, out);
        pending.resize(restore);
    }
    tree.next.erase(node.prefix);
}

}  // namespace

std::vector<SearchAlgorithm> enumerate_algorithms(SpaceSignature sig, std::size_t m,
                                                  const Limits& limits) {
    if (m == 0) throw PreconditionError("enumerate_algorithms needs m >= 1");
    if (m > sig.domain_size)
        throw PreconditionError("enumerate_algorithms: m = " + std::to_string(m) +
                                " exceeds |X| = " + std::to_string(sig.domain_size));
    const BigCount count = count_algorithms(sig, m);
    if (count > limits.enumeration_cap)
        throw CapacityError("there are " + count.str() + " decision trees of depth " +
                            std::to_string(m) + " over " + sig.to_string() +
                            ", above the enumeration cap " + std::to_string(limits.enumeration_cap));
    std::vector<SearchAlgorithm> out;
    out.reserve(static_cast<std::size_t>(count));
    std::vector<PendingNode> pending{{{}, std::vector<bool>(sig.domain_size, false)}};
    DecisionTree tree;
    expand(0, pending, tree, sig, m, out);
    return out;
}

NflReport verify_nfl(const FunctionSet& F, std::size_t m,
                     const std::vector<SearchAlgorithm>& algorithms) {
    std::vector<SequenceMultiset> multisets;
    multisets.reserve(algorithms.size());
    for (const auto& a : algorithms) multisets.push_back(sequence_multiset(a, F, m));

    NflReport report;
    report.equal.assign(algorithms.size(), std::vector<bool>(algorithms.size(), true));
    for (std::size_t i = 0; i < algorithms.size(); ++i)
        for (std::size_t j = i + 1; j < algorithms.size(); ++j) {
            const bool same = multisets[i] == multisets[j];
            report.equal[i][j] = report.equal[j][i] = same;
            if (!same && !report.witness) {
                report.equal_for_all_pairs = false;
                report.witness = std::make_pair(i, j);
            }
        }
    return report;
}

}  // namespace nfl
