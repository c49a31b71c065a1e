#pragma once

#include <algorithm>
#include <vector>

#include "nfl/core.hpp"

namespace nfl::test {

/// Function over (values.size(), codomain) with the given value array.
inline FiniteFunction fn(std::size_t codomain, std::vector<Value> values) {
    const std::size_t n = values.size();
    return FiniteFunction(SpaceSignature(n, codomain), std::move(values));
}

inline FunctionSet set_of(std::size_t codomain, std::vector<std::vector<Value>> rows) {
    const std::size_t n = rows.empty() ? 1 : rows.front().size();
    std::vector<FiniteFunction> members;
    for (auto& r : rows) members.push_back(fn(codomain, std::move(r)));
    return FunctionSet(SpaceSignature(n, codomain), std::move(members));
}

inline std::vector<Value> values_of(const FiniteFunction& f) {
    return {f.values().begin(), f.values().end()};
}

inline std::vector<std::vector<Value>> rows_of(const FunctionSet& F) {
    std::vector<std::vector<Value>> out;
    for (const auto& f : F) out.push_back(values_of(f));
    return out;
}

/// Every permutation of {0..n-1}.
inline std::vector<Permutation> all_permutations(std::size_t n) {
    std::vector<Point> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<Point>(i);
    std::vector<Permutation> out;
    do out.emplace_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace nfl::test
