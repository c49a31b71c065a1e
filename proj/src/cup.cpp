#include "nfl/cup.hpp"

#include <algorithm>
#include <map>

namespace nfl {

bool BasisDecomposition::all_complete() const {
    return std::all_of(classes.begin(), classes.end(), [](const auto& c) { return c.complete(); });
}

std::size_t BasisDecomposition::complete_count() const {
    return static_cast<std::size_t>(
        std::count_if(classes.begin(), classes.end(), [](const auto& c) { return c.complete(); }));
}

BasisDecomposition decompose(const FunctionSet& F) {
    std::map<std::vector<std::size_t>, std::uint64_t> groups;
    for (const auto& f : F) {
        const Histogram h = histogram_of(f);
        ++groups[std::vector<std::size_t>(h.counts().begin(), h.counts().end())];
    }

    BasisDecomposition out;
    out.residual_is_empty = F.empty();
    out.classes.reserve(groups.size());
    // std::map iterates ascending; canonical order is descending.
    for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
        Histogram h(F.signature(), it->first);
        BigCount size = multinomial(h);
        out.classes.push_back({std::move(h), std::move(size), BigCount(it->second)});
    }
    return out;
}

CupVerdict cup_verdict(const FunctionSet& F) {
    if (F.empty()) return {true, true};
    return {decompose(F).all_complete(), false};
}

bool is_cup(const FunctionSet& F) { return cup_verdict(F).closed; }

FunctionSet closure(const FunctionSet& F, const Limits& limits) {
    const auto decomposition = decompose(F);
    BigCount total = 0;
    for (const auto& c : decomposition.classes) total += c.class_size;
    if (total > limits.enumeration_cap)
        throw CapacityError("closure would hold " + total.str() +
                            " functions, above the enumeration cap " +
                            std::to_string(limits.enumeration_cap));

    std::vector<FiniteFunction> members;
    members.reserve(static_cast<std::size_t>(total));
    for (const auto& c : decomposition.classes)
        for_each_rearrangement(c.histogram, [&](std::span<const Value> values) {
            members.emplace_back(F.signature(), std::vector<Value>(values.begin(), values.end()));
            return true;
        });
    return FunctionSet(F.signature(), std::move(members));
}

}  // namespace nfl
