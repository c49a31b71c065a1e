#pragma once

// Closure under permutation: membership test, closure, and the unique
// decomposition of a function set into basis classes.

#include <vector>

#include "nfl/combinatorics.hpp"
#include "nfl/core.hpp"

namespace nfl {

struct BasisClassShare {
    Histogram histogram;
    /// multinomial(histogram), the full basis class size.
    BigCount class_size;
    /// Members of the analysed set that carry this histogram.
    BigCount member_count;

    [[nodiscard]] bool complete() const { return member_count == class_size; }
};

struct BasisDecomposition {
    /// One entry per histogram present in the set, in HistogramOrder.
    std::vector<BasisClassShare> classes;
    /// True iff the analysed set was empty (c.u.p. holds vacuously).
    bool residual_is_empty = false;

    [[nodiscard]] bool all_complete() const;
    [[nodiscard]] std::size_t complete_count() const;
};

struct CupVerdict {
    bool closed = false;
    /// Set for the empty set, which is closed under permutation vacuously.
    bool vacuous = false;
};

/// Groups members by histogram; a group is complete iff it holds the whole
/// basis class.
BasisDecomposition decompose(const FunctionSet& F);

/// F is closed under permutation iff every histogram occurring in F has all
/// multinomial(h) of its functions in F.
CupVerdict cup_verdict(const FunctionSet& F);

/// cup_verdict(F).closed
bool is_cup(const FunctionSet& F);

/// Smallest permutation-closed superset of F: the union of member orbits.
FunctionSet closure(const FunctionSet& F, const Limits& limits = {});

}  // namespace nfl
