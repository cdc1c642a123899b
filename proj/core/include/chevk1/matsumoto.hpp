#pragma once

#include "chevk1/group.hpp"

namespace chevk1 {

/// g = v * g1 * u with v lower-unipotent and u upper-unipotent over
/// Sigma = Phi \ <Pi minus the pivot>, and g1 block-diagonal for the pivot's
/// level decomposition with the corner of g.
struct ParabolicSplit {
    GroupElement v;
    GroupElement g1;
    GroupElement u;
};

/// Positive roots whose pivot coefficient is nonzero (all have coefficient 1
/// for the supported minuscule pivots), sorted by increasing height.
std::vector<Root> sigma_plus(const RootSystem &sys, int pivot);

/// Corner-pivot clearing by increasing root height. Throws
/// non_invertible_corner when g_{mu,mu} is not a unit, and
/// internal_postcondition_failure if the residual matrix is not
/// block-diagonal (impossible for genuine group elements).
ParabolicSplit chevalley_matsumoto(const GroupElement &g, int pivot);

} // namespace chevk1
