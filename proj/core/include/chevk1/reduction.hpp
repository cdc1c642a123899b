#pragma once

#include "chevk1/group.hpp"
#include "chevk1/ideal.hpp"
#include "chevk1/matsumoto.hpp"

namespace chevk1 {

/// Coordinate vector whose entries generate the unit ideal; checked on
/// construction (not_unimodular otherwise).
struct UnimodularVector {
    DiagramPtr diagram;
    std::vector<RingElement> coordinates;

    UnimodularVector(DiagramPtr d, std::vector<RingElement> coords);
};

struct ReductionStrategy {
    /// Assert the intermediate certificates between reduction steps.
    bool check_step_boundaries = true;
    /// Greedy letter-deletion post-pass with replay check.
    bool minimize = false;
};

/// Word h of X-letters over D_l with act(h, v) having coordinate 1 at the
/// top node. Supported scalar rings: Z, Z/n, localizations of Z.
GeneratorWord reduce_Dl(const UnimodularVector &v,
                        const ReductionStrategy &strategy = {});

/// The four-step reduction for (E6, w1): act(h, v) has coordinate 1 at the
/// highest weight node.
GeneratorWord reduce_E6(const UnimodularVector &v,
                        const ReductionStrategy &strategy = {});

struct StabilityWitness {
    GeneratorWord h;      // elementary word with unit corner for h*g
    ParabolicSplit split; // chevalley_matsumoto(h*g, alpha_1)
};

/// Witness of g in E(E6,R) * (T * G(D5,R)): reduce the mu-column, then split.
StabilityWitness
surjective_stability_witness(const GroupElement &g,
                             const ReductionStrategy &strategy = {});

/// Generic engine behind reduce_Dl and steps 3-4 of reduce_E6: a word over
/// the orbit's root differences making v[top] exactly 1. The orbit must be a
/// vector-representation Weyl orbit (complete graph minus the antipodal
/// matching) and the orbit row must be unimodular. v is updated in place.
/// Letters come back in application order (first letter applied first);
/// reverse them for a replayable left-to-right product.
GeneratorWord reduce_orbit(const WeightDiagram &d,
                           const std::vector<std::size_t> &orbit,
                           std::size_t top, std::vector<RingElement> &v);

/// Drop letters greedily while act_word(word, v) keeps coordinate 1 at node.
GeneratorWord minimize_word(const WeightDiagram &d, const GeneratorWord &word,
                            const std::vector<RingElement> &v,
                            std::size_t node);

} // namespace chevk1
