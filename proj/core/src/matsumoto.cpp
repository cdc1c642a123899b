#include "chevk1/matsumoto.hpp"

#include <algorithm>

namespace chevk1 {

std::vector<Root> sigma_plus(const RootSystem &sys, int pivot) {
    std::vector<Root> out;
    for (const Root &r : sys.positive_roots())
        if (r[pivot - 1] != 0)
            out.push_back(r);
    std::sort(out.begin(), out.end(), [&](const Root &a, const Root &b) {
        int ha = sys.height(a), hb = sys.height(b);
        return ha != hb ? ha < hb : a < b;
    });
    return out;
}

namespace {

// sign of the unique pattern entry at (to, from); the edge must exist
int entry_sign(const WeightDiagram &d, const Root &alpha, std::size_t to,
               std::size_t from) {
    for (const PatternEntry &e : root_pattern(d, alpha))
        if (e.to == to && e.from == from)
            return e.sign;
    throw internal_postcondition_failure("missing pattern entry");
}

} // namespace

ParabolicSplit chevalley_matsumoto(const GroupElement &g, int pivot) {
    const WeightDiagram &d = *g.diagram();
    const RootSystem &sys = *d.system();
    Root alpha_k = sys.simple(pivot);
    if (!d.shift(0, [&] { Root r = alpha_k; for (int &c : r) c = -c; return r; }()))
        throw unsupported_type("pivot root does not border the highest weight");

    auto corner_inv = g.at(0, 0).try_invert();
    if (!corner_inv)
        throw non_invertible_corner("matrix corner is not a unit");

    GroupElement h = g;
    h.clear_provenance();
    GeneratorWord vword{d.label(), {}}, uword{d.label(), {}};
    const auto sigma = sigma_plus(sys, pivot);

    // clear column mu: left-multiply by x_{-alpha}(t), increasing height
    std::vector<Letter> lapplied;
    for (const Root &alpha : sigma) {
        Root neg = alpha;
        for (int &c : neg)
            c = -c;
        std::size_t lam = *d.shift(0, neg); // mu - alpha
        const RingElement &e = h.at(lam, 0);
        if (e.is_zero())
            continue;
        int s = entry_sign(d, neg, lam, 0);
        RingElement t = -(e * *corner_inv);
        if (s < 0)
            t = -t;
        Letter l{LetterKind::X, neg, t, {}};
        lapplied.push_back(l);
        GroupElement step = realize(g.diagram(), g.ring(), {d.label(), {l}});
        h = multiply(step, h);
        h.clear_provenance();
    }
    // h = l_m ... l_1 g, so V = l_1^-1 ... l_m^-1 (the letters commute, but
    // keep the exact order anyway)
    for (const Letter &l : lapplied)
        vword.letters.push_back(l.inverse());

    // clear row mu: right-multiply by x_{alpha}(t), increasing height
    std::vector<Letter> rapplied;
    for (const Root &alpha : sigma) {
        std::size_t lam = *d.shift(0, [&] { Root r = alpha; for (int &c : r) c = -c; return r; }());
        const RingElement &e = h.at(0, lam);
        if (e.is_zero())
            continue;
        int s = entry_sign(d, alpha, 0, lam);
        RingElement t = -(e * *corner_inv);
        if (s < 0)
            t = -t;
        Letter l{LetterKind::X, alpha, t, {}};
        rapplied.push_back(l);
        GroupElement step = realize(g.diagram(), g.ring(), {d.label(), {l}});
        h = multiply(h, step);
        h.clear_provenance();
    }
    // h = g r_1 ... r_n, so U = r_n^-1 ... r_1^-1
    for (auto it = rapplied.rbegin(); it != rapplied.rend(); ++it)
        uword.letters.push_back(it->inverse());

    // group membership forces the full block structure once the first level
    // of row and column mu is clear
    if (!(h.at(0, 0) == g.at(0, 0)))
        throw internal_postcondition_failure("corner disturbed by clearing");
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = 0; j < d.size(); ++j)
            if (d.level(i, pivot) != d.level(j, pivot) &&
                !h.at(i, j).is_zero())
                throw internal_postcondition_failure(
                    "residual matrix is not block-diagonal");

    ParabolicSplit split{realize(g.diagram(), g.ring(), vword), h,
                         realize(g.diagram(), g.ring(), uword)};
    return split;
}

} // namespace chevk1
