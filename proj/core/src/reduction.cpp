#include "chevk1/reduction.hpp"

#include <algorithm>
#include <numeric>

namespace chevk1 {

namespace {

int entry_sign(const WeightDiagram &d, const Root &beta, std::size_t to,
               std::size_t from) {
    for (const PatternEntry &e : root_pattern(d, beta))
        if (e.to == to && e.from == from)
            return e.sign;
    throw internal_postcondition_failure("missing pattern entry");
}

std::optional<Root> connecting_root(const WeightDiagram &d, std::size_t from,
                                    std::size_t to) {
    const Weight &wf = d.weight(from), &wt = d.weight(to);
    Root beta(wf.size());
    for (std::size_t i = 0; i < wf.size(); ++i)
        beta[i] = wf[i] - wt[i]; // weight(to) - weight(from) in root coords
    if (!d.system()->is_root(beta))
        return std::nullopt;
    return beta;
}

// v[to] += coeff * v[from] through one X-letter (plus its other transvection
// pairs elsewhere in the diagram)
void make_move(const WeightDiagram &d, GeneratorWord &word,
               std::vector<RingElement> &v, std::size_t from, std::size_t to,
               const RingElement &coeff) {
    if (coeff.is_zero())
        return;
    auto beta = connecting_root(d, from, to);
    if (!beta)
        throw no_such_element("nodes are not connected by a root");
    int s = entry_sign(d, *beta, to, from);
    Letter l{LetterKind::X, *beta, s < 0 ? -coeff : coeff, {}};
    word.letters.push_back(l);
    v = act_word(d, {word.rep, {l}}, std::move(v));
}

Int strip_inverted(Int n, const RingDescriptor &ring) {
    if (n < 0)
        n = -n;
    for (const Int &p : ring.inverted_primes)
        while (n != 0 && n % p == 0)
            n /= p;
    return n;
}

bool nonzero_mod(const RingElement &x, const Int &p) {
    return x.scalar_value().num % p != 0;
}

struct OrbitMover {
    const WeightDiagram &d;
    const std::vector<std::size_t> &orbit;
    std::size_t top;
    GeneratorWord &word;
    std::vector<RingElement> &v;
    RingDescPtr ring;
    std::map<std::size_t, std::size_t> anti;

    OrbitMover(const WeightDiagram &d_, const std::vector<std::size_t> &o,
               std::size_t top_, GeneratorWord &w, std::vector<RingElement> &v_)
        : d(d_), orbit(o), top(top_), word(w), v(v_),
          ring(v_.at(top_).descriptor()) {
        for (std::size_t a : orbit) {
            std::optional<std::size_t> partner;
            for (std::size_t b : orbit) {
                if (a == b || connecting_root(d, a, b))
                    continue;
                if (partner)
                    throw unsupported_type("orbit is not a vector representation");
                partner = b;
            }
            if (!partner)
                throw unsupported_type("orbit is not a vector representation");
            anti[a] = *partner;
        }
    }

    void move(std::size_t from, std::size_t to, const RingElement &c) {
        make_move(d, word, v, from, to, c);
    }

    RingElement one() const { return RingElement::one(ring); }
};

// make v[m] a unit mod n: per prime of n, one masked witness addition
void residue_make_unit(OrbitMover &M, std::size_t m) {
    const Int n = M.ring->modulus;
    std::vector<Int> primes;
    for (const auto &[p, e] : detail::factor(n))
        primes.push_back(p);
    std::size_t mbar = M.anti.at(m);
    for (const Int &p : primes) {
        if (nonzero_mod(M.v[m], p))
            continue;
        Int mask = 1;
        for (const Int &q : primes)
            if (q != p)
                mask *= q;
        RingElement mask_el = RingElement::from_int(M.ring, mask);
        std::optional<std::size_t> c;
        for (std::size_t b : M.orbit)
            if (b != m && b != mbar && nonzero_mod(M.v[b], p)) {
                c = b;
                break;
            }
        if (!c) {
            if (!nonzero_mod(M.v[mbar], p))
                throw not_unimodular("orbit row is not unimodular");
            std::size_t d0 = 0;
            bool found = false;
            for (std::size_t b : M.orbit)
                if (b != m && b != mbar) {
                    d0 = b;
                    found = true;
                    break;
                }
            if (!found)
                throw unsupported_type("orbit too small");
            M.move(mbar, d0, mask_el);
            c = d0;
        }
        M.move(*c, m, mask_el);
    }
    if (!M.v[m].is_unit())
        throw internal_postcondition_failure("witness pass left a non-unit");
}

// ping-pong Euclid between top and m until v[m] = 0
void euclid_pair(OrbitMover &M, std::size_t m) {
    std::size_t top = M.top;
    for (int iter = 0; iter < 100000; ++iter) {
        if (M.v[m].is_zero())
            return;
        if (M.v[top].is_zero()) {
            M.move(m, top, M.one());
            M.move(top, m, -M.one());
            return;
        }
        Coeff a = M.v[top].scalar_value(), b = M.v[m].scalar_value();
        Int L = a.den / gcd(a.den, b.den) * b.den;
        Int A = a.num * (L / a.den), B = b.num * (L / b.den);
        if (abs(A) >= abs(B))
            M.move(m, top, RingElement::from_int(M.ring, -(A / B)));
        else
            M.move(top, m, RingElement::from_int(M.ring, -(B / A)));
    }
    throw internal_postcondition_failure("euclid did not terminate");
}

// over Z / localizations: masked witness passes + Euclid until v[top] a unit
void integral_make_unit(OrbitMover &M, std::size_t m) {
    std::size_t top = M.top, omega = M.anti.at(top), mbar = M.anti.at(m);
    for (int pass = 0; pass < 64; ++pass) {
        if (M.v[top].is_unit())
            return;
        if (M.v[top].is_zero()) {
            std::optional<std::size_t> c;
            for (std::size_t b : M.orbit)
                if (b != top && b != omega && !M.v[b].is_zero()) {
                    c = b;
                    break;
                }
            if (c) {
                M.move(*c, top, M.one());
            } else if (!M.v[omega].is_zero()) {
                M.move(omega, m, M.one());
                M.move(m, top, M.one());
            } else {
                throw not_unimodular("orbit row is all zero");
            }
            continue;
        }
        Int g = strip_inverted(M.v[top].scalar_value().num, *M.ring);
        std::vector<Int> primes;
        for (const auto &[p, e] : detail::factor(g))
            primes.push_back(p);
        for (const Int &p : primes) {
            if (nonzero_mod(M.v[m], p))
                continue;
            Int mask = 1;
            for (const Int &q : primes)
                if (q != p)
                    mask *= q;
            RingElement mask_el = RingElement::from_int(M.ring, mask);
            // prefer witnesses that leave v[top] untouched (omega last)
            std::optional<std::size_t> c;
            for (std::size_t b : M.orbit)
                if (b != m && b != mbar && b != omega && nonzero_mod(M.v[b], p)) {
                    c = b;
                    break;
                }
            if (!c && nonzero_mod(M.v[omega], p))
                c = omega;
            if (!c) {
                if (!nonzero_mod(M.v[mbar], p))
                    throw not_unimodular("orbit row is not unimodular");
                std::optional<std::size_t> d0;
                for (std::size_t b : M.orbit)
                    if (b != m && b != mbar && b != top && b != omega) {
                        d0 = b;
                        break;
                    }
                if (!d0)
                    throw unsupported_type("orbit too small");
                M.move(mbar, *d0, mask_el);
                c = d0;
            }
            M.move(*c, m, mask_el);
        }
        euclid_pair(M, m);
    }
    throw internal_postcondition_failure("reduction did not converge");
}

// bring v[top] to exactly 1; the companion m supplies the missing 1 - v[top]
void finish_corner(OrbitMover &M, std::size_t m) {
    std::size_t top = M.top;
    if (M.v[top].is_one())
        return;
    RingElement one = M.one();
    if (auto minv = M.v[m].try_invert()) {
        M.move(m, top, (one - M.v[top]) * *minv);
    } else if (auto tinv = M.v[top].try_invert()) {
        M.move(top, m, (one - M.v[top] - M.v[m]) * *tinv);
        M.move(m, top, one);
    } else {
        throw internal_postcondition_failure("no unit available to finish");
    }
}

} // namespace

GeneratorWord reduce_orbit(const WeightDiagram &d,
                           const std::vector<std::size_t> &orbit,
                           std::size_t top, std::vector<RingElement> &v) {
    RingDescPtr ring = v.at(top).descriptor();
    if (!ring->is_scalar())
        throw unsupported_ring("orbit reduction needs a scalar ring");
    GeneratorWord word{d.label(), {}};
    if (v[top].is_one())
        return word;

    OrbitMover M(d, orbit, top, word, v);
    std::size_t omega = M.anti.at(top);
    std::size_t m = orbit.size();
    for (std::size_t b : orbit)
        if (b != top && b != omega) {
            m = b;
            break;
        }
    if (m == orbit.size())
        throw unsupported_type("orbit too small");

    if (!v[top].is_unit()) {
        if (ring->kind == RingKind::Residue)
            residue_make_unit(M, m);
        else
            integral_make_unit(M, m);
    }
    finish_corner(M, m);
    if (!v[top].is_one())
        throw internal_postcondition_failure("corner is not 1 after reduction");
    return word;
}

UnimodularVector::UnimodularVector(DiagramPtr d,
                                   std::vector<RingElement> coords)
    : diagram(std::move(d)), coordinates(std::move(coords)) {
    if (coordinates.size() != diagram->size())
        throw descriptor_mismatch("vector length does not match the diagram");
    if (!unimodular_certificate(coordinates))
        throw not_unimodular("coordinates do not generate the unit ideal");
}

GeneratorWord minimize_word(const WeightDiagram &d, const GeneratorWord &word,
                            const std::vector<RingElement> &v,
                            std::size_t node) {
    std::vector<Letter> letters = word.letters;
    for (std::size_t i = 0; i < letters.size();) {
        std::vector<Letter> trial = letters;
        trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
        auto out = act_word(d, {word.rep, trial}, v);
        if (out[node].is_one())
            letters = std::move(trial);
        else
            ++i;
    }
    return {word.rep, letters};
}

GeneratorWord reduce_Dl(const UnimodularVector &uv,
                        const ReductionStrategy &strategy) {
    const WeightDiagram &d = *uv.diagram;
    if (d.system()->label()[0] != 'D' || d.highest_weight_index() != 1)
        throw unsupported_type("reduce_Dl needs a (D_l, w1) vector");
    std::vector<std::size_t> orbit(d.size());
    std::iota(orbit.begin(), orbit.end(), 0);
    std::vector<RingElement> v = uv.coordinates;
    GeneratorWord word = reduce_orbit(d, orbit, 0, v);
    std::reverse(word.letters.begin(), word.letters.end());
    if (strategy.minimize)
        word = minimize_word(d, word, uv.coordinates, 0);
    return word;
}

GeneratorWord reduce_E6(const UnimodularVector &uv,
                        const ReductionStrategy &strategy) {
    const WeightDiagram &d = *uv.diagram;
    RootSystemPtr sys = d.system();
    if (sys->label() != "E6" || d.highest_weight_index() != 1)
        throw unsupported_type("reduce_E6 needs an (E6, w1) vector");
    RingDescPtr ring = uv.coordinates.front().descriptor();
    if (!ring->is_scalar())
        throw unsupported_ring("reduction needs a scalar ring");

    std::vector<RingElement> v = uv.coordinates;
    GeneratorWord word{d.label(), {}};
    if (v[0].is_one())
        return word;

    // Step 1: make the row without the top coordinate unimodular, adding
    // multiples of v[0] across its A5-orbit
    auto a5 = subsystem(sys, {1, 3, 4, 5, 6}, {}, "A5");
    auto orbitA = suborbit(d, a5, 0);
    std::vector<std::size_t> others;
    for (std::size_t n : orbitA)
        if (n != 0)
            others.push_back(n);
    {
        std::vector<RingElement> row;
        for (std::size_t n : others)
            row.push_back(v[n]);
        row.push_back(v[0]);
        auto t = asr_transform(row, row.size());
        for (std::size_t i = 0; i < others.size(); ++i)
            make_move(d, word, v, 0, others[i], t[i]);
    }
    std::vector<RingElement> rest;
    for (std::size_t n = 1; n < d.size(); ++n)
        rest.push_back(v[n]);
    auto cert = unimodular_certificate(rest);
    if (!cert)
        throw internal_postcondition_failure("step 1 left a non-unimodular row");

    // Step 2: v[0] = 1 modulo the ideal of the level-2 coordinates, adding
    // level-1 coordinates scaled by the Bezout coefficients
    {
        RingElement target = RingElement::one(ring) - v[0];
        for (std::size_t n = 1; n < d.size(); ++n)
            if (d.level(n, 1) == 1)
                make_move(d, word, v, n, 0, cert->coefficients[n - 1] * target);
    }
    std::vector<RingElement> level2;
    for (std::size_t n = 0; n < d.size(); ++n)
        if (d.level(n, 1) == 2)
            level2.push_back(v[n]);
    if (strategy.check_step_boundaries &&
        !IdealDescriptor(level2).contains(v[0] - RingElement::one(ring)))
        throw internal_postcondition_failure("step 2 congruence failed");

    // the D5' = <a1..a5> orbit of the top is the finishing vector
    // representation; its antipode is the distinguished level-2 node
    auto d5p = subsystem(sys, {1, 2, 3, 4, 5}, {}, "D5'");
    auto orbit4 = suborbit(d, d5p, 0);
    std::size_t top_l2 = d.size();
    for (std::size_t n : orbit4)
        if (d.level(n, 1) == 2) {
            if (top_l2 != d.size())
                throw internal_postcondition_failure("ambiguous level-2 anchor");
            top_l2 = n;
        }
    if (top_l2 == d.size())
        throw internal_postcondition_failure("no level-2 anchor in the orbit");

    // Step 3: over R/<v[0]>, reduce the level-2 D5-orbit so that the anchor
    // becomes 1 modulo v[0]; scalars lift by arbitrary preimages
    auto q = scalar_quotient_by(v[0]);
    if (!q.is_trivial) {
        auto d5 = subsystem(sys, {2, 3, 4, 5, 6}, {}, "D5");
        auto orbit3 = suborbit(d, d5, top_l2);
        if (q.is_identity) {
            GeneratorWord w3 = reduce_orbit(d, orbit3, top_l2, v);
            word.letters.insert(word.letters.end(), w3.letters.begin(),
                                w3.letters.end());
        } else {
            std::vector<RingElement> pv;
            for (const RingElement &c : v)
                pv.push_back(q.project(c));
            GeneratorWord w3 = reduce_orbit(d, orbit3, top_l2, pv);
            for (const Letter &l : w3.letters) {
                Letter lifted{LetterKind::X, l.root, q.lift(l.scalar), {}};
                word.letters.push_back(lifted);
                v = act_word(d, {word.rep, {lifted}}, std::move(v));
            }
        }
    }
    if (strategy.check_step_boundaries &&
        !unimodular_certificate({v[0], v[top_l2]}))
        throw internal_postcondition_failure("step 3 left a non-coprime pair");

    // Step 4: finish on the D5' orbit
    GeneratorWord w4 = reduce_orbit(d, orbit4, 0, v);
    word.letters.insert(word.letters.end(), w4.letters.begin(),
                        w4.letters.end());

    if (!v[0].is_one())
        throw internal_postcondition_failure("corner is not 1 after reduction");
    // letters were accumulated in application order
    std::reverse(word.letters.begin(), word.letters.end());
    if (strategy.minimize)
        word = minimize_word(d, word, uv.coordinates, 0);
    return word;
}

StabilityWitness
surjective_stability_witness(const GroupElement &g,
                             const ReductionStrategy &strategy) {
    std::vector<RingElement> column;
    for (std::size_t i = 0; i < g.dim(); ++i)
        column.push_back(g.at(i, 0));
    UnimodularVector uv(g.diagram(), std::move(column));
    GeneratorWord h = reduce_E6(uv, strategy);
    GroupElement hg = multiply(realize(g.diagram(), g.ring(), h), g);
    return {h, chevalley_matsumoto(hg, 1)};
}

} // namespace chevk1
