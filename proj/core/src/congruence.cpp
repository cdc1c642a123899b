#include "chevk1/congruence.hpp"

#include <chrono>

namespace chevk1 {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

Root negate(Root r) {
    for (int &c : r)
        c = -c;
    return r;
}

RingElement invert_or_throw(const RingElement &x) {
    auto inv = x.try_invert();
    if (!inv)
        throw not_a_unit(x.to_string() + " is not a unit");
    return *inv;
}

// 1 + m*zeta*xi/2; throws two_not_invertible for odd m without 1/2
RingElement half_factor(const RingDescPtr &ring, int m, const RingElement &xi,
                        const RingElement &zeta) {
    RingElement term = RingElement::from_int(ring, m) * zeta * xi;
    if (m % 2 == 0)
        return RingElement::one(ring) +
               RingElement::from_int(ring, m / 2) * zeta * xi;
    auto half = RingElement::from_int(ring, 2).try_invert();
    if (!half)
        throw two_not_invertible("2 is not invertible in " + ring->to_string());
    return RingElement::one(ring) + term * *half;
}

} // namespace

RelativeContext make_context(RingDescPtr ring, IdealDescriptor ideal) {
    auto sys = RootSystem::build("E7");
    RelativeContext ctx{WeightDiagram::build(sys, 7),
                        subsystem(sys, {2, 3, 4, 5, 6, 7},
                                  {sys->maximal_root()}, "A1+D6"),
                        std::move(ring), std::move(ideal)};
    return ctx;
}

RelativeContext universal_context(bool invert_two) {
    RingDescPtr ring = RingDescriptor::parse(
        invert_two ? "quot(poly(Z[1/2]; xi, zeta); xi^2)"
                   : "quot(poly(Z; xi, zeta); xi^2)");
    IdealDescriptor ideal({RingElement::variable(ring, "xi")});
    return make_context(ring, std::move(ideal));
}

bool MembershipCertificate::verify(const RelativeContext &ctx) const {
    for (const Letter &l : word.letters) {
        if (l.tag == kTagRelative) {
            if (l.kind != LetterKind::X || !ctx.ideal.contains(l.scalar))
                return false;
        } else if (l.tag == kTagLevi) {
            if (!ctx.delta.contains(l.root))
                return false;
            if (l.kind != LetterKind::X && !l.scalar.is_unit())
                return false;
        } else {
            return false;
        }
    }
    GroupElement replay = realize(ctx.diagram, ctx.ring, word);
    replay.clear_provenance();
    GroupElement want = target;
    want.clear_provenance();
    return replay == want;
}

std::vector<CheckReport> verify_z_factorization() {
    std::vector<CheckReport> out;
    for (const char *ring_text : {"quot(poly(Z; xi, zeta); xi^2)",
                                  "quot(poly(Z[1/2]; xi, zeta); xi^2)"}) {
        RingDescPtr ring = RingDescriptor::parse(ring_text);
        RingElement xi = RingElement::variable(ring, "xi");
        RingElement zeta = RingElement::variable(ring, "zeta");
        RingElement eps = RingElement::one(ring) + zeta * xi;
        for (const char *rep : {"A1:w1", "E7:w7"}) {
            auto t0 = std::chrono::steady_clock::now();
            auto sys = RootSystem::build(rep[0] == 'A' ? "A1" : "E7");
            auto d = WeightDiagram::build(sys, rep[0] == 'A' ? 1 : 7);
            Root a1 = sys->simple(1);
            GroupElement lhs = z_gen(d, a1, xi, zeta);
            GroupElement rhs = multiply(
                multiply(gen_x(d, a1, xi), gen_x(d, negate(a1), -(zeta * zeta * xi))),
                gen_h(d, a1, eps));
            CheckReport r;
            r.check = std::string("z-factorization ") + rep + " over " + ring_text;
            r.pass = lhs == rhs;
            r.elapsed_ms = ms_since(t0);
            out.push_back(std::move(r));
        }
    }
    return out;
}

std::vector<CheckReport> verify_h_delta_product(RingDescPtr ring) {
    if (!ring)
        ring = RingDescriptor::parse("quot(poly(Z[1/2]; xi, zeta); xi^2)");
    RingElement xi = RingElement::variable(ring, "xi");
    RingElement zeta = RingElement::variable(ring, "zeta");

    auto sys = RootSystem::build("E7");
    auto d = WeightDiagram::build(sys, 7);
    const Root &delta = sys->maximal_root();
    std::vector<CheckReport> out;

    {
        CheckReport r;
        r.check = "maximal root coefficients (2,2,3,4,3,2,1)";
        r.pass = delta == Root{2, 2, 3, 4, 3, 2, 1};
        out.push_back(std::move(r));
    }

    auto t0 = std::chrono::steady_clock::now();
    RingElement corner = half_factor(ring, 1, xi, zeta); // 1 + zeta*xi/2
    GroupElement lhs = gen_h(d, delta, corner);
    GroupElement rhs = GroupElement::identity(d, ring);
    for (int i = 1; i <= 7; ++i)
        rhs = multiply(rhs, gen_h(d, sys->simple(i),
                                  half_factor(ring, delta[i - 1], xi, zeta)));
    {
        CheckReport r;
        r.check = "h_delta(1+zeta*xi/2) = 7-factor torus product";
        r.pass = lhs == rhs;
        r.elapsed_ms = ms_since(t0);
        out.push_back(std::move(r));
    }

    t0 = std::chrono::steady_clock::now();
    bool exponents = true;
    for (std::size_t n = 0; n < d->size(); ++n) {
        int p = d->pairing(n, delta);
        RingElement want = p >= 0 ? corner.pow(static_cast<unsigned>(p))
                                  : invert_or_throw(corner).pow(
                                        static_cast<unsigned>(-p));
        for (std::size_t j = 0; j < d->size(); ++j)
            if (n != j && !lhs.at(n, j).is_zero())
                exponents = false;
        if (!(lhs.at(n, n) == want))
            exponents = false;
    }
    {
        CheckReport r;
        r.check = "diagonal entries are (1+zeta*xi/2)^<lambda,delta^vee>";
        r.pass = exponents;
        r.elapsed_ms = ms_since(t0);
        out.push_back(std::move(r));
    }
    return out;
}

MembershipCertificate z_membership_word(const RelativeContext &ctx,
                                        const RingElement &xi,
                                        const RingElement &zeta) {
    const RingDescPtr &ring = ctx.ring;
    auto sys = ctx.diagram->system();
    Root a1 = sys->simple(1);
    const Root &delta = sys->maximal_root();

    GeneratorWord word{ctx.diagram->label(), {}};
    word.letters.push_back({LetterKind::X, a1, xi, kTagRelative});
    word.letters.push_back(
        {LetterKind::X, negate(a1), -(zeta * zeta * xi), kTagRelative});
    word.letters.push_back(
        {LetterKind::H, delta, half_factor(ring, 1, xi, zeta), kTagLevi});
    for (int i = 7; i >= 2; --i)
        word.letters.push_back(
            {LetterKind::H, sys->simple(i),
             invert_or_throw(half_factor(ring, delta[i - 1], xi, zeta)),
             kTagLevi});

    MembershipCertificate cert{std::move(word), z_gen(ctx.diagram, a1, xi, zeta)};
    GroupElement replay = realize(ctx.diagram, ring, cert.word);
    replay.clear_provenance();
    GroupElement want = cert.target;
    want.clear_provenance();
    if (!(replay == want))
        throw internal_postcondition_failure("z certificate does not replay");
    return cert;
}

MembershipCertificate general_z_membership(const RelativeContext &ctx,
                                           const Root &alpha,
                                           const RingElement &xi,
                                           const RingElement &zeta) {
    auto sys = ctx.diagram->system();
    Root a1 = sys->simple(1);

    if (ctx.delta.contains(alpha)) {
        GeneratorWord word{ctx.diagram->label(), {}};
        word.letters.push_back(
            {LetterKind::X, negate(alpha), -zeta, kTagLevi});
        word.letters.push_back({LetterKind::X, alpha, xi, kTagLevi});
        word.letters.push_back({LetterKind::X, negate(alpha), zeta, kTagLevi});
        return {std::move(word), z_gen(ctx.diagram, alpha, xi, zeta)};
    }
    if (alpha == a1)
        return z_membership_word(ctx, xi, zeta);

    auto wword = find_weyl_conjugator(ctx.delta, a1, alpha);
    if (!wword)
        throw no_such_element("root is not W(Delta)-conjugate to alpha_1");

    // the conjugating element as tagged X-triples (w_b(1) each)
    RingElement one = RingElement::one(ctx.ring);
    std::vector<Letter> conj;
    for (const Root &beta : *wword) {
        conj.push_back({LetterKind::X, beta, one, kTagLevi});
        conj.push_back({LetterKind::X, negate(beta), -one, kTagLevi});
        conj.push_back({LetterKind::X, beta, one, kTagLevi});
    }
    GroupElement w = realize(ctx.diagram, ctx.ring, {ctx.diagram->label(), conj});
    GroupElement winv = invert(w);

    // read the conjugation signs off the matrices
    auto read_sign = [&](const Root &from, const Root &to) {
        GroupElement image =
            multiply(multiply(w, gen_x(ctx.diagram, from, one)), winv);
        image.clear_provenance();
        GroupElement plus = gen_x(ctx.diagram, to, one);
        plus.clear_provenance();
        if (image == plus)
            return 1;
        GroupElement minus = gen_x(ctx.diagram, to, -one);
        minus.clear_provenance();
        if (image == minus)
            return -1;
        throw internal_postcondition_failure("conjugate is not a root element");
    };
    int eps_plus = read_sign(a1, alpha);
    int eps_minus = read_sign(negate(a1), negate(alpha));

    RingElement xi1 = eps_plus < 0 ? -xi : xi;
    RingElement zeta1 = eps_minus < 0 ? -zeta : zeta;
    MembershipCertificate base = z_membership_word(ctx, xi1, zeta1);

    GeneratorWord word{ctx.diagram->label(), conj};
    word.letters.insert(word.letters.end(), base.word.letters.begin(),
                        base.word.letters.end());
    for (auto it = conj.rbegin(); it != conj.rend(); ++it)
        word.letters.push_back(it->inverse());

    MembershipCertificate cert{std::move(word),
                               z_gen(ctx.diagram, alpha, xi, zeta)};
    GroupElement replay = realize(ctx.diagram, ctx.ring, cert.word);
    replay.clear_provenance();
    GroupElement want = cert.target;
    want.clear_provenance();
    if (!(replay == want))
        throw internal_postcondition_failure(
            "conjugated certificate does not replay");
    return cert;
}

MembershipCertificate
specialize_certificate(const MembershipCertificate &cert,
                       const std::map<std::string, RingElement> &assignment) {
    GeneratorWord word{cert.word.rep, {}};
    for (const Letter &l : cert.word.letters)
        word.letters.push_back(
            {l.kind, l.root, evaluate_hom(l.scalar, assignment), l.tag});
    RingDescPtr ring = assignment.begin()->second.descriptor();
    GroupElement target = realize(cert.target.diagram(), ring, word);
    target.clear_provenance();
    return {std::move(word), std::move(target)};
}

} // namespace chevk1
