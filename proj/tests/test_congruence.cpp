#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chevk1/congruence.hpp"

using namespace chevk1;

TEST_CASE("z-factorization identities hold over both coefficient rings") {
    for (const CheckReport &r : verify_z_factorization()) {
        INFO(r.check);
        CHECK(r.pass);
    }
}

TEST_CASE("h_delta torus product and exponent law") {
    for (const CheckReport &r : verify_h_delta_product()) {
        INFO(r.check);
        CHECK(r.pass);
    }
    // without 1/2 the half-parameter torus element does not exist
    CHECK_THROWS_AS(
        verify_h_delta_product(RingDescriptor::parse("quot(poly(Z; xi, zeta); xi^2)")),
        two_not_invertible);
}

TEST_CASE("the universal nine-letter certificate") {
    RelativeContext ctx = universal_context();
    RingElement xi = RingElement::variable(ctx.ring, "xi");
    RingElement zeta = RingElement::variable(ctx.ring, "zeta");
    MembershipCertificate cert = z_membership_word(ctx, xi, zeta);
    CHECK(cert.word.letters.size() == 9);
    CHECK(cert.verify(ctx));

    int relative = 0, levi = 0;
    for (const Letter &l : cert.word.letters) {
        if (l.tag == kTagRelative)
            ++relative;
        if (l.tag == kTagLevi)
            ++levi;
    }
    CHECK(relative == 2);
    CHECK(levi == 7);

    // tampering with a tag invalidates the certificate
    MembershipCertificate bad = cert;
    bad.word.letters[0].tag = "";
    CHECK_FALSE(bad.verify(ctx));
    // tampering with the target invalidates it too
    MembershipCertificate wrong = cert;
    wrong.target = GroupElement::identity(ctx.diagram, ctx.ring);
    CHECK_FALSE(wrong.verify(ctx));
}

TEST_CASE("membership for roots inside Delta uses the three-letter definition") {
    RelativeContext ctx = universal_context();
    RingElement xi = RingElement::variable(ctx.ring, "xi");
    RingElement zeta = RingElement::variable(ctx.ring, "zeta");
    Root a2 = ctx.diagram->system()->simple(2);
    MembershipCertificate cert = general_z_membership(ctx, a2, xi, zeta);
    CHECK(cert.word.letters.size() == 3);
    for (const Letter &l : cert.word.letters)
        CHECK(l.tag == kTagLevi);
    CHECK(cert.verify(ctx));

    const Root &delta = ctx.diagram->system()->maximal_root();
    CHECK(general_z_membership(ctx, delta, xi, zeta).verify(ctx));
}

TEST_CASE("membership for a conjugated root outside Delta") {
    RelativeContext ctx = universal_context();
    RingElement xi = RingElement::variable(ctx.ring, "xi");
    RingElement zeta = RingElement::variable(ctx.ring, "zeta");
    // alpha_1 itself delegates to the nine-letter word
    Root a1 = ctx.diagram->system()->simple(1);
    CHECK(general_z_membership(ctx, a1, xi, zeta).verify(ctx));

    // a root outside Delta distinct from alpha_1 goes through conjugation
    Root other;
    for (const Root &alpha : ctx.delta.complement())
        if (alpha != a1) {
            other = alpha;
            break;
        }
    MembershipCertificate cert = general_z_membership(ctx, other, xi, zeta);
    CHECK(cert.verify(ctx));
    for (const Letter &l : cert.word.letters)
        CHECK((l.tag == kTagRelative || l.tag == kTagLevi));
}

TEST_CASE("specialization to Z/9 with a = 3") {
    RelativeContext ctx = universal_context();
    RingElement xi = RingElement::variable(ctx.ring, "xi");
    RingElement zeta = RingElement::variable(ctx.ring, "zeta");
    MembershipCertificate cert = z_membership_word(ctx, xi, zeta);

    RingDescPtr z9 = RingDescriptor::residue(9);
    std::map<std::string, RingElement> a{{"xi", RingElement::from_int(z9, 3)},
                                         {"zeta", RingElement::from_int(z9, 2)}};
    MembershipCertificate spec = specialize_certificate(cert, a);
    RelativeContext ctx9 =
        make_context(z9, IdealDescriptor({RingElement::from_int(z9, 3)}));
    CHECK(spec.verify(ctx9));
}

TEST_CASE("specialization to the dual numbers over Z[1/2]") {
    RelativeContext ctx = universal_context();
    RingElement xi = RingElement::variable(ctx.ring, "xi");
    RingElement zeta = RingElement::variable(ctx.ring, "zeta");
    MembershipCertificate cert = z_membership_word(ctx, xi, zeta);

    RingDescPtr dual = RingDescriptor::parse("quot(poly(Z[1/2]; eps); eps^2)");
    RingElement eps = RingElement::variable(dual, "eps");
    std::map<std::string, RingElement> a{{"xi", eps},
                                         {"zeta", RingElement::one(dual)}};
    MembershipCertificate spec = specialize_certificate(cert, a);
    RelativeContext ctxd = make_context(dual, IdealDescriptor({eps}));
    CHECK(spec.verify(ctxd));
}

TEST_CASE("xi -> 0 collapses the certificate to the identity") {
    RelativeContext ctx = universal_context();
    RingElement xi = RingElement::variable(ctx.ring, "xi");
    RingElement zeta = RingElement::variable(ctx.ring, "zeta");
    MembershipCertificate cert = z_membership_word(ctx, xi, zeta);

    RingDescPtr z = RingDescriptor::parse("Z[1/2]");
    std::map<std::string, RingElement> a{{"xi", RingElement::zero(z)},
                                         {"zeta", RingElement::from_int(z, 5)}};
    MembershipCertificate spec = specialize_certificate(cert, a);
    CHECK(spec.target.is_identity());
    GroupElement replay = realize(spec.target.diagram(), z, spec.word);
    CHECK(replay.is_identity());
}

TEST_CASE("illegal specializations are rejected") {
    RelativeContext ctx = universal_context();
    RingElement xi = RingElement::variable(ctx.ring, "xi");
    RingElement zeta = RingElement::variable(ctx.ring, "zeta");
    MembershipCertificate cert = z_membership_word(ctx, xi, zeta);

    // xi -> 1 over Z/9 does not preserve xi^2 = 0
    RingDescPtr z9 = RingDescriptor::residue(9);
    std::map<std::string, RingElement> bad{{"xi", RingElement::one(z9)},
                                           {"zeta", RingElement::one(z9)}};
    CHECK_THROWS_AS(specialize_certificate(cert, bad), relation_not_preserved);

    // Z/4 preserves xi^2 = 0 for xi -> 2 but lacks the 1/2 the torus
    // letters need
    RingDescPtr z4 = RingDescriptor::residue(4);
    std::map<std::string, RingElement> odd{{"xi", RingElement::from_int(z4, 2)},
                                           {"zeta", RingElement::one(z4)}};
    CHECK_THROWS_AS(specialize_certificate(cert, odd), two_not_invertible);
}

TEST_CASE("universal context without 1/2 still certifies z_alpha1") {
    RelativeContext ctx = universal_context(false);
    CHECK(ctx.ring->to_string() == "quot(poly(Z; xi, zeta); xi^2)");
    RingElement xi = RingElement::variable(ctx.ring, "xi");
    RingElement zeta = RingElement::variable(ctx.ring, "zeta");
    // the 9-letter word needs h_delta(1 + zeta*xi/2), which requires 1/2
    CHECK_THROWS_AS(z_membership_word(ctx, xi, zeta), two_not_invertible);
}
