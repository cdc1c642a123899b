#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "chevk1/ideal.hpp"

using namespace chevk1;

TEST_CASE("descriptor grammar round trips") {
    for (const char *text :
         {"Z", "Z/6", "Z[1/2]", "poly(Z[1/2]; xi, zeta)",
          "quot(poly(Z[1/2]; xi, zeta); xi^2)", "Z/360",
          "quot(poly(Z; xi, zeta); xi^2)", "quot(poly(Z/9; xi, zeta); xi^2)"}) {
        RingDescPtr d = RingDescriptor::parse(text);
        CHECK(d->to_string() == text);
        CHECK(*RingDescriptor::parse(d->to_string()) == *d);
    }
    CHECK_THROWS_AS(RingDescriptor::parse("Q"), parse_error);
    CHECK_THROWS_AS(RingDescriptor::parse("Z/"), parse_error);
    CHECK_THROWS_AS(RingDescriptor::parse("quot(Z; xi^2)"), unsupported_ring);
}

TEST_CASE("element printing and parsing are mutually inverse") {
    std::mt19937_64 rng(101);
    for (const char *text : {"Z", "Z/6", "Z/360", "Z[1/2]",
                             "quot(poly(Z[1/2]; xi, zeta); xi^2)"}) {
        RingDescPtr d = RingDescriptor::parse(text);
        RingElement xi = d->is_scalar() ? RingElement::zero(d)
                                        : RingElement::variable(d, "xi");
        RingElement zeta = d->is_scalar() ? RingElement::zero(d)
                                          : RingElement::variable(d, "zeta");
        for (int k = 0; k < 50; ++k) {
            RingElement e =
                RingElement::from_int(d, Int(static_cast<long long>(rng() % 2001)) - 1000) +
                RingElement::from_int(d, Int(static_cast<long long>(rng() % 7))) * xi +
                RingElement::from_int(d, Int(static_cast<long long>(rng() % 7))) * zeta +
                RingElement::from_int(d, Int(static_cast<long long>(rng() % 7))) * xi * zeta;
            CHECK(RingElement::parse(d, e.to_string()) == e);
        }
    }
    RingDescPtr loc = RingDescriptor::parse("Z[1/2]");
    RingElement half = RingElement::from_fraction(loc, 1, 2);
    CHECK(half.to_string() == "1/2^1");
    CHECK(RingElement::parse(loc, "3/2^2") ==
          RingElement::from_fraction(loc, 3, 4));
    CHECK((half + half).is_one());
}

TEST_CASE("ring axioms hold on random triples") {
    std::mt19937_64 rng(7);
    for (const char *text :
         {"Z", "Z/6", "Z/360", "Z[1/2]", "quot(poly(Z; xi, zeta); xi^2)"}) {
        RingDescPtr d = RingDescriptor::parse(text);
        auto random_elem = [&] {
            RingElement e = RingElement::from_int(
                d, Int(static_cast<long long>(rng() % 201)) - 100);
            if (!d->is_scalar() && rng() % 2)
                e = e + RingElement::from_int(
                            d, Int(static_cast<long long>(rng() % 5))) *
                            RingElement::variable(d, "xi");
            return e;
        };
        for (int k = 0; k < 100; ++k) {
            RingElement a = random_elem(), b = random_elem(), c = random_elem();
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a - a == RingElement::zero(d));
            CHECK(a * RingElement::one(d) == a);
            CHECK((a - b) + b == a);
        }
    }
}

TEST_CASE("try_invert is sound and complete on small residue rings") {
    for (long long n : {5, 6, 9, 12, 360}) {
        RingDescPtr d = RingDescriptor::residue(n);
        for (long long a = 0; a < n; ++a) {
            RingElement e = RingElement::from_int(d, a);
            auto inv = e.try_invert();
            bool coprime = std::gcd(a, n) == 1;
            CHECK(inv.has_value() == coprime);
            if (inv)
                CHECK((e * *inv).is_one());
        }
    }
    RingDescPtr z = RingDescriptor::integers();
    CHECK(RingElement::from_int(z, -1).is_unit());
    CHECK_FALSE(RingElement::from_int(z, 2).is_unit());
    RingDescPtr loc = RingDescriptor::parse("Z[1/2]");
    CHECK(RingElement::from_int(loc, 8).is_unit());
    CHECK_FALSE(RingElement::from_int(loc, 3).is_unit());
}

TEST_CASE("units and nilpotents in truncated polynomial rings") {
    RingDescPtr d = RingDescriptor::parse("quot(poly(Z[1/2]; xi, zeta); xi^2)");
    RingElement xi = RingElement::variable(d, "xi");
    RingElement zeta = RingElement::variable(d, "zeta");
    CHECK(xi * xi == RingElement::zero(d));
    CHECK(xi.is_nilpotent());
    CHECK_FALSE(zeta.is_nilpotent());
    CHECK_FALSE(zeta.is_unit());

    RingElement u = RingElement::one(d) + zeta * xi;
    auto inv = u.try_invert();
    REQUIRE(inv.has_value());
    CHECK((u * *inv).is_one());
    CHECK(*inv == RingElement::one(d) - zeta * xi);
}

TEST_CASE("unimodular certificates match brute force on Z/n") {
    std::mt19937_64 rng(23);
    for (long long n : {6, 12, 30}) {
        RingDescPtr d = RingDescriptor::residue(n);
        for (int trial = 0; trial < 200; ++trial) {
            std::size_t len = 1 + rng() % 3;
            std::vector<RingElement> row;
            long long g = n;
            for (std::size_t i = 0; i < len; ++i) {
                long long a = static_cast<long long>(rng() % n);
                row.push_back(RingElement::from_int(d, a));
                g = std::gcd(g, a);
            }
            auto cert = unimodular_certificate(row);
            CHECK(cert.has_value() == (g == 1));
            if (cert)
                CHECK(cert->verify(row));
        }
    }
    RingDescPtr z = RingDescriptor::integers();
    std::vector<RingElement> row{RingElement::from_int(z, 10),
                                 RingElement::from_int(z, 21)};
    auto cert = unimodular_certificate(row);
    REQUIRE(cert.has_value());
    CHECK(cert->verify(row));
    CHECK_FALSE(unimodular_certificate({RingElement::from_int(z, 4),
                                        RingElement::from_int(z, 6)}));
}

TEST_CASE("asr_transform satisfies the maximal-ideal contract") {
    std::mt19937_64 rng(31);
    for (const char *text : {"Z/6", "Z/360", "Z"}) {
        RingDescPtr d = RingDescriptor::parse(text);
        for (int trial = 0; trial < 60; ++trial) {
            std::size_t n = 3 + rng() % 3;
            std::vector<RingElement> row;
            bool nonzero = false;
            for (std::size_t i = 0; i < n; ++i) {
                long long a = static_cast<long long>(rng() % 199) - 99;
                nonzero |= a != 0;
                row.push_back(RingElement::from_int(d, a));
            }
            if (!nonzero)
                row[0] = RingElement::one(d);
            std::vector<RingElement> t = asr_transform(row, n);
            REQUIRE(t.size() == n - 1);
            std::vector<RingElement> transformed;
            for (std::size_t i = 0; i + 1 < n; ++i)
                transformed.push_back(row[i] + t[i] * row[n - 1]);
            auto shrunk = maximal_ideals_containing(IdealDescriptor(transformed));
            auto full = maximal_ideals_containing(IdealDescriptor(row));
            for (const std::string &m : shrunk)
                CHECK(std::find(full.begin(), full.end(), m) != full.end());
        }
    }
}

TEST_CASE("evaluate_hom maps polynomial identities into scalar rings") {
    RingDescPtr src = RingDescriptor::parse("quot(poly(Z[1/2]; xi, zeta); xi^2)");
    RingElement xi = RingElement::variable(src, "xi");
    RingElement zeta = RingElement::variable(src, "zeta");
    RingElement e = RingElement::one(src) +
                    RingElement::from_fraction(src, 1, 2) * zeta * xi;

    RingDescPtr z9 = RingDescriptor::residue(9);
    std::map<std::string, RingElement> a{{"xi", RingElement::from_int(z9, 3)},
                                         {"zeta", RingElement::one(z9)}};
    // 1 + 3/2 = 1 + 3*5 = 16 = 7 mod 9
    CHECK(evaluate_hom(e, a) == RingElement::from_int(z9, 7));
    CHECK(evaluate_hom(xi * xi, a) == RingElement::zero(z9));

    // free polynomial source: 1 + 1*2/2 = 2
    RingDescPtr free_src = RingDescriptor::parse("poly(Z[1/2]; xi, zeta)");
    RingElement f = RingElement::one(free_src) +
                    RingElement::from_fraction(free_src, 1, 2) *
                        RingElement::variable(free_src, "zeta") *
                        RingElement::variable(free_src, "xi");
    std::map<std::string, RingElement> a2{{"xi", RingElement::from_int(z9, 2)},
                                          {"zeta", RingElement::one(z9)}};
    CHECK(evaluate_hom(f, a2) == RingElement::from_int(z9, 2));

    // xi -> 1 violates xi^2 = 0
    std::map<std::string, RingElement> bad{{"xi", RingElement::one(z9)},
                                           {"zeta", RingElement::one(z9)}};
    CHECK_THROWS_AS(evaluate_hom(e, bad), relation_not_preserved);

    // xi -> 2 preserves xi^2 = 0 mod 4, but 2 is not invertible in Z/4
    RingDescPtr z4 = RingDescriptor::residue(4);
    std::map<std::string, RingElement> c{{"xi", RingElement::from_int(z4, 2)},
                                         {"zeta", RingElement::one(z4)}};
    CHECK_THROWS_AS(evaluate_hom(e, c), two_not_invertible);
}

TEST_CASE("scalar quotients project and lift") {
    RingDescPtr z = RingDescriptor::integers();
    ScalarQuotient q = scalar_quotient_by(RingElement::from_int(z, 12));
    REQUIRE_FALSE(q.is_trivial);
    REQUIRE_FALSE(q.is_identity);
    CHECK(q.ring->to_string() == "Z/12");
    RingElement x = RingElement::from_int(z, 17);
    CHECK(q.project(x) == RingElement::from_int(q.ring, 5));
    RingElement lifted = q.lift(q.project(x));
    CHECK(q.project(lifted) == q.project(x));

    CHECK(scalar_quotient_by(RingElement::one(z)).is_trivial);
    CHECK(scalar_quotient_by(RingElement::zero(z)).is_identity);
}

TEST_CASE("ideal membership on scalar rings") {
    RingDescPtr z = RingDescriptor::integers();
    IdealDescriptor i({RingElement::from_int(z, 6), RingElement::from_int(z, 10)});
    CHECK(i.contains(RingElement::from_int(z, 2)));
    CHECK_FALSE(i.contains(RingElement::from_int(z, 3)));
    CHECK(i.contains(RingElement::zero(z)));

    RingDescPtr q = RingDescriptor::parse("quot(poly(Z; xi, zeta); xi^2)");
    IdealDescriptor ix({RingElement::variable(q, "xi")});
    CHECK(ix.contains(RingElement::variable(q, "xi") *
                      RingElement::variable(q, "zeta")));
    CHECK_FALSE(ix.contains(RingElement::one(q)));
}
