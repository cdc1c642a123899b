#include "chevk1/ideal.hpp"

#include <algorithm>

namespace chevk1 {

using boost::multiprecision::gcd;
using detail::factor;
using detail::inv_mod;
using detail::xgcd;

namespace {

Int lift_residue(const RingElement &x) { return x.scalar_value().num; }

/// Numerator of a localized element with the inverted primes stripped;
/// generates the same ideal as x.
Int localized_content(const RingElement &x) {
    Coeff c = x.scalar_value();
    Int n = c.num < 0 ? Int(-c.num) : c.num;
    for (const Int &p : x.descriptor()->inverted_primes)
        while (n != 0 && n % p == 0)
            n /= p;
    return n;
}

void require_common_descriptor(const std::vector<RingElement> &xs) {
    for (std::size_t i = 1; i < xs.size(); ++i)
        require_same_ring(xs[0], xs[i]);
}

} // namespace

IdealDescriptor::IdealDescriptor(std::vector<RingElement> gens)
    : generators(std::move(gens)) {
    if (generators.empty())
        throw unsupported_ring("ideal needs at least one generator");
    require_common_descriptor(generators);
}

bool IdealDescriptor::contains(const RingElement &x) const {
    require_same_ring(generators.front(), x);
    const RingDescriptor &d = *descriptor();
    if (d.is_scalar()) {
        Int content = 0;
        switch (d.kind) {
        case RingKind::Integers:
            for (const auto &g : generators)
                content = gcd(content, g.scalar_value().num);
            return content == 0 ? x.is_zero() : x.scalar_value().num % content == 0;
        case RingKind::Residue:
            content = d.modulus;
            for (const auto &g : generators)
                content = gcd(content, lift_residue(g));
            return lift_residue(x) % content == 0;
        case RingKind::Localized:
            for (const auto &g : generators)
                content = gcd(content, localized_content(g));
            return content == 0 ? x.is_zero() : localized_content(x) % content == 0;
        default:
            break;
        }
    }
    // monomial ideals: every generator a single term with unit coefficient
    std::vector<Monomial> monos;
    for (const auto &g : generators) {
        if (g.terms().size() != 1)
            throw unsupported_ring("ideal membership only for monomial ideals");
        const auto &[m, c] = *g.terms().begin();
        if (!RingElement::from_fraction(g.descriptor(), c.num, c.den).is_unit())
            throw unsupported_ring("monomial generator with non-unit coefficient");
        monos.push_back(m);
    }
    for (const auto &[m, c] : x.terms()) {
        bool divisible = false;
        for (const auto &g : monos) {
            bool ok = true;
            for (std::size_t i = 0; i < m.size(); ++i)
                if (m[i] < g[i]) {
                    ok = false;
                    break;
                }
            if (ok) {
                divisible = true;
                break;
            }
        }
        if (!divisible)
            return false;
    }
    return true;
}

bool BezoutCertificate::verify(const std::vector<RingElement> &row) const {
    if (coefficients.size() != row.size())
        return false;
    RingElement s = RingElement::zero(row.front().descriptor());
    for (std::size_t i = 0; i < row.size(); ++i)
        s = s + coefficients[i] * row[i];
    return s.is_one();
}

namespace {

/// Running xgcd over integer values; returns coefficients with
/// sum c_i v_i = g = gcd(v_1..v_k) >= 0.
Int integer_row_gcd(const std::vector<Int> &vals, std::vector<Int> &coeffs) {
    coeffs.assign(vals.size(), 0);
    Int g = 0;
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (vals[i] == 0)
            continue;
        Int x, y;
        Int g2 = xgcd(g, vals[i], x, y);
        for (auto &c : coeffs)
            c *= x;
        coeffs[i] += y;
        g = g2;
        if (g == 1)
            break;
    }
    return g;
}

} // namespace

std::optional<BezoutCertificate>
unimodular_certificate(const std::vector<RingElement> &row) {
    if (row.empty())
        throw unsupported_ring("empty row");
    require_common_descriptor(row);
    RingDescPtr d = row.front().descriptor();

    switch (d->kind) {
    case RingKind::Integers: {
        std::vector<Int> vals, coeffs;
        for (const auto &r : row)
            vals.push_back(r.scalar_value().num);
        if (integer_row_gcd(vals, coeffs) != 1)
            return std::nullopt;
        BezoutCertificate cert;
        for (const Int &c : coeffs)
            cert.coefficients.push_back(RingElement::from_int(d, c));
        return cert;
    }
    case RingKind::Residue: {
        std::vector<Int> vals, coeffs;
        for (const auto &r : row)
            vals.push_back(lift_residue(r));
        Int g = integer_row_gcd(vals, coeffs);
        Int gn = gcd(g, d->modulus);
        if (gn != 1)
            return std::nullopt;
        // sum c_i r_i = g with gcd(g, n) = 1; scale by g^-1 mod n
        Int ginv = inv_mod(g, d->modulus);
        BezoutCertificate cert;
        for (const Int &c : coeffs)
            cert.coefficients.push_back(RingElement::from_int(d, c * ginv));
        return cert;
    }
    case RingKind::Localized: {
        std::vector<Int> vals, coeffs;
        for (const auto &r : row)
            vals.push_back(r.scalar_value().num);
        Int g = integer_row_gcd(vals, coeffs);
        if (g == 0)
            return std::nullopt;
        // sum x_i num_i = g; c_i = x_i * den_i / g works when g is a unit
        RingElement ginv_elem = RingElement::from_fraction(d, 1, 1);
        auto ginv = RingElement::from_int(d, g).try_invert();
        if (!ginv)
            return std::nullopt;
        BezoutCertificate cert;
        for (std::size_t i = 0; i < row.size(); ++i) {
            Coeff c = row[i].scalar_value();
            cert.coefficients.push_back(
                RingElement::from_int(d, coeffs[i] * c.den) * *ginv);
        }
        return cert;
    }
    case RingKind::Polynomial:
    case RingKind::Quotient: {
        // reduce to the base ring through the constant terms (vars -> 0 is a
        // ring homomorphism, so a non-unimodular image is conclusive)
        RingDescPtr base = d->is_scalar() ? d : RingDescPtr();
        const RingDescriptor &sb = d->scalar_base();
        RingDescPtr bd = sb.kind == RingKind::Integers ? RingDescriptor::integers()
                         : sb.kind == RingKind::Residue
                             ? RingDescriptor::residue(sb.modulus)
                             : RingDescriptor::localized(sb.inverted_primes);
        std::vector<RingElement> consts;
        for (const auto &r : row) {
            Coeff c = r.constant_coeff();
            consts.push_back(RingElement::from_fraction(bd, c.num, c.den));
        }
        auto base_cert = unimodular_certificate(consts);
        if (!base_cert)
            return std::nullopt;
        BezoutCertificate cert;
        RingElement s = RingElement::zero(d);
        for (std::size_t i = 0; i < row.size(); ++i) {
            Coeff c = base_cert->coefficients[i].scalar_value();
            cert.coefficients.push_back(RingElement::from_fraction(d, c.num, c.den));
            s = s + cert.coefficients.back() * row[i];
        }
        if (s.is_one())
            return cert;
        auto sinv = s.try_invert();
        if (!sinv)
            throw unsupported_ring(
                "unimodularity undecidable over " + d->to_string());
        for (auto &c : cert.coefficients)
            c = c * *sinv;
        return cert;
    }
    }
    throw unsupported_ring(d->to_string());
}

// ---------------------------------------------------------------------------
// ASR oracle

namespace {

struct CrtConstraint {
    Int modulus;  // prime power
    Int residue;
};

Int crt_solve(const std::vector<CrtConstraint> &cs) {
    Int m = 1, r = 0;
    for (const auto &c : cs) {
        // r' = r mod m, = c.residue mod c.modulus (moduli coprime)
        Int minv = inv_mod(m % c.modulus, c.modulus);
        Int t = ((c.residue - r) % c.modulus + c.modulus) % c.modulus;
        t = (t * minv) % c.modulus;
        r = r + m * t;
        m = m * c.modulus;
    }
    return r;
}

std::vector<RingElement> asr_over_primes(const std::vector<RingElement> &row,
                                         std::size_t n,
                                         const std::vector<Int> &primes,
                                         std::size_t pinned, bool has_nonzero,
                                         bool pin,
                                         const std::function<Int(const RingElement &)> &lift) {
    RingDescPtr d = row.front().descriptor();
    if (!has_nonzero) {
        // (0,...,0,r_n): t = (1,0,...,0)
        std::vector<RingElement> t(n - 1, RingElement::zero(d));
        t[0] = RingElement::one(d);
        return t;
    }
    std::vector<std::vector<CrtConstraint>> constraints(n - 1);
    for (const Int &p : primes) {
        auto divides = [&](std::size_t i) { return lift(row[i]) % p == 0; };
        // find a coordinate among r_1..r_{n-1} not in (p); prefer the pinned one
        std::optional<std::size_t> witness;
        if (!divides(pinned))
            witness = pinned;
        else
            for (std::size_t i = 0; i < n - 1; ++i)
                if (!divides(i)) {
                    witness = i;
                    break;
                }
        if (witness) {
            constraints[*witness].push_back({p, 0});
        } else if (!divides(n - 1)) {
            // all of r_1..r_{n-1} vanish mod p, r_n does not: steer one slot.
            // When the prime list was derived from the pinned coordinate its
            // transform coefficient must stay zero.
            std::size_t j = pin && pinned == 0 ? 1 : 0;
            if (pin && j >= n - 1)
                throw unsupported_ring("ASR_" + std::to_string(n) +
                                       " not realizable here");
            constraints[j].push_back({p, 1});
        } // else p contains the whole ideal; nothing to do
    }
    std::vector<RingElement> t;
    for (std::size_t i = 0; i < n - 1; ++i)
        t.push_back(RingElement::from_int(d, crt_solve(constraints[i])));
    return t;
}

} // namespace

std::vector<RingElement> asr_transform(const std::vector<RingElement> &row,
                                       std::size_t n) {
    if (row.size() != n || n < 2)
        throw unsupported_ring("row length must equal n >= 2");
    require_common_descriptor(row);
    RingDescPtr d = row.front().descriptor();

    std::function<Int(const RingElement &)> lift;
    std::vector<Int> primes;
    switch (d->kind) {
    case RingKind::Residue:
        lift = lift_residue;
        for (const auto &[p, e] : factor(d->modulus))
            primes.push_back(p);
        break;
    case RingKind::Integers:
        lift = [](const RingElement &x) { return x.scalar_value().num; };
        break;
    case RingKind::Localized:
        lift = localized_content;
        break;
    default:
        throw unsupported_ring("ASR oracle over " + d->to_string());
    }

    std::size_t pinned = 0;
    bool has_nonzero = false;
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (lift(row[i]) != 0) {
            pinned = i;
            has_nonzero = true;
            break;
        }

    bool pin = d->kind != RingKind::Residue;
    if (pin && has_nonzero) {
        // obstructing primes are confined to the pinned coordinate, whose
        // transform coefficient stays zero
        if (n == 2)
            throw unsupported_ring("ASR_2 over " + d->to_string());
        primes.clear();
        for (const auto &[p, e] : factor(lift(row[pinned])))
            primes.push_back(p);
    }
    return asr_over_primes(row, n, primes, pinned, has_nonzero, pin, lift);
}

std::vector<Int> maximal_ideal_primes(const IdealDescriptor &ideal) {
    const RingDescriptor &d = *ideal.descriptor();
    Int content = 0;
    switch (d.kind) {
    case RingKind::Integers:
        for (const auto &g : ideal.generators)
            content = gcd(content, g.scalar_value().num);
        if (content == 0)
            throw unsupported_ring("zero ideal over Z has unbounded spectrum");
        break;
    case RingKind::Residue:
        content = d.modulus;
        for (const auto &g : ideal.generators)
            content = gcd(content, lift_residue(g));
        break;
    case RingKind::Localized: {
        for (const auto &g : ideal.generators)
            content = gcd(content, localized_content(g));
        if (content == 0)
            throw unsupported_ring("zero ideal has unbounded spectrum");
        break;
    }
    default:
        throw unsupported_ring("maximal ideals over " + d.to_string());
    }
    std::vector<Int> primes;
    for (const auto &[p, e] : factor(content))
        primes.push_back(p);
    return primes;
}

std::vector<std::string> maximal_ideals_containing(const IdealDescriptor &ideal) {
    std::vector<std::string> out;
    for (const Int &p : maximal_ideal_primes(ideal))
        out.push_back("(" + p.str() + ")");
    return out;
}

// ---------------------------------------------------------------------------
// evaluation homomorphism

RingElement evaluate_hom(const RingElement &e,
                         const std::map<std::string, RingElement> &assignment) {
    RingDescPtr src = e.descriptor();
    if (src->is_scalar())
        throw unsupported_ring("evaluate_hom needs a polynomial source");
    const auto &vars = src->vars();
    std::vector<RingElement> images;
    for (const auto &v : vars) {
        auto it = assignment.find(v);
        if (it == assignment.end())
            throw parse_error("missing assignment for variable " + v);
        images.push_back(it->second);
    }
    for (std::size_t i = 1; i < images.size(); ++i)
        require_same_ring(images[0], images[i]);
    RingDescPtr tgt = images.front().descriptor();

    if (src->kind == RingKind::Quotient)
        for (const auto &[v, k] : src->relations)
            if (!images[v].pow(k).is_zero())
                throw relation_not_preserved(vars[v] + "^" + std::to_string(k) +
                                             " does not vanish in target");

    RingElement out = RingElement::zero(tgt);
    for (const auto &[m, c] : e.terms()) {
        RingElement term = RingElement::from_int(tgt, c.num);
        if (c.den != 1) {
            auto deninv = RingElement::from_int(tgt, c.den).try_invert();
            if (!deninv)
                throw two_not_invertible("denominator " + c.den.str() +
                                         " not invertible in " + tgt->to_string());
            term = term * *deninv;
        }
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i])
                term = term * images[i].pow(m[i]);
        out = out + term;
    }
    return out;
}

// ---------------------------------------------------------------------------
// scalar quotients R / <a>

ScalarQuotient scalar_quotient_by(const RingElement &a) {
    RingDescPtr d = a.descriptor();
    ScalarQuotient q;
    Int m;
    switch (d->kind) {
    case RingKind::Integers:
        m = a.scalar_value().num;
        break;
    case RingKind::Residue:
        m = gcd(lift_residue(a), d->modulus);
        break;
    case RingKind::Localized:
        m = localized_content(a);
        break;
    default:
        throw unsupported_ring("scalar quotient over " + d->to_string());
    }
    if (m < 0)
        m = -m;
    if (m == 1) {
        q.is_trivial = true;
        return q;
    }
    if (m == 0 && d->kind != RingKind::Residue) {
        q.is_identity = true;
        q.ring = d;
        q.project = [](const RingElement &x) { return x; };
        q.lift = [](const RingElement &x) { return x; };
        return q;
    }
    Int modulus = m;
    q.ring = RingDescriptor::residue(modulus);
    RingDescPtr qring = q.ring;
    q.project = [qring, modulus](const RingElement &x) {
        Coeff c = x.scalar_value();
        Int v = c.num % modulus;
        if (c.den != 1)
            v = v * inv_mod(c.den % modulus, modulus);
        return RingElement::from_int(qring, v);
    };
    q.lift = [d](const RingElement &x) {
        return RingElement::from_int(d, x.scalar_value().num);
    };
    return q;
}

} // namespace chevk1
