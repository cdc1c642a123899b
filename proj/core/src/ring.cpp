#include "chevk1/ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace chevk1 {

namespace detail {

Int xgcd(const Int &a, const Int &b, Int &x, Int &y) {
    if (b == 0) {
        if (a < 0) {
            x = -1;
            y = 0;
            return -a;
        }
        x = 1;
        y = 0;
        return a;
    }
    Int x1, y1;
    Int g = xgcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

std::vector<std::pair<Int, unsigned>> factor(Int n) {
    std::vector<std::pair<Int, unsigned>> out;
    if (n < 0)
        n = -n;
    if (n <= 1)
        return out;
    for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

Int inv_mod(const Int &a, const Int &n) {
    Int x, y;
    Int g = xgcd(((a % n) + n) % n, n, x, y);
    if (g != 1)
        throw not_a_unit("no inverse mod " + n.str());
    return ((x % n) + n) % n;
}

} // namespace detail

// ---------------------------------------------------------------------------
// RingDescriptor

RingDescPtr RingDescriptor::integers() {
    auto d = std::make_shared<RingDescriptor>();
    d->kind = RingKind::Integers;
    return d;
}

RingDescPtr RingDescriptor::residue(const Int &n) {
    if (n < 2)
        throw unsupported_ring("residue modulus must be >= 2");
    auto d = std::make_shared<RingDescriptor>();
    d->kind = RingKind::Residue;
    d->modulus = n;
    return d;
}

RingDescPtr RingDescriptor::localized(std::vector<Int> primes) {
    if (primes.empty())
        throw unsupported_ring("localization needs at least one prime");
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    for (const Int &p : primes) {
        auto f = detail::factor(p);
        if (f.size() != 1 || f[0].second != 1)
            throw unsupported_ring("inverted element is not prime: " + p.str());
    }
    auto d = std::make_shared<RingDescriptor>();
    d->kind = RingKind::Localized;
    d->inverted_primes = std::move(primes);
    return d;
}

RingDescPtr RingDescriptor::polynomial(RingDescPtr scalar_base,
                                       std::vector<std::string> vars) {
    if (!scalar_base || !scalar_base->is_scalar())
        throw unsupported_ring("polynomial base must be a scalar ring");
    if (vars.empty())
        throw unsupported_ring("polynomial ring needs variables");
    auto d = std::make_shared<RingDescriptor>();
    d->kind = RingKind::Polynomial;
    d->base = std::move(scalar_base);
    d->variables = std::move(vars);
    return d;
}

RingDescPtr RingDescriptor::quotient(
    RingDescPtr poly,
    const std::vector<std::pair<std::string, unsigned>> &rels) {
    if (!poly || poly->kind != RingKind::Polynomial)
        throw unsupported_ring("quotient base must be a polynomial ring");
    if (rels.empty())
        throw unsupported_ring("quotient needs at least one relation");
    auto d = std::make_shared<RingDescriptor>();
    d->kind = RingKind::Quotient;
    d->base = poly;
    d->variables = poly->variables;
    for (const auto &[name, k] : rels) {
        if (k < 2)
            throw unsupported_ring("relation power must be >= 2");
        auto it =
            std::find(d->variables.begin(), d->variables.end(), name);
        if (it == d->variables.end())
            throw unsupported_ring("relation on unknown variable " + name);
        d->relations.emplace_back(
            static_cast<std::size_t>(it - d->variables.begin()), k);
    }
    std::sort(d->relations.begin(), d->relations.end());
    return d;
}

bool RingDescriptor::operator==(const RingDescriptor &o) const {
    if (kind != o.kind)
        return false;
    switch (kind) {
    case RingKind::Integers:
        return true;
    case RingKind::Residue:
        return modulus == o.modulus;
    case RingKind::Localized:
        return inverted_primes == o.inverted_primes;
    case RingKind::Polynomial:
        return variables == o.variables && *base == *o.base;
    case RingKind::Quotient:
        return relations == o.relations && *base == *o.base;
    }
    return false;
}

const RingDescriptor &RingDescriptor::scalar_base() const {
    if (is_scalar())
        return *this;
    return base->scalar_base();
}

const std::vector<std::string> &RingDescriptor::vars() const {
    static const std::vector<std::string> none;
    return is_scalar() ? none : variables;
}

unsigned RingDescriptor::relation_power(std::size_t var) const {
    for (const auto &[v, k] : relations)
        if (v == var)
            return k;
    return 0;
}

unsigned RingDescriptor::nilpotency_bound() const {
    unsigned b = 1;
    for (const auto &[v, k] : relations)
        b += k - 1;
    if (scalar_base().kind == RingKind::Residue) {
        for (const auto &[p, e] : detail::factor(scalar_base().modulus))
            b += e;
    }
    return b + 1;
}

std::string RingDescriptor::to_string() const {
    switch (kind) {
    case RingKind::Integers:
        return "Z";
    case RingKind::Residue:
        return "Z/" + modulus.str();
    case RingKind::Localized: {
        std::string s = "Z[";
        for (std::size_t i = 0; i < inverted_primes.size(); ++i)
            s += (i ? ",1/" : "1/") + inverted_primes[i].str();
        return s + "]";
    }
    case RingKind::Polynomial: {
        std::string s = "poly(" + base->to_string() + ";";
        for (std::size_t i = 0; i < variables.size(); ++i)
            s += (i ? ", " : " ") + variables[i];
        return s + ")";
    }
    case RingKind::Quotient: {
        std::string s = "quot(" + base->to_string() + ";";
        for (std::size_t i = 0; i < relations.size(); ++i)
            s += (i ? ", " : " ") + variables[relations[i].first] + "^" +
                 std::to_string(relations[i].second);
        return s + ")";
    }
    }
    return "?";
}

namespace {

struct Cursor {
    const std::string &s;
    std::size_t pos = 0;
    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c))
            throw parse_error("expected '" + std::string(1, c) + "' in ring descriptor");
    }
    bool starts_with(const std::string &w) {
        skip_ws();
        return s.compare(pos, w.size(), w) == 0;
    }
    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (start == pos)
            throw parse_error("expected identifier");
        return s.substr(start, pos - start);
    }
    Int integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && s[pos] == '-')
            ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (start == pos)
            throw parse_error("expected integer");
        return Int(s.substr(start, pos - start));
    }
};

RingDescPtr parse_descriptor(Cursor &c) {
    c.skip_ws();
    if (c.starts_with("poly(")) {
        c.pos += 5;
        auto base = parse_descriptor(c);
        c.expect(';');
        std::vector<std::string> vars;
        vars.push_back(c.ident());
        while (c.eat(','))
            vars.push_back(c.ident());
        c.expect(')');
        return RingDescriptor::polynomial(base, vars);
    }
    if (c.starts_with("quot(")) {
        c.pos += 5;
        auto base = parse_descriptor(c);
        c.expect(';');
        std::vector<std::pair<std::string, unsigned>> rels;
        do {
            std::string v = c.ident();
            c.expect('^');
            Int k = c.integer();
            rels.emplace_back(v, static_cast<unsigned>(k));
        } while (c.eat(','));
        c.expect(')');
        return RingDescriptor::quotient(base, rels);
    }
    if (c.starts_with("Z")) {
        c.pos += 1;
        if (c.eat('/'))
            return RingDescriptor::residue(c.integer());
        if (c.eat('[')) {
            std::vector<Int> primes;
            do {
                c.expect('1');
                c.expect('/');
                primes.push_back(c.integer());
            } while (c.eat(','));
            c.expect(']');
            return RingDescriptor::localized(std::move(primes));
        }
        return RingDescriptor::integers();
    }
    throw parse_error("cannot parse ring descriptor: " + c.s);
}

} // namespace

RingDescPtr RingDescriptor::parse(const std::string &text) {
    Cursor c{text};
    auto d = parse_descriptor(c);
    c.skip_ws();
    if (c.pos != text.size())
        throw parse_error("trailing characters in ring descriptor: " + text);
    return d;
}

// ---------------------------------------------------------------------------
// Monomial order

bool GradedLex::operator()(const Monomial &a, const Monomial &b) const {
    unsigned da = 0, db = 0;
    for (unsigned e : a)
        da += e;
    for (unsigned e : b)
        db += e;
    if (da != db)
        return da < db;
    return a < b;
}

// ---------------------------------------------------------------------------
// Coefficient arithmetic in the scalar base

namespace {

using boost::multiprecision::gcd;

Coeff coeff_normalize(const RingDescriptor &base, Coeff c) {
    switch (base.kind) {
    case RingKind::Integers:
        if (c.den != 1)
            throw unsupported_ring("fraction over Z");
        break;
    case RingKind::Residue:
        if (c.den != 1) {
            c.num *= detail::inv_mod(c.den, base.modulus);
            c.den = 1;
        }
        c.num = ((c.num % base.modulus) + base.modulus) % base.modulus;
        break;
    case RingKind::Localized: {
        if (c.den < 0) {
            c.den = -c.den;
            c.num = -c.num;
        }
        if (c.den == 0)
            throw unsupported_ring("zero denominator");
        Int g = gcd(c.num < 0 ? Int(-c.num) : c.num, c.den);
        if (g > 1) {
            c.num /= g;
            c.den /= g;
        }
        // den must factor over the inverted primes
        Int d = c.den;
        for (const Int &p : base.inverted_primes)
            while (d % p == 0)
                d /= p;
        if (d != 1)
            throw unsupported_ring("denominator " + c.den.str() +
                                   " not invertible in " + base.to_string());
        break;
    }
    default:
        throw unsupported_ring("non-scalar coefficient base");
    }
    return c;
}

Coeff coeff_add(const RingDescriptor &base, const Coeff &a, const Coeff &b) {
    return coeff_normalize(base,
                           {a.num * b.den + b.num * a.den, a.den * b.den});
}

Coeff coeff_mul(const RingDescriptor &base, const Coeff &a, const Coeff &b) {
    return coeff_normalize(base, {a.num * b.num, a.den * b.den});
}

Coeff coeff_neg(const RingDescriptor &base, const Coeff &a) {
    return coeff_normalize(base, {-a.num, a.den});
}

bool coeff_is_zero(const Coeff &c) { return c.num == 0; }

/// Inverse of a coefficient in the scalar base, if it is a unit there.
std::optional<Coeff> coeff_invert(const RingDescriptor &base, const Coeff &c) {
    switch (base.kind) {
    case RingKind::Integers:
        if (c.num == 1 || c.num == -1)
            return Coeff{c.num, 1};
        return std::nullopt;
    case RingKind::Residue: {
        Int g = gcd(c.num, base.modulus);
        if (g != 1)
            return std::nullopt;
        return Coeff{detail::inv_mod(c.num, base.modulus), 1};
    }
    case RingKind::Localized: {
        // unit iff numerator is +-(product of inverted primes)
        Int n = c.num < 0 ? Int(-c.num) : c.num;
        if (n == 0)
            return std::nullopt;
        Int stripped = n;
        for (const Int &p : base.inverted_primes)
            while (stripped % p == 0)
                stripped /= p;
        if (stripped != 1)
            return std::nullopt;
        Int sign = c.num < 0 ? -1 : 1;
        return coeff_normalize(base, {sign * c.den, n});
    }
    default:
        return std::nullopt;
    }
}

bool coeff_is_nilpotent(const RingDescriptor &base, const Coeff &c) {
    if (c.num == 0)
        return true;
    if (base.kind != RingKind::Residue)
        return false;
    // nilpotent iff every prime of the modulus divides the value
    for (const auto &[p, e] : detail::factor(base.modulus))
        if (c.num % p != 0)
            return false;
    return true;
}

} // namespace

// ---------------------------------------------------------------------------
// RingElement

RingElement::RingElement(RingDescPtr d, std::map<Monomial, Coeff, GradedLex> terms)
    : desc_(std::move(d)), terms_(std::move(terms)) {
    normalize();
}

void RingElement::normalize() {
    const RingDescriptor &base = desc_->scalar_base();
    std::size_t nvars = desc_->vars().size();
    std::map<Monomial, Coeff, GradedLex> out;
    for (auto &[mono, coeff] : terms_) {
        if (mono.size() != nvars)
            throw parse_error("monomial arity mismatch");
        if (desc_->kind == RingKind::Quotient) {
            bool killed = false;
            for (const auto &[v, k] : desc_->relations)
                if (mono[v] >= k) {
                    killed = true;
                    break;
                }
            if (killed)
                continue;
        }
        Coeff c = coeff_normalize(base, coeff);
        if (!coeff_is_zero(c))
            out.emplace(mono, c);
    }
    terms_ = std::move(out);
}

RingElement RingElement::zero(RingDescPtr d) { return RingElement(std::move(d), {}); }

RingElement RingElement::one(RingDescPtr d) { return from_int(std::move(d), 1); }

RingElement RingElement::from_int(RingDescPtr d, const Int &n) {
    std::map<Monomial, Coeff, GradedLex> t;
    t.emplace(Monomial(d->vars().size(), 0u), Coeff{n, 1});
    return RingElement(std::move(d), std::move(t));
}

RingElement RingElement::from_fraction(RingDescPtr d, const Int &num,
                                       const Int &den) {
    std::map<Monomial, Coeff, GradedLex> t;
    t.emplace(Monomial(d->vars().size(), 0u), Coeff{num, den});
    return RingElement(std::move(d), std::move(t));
}

RingElement RingElement::variable(RingDescPtr d, const std::string &name) {
    const auto &vars = d->vars();
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end())
        throw parse_error("unknown variable " + name + " in " + d->to_string());
    Monomial m(vars.size(), 0u);
    m[static_cast<std::size_t>(it - vars.begin())] = 1;
    std::map<Monomial, Coeff, GradedLex> t;
    t.emplace(std::move(m), Coeff{1, 1});
    return RingElement(std::move(d), std::move(t));
}

bool RingElement::is_one() const {
    if (terms_.size() != 1)
        return false;
    const auto &[m, c] = *terms_.begin();
    for (unsigned e : m)
        if (e)
            return false;
    return c.num == 1 && c.den == 1;
}

void require_same_ring(const RingElement &a, const RingElement &b) {
    if (!a.descriptor() || !b.descriptor() || *a.descriptor() != *b.descriptor())
        throw descriptor_mismatch("operands live in different rings");
}

RingElement RingElement::operator+(const RingElement &o) const {
    require_same_ring(*this, o);
    const RingDescriptor &base = desc_->scalar_base();
    auto t = terms_;
    for (const auto &[m, c] : o.terms_) {
        auto it = t.find(m);
        if (it == t.end())
            t.emplace(m, c);
        else
            it->second = coeff_add(base, it->second, c);
    }
    return RingElement(desc_, std::move(t));
}

RingElement RingElement::operator-() const {
    const RingDescriptor &base = desc_->scalar_base();
    auto t = terms_;
    for (auto &[m, c] : t)
        c = coeff_neg(base, c);
    return RingElement(desc_, std::move(t));
}

RingElement RingElement::operator-(const RingElement &o) const {
    return *this + (-o);
}

RingElement RingElement::operator*(const RingElement &o) const {
    require_same_ring(*this, o);
    const RingDescriptor &base = desc_->scalar_base();
    std::map<Monomial, Coeff, GradedLex> t;
    for (const auto &[ma, ca] : terms_) {
        for (const auto &[mb, cb] : o.terms_) {
            Monomial m(ma.size());
            bool killed = false;
            for (std::size_t i = 0; i < m.size(); ++i) {
                m[i] = ma[i] + mb[i];
                unsigned k = desc_->relation_power(i);
                if (k && m[i] >= k) {
                    killed = true;
                    break;
                }
            }
            if (killed)
                continue;
            Coeff c = coeff_mul(base, ca, cb);
            auto it = t.find(m);
            if (it == t.end())
                t.emplace(std::move(m), c);
            else
                it->second = coeff_add(base, it->second, c);
        }
    }
    return RingElement(desc_, std::move(t));
}

RingElement RingElement::pow(unsigned k) const {
    RingElement r = one(desc_);
    for (unsigned i = 0; i < k; ++i)
        r = r * *this;
    return r;
}

bool RingElement::operator==(const RingElement &o) const {
    if (!desc_ || !o.desc_)
        return desc_ == o.desc_;
    if (*desc_ != *o.desc_)
        return false;
    if (terms_.size() != o.terms_.size())
        return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
        if (it->first != jt->first || it->second.num != jt->second.num ||
            it->second.den != jt->second.den)
            return false;
    return true;
}

Coeff RingElement::constant_coeff() const {
    Monomial m(desc_->vars().size(), 0u);
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff{0, 1} : it->second;
}

Coeff RingElement::scalar_value() const {
    if (!desc_->is_scalar())
        throw unsupported_ring("scalar_value on a polynomial ring");
    return constant_coeff();
}

bool RingElement::is_nilpotent() const {
    RingElement p = *this;
    for (unsigned i = 0; i < desc_->nilpotency_bound() + 1; ++i) {
        if (p.is_zero())
            return true;
        p = p * *this;
    }
    return false;
}

std::optional<RingElement> RingElement::try_invert() const {
    const RingDescriptor &base = desc_->scalar_base();
    auto c0 = coeff_invert(base, constant_coeff());
    if (!c0)
        return std::nullopt;
    RingElement u = from_fraction(desc_, c0->num, c0->den);
    if (desc_->is_scalar())
        return terms_.size() <= 1 ? std::optional<RingElement>(u) : std::nullopt;
    // a = c + n; a * c^-1 = 1 + n'; invertible iff n' nilpotent, and then
    // (1 + n')^-1 = sum (-n')^j  (geometric series cut by nilpotency).
    RingElement np = *this * u - one(desc_);
    RingElement series = one(desc_);
    RingElement p = one(desc_);
    unsigned bound = desc_->nilpotency_bound() + 2;
    for (unsigned j = 0; j < bound; ++j) {
        p = p * (-np);
        if (p.is_zero())
            break;
        series = series + p;
    }
    if (!p.is_zero())
        return std::nullopt;
    RingElement inv = u * series;
    return (*this * inv).is_one() ? std::optional<RingElement>(inv)
                                  : std::nullopt;
}

// ---------------------------------------------------------------------------
// printing / parsing of elements

namespace {

std::string coeff_to_string(const Coeff &c) {
    if (c.den == 1)
        return c.num.str();
    // denominator is a prime power product; render as num/2^k when possible
    auto f = detail::factor(c.den);
    if (f.size() == 1)
        return c.num.str() + "/" + f[0].first.str() + "^" +
               std::to_string(f[0].second);
    return c.num.str() + "/" + c.den.str();
}

Coeff coeff_parse(const std::string &s) {
    auto slash = s.find('/');
    if (slash == std::string::npos)
        return Coeff{Int(s), 1};
    Int num(s.substr(0, slash));
    std::string denpart = s.substr(slash + 1);
    auto caret = denpart.find('^');
    if (caret == std::string::npos)
        return Coeff{num, Int(denpart)};
    Int p(denpart.substr(0, caret));
    unsigned k = static_cast<unsigned>(std::stoul(denpart.substr(caret + 1)));
    Int den = 1;
    for (unsigned i = 0; i < k; ++i)
        den *= p;
    return Coeff{num, den};
}

} // namespace

std::string monomial_to_string(const RingDescriptor &d, const Monomial &m) {
    std::string s;
    const auto &vars = d.vars();
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (!m[i])
            continue;
        if (!s.empty())
            s += "*";
        s += vars[i] + "^" + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

Monomial monomial_parse(const RingDescriptor &d, const std::string &text) {
    const auto &vars = d.vars();
    Monomial m(vars.size(), 0u);
    if (text == "1")
        return m;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, '*')) {
        auto caret = part.find('^');
        std::string name = caret == std::string::npos ? part : part.substr(0, caret);
        unsigned k = caret == std::string::npos
                         ? 1u
                         : static_cast<unsigned>(std::stoul(part.substr(caret + 1)));
        auto it = std::find(vars.begin(), vars.end(), name);
        if (it == vars.end())
            throw parse_error("unknown variable in monomial: " + name);
        m[static_cast<std::size_t>(it - vars.begin())] += k;
    }
    return m;
}

std::string RingElement::to_string() const {
    if (desc_->is_scalar())
        return is_zero() ? "0" : coeff_to_string(terms_.begin()->second);
    if (is_zero())
        return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!s.empty())
            s += " + ";
        s += coeff_to_string(it->second);
        std::string m = monomial_to_string(*desc_, it->first);
        if (m != "1")
            s += "*" + m;
    }
    return s;
}

RingElement RingElement::parse(RingDescPtr d, const std::string &text) {
    if (d->is_scalar()) {
        Coeff c = coeff_parse(text);
        return from_fraction(std::move(d), c.num, c.den);
    }
    // polynomial: "c*mono + c*mono"; also accepts a bare scalar
    std::map<Monomial, Coeff, GradedLex> t;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto plus = text.find(" + ", pos);
        std::string term = text.substr(
            pos, plus == std::string::npos ? std::string::npos : plus - pos);
        pos = plus == std::string::npos ? text.size() : plus + 3;
        auto star = term.find('*');
        std::string cpart = term, mpart = "1";
        if (star != std::string::npos &&
            !std::isdigit(static_cast<unsigned char>(term[star + 1]))) {
            cpart = term.substr(0, star);
            mpart = term.substr(star + 1);
        }
        Monomial m = monomial_parse(*d, mpart);
        Coeff c = coeff_parse(cpart);
        auto it = t.find(m);
        if (it == t.end())
            t.emplace(std::move(m), c);
        else
            it->second = coeff_add(d->scalar_base(), it->second, c);
    }
    return RingElement(std::move(d), std::move(t));
}

RingElement arith(const std::string &op, const RingElement &a,
                  const RingElement &b) {
    if (op == "add")
        return a + b;
    if (op == "sub")
        return a - b;
    if (op == "mul")
        return a * b;
    if (op == "neg")
        return -a;
    throw parse_error("unknown arith op: " + op);
}

} // namespace chevk1
