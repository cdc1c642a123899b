#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chevk1/errors.hpp"

namespace chevk1 {

using Int = boost::multiprecision::cpp_int;

enum class RingKind { Integers, Residue, Localized, Polynomial, Quotient };

class RingDescriptor;
using RingDescPtr = std::shared_ptr<const RingDescriptor>;

/// Description of an effective commutative ring: Z, Z/n, localizations of Z,
/// multivariate polynomials over those, and quotients by variable-power
/// relations (xi^k = 0, k >= 2).
class RingDescriptor {
  public:
    RingKind kind = RingKind::Integers;
    Int modulus;                           // Residue
    std::vector<Int> inverted_primes;      // Localized, sorted ascending
    RingDescPtr base;                      // Polynomial: scalar base; Quotient: the Polynomial
    std::vector<std::string> variables;    // Polynomial
    std::vector<std::pair<std::size_t, unsigned>> relations; // Quotient

    static RingDescPtr integers();
    static RingDescPtr residue(const Int &n);
    static RingDescPtr localized(std::vector<Int> primes);
    static RingDescPtr polynomial(RingDescPtr scalar_base,
                                  std::vector<std::string> vars);
    static RingDescPtr
    quotient(RingDescPtr poly,
             const std::vector<std::pair<std::string, unsigned>> &rels);

    bool operator==(const RingDescriptor &o) const;
    bool operator!=(const RingDescriptor &o) const { return !(*this == o); }

    bool is_scalar() const {
        return kind == RingKind::Integers || kind == RingKind::Residue ||
               kind == RingKind::Localized;
    }
    /// Deepest scalar base (itself for scalar rings).
    const RingDescriptor &scalar_base() const;
    /// Variable list; empty for scalar rings.
    const std::vector<std::string> &vars() const;
    /// Relation power for a variable; 0 when the variable is free.
    unsigned relation_power(std::size_t var) const;
    /// Upper bound on the nilpotency degree of elements with no unit part.
    unsigned nilpotency_bound() const;

    std::string to_string() const;
    /// Grammar: Z | Z/6 | Z[1/2] | poly(Z[1/2]; xi, zeta) |
    ///          quot(poly(Z[1/2]; xi, zeta); xi^2)
    static RingDescPtr parse(const std::string &text);
};

/// Exponent vector over the descriptor's variables (empty for scalar rings).
using Monomial = std::vector<unsigned>;

struct GradedLex {
    bool operator()(const Monomial &a, const Monomial &b) const;
};

/// Coefficient in the scalar base: num/den with den a product of inverted
/// primes (den = 1 unless the base is a localization).
struct Coeff {
    Int num = 0;
    Int den = 1;
};

class RingElement {
  public:
    RingElement() = default;

    static RingElement zero(RingDescPtr d);
    static RingElement one(RingDescPtr d);
    static RingElement from_int(RingDescPtr d, const Int &n);
    /// num / den, den a product of the descriptor's inverted primes.
    static RingElement from_fraction(RingDescPtr d, const Int &num,
                                     const Int &den);
    static RingElement variable(RingDescPtr d, const std::string &name);

    const RingDescPtr &descriptor() const { return desc_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    const std::map<Monomial, Coeff, GradedLex> &terms() const { return terms_; }

    RingElement operator+(const RingElement &o) const;
    RingElement operator-(const RingElement &o) const;
    RingElement operator*(const RingElement &o) const;
    RingElement operator-() const;
    RingElement pow(unsigned k) const;

    bool operator==(const RingElement &o) const;
    bool operator!=(const RingElement &o) const { return !(*this == o); }

    /// Multiplicative inverse, or nullopt when not a unit.
    std::optional<RingElement> try_invert() const;
    bool is_unit() const { return try_invert().has_value(); }
    /// Nilpotency witness: some power is zero.
    bool is_nilpotent() const;

    /// Constant-term coefficient (zero coeff when absent).
    Coeff constant_coeff() const;
    /// For scalar rings only: the single coefficient.
    Coeff scalar_value() const;

    std::string to_string() const;
    static RingElement parse(RingDescPtr d, const std::string &text);

    /// Raw constructor; normalizes the payload.
    RingElement(RingDescPtr d, std::map<Monomial, Coeff, GradedLex> terms);

  private:
    void normalize();

    RingDescPtr desc_;
    std::map<Monomial, Coeff, GradedLex> terms_;
};

/// Throws descriptor_mismatch unless a and b live in the same ring.
void require_same_ring(const RingElement &a, const RingElement &b);

/// arith() entry point used by the CLI; op in {add, sub, mul, neg}.
RingElement arith(const std::string &op, const RingElement &a,
                  const RingElement &b);

/// "xi^1*zeta^2" or "1"; used by the JSON polynomial map format.
std::string monomial_to_string(const RingDescriptor &d, const Monomial &m);
Monomial monomial_parse(const RingDescriptor &d, const std::string &text);

namespace detail {
/// Extended gcd: g = gcd(a, b) >= 0 with g = x*a + y*b.
Int xgcd(const Int &a, const Int &b, Int &x, Int &y);
/// Prime factorization by trial division (desk-scale inputs).
std::vector<std::pair<Int, unsigned>> factor(Int n);
/// a^-1 mod n (n > 1, gcd(a, n) = 1).
Int inv_mod(const Int &a, const Int &n);
} // namespace detail

} // namespace chevk1
