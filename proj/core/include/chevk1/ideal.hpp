#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chevk1/ring.hpp"

namespace chevk1 {

/// Finitely generated ideal; all generators share one descriptor.
struct IdealDescriptor {
    std::vector<RingElement> generators;

    explicit IdealDescriptor(std::vector<RingElement> gens);
    const RingDescPtr &descriptor() const { return generators.front().descriptor(); }

    /// Membership test for the supported shapes: scalar rings (divisibility)
    /// and monomial ideals with unit coefficients in polynomial/quotient
    /// rings. Throws unsupported_ring otherwise.
    bool contains(const RingElement &x) const;
};

/// Witness of unimodularity: sum coefficients[i] * row[i] = 1 exactly.
struct BezoutCertificate {
    std::vector<RingElement> coefficients;

    bool verify(const std::vector<RingElement> &row) const;
};

/// Bezout coefficients for the row, or nullopt when the row provably does
/// not generate the unit ideal. Throws unsupported_ring when the implemented
/// strategies cannot decide.
std::optional<BezoutCertificate>
unimodular_certificate(const std::vector<RingElement> &row);

/// t_1..t_{n-1} such that every maximal ideal containing
/// <r_i + t_i r_n> contains <r_1,...,r_n>.
std::vector<RingElement> asr_transform(const std::vector<RingElement> &row,
                                       std::size_t n);

/// Complete list of maximal ideals containing the ideal, as "(p)" labels.
/// Supported: Z with nonzero content, Z/n, localizations of Z.
std::vector<std::string> maximal_ideals_containing(const IdealDescriptor &ideal);
/// Same, as the underlying primes.
std::vector<Int> maximal_ideal_primes(const IdealDescriptor &ideal);

/// Ring homomorphism from a polynomial (or quotient) ring determined by a
/// variable assignment into a common target ring. Denominators of the source
/// base must be invertible in the target (two_not_invertible otherwise); for
/// a quotient source every relation xi^k = 0 must be preserved by the
/// assignment (relation_not_preserved otherwise).
RingElement evaluate_hom(const RingElement &e,
                         const std::map<std::string, RingElement> &assignment);

/// Quotient of a scalar ring by a principal ideal, with projection and lift.
/// Used to run reductions over R/<a> and lift the resulting words back.
struct ScalarQuotient {
    bool is_trivial = false;   // <a> = R: the zero ring
    bool is_identity = false;  // <a> = 0: quotient is R itself
    RingDescPtr ring;          // quotient descriptor (unset when trivial)
    std::function<RingElement(const RingElement &)> project;
    std::function<RingElement(const RingElement &)> lift;
};

ScalarQuotient scalar_quotient_by(const RingElement &a);

} // namespace chevk1
