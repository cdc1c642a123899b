#pragma once

#include "chevk1/group.hpp"
#include "chevk1/ideal.hpp"

namespace chevk1 {

/// Ambient (E7, w7) with Delta = A1+D6 (the maximal root plus alpha_2..7)
/// over a ring R with a distinguished ideal I.
struct RelativeContext {
    DiagramPtr diagram;
    SubsystemEmbedding delta;
    RingDescPtr ring;
    IdealDescriptor ideal;
};

/// R = Z[1/2][xi,zeta]/(xi^2) (or the variant without 1/2), I = (xi).
RelativeContext universal_context(bool invert_two = true);
/// Same shape over an arbitrary scalar-or-quotient ring and ideal.
RelativeContext make_context(RingDescPtr ring, IdealDescriptor ideal);

inline constexpr const char *kTagRelative = "E(Phi,I)";
inline constexpr const char *kTagLevi = "E(Delta,R)";

/// Tagged word that replays to its target: every letter is either an
/// X-letter with scalar in I, or any letter with root in Delta.
struct MembershipCertificate {
    GeneratorWord word;
    GroupElement target;

    /// Tag validity plus exact replay.
    bool verify(const RelativeContext &ctx) const;
};

struct CheckReport {
    std::string check;
    bool pass = false;
    double elapsed_ms = 0.0;
    std::string detail;
};

/// z_{a1}(xi,zeta) = x_{a1}(xi) x_{-a1}(-zeta^2 xi) h_{a1}(1+zeta*xi):
/// 2x2 in (A1,w1) and 56x56 in (E7,w7), over Z[xi,zeta]/(xi^2) and
/// Z[1/2][xi,zeta]/(xi^2).
std::vector<CheckReport> verify_z_factorization();

/// h_delta(1+zeta*xi/2) as the 7-factor torus product, plus the diagonal
/// exponent law; throws two_not_invertible when the ring lacks 1/2.
std::vector<CheckReport> verify_h_delta_product(RingDescPtr ring = nullptr);

/// The explicit 9-letter certificate for z_{a1}(xi,zeta): two X-letters with
/// scalars in I and seven Delta torus letters.
MembershipCertificate z_membership_word(const RelativeContext &ctx,
                                        const RingElement &xi,
                                        const RingElement &zeta);

/// Certificate for z_alpha: direct for alpha in Delta, delegation for a1,
/// and Weyl conjugation (w-letters expanded to tagged X-triples) otherwise.
MembershipCertificate general_z_membership(const RelativeContext &ctx,
                                           const Root &alpha,
                                           const RingElement &xi,
                                           const RingElement &zeta);

/// Letter-wise evaluation homomorphism; tags preserved. Throws
/// relation_not_preserved unless the xi-image squares to zero, and
/// two_not_invertible when 2 has no inverse in the target.
MembershipCertificate
specialize_certificate(const MembershipCertificate &cert,
                       const std::map<std::string, RingElement> &assignment);

} // namespace chevk1
