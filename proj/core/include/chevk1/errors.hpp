#pragma once

#include <stdexcept>
#include <string>

namespace chevk1 {

struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
    virtual const char *kind() const noexcept = 0;
};

#define CHEVK1_ERROR(name, kind_string)                                       \
    struct name : domain_error {                                              \
        explicit name(const std::string &detail = "")                         \
            : domain_error(std::string(kind_string) +                         \
                           (detail.empty() ? "" : ": " + detail)) {}           \
        const char *kind() const noexcept override { return kind_string; }    \
    }

CHEVK1_ERROR(descriptor_mismatch, "DescriptorMismatch");
CHEVK1_ERROR(unsupported_ring, "UnsupportedRing");
CHEVK1_ERROR(unsupported_type, "UnsupportedType");
CHEVK1_ERROR(not_a_root, "NotARoot");
CHEVK1_ERROR(not_a_unit, "NotAUnit");
CHEVK1_ERROR(not_unimodular, "NotUnimodular");
CHEVK1_ERROR(not_minuscule, "NotMinuscule");
CHEVK1_ERROR(not_closed, "NotClosed");
CHEVK1_ERROR(no_such_element, "NoSuchElement");
CHEVK1_ERROR(non_invertible_corner, "NonInvertibleCorner");
CHEVK1_ERROR(two_not_invertible, "TwoNotInvertible");
CHEVK1_ERROR(relation_not_preserved, "RelationNotPreserved");
CHEVK1_ERROR(internal_postcondition_failure, "InternalPostconditionFailure");
CHEVK1_ERROR(parse_error, "ParseError");

#undef CHEVK1_ERROR

} // namespace chevk1
