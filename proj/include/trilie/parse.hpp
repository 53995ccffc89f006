#pragma once

#include <string_view>

#include "trilie/keys.hpp"

namespace trilie {

/// scalar := ['+'|'-'] product (('+'|'-') product)*
/// product := power ('*' power)*
/// power   := atom ['^' digits]
/// atom    := digits ['/' digits] | 'lam' | 'mu' | 'a' digits | '(' scalar ')'
Scalar parse_scalar(std::string_view text);

/// elem  := ['+'|'-'] term (('+'|'-') term)*
/// term  := [product ['*']] basis
/// basis := ('L'|'M') '[' signed-int ']'
AlgElem parse_elem(std::string_view text);

/// A derivation expression split by how its terms were written: ad(...)
/// generators on one side and p/q/x/z keys on the other.
struct DerivInput {
    DerivExpr generators;
    PqxzElem basis;
};

/// dterm := [rational ['*']] (ad '(' elem ',' elem ')' | ('p'|'q'|'x'|'z') '[' signed-int ']')
/// joined by '+' and '-'. Arguments of ad(...) expand bilinearly; every
/// coefficient must be rational.
DerivInput parse_deriv(std::string_view text);

/// "0", "-1/2", "a0", "a0+3", "a1-2", optionally wrapped as "v[...]".
WeightKey parse_weight_key(std::string_view text);

}  // namespace trilie
