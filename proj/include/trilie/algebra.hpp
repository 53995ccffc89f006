#pragma once

#include <array>
#include <functional>
#include <optional>

#include "trilie/keys.hpp"
#include "trilie/report.hpp"
#include "trilie/window.hpp"

namespace trilie {

// The commutative associative algebra A on {L_r, M_r}:
//   L_r L_s = L_{r+s},  M_r M_s = M_{r+s},  L_r M_s = 0,
// with the derivation delta(L_r) = r L_r, delta(M_r) = r M_r and the
// involution omega(L_r) = M_{-r}, omega(M_r) = L_{-r}.

AlgElem assoc_mul(const AlgElem& x, const AlgElem& y);
AlgElem delta(const AlgElem& x);
AlgElem omega(const AlgElem& x);

/// Three basis keys sorted into canonical order (L before M, then ascending
/// index) together with the sign of the sorting permutation.
struct SortedTriple {
    int sign;
    std::array<BasisKey, 3> keys;
};

/// nullopt when two arguments coincide (the bracket then vanishes).
std::optional<SortedTriple> canonical_order(const BasisKey& a, const BasisKey& b, const BasisKey& c);

/// Structure constants on a canonically sorted triple:
///   [L_r, L_s, M_t] = (s - r) L_{r+s-t},  [L_r, M_s, M_t] = (t - s) M_{s+t-r},
/// everything else zero.
AlgElem table_entry(const std::array<BasisKey, 3>& sorted);

/// A ternary bracket on basis keys; extended trilinearly by bracket_with.
using BasisBracket = std::function<AlgElem(const BasisKey&, const BasisKey&, const BasisKey&)>;

/// The bracket of A_omega^delta on basis keys: sort, look up, apply the sign.
AlgElem bracket_basis(const BasisKey& a, const BasisKey& b, const BasisKey& c);

/// Trilinear extension of a basis-level bracket.
AlgElem bracket_with(const BasisBracket& table, const AlgElem& x, const AlgElem& y, const AlgElem& z);

/// [x, y, z] from the structure-constant table.
AlgElem bracket(const AlgElem& x, const AlgElem& y, const AlgElem& z);

/// [x, y, z] as the 3x3 determinant with rows (omega x, omega y, omega z),
/// (x, y, z), (delta x, delta y, delta z), expanded along the first row with
/// assoc_mul. Independent of the structure-constant table.
AlgElem bracket_det(const AlgElem& x, const AlgElem& y, const AlgElem& z);

/// Evaluates [x1,x2,[x3,x4,x5]] - [[x1,x2,x3],x4,x5] - [x3,[x1,x2,x4],x5]
/// - [x3,x4,[x1,x2,x5]] for every 5-tuple of basis keys of both kinds with
/// indices in `window`. Entries hold every nonzero defect.
DefectReport check_fundamental(const Window& window, const BasisBracket& table = bracket_basis,
                               unsigned parallelism = 0);

/// All basis keys L_r, M_r with r in window, in canonical order.
std::vector<BasisKey> basis_keys(const Window& window);

}  // namespace trilie
