#pragma once

#include <functional>
#include <span>
#include <vector>

#include "trilie/algebra.hpp"

namespace trilie {

/// ad(u, v) as a DerivExpr in canonical pair order; zero when u == v.
DerivExpr ad(const BasisKey& u, const BasisKey& v);

/// D(x) = sum_i c_i [u_i, v_i, x].
AlgElem ad_apply(const DerivExpr& d, const AlgElem& x);

/// Expansion of the p/q/x/z basis in left multiplications:
///   p_r = 1/2 (ad(L_0, M_{-r}) + ad(L_r, M_0)),   q_r = 1/r (ad(L_0, M_{-r}) - ad(L_r, M_0)),
///   x_r = 1/r ad(L_r, L_0),   z_r = -1/r ad(M_{-r}, M_0)                  (r != 0)
///   p_0 = ad(L_0, M_0),  q_0 = ad(L_0, M_0) - ad(L_1, M_1),
///   x_0 = 1/2 ad(L_1, L_{-1}),  z_0 = 1/2 ad(M_1, M_{-1}).
DerivExpr pqxz_to_deriv(const PqxzKey& k);
DerivExpr pqxz_to_deriv(const PqxzElem& b);

/// Coordinates of an inner derivation in the p/q/x/z basis, using
///   ad(L_r, M_s) = p_{r-s} - (r+s)/2 q_{r-s},
///   ad(L_r, L_s) = (r-s) x_{r+s},   ad(M_r, M_s) = (r-s) z_{-(r+s)}.
/// (These closed forms are validated against ad_apply in the test suite.)
PqxzElem deriv_to_pqxz(const DerivExpr& d);

/// Action of a basis derivation on the algebra by closed form:
///   p_k: L_t -> (k/2 - t) L_{t+k},  M_t -> (t + k/2) M_{t-k}
///   q_k: L_t -> -L_{t+k},           M_t -> M_{t-k}
///   x_k: L_t -> 0,                  M_t -> -L_{k-t}
///   z_k: L_t -> -M_{-k-t},          M_t -> 0
AlgElem pqxz_apply(const PqxzKey& k, const AlgElem& x);
AlgElem pqxz_apply(const PqxzElem& b, const AlgElem& x);

/// Lie bracket of two basis elements, as a function so checks can swap in a
/// faulty table.
using PqxzTable = std::function<PqxzElem(const PqxzKey&, const PqxzKey&)>;

/// [p_r,p_s] = (r-s) p_{r+s}, [p_r,q_s] = -s q_{r+s}, [p_r,x_s] = -s x_{r+s},
/// [p_r,z_s] = -s z_{r+s}, [q_r,x_s] = -2 x_{r+s}, [q_r,z_s] = 2 z_{r+s},
/// [z_r,x_s] = q_{r+s}, the antisymmetric counterparts, and zero otherwise.
PqxzElem pqxz_bracket_table(const PqxzKey& a, const PqxzKey& b);

PqxzElem pqxz_bracket(const PqxzElem& a, const PqxzElem& b, const PqxzTable& table = pqxz_bracket_table);

/// True iff d1 and d2 act identically on {L_t, M_t : t in window}.
///
/// Every generator ad(u, v) moves each basis key by a fixed shift with a
/// coefficient affine in t, so per shift pattern two distinct t decide the
/// difference; the window must hold at least three. Throws WindowTooSmall.
bool deriv_equal(const DerivExpr& d1, const DerivExpr& d2, const Window& window);

/// Checks the bracket table against operator commutators: for every pair of
/// basis keys a, b with indices in window and every test vector L_t, M_t,
/// t in window, compares a(b(v)) - b(a(v)) with table(a, b)(v).
DefectReport check_pqxz_table(const Window& window, const PqxzTable& table = pqxz_bracket_table,
                              unsigned parallelism = 0);

/// All p, q, x, z keys with index in window.
std::vector<PqxzKey> pqxz_keys(const Window& window);

/// All canonically ordered generator pairs ad(u, v), u < v, over basis_keys(window).
std::vector<GenPair> generator_pairs(const Window& window);

/// Basis of the linear relations sum_i c_i ad(gens_i) = 0 (exact nullspace of
/// the p/q/x/z coordinate matrix). Each relation is a DerivExpr acting as zero.
std::vector<DerivExpr> kernel_relations(std::span<const GenPair> gens);

}  // namespace trilie
