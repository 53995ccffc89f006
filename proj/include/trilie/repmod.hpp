#pragma once

#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "trilie/derivations.hpp"

namespace trilie {

class LieAction;

/// A bilinear antisymmetric map rho: A x A -> gl(V) given either by the
/// family T(lambda, mu),
///   rho(L_r, M_s) v_alpha = (lambda + alpha + (s - r) mu) v_{alpha+s-r},
///   rho(L_r, L_s) = rho(M_r, M_s) = 0,
/// or as the pullback x, y |-> A(ad(x, y)) of a Lie action A.
class TriAction {
public:
    struct TFamily {
        Scalar lambda;
        Scalar mu;
    };
    struct Pullback {
        std::shared_ptr<const LieAction> source;
    };

    /// lambda must be rational or the indeterminate lam, mu rational or mu;
    /// throws ConfigError otherwise.
    static TriAction t_family(Scalar lambda, Scalar mu);
    static TriAction pullback(const LieAction& source);

    const std::variant<TFamily, Pullback>& kind() const { return kind_; }
    std::string name() const;
    std::map<std::string, std::string> parameters() const;
    /// The mu parameter when one exists (T family, or pullback of Psi/Phi).
    std::optional<Scalar> mu() const;

private:
    explicit TriAction(std::variant<TFamily, Pullback> k) : kind_(std::move(k)) {}
    std::variant<TFamily, Pullback> kind_;
};

/// A linear map ad(A_omega^delta) -> gl(V) on the p/q/x/z basis:
///   Psi(lambda, mu): p_r v_alpha = (lambda + alpha - r mu) v_{alpha-r}; q, x, z act as 0.
///   Phi(mu):         p_r v_alpha = (alpha - r) v_{alpha-r}   (r != 0, alpha != 0)
///                    p_r v_0     = r (mu - r) v_{-r}         (r != 0)
///                    p_0 v_alpha = alpha v_alpha;            q, x, z act as 0.
///   Induced(T):      k |-> sum_i c_i T(u_i, v_i) over the expansion of k.
class LieAction {
public:
    struct Psi {
        Scalar lambda;
        Scalar mu;
    };
    struct Phi {
        Scalar mu;
    };
    struct Induced {
        std::shared_ptr<const TriAction> source;
    };

    static LieAction psi(Scalar lambda, Scalar mu);
    static LieAction phi(Scalar mu);
    static LieAction induced(const TriAction& source);

    const std::variant<Psi, Phi, Induced>& kind() const { return kind_; }
    std::string name() const;
    std::map<std::string, std::string> parameters() const;
    std::optional<Scalar> mu() const;

private:
    explicit LieAction(std::variant<Psi, Phi, Induced> k) : kind_(std::move(k)) {}
    std::variant<Psi, Phi, Induced> kind_;
};

/// One generic probe v_{a0} plus v_m for m in -2..2, so that case splits at
/// alpha = 0 are always exercised.
std::vector<WeightKey> default_probes();

ModVec tri_apply(const TriAction& a, const BasisKey& x, const BasisKey& y, const ModVec& v);
/// Bilinear extension in the algebra arguments.
ModVec tri_apply(const TriAction& a, const AlgElem& x, const AlgElem& y, const ModVec& v);

ModVec lie_apply(const LieAction& a, const PqxzKey& k, const ModVec& v);
ModVec lie_apply(const LieAction& a, const PqxzElem& b, const ModVec& v);

/// [rho(x1,x2), rho(x3,x4)] - rho([x1,x2,x3], x4) - rho(x3, [x1,x2,x4]) on
/// every probe, for all 4-tuples of basis keys with indices in window.
DefectReport check_tri_axiom1(const TriAction& a, const Window& window,
                              const std::vector<WeightKey>& probes = default_probes(), unsigned parallelism = 0);

/// rho(x1,x2) rho(x3,x4) + rho(x2,x3) rho(x1,x4) + rho(x3,x1) rho(x2,x4)
/// - rho([x1,x2,x3], x4) on every probe, for all 4-tuples of basis keys with
/// indices in window. The defect is reported as expansion minus bracket
/// term, so T(lambda, mu) at (L_0, L_1, M_0, M_1) yields mu(1 - mu).
DefectReport check_tri_axiom2(const TriAction& a, const Window& window,
                              const std::vector<WeightKey>& probes = default_probes(), unsigned parallelism = 0);

/// Outcome of both module-axiom checks. A triple action counts as a module
/// when every defect coefficient is divisible by mu^2 - mu, i.e. the axioms
/// hold identically, or for symbolic mu they hold on mu in {0, 1}.
struct ModuleVerdict {
    DefectReport axiom1;
    DefectReport axiom2;
    bool is_module = false;
};

ModuleVerdict module_verdict(const TriAction& a, const Window& window = Window{-2, 2},
                             const std::vector<WeightKey>& probes = default_probes(), unsigned parallelism = 0);

/// Throws NotAModule unless module_verdict(a) passes. Results are memoized
/// per (action, window, probes).
void require_module(const TriAction& a, const Window& window = Window{-2, 2},
                    const std::vector<WeightKey>& probes = default_probes());

/// rho-bar(D) v = sum_i c_i rho(u_i, v_i) v. Throws NotAModule if `t` is not
/// a module (see require_module).
ModVec induce_apply(const TriAction& t, const DerivExpr& d, const ModVec& v);

/// [A(a), A(b)] - A([a, b]) on every probe for all p/q/x/z pairs in window.
DefectReport check_lie_module(const LieAction& a, const Window& window,
                              const std::vector<WeightKey>& probes = default_probes(), unsigned parallelism = 0);

/// induce_apply(t, k) - lie_apply(a, k) on every probe for every p/q/x/z key
/// in window. Propagates NotAModule.
DefectReport check_induced(const TriAction& t, const LieAction& a, const Window& window,
                           const std::vector<WeightKey>& probes = default_probes(), unsigned parallelism = 0);

/// The unique triple action with x, y |-> a(ad(x, y)). Requires Psi or Phi;
/// throws ConfigError for an induced action.
TriAction pullback_candidate(const LieAction& a);

struct WeightRow {
    WeightKey key;
    Scalar weight;
    std::size_t multiplicity = 0;
};

struct WeightReport {
    std::vector<WeightRow> rows;
    /// Every weight space among the keys is one-dimensional.
    bool intermediate_series() const;
};

/// Weights of the keys under the Cartan element rho(L_0, M_0). Throws
/// NotEigenvector if some v_key is not an eigenvector.
WeightReport weight_report(const TriAction& a, const std::vector<WeightKey>& keys);

enum class OrbitClass {
    TrivialLine,               ///< every generator annihilates the start vector
    InvariantSubspace,         ///< the orbit misses some keys of the window
    ContainsInvariantSub,      ///< orbit covers the window, but some reached key never returns
    Transitive,                ///< every key in the window reaches every other
};

std::string to_string(OrbitClass c);

/// Reachability among the window keys {v_{tag+m} : m in window} of the
/// start's coset under all generators with indices in window (rho(x, y) for
/// basis pairs, or p/q/x/z keys). Window evidence only, not a proof.
struct OrbitReport {
    WeightKey start;
    std::vector<WeightKey> keys;
    std::vector<WeightKey> reached;
    std::vector<WeightKey> missed;
    /// Reached keys whose own orbit does not contain the start.
    std::vector<WeightKey> non_returning;
    /// Generators acting as zero on the start vector.
    std::vector<std::string> annihilators;
    std::size_t generator_count = 0;
    OrbitClass kind = OrbitClass::Transitive;

    /// "trivial line", "invariant: misses v[0]", ...
    std::string summary() const;
};

using Action = std::variant<TriAction, LieAction>;

/// Throws ConfigError when start's offset is outside window.
OrbitReport orbit_probe(const Action& a, const WeightKey& start, const Window& window);

struct PullbackCounterexample {
    ModVec lhs;
    ModVec rhs;
    ModVec defect;  ///< lhs - rhs
};

/// Both sides of the second module axiom for the pullback of Phi(mu) at
/// (L_4, L_3, M_2, M_1) on v_0: lhs = rho([L_4, L_3, M_2], M_1) v_0 and
/// rhs = rho(L_4,L_3) rho(M_2,M_1) v_0 + rho(L_3,M_2) rho(L_4,M_1) v_0
///       + rho(M_2,L_4) rho(L_3,M_1) v_0.
PullbackCounterexample counterexample_phi(const Scalar& mu);

}  // namespace trilie
