// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "trilie/errors.hpp"
#include "trilie/repmod.hpp"

using namespace trilie;

namespace {

const Scalar lam = Scalar::lambda();
const Scalar mu = Scalar::mu();
const Scalar a0(Indeterminate::tag(0));
const WeightKey va0 = WeightKey::generic(Indeterminate::tag(0));

struct Outcome {
    bool ok;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.ok) ++failures;
    std::printf("%s %2d %s: %s (%.2fs)\n", o.ok ? "PASS" : "FAIL", id, title, o.detail.c_str(), secs);
    std::fflush(stdout);
}

Scalar defect_at(const DefectReport& r, const std::vector<Slot>& idx, const WeightKey& probe) {
    for (const auto& e : r.entries)
        if (e.indices == idx && e.probe == probe) return std::get<ModVec>(e.defect).coeff(probe);
    return {};
}

bool proportional(const DerivExpr& a, const DerivExpr& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    const auto& [k, c] = *a.begin();
    const Rational cb = b.coeff(k);
    if (cb.is_zero()) return false;
    return a.scaled(cb) == b.scaled(c);
}

}  // namespace

int main() {
    criterion(1, "bracket table equals determinant oracle on -3..3", [] {
        const auto keys = basis_keys(Window{-3, 3});
        std::size_t n = 0;
        for (const auto& x : keys)
            for (const auto& y : keys)
                for (const auto& z : keys) {
                    if (bracket_basis(x, y, z) != bracket_det(elem(x), elem(y), elem(z)))
                        return Outcome{false, "mismatch at " + x.to_string() + "," + y.to_string() + "," + z.to_string()};
                    ++n;
                }
        return Outcome{n == 14 * 14 * 14, std::to_string(n) + " triples agree"};
    });

    criterion(2, "fundamental identity on -2..2", [] {
        const auto r = check_fundamental(Window{-2, 2});
        return Outcome{r.passed() && r.cases == 100000,
                       std::to_string(r.cases) + " cases, " + std::to_string(r.entries.size()) + " defects"};
    });

    criterion(3, "first module axiom for T(lam,mu) symbolic on -2..2", [] {
        const auto r = check_tri_axiom1(TriAction::t_family(lam, mu), Window{-2, 2});
        return Outcome{r.passed(), std::to_string(r.cases) + " cases, " + std::to_string(r.entries.size()) + " defects"};
    });

    criterion(4, "second module axiom for T(lam,mu): defects divisible by mu^2-mu", [] {
        const Window w{-2, 2};
        const auto sym = check_tri_axiom2(TriAction::t_family(lam, mu), w);
        const Scalar m = mu * mu - mu;
        std::size_t coefficients = 0;
        for (const auto& e : sym.entries)
            for (const auto& [k, c] : std::get<ModVec>(e.defect)) {
                ++coefficients;
                if (!divides(m, c)) return Outcome{false, "not divisible: " + c.to_string()};
                if (!eval(c, {{Indeterminate::mu(), Rational(0)}}).is_zero() ||
                    !eval(c, {{Indeterminate::mu(), Rational(1)}}).is_zero())
                    return Outcome{false, "nonzero specialization of " + c.to_string()};
            }
        const auto at0 = check_tri_axiom2(TriAction::t_family(lam, 0), w);
        const auto at1 = check_tri_axiom2(TriAction::t_family(lam, 1), w);
        const auto at2 = check_tri_axiom2(TriAction::t_family(lam, 2), w);
        const std::vector<Slot> pattern = {Lk(0), Lk(1), Mk(0), Mk(1)};
        const Scalar d2 = defect_at(at2, pattern, va0);
        const Scalar dsym = defect_at(sym, pattern, va0);
        const bool ok = coefficients > 0 && at0.passed() && at1.passed() && d2 == Scalar(-2) &&
                        dsym == mu * (Scalar(1) - mu);
        return Outcome{ok, std::to_string(coefficients) + " symbolic coefficients divisible; mu=0: " +
                               std::to_string(at0.entries.size()) + " defects, mu=1: " +
                               std::to_string(at1.entries.size()) + " defects; pattern (L0,L1,M0,M1) on v[a0]: " +
                               dsym.to_string() + ", at mu=2: " + d2.to_string()};
    });

    criterion(5, "p/q/x/z bracket table certified, injected faults detected", [] {
        const auto r = check_pqxz_table(Window{-3, 3});
        PqxzTable qx_fault = [](const PqxzKey& a, const PqxzKey& b) {
            if (a.family == Family::Q && b.family == Family::X) return pqxz(Family::X, a.index + b.index, -1);
            if (a.family == Family::X && b.family == Family::Q) return pqxz(Family::X, a.index + b.index, 1);
            return pqxz_bracket_table(a, b);
        };
        int faults = 0, caught = 0;
        const Family fams[] = {Family::P, Family::Q, Family::X, Family::Z};
        for (Family fa : fams)
            for (Family fb : fams) {
                if (pqxz_bracket_table(PqxzKey(fa, 1), PqxzKey(fb, 2)).is_zero()) continue;
                ++faults;
                PqxzTable scaled = [=](const PqxzKey& a, const PqxzKey& b) {
                    PqxzElem v = pqxz_bracket_table(a, b);
                    return a.family == fa && b.family == fb ? v.scaled(Rational(3)) : v;
                };
                if (!check_pqxz_table(Window{-3, 3}, scaled).passed()) ++caught;
            }
        const bool qx_caught = !check_pqxz_table(Window{-3, 3}, qx_fault).passed();
        return Outcome{r.passed() && qx_caught && caught == faults,
                       std::to_string(r.cases) + " cases, " + std::to_string(r.entries.size()) +
                           " defects; [q,x] sign fault " + (qx_caught ? "caught" : "missed") + "; " +
                           std::to_string(caught) + "/" + std::to_string(faults) + " coefficient faults caught"};
    });

    criterion(6, "decomposition round trip for generator pairs on -3..3", [] {
        const Window w{-3, 3};
        std::size_t n = 0;
        for (const auto& g : generator_pairs(w)) {
            const DerivExpr d = ad(g.first, g.second);
            if (!deriv_equal(pqxz_to_deriv(deriv_to_pqxz(d)), d, w)) return Outcome{false, "fails at " + g.to_string()};
            ++n;
        }
        return Outcome{n == 91, std::to_string(n) + " pairs action-equal after re-expansion"};
    });

    criterion(7, "Psi(lam,mu) and Phi(mu) are Lie modules on -3..3", [] {
        const Window w{-3, 3};
        const auto psi = check_lie_module(LieAction::psi(lam, mu), w);
        const auto phi = check_lie_module(LieAction::phi(mu), w);
        return Outcome{psi.passed() && phi.passed(),
                       "Psi " + std::to_string(psi.entries.size()) + " defects, Phi " +
                           std::to_string(phi.entries.size()) + " defects over probes v[a0], v[-2..2]"};
    });

    criterion(8, "T(lam,mu) induces Psi(lam,mu) for mu in {0,1} but not mu=2", [] {
        const Window w{-3, 3};
        const auto r0 = check_induced(TriAction::t_family(lam, 0), LieAction::psi(lam, 0), w);
        const auto r1 = check_induced(TriAction::t_family(lam, 1), LieAction::psi(lam, 1), w);
        std::string two;
        bool two_fails = false;
        try {
            const auto r2 = check_induced(TriAction::t_family(lam, 2), LieAction::psi(lam, 2), w);
            two_fails = !r2.passed();
            two = std::to_string(r2.entries.size()) + " defects";
        } catch (const NotAModule&) {
            two_fails = true;
            two = "NotAModule";
        }
        return Outcome{r0.passed() && r1.passed() && two_fails,
                       "mu=0 " + std::to_string(r0.entries.size()) + " defects, mu=1 " +
                           std::to_string(r1.entries.size()) + " defects, mu=2 " + two};
    });

    criterion(9, "pullback of Phi counterexample at (L4,L3,M2,M1) on v[0]", [] {
        const auto c = counterexample_phi(mu);
        const WeightKey v4 = WeightKey::rational(-4);
        const bool ok = c.lhs == vec(v4, Scalar(-4) * (mu - 4)) && c.rhs == vec(v4, Scalar(-4) * (mu - 5)) &&
                        c.defect == vec(v4, -4);
        return Outcome{ok, "lhs " + format(c.lhs) + ", rhs " + format(c.rhs) + ", defect " + format(c.defect)};
    });

    criterion(10, "T(lam,0) and T(lam,1) are intermediate series on 7 keys", [] {
        std::vector<WeightKey> keys;
        for (int m = -3; m <= 3; ++m) keys.push_back(va0.shifted(m));
        for (int muv : {0, 1}) {
            const auto r = weight_report(TriAction::t_family(lam, muv), keys);
            if (r.rows.size() != 7 || !r.intermediate_series()) return Outcome{false, "repeated weight"};
            for (int m = -3; m <= 3; ++m)
                if (r.rows[m + 3].weight != lam + a0 + m)
                    return Outcome{false, "weight " + r.rows[m + 3].weight.to_string()};
        }
        return Outcome{true, "weights lam + a0 + m, m in -3..3, multiplicity 1 for mu = 0, 1"};
    });

    criterion(11, "orbit classifications", [] {
        const Window w{-3, 3};
        const auto triv = orbit_probe(TriAction::t_family(Rational(-1), 0), WeightKey::rational(1), w);
        const auto inv = orbit_probe(TriAction::t_family(Rational(1), 1), WeightKey::rational(0), w);
        const auto inv0 = orbit_probe(TriAction::t_family(0, 1), WeightKey::rational(1), w);
        const auto tr = orbit_probe(TriAction::t_family(Rational(1, 2), 0), va0, w);
        const auto phi = orbit_probe(LieAction::phi(mu), WeightKey::rational(0), w);
        bool one_way = phi.missed.empty() && !phi.non_returning.empty();
        for (const auto& k : phi.non_returning) one_way = one_way && !k.is_zero_weight();
        const bool ok = triv.kind == OrbitClass::TrivialLine && inv.kind == OrbitClass::InvariantSubspace &&
                        inv0.kind == OrbitClass::InvariantSubspace &&
                        inv0.missed == std::vector<WeightKey>{WeightKey::rational(0)} &&
                        tr.kind == OrbitClass::Transitive && phi.kind == OrbitClass::ContainsInvariantSub && one_way;
        return Outcome{ok, "T(-1,0)@v[1]: " + triv.summary() + "; T(1,1)@v[0]: " + inv.summary() +
                               "; T(0,1)@v[1]: " + inv0.summary() + "; T(1/2,0)@v[a0]: " + tr.summary() +
                               "; Phi@v[0]: " + to_string(phi.kind)};
    });

    criterion(12, "induced action invariant under kernel relations", [] {
        const Window w{-3, 3};
        const auto t = TriAction::t_family(lam, mu);
        const auto probes = default_probes();
        auto vanishes = [&](const DerivExpr& rel) {
            for (const auto& p : probes)
                if (!induce_apply(t, rel, vec(p)).is_zero()) return false;
            return true;
        };
        const DerivExpr R = ad(Lk(2), Mk(1)) - ad(Lk(1), Mk(0)).scaled(Rational(2)) + ad(Lk(0), Mk(-1));
        if (!deriv_equal(R, DerivExpr{}, w) || !vanishes(R)) return Outcome{false, "R does not act as zero"};
        std::vector<GenPair> gens;
        for (const auto& g : generator_pairs(w))
            if (g.first.kind != g.second.kind) gens.push_back(g);
        std::size_t extra = 0;
        for (const auto& rel : kernel_relations(gens)) {
            if (proportional(rel, R)) continue;
            if (!deriv_equal(rel, DerivExpr{}, w)) return Outcome{false, "relation not window-verified: " + format(rel)};
            if (!vanishes(rel)) return Outcome{false, "relation acts nontrivially: " + format(rel)};
            ++extra;
        }
        return Outcome{extra >= 10, "R and " + std::to_string(extra) + " further kernel relations act as zero"};
    });

    std::printf("%d of 12 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
