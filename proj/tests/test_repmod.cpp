#include <gtest/gtest.h>

#include "trilie/errors.hpp"
#include "trilie/parse.hpp"
#include "trilie/repmod.hpp"

using namespace trilie;

namespace {

const Scalar lam = Scalar::lambda();
const Scalar mu = Scalar::mu();
const Scalar a0(Indeterminate::tag(0));
const WeightKey va0 = WeightKey::generic(Indeterminate::tag(0));

WeightKey v(std::int64_t m) { return WeightKey::rational(m); }
PqxzKey P(std::int64_t r) { return {Family::P, r}; }

const Window kSmall{-2, 2};
const Window kWide{-3, 3};

/// Reference for T(lambda, mu) on a single basis pair, written straight from
/// the defining formula with the antisymmetric extension spelled out.
ModVec t_reference(const Scalar& l, const Scalar& m, const BasisKey& x, const BasisKey& y, const WeightKey& w) {
    if (x.kind == Kind::L && y.kind == Kind::M)
        return vec(w.shifted(y.index - x.index), l + w.alpha() + Scalar(y.index - x.index) * m);
    if (x.kind == Kind::M && y.kind == Kind::L)
        return -vec(w.shifted(x.index - y.index), l + w.alpha() + Scalar(x.index - y.index) * m);
    return {};
}

Scalar coeff_at(const DefectReport& r, const std::vector<Slot>& idx, const WeightKey& probe, const WeightKey& key) {
    for (const auto& e : r.entries)
        if (e.indices == idx && e.probe == probe) return std::get<ModVec>(e.defect).coeff(key);
    return {};
}

}  // namespace

TEST(WeightKeys, RationalNormalization) {
    const WeightKey k = WeightKey::rational(Rational(-1, 2));
    EXPECT_EQ(k.offset(), -1);
    EXPECT_EQ(std::get<Rational>(k.tag()), Rational(1, 2));
    EXPECT_EQ(k.alpha(), Scalar(Rational(-1, 2)));
    EXPECT_TRUE(k.same_coset(WeightKey::rational(Rational(7, 2))));
    EXPECT_TRUE(v(0).is_zero_weight());
    EXPECT_FALSE(va0.is_zero_weight());
    EXPECT_FALSE(va0.shifted(-3).is_zero_weight());
    EXPECT_EQ(va0.shifted(3).to_string(), "v[a0+3]");
    EXPECT_EQ(parse_weight_key("a0-1"), va0.shifted(-1));
    EXPECT_EQ(parse_weight_key("-1/2"), k);
    EXPECT_EQ(parse_weight_key("v[2]"), v(2));
}

TEST(TriApply, Examples) {
    const auto t1 = TriAction::t_family(lam, 1);
    EXPECT_EQ(tri_apply(t1, Lk(2), Mk(5), vec(va0)), vec(va0.shifted(3), lam + a0 + 3));
    const auto th = TriAction::t_family(Rational(1, 2), 0);
    for (std::int64_t r = -3; r <= 3; ++r)
        for (std::int64_t s = -3; s <= 3; ++s)
            EXPECT_TRUE(tri_apply(th, Lk(r), Mk(s), vec(WeightKey::rational(Rational(-1, 2)))).is_zero());
    const auto t = TriAction::t_family(lam, mu);
    EXPECT_TRUE(tri_apply(t, Mk(1), Mk(2), vec(va0)).is_zero());
}

TEST(TriApply, MatchesReferenceFormula) {
    const auto t = TriAction::t_family(lam, mu);
    const auto keys = basis_keys(kWide);
    for (const auto& x : keys)
        for (const auto& y : keys)
            for (const auto& w : {va0, v(0), v(-2), WeightKey::rational(Rational(1, 3))})
                ASSERT_EQ(tri_apply(t, x, y, vec(w)), t_reference(lam, mu, x, y, w));
}

TEST(TriApply, RejectsForeignParameters) {
    EXPECT_THROW(TriAction::t_family(mu, mu), ConfigError);
    EXPECT_THROW(TriAction::t_family(lam, lam + 1), ConfigError);
    EXPECT_THROW(LieAction::phi(a0), ConfigError);
}

TEST(Axiom1, HoldsForSymbolicParameters) {
    const auto r = check_tri_axiom1(TriAction::t_family(lam, mu), kSmall);
    EXPECT_TRUE(r.passed()) << format_text(r);
    EXPECT_TRUE(check_tri_axiom1(TriAction::t_family(0, 0), Window{0, 0}).passed());
}

TEST(Axiom1, PullbackOfPhiOnGenericProbe) {
    const auto r = check_tri_axiom1(pullback_candidate(LieAction::phi(mu)), kSmall, {va0});
    EXPECT_TRUE(r.passed()) << format_text(r);
}

TEST(Axiom2, DefectIsMuTimesOneMinusMu) {
    const auto r = check_tri_axiom2(TriAction::t_family(lam, mu), kSmall);
    EXPECT_FALSE(r.passed());
    const std::vector<Slot> pattern = {Lk(0), Lk(1), Mk(0), Mk(1)};
    EXPECT_EQ(coeff_at(r, pattern, va0, va0), mu * (Scalar(1) - mu));
    const Scalar m = mu * mu - mu;
    for (const auto& e : r.entries)
        for (const auto& [k, c] : std::get<ModVec>(e.defect)) {
            ASSERT_TRUE(divides(m, c)) << c.to_string();
            EXPECT_TRUE(eval(c, {{Indeterminate::mu(), Rational(0)}}).is_zero());
            EXPECT_TRUE(eval(c, {{Indeterminate::mu(), Rational(1)}}).is_zero());
        }
}

TEST(Axiom2, SpecializationsOfMu) {
    EXPECT_TRUE(check_tri_axiom2(TriAction::t_family(lam, 0), kSmall).passed());
    EXPECT_TRUE(check_tri_axiom2(TriAction::t_family(lam, 1), kSmall).passed());
    const auto r = check_tri_axiom2(TriAction::t_family(lam, 2), kSmall);
    EXPECT_EQ(coeff_at(r, {Lk(0), Lk(1), Mk(0), Mk(1)}, va0, va0), Scalar(-2));
}

TEST(ModuleVerdict, DivisibilityCriterion) {
    EXPECT_TRUE(module_verdict(TriAction::t_family(lam, mu)).is_module);
    EXPECT_TRUE(module_verdict(TriAction::t_family(Rational(3, 7), 1)).is_module);
    EXPECT_FALSE(module_verdict(TriAction::t_family(lam, Rational(-1, 2))).is_module);
    EXPECT_THROW(require_module(TriAction::t_family(lam, 2)), NotAModule);
}

TEST(Weights, IntermediateSeries) {
    for (int m : {0, 1}) {
        std::vector<WeightKey> keys;
        for (int k = -3; k <= 3; ++k) keys.push_back(va0.shifted(k));
        const auto r = weight_report(TriAction::t_family(lam, m), keys);
        ASSERT_EQ(r.rows.size(), 7u);
        EXPECT_TRUE(r.intermediate_series());
        for (int k = -3; k <= 3; ++k) EXPECT_EQ(r.rows[k + 3].weight, lam + a0 + k);
    }
    const auto zero = weight_report(TriAction::t_family(0, 0), {v(0)});
    EXPECT_TRUE(zero.rows.front().weight.is_zero());
}

TEST(Weights, RepeatedKeysShowMultiplicity) {
    const auto r = weight_report(TriAction::t_family(lam, 0), {v(1), v(1), v(2)});
    EXPECT_FALSE(r.intermediate_series());
    EXPECT_EQ(r.rows[0].multiplicity, 2u);
}

TEST(LieApply, Examples) {
    const auto psi = LieAction::psi(lam, mu);
    const auto phi = LieAction::phi(mu);
    EXPECT_EQ(lie_apply(psi, P(2), vec(va0)), vec(va0.shifted(-2), lam + a0 - Scalar(2) * mu));
    EXPECT_EQ(lie_apply(phi, P(2), vec(v(0))), vec(v(-2), Scalar(2) * (mu - 2)));
    EXPECT_EQ(lie_apply(phi, P(2), vec(v(3))), vec(v(1)));
    EXPECT_TRUE(lie_apply(psi, PqxzKey(Family::X, 5), vec(va0)).is_zero());
    EXPECT_EQ(lie_apply(phi, P(0), vec(va0)), vec(va0, a0));
}

TEST(LieModule, PsiAndPhi) {
    EXPECT_TRUE(check_lie_module(LieAction::psi(lam, mu), kWide).passed());
    const auto r = check_lie_module(LieAction::phi(mu), kWide);
    EXPECT_TRUE(r.passed()) << format_text(r);
}

TEST(LieModule, PhiCommutatorOnZeroWeight) {
    const auto phi = LieAction::phi(mu);
    for (std::int64_t r = -3; r <= 3; ++r)
        for (std::int64_t s = -3; s <= 3; ++s) {
            if (r == 0 || s == 0 || r + s == 0) continue;
            const ModVec c = lie_apply(phi, P(r), lie_apply(phi, P(s), vec(v(0)))) -
                             lie_apply(phi, P(s), lie_apply(phi, P(r), vec(v(0))));
            EXPECT_EQ(c, vec(v(-r - s), Scalar((r - s) * (r + s)) * (mu - Scalar(r + s))));
        }
}

TEST(LieModule, PsiFixesMinusLambda) {
    const Rational l(5, 3);
    const auto psi = LieAction::psi(l, 0);
    for (std::int64_t r = -3; r <= 3; ++r)
        EXPECT_TRUE(lie_apply(psi, P(r), vec(WeightKey::rational(-l))).is_zero());
}

TEST(Induced, MismatchedParameterIsDetected) {
    const auto induced_wrong = check_induced(TriAction::t_family(lam, 1), LieAction::psi(lam, 0), kWide);
    EXPECT_FALSE(induced_wrong.passed());
}

TEST(Induced, Examples) {
    const auto t0 = TriAction::t_family(lam, 0);
    for (std::int64_t r = -3; r <= 3; ++r)
        EXPECT_EQ(induce_apply(t0, ad(Lk(0), Mk(-r)), vec(va0)), vec(va0.shifted(-r), lam + a0));
    const DerivExpr rel = ad(Lk(2), Mk(1)) - ad(Lk(1), Mk(0)).scaled(Rational(2)) + ad(Lk(0), Mk(-1));
    EXPECT_TRUE(induce_apply(TriAction::t_family(lam, mu), rel, vec(va0)).is_zero());
    EXPECT_TRUE(induce_apply(t0, DerivExpr{}, vec(va0)).is_zero());
}

TEST(Induced, MatchesPsiExactlyForModules) {
    EXPECT_TRUE(check_induced(TriAction::t_family(lam, 0), LieAction::psi(lam, 0), kWide).passed());
    EXPECT_TRUE(check_induced(TriAction::t_family(lam, 1), LieAction::psi(lam, 1), kWide).passed());
    EXPECT_THROW(check_induced(TriAction::t_family(lam, 2), LieAction::psi(lam, 2), kWide), NotAModule);
}

TEST(Induced, KernelRelationsActAsZero) {
    std::vector<GenPair> gens;
    for (const auto& g : generator_pairs(kWide))
        if (g.first.kind != g.second.kind) gens.push_back(g);
    const auto rels = kernel_relations(gens);
    ASSERT_GE(rels.size(), 10u);
    const auto t = TriAction::t_family(lam, mu);
    for (const auto& rel : rels)
        for (const auto& w : default_probes()) EXPECT_TRUE(induce_apply(t, rel, vec(w)).is_zero()) << format(rel);
}

TEST(Pullback, OfPsiReproducesT) {
    const auto pb = pullback_candidate(LieAction::psi(lam, mu));
    const auto t = TriAction::t_family(lam, mu);
    for (const auto& x : basis_keys(kWide))
        for (const auto& y : basis_keys(kWide)) ASSERT_EQ(tri_apply(pb, x, y, vec(va0)), tri_apply(t, x, y, vec(va0)));
}

TEST(Pullback, OfPhiAtZeroWeight) {
    const auto pb = pullback_candidate(LieAction::phi(mu));
    for (std::int64_t r = -3; r <= 3; ++r)
        for (std::int64_t s = -3; s <= 3; ++s) {
            if (r == s) continue;
            EXPECT_EQ(tri_apply(pb, Lk(r), Mk(s), vec(v(0))),
                      vec(v(s - r), Scalar(r - s) * (Scalar(s - r) + mu)));
        }
    EXPECT_TRUE(tri_apply(pb, Lk(2), Lk(2), vec(v(0))).is_zero());
    EXPECT_THROW(pullback_candidate(LieAction::induced(TriAction::t_family(lam, 0))), ConfigError);
}

TEST(Pullback, Axiom2FailsWithConstantDefect) {
    const auto r = check_tri_axiom2(pullback_candidate(LieAction::phi(mu)), kSmall);
    bool constant_defect = false;
    for (const auto& e : r.entries)
        for (const auto& [k, c] : std::get<ModVec>(e.defect))
            if (c.is_constant() && !c.is_zero()) constant_defect = true;
    EXPECT_TRUE(constant_defect);
}

TEST(Pullback, Counterexample) {
    const auto c = counterexample_phi(mu);
    EXPECT_EQ(c.lhs, vec(v(-4), Scalar(-4) * (mu - 4)));
    EXPECT_EQ(c.rhs, vec(v(-4), Scalar(-4) * (mu - 5)));
    EXPECT_EQ(c.defect, vec(v(-4), -4));
    EXPECT_EQ(counterexample_phi(Rational(7)).defect, vec(v(-4), -4));
}

TEST(Orbits, Classification) {
    const Window w = kWide;
    auto t00 = orbit_probe(TriAction::t_family(0, 0), v(0), w);
    EXPECT_EQ(t00.kind, OrbitClass::TrivialLine);
    EXPECT_EQ(t00.summary(), "trivial line");

    auto t01 = orbit_probe(TriAction::t_family(0, 1), v(1), w);
    EXPECT_EQ(t01.kind, OrbitClass::InvariantSubspace);
    EXPECT_EQ(t01.missed, std::vector<WeightKey>{v(0)});
    EXPECT_EQ(t01.summary(), "invariant: misses v[0]");

    auto th = orbit_probe(TriAction::t_family(Rational(1, 2), 0), va0, w);
    EXPECT_EQ(th.kind, OrbitClass::Transitive);
    EXPECT_EQ(th.summary(), "transitive on window");

    auto phi = orbit_probe(LieAction::phi(mu), v(0), w);
    EXPECT_EQ(phi.kind, OrbitClass::ContainsInvariantSub);
    EXPECT_TRUE(phi.missed.empty());
    EXPECT_EQ(phi.non_returning.size(), 6u);

    EXPECT_THROW(orbit_probe(TriAction::t_family(0, 0), v(9), w), ConfigError);
}

TEST(Orbits, PsiTrivialLineAtMinusLambda) {
    auto r = orbit_probe(LieAction::psi(Rational(-2), 0), v(2), kWide);
    EXPECT_EQ(r.kind, OrbitClass::TrivialLine);
}

TEST(Checkers, DeterministicAcrossWorkerCounts) {
    const auto t = TriAction::t_family(lam, mu);
    EXPECT_EQ(format_machine(check_tri_axiom2(t, Window{-1, 1}, default_probes(), 1)),
              format_machine(check_tri_axiom2(t, Window{-1, 1}, default_probes(), 7)));
}
