#include "trilie/repmod.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <set>
#include <sstream>

#include "trilie/errors.hpp"
#include "trilie/parallel.hpp"

namespace trilie {

namespace {

void require_parameter(const Scalar& value, Indeterminate allowed, const char* what) {
    if (value.is_constant() || value == Scalar(allowed)) return;
    throw ConfigError(std::string(what) + " must be rational or the symbol " + allowed.name() + ", got " +
                      value.to_string());
}

std::string param_text(const Scalar& s) { return s.to_string(); }

}  // namespace

// ---------------------------------------------------------------------------
// Action families

TriAction TriAction::t_family(Scalar lambda, Scalar mu) {
    require_parameter(lambda, Indeterminate::lambda(), "lambda");
    require_parameter(mu, Indeterminate::mu(), "mu");
    return TriAction(TFamily{std::move(lambda), std::move(mu)});
}

TriAction TriAction::pullback(const LieAction& source) {
    return TriAction(Pullback{std::make_shared<const LieAction>(source)});
}

std::string TriAction::name() const {
    if (const auto* t = std::get_if<TFamily>(&kind_))
        return "T(" + param_text(t->lambda) + "," + param_text(t->mu) + ")";
    return "pullback(" + std::get<Pullback>(kind_).source->name() + ")";
}

std::map<std::string, std::string> TriAction::parameters() const {
    if (const auto* t = std::get_if<TFamily>(&kind_))
        return {{"lambda", param_text(t->lambda)}, {"mu", param_text(t->mu)}};
    return std::get<Pullback>(kind_).source->parameters();
}

std::optional<Scalar> TriAction::mu() const {
    if (const auto* t = std::get_if<TFamily>(&kind_)) return t->mu;
    return std::get<Pullback>(kind_).source->mu();
}

LieAction LieAction::psi(Scalar lambda, Scalar mu) {
    require_parameter(lambda, Indeterminate::lambda(), "lambda");
    require_parameter(mu, Indeterminate::mu(), "mu");
    return LieAction(Psi{std::move(lambda), std::move(mu)});
}

LieAction LieAction::phi(Scalar mu) {
    require_parameter(mu, Indeterminate::mu(), "mu");
    return LieAction(Phi{std::move(mu)});
}

LieAction LieAction::induced(const TriAction& source) {
    return LieAction(Induced{std::make_shared<const TriAction>(source)});
}

std::string LieAction::name() const {
    if (const auto* p = std::get_if<Psi>(&kind_))
        return "Psi(" + param_text(p->lambda) + "," + param_text(p->mu) + ")";
    if (const auto* p = std::get_if<Phi>(&kind_)) return "Phi(" + param_text(p->mu) + ")";
    return "induced(" + std::get<Induced>(kind_).source->name() + ")";
}

std::map<std::string, std::string> LieAction::parameters() const {
    if (const auto* p = std::get_if<Psi>(&kind_))
        return {{"lambda", param_text(p->lambda)}, {"mu", param_text(p->mu)}};
    if (const auto* p = std::get_if<Phi>(&kind_)) return {{"mu", param_text(p->mu)}};
    return std::get<Induced>(kind_).source->parameters();
}

std::optional<Scalar> LieAction::mu() const {
    if (const auto* p = std::get_if<Psi>(&kind_)) return p->mu;
    if (const auto* p = std::get_if<Phi>(&kind_)) return p->mu;
    return std::get<Induced>(kind_).source->mu();
}

std::vector<WeightKey> default_probes() {
    std::vector<WeightKey> probes{WeightKey::generic(Indeterminate::tag(0))};
    for (int m = -2; m <= 2; ++m) probes.push_back(WeightKey::rational(m));
    return probes;
}

// ---------------------------------------------------------------------------
// Actions

ModVec tri_apply(const TriAction& a, const BasisKey& x, const BasisKey& y, const ModVec& v) {
    if (const auto* t = std::get_if<TriAction::TFamily>(&a.kind())) {
        if (x.kind == y.kind) return {};
        const bool lm = x.kind == Kind::L;
        const std::int64_t r = lm ? x.index : y.index;
        const std::int64_t s = lm ? y.index : x.index;
        const Scalar base = t->lambda + Scalar(s - r) * t->mu;
        ModVec out;
        for (const auto& [key, c] : v) {
            Scalar coeff = c * (base + key.alpha());
            out.add(key.shifted(s - r), lm ? coeff : -coeff);
        }
        return out;
    }
    const auto& source = *std::get<TriAction::Pullback>(a.kind()).source;
    return lie_apply(source, deriv_to_pqxz(ad(x, y)), v);
}

ModVec tri_apply(const TriAction& a, const AlgElem& x, const AlgElem& y, const ModVec& v) {
    ModVec out;
    for (const auto& [kx, cx] : x)
        for (const auto& [ky, cy] : y) out.add_scaled(tri_apply(a, kx, ky, v), cx * cy);
    return out;
}

ModVec lie_apply(const LieAction& a, const PqxzKey& k, const ModVec& v) {
    if (const auto* ind = std::get_if<LieAction::Induced>(&a.kind()))
        return induce_apply(*ind->source, pqxz_to_deriv(k), v);
    if (k.family != Family::P) return {};
    const std::int64_t r = k.index;
    ModVec out;
    if (const auto* p = std::get_if<LieAction::Psi>(&a.kind())) {
        const Scalar base = p->lambda - Scalar(r) * p->mu;
        for (const auto& [key, c] : v) out.add(key.shifted(-r), c * (base + key.alpha()));
        return out;
    }
    const auto& phi = std::get<LieAction::Phi>(a.kind());
    for (const auto& [key, c] : v) {
        if (r == 0)
            out.add(key, c * key.alpha());
        else if (key.is_zero_weight())
            out.add(key.shifted(-r), c * Scalar(r) * (phi.mu - Scalar(r)));
        else
            out.add(key.shifted(-r), c * (key.alpha() - Scalar(r)));
    }
    return out;
}

ModVec lie_apply(const LieAction& a, const PqxzElem& b, const ModVec& v) {
    ModVec out;
    for (const auto& [k, c] : b) out.add_scaled(lie_apply(a, k, v), Scalar(c));
    return out;
}

// ---------------------------------------------------------------------------
// Module axioms

namespace {

template <class Body>
DefectReport check_quadruples(const TriAction& a, const Window& window, const std::vector<WeightKey>& probes,
                              unsigned parallelism, const char* check, Body body) {
    const auto keys = basis_keys(window);
    const std::size_t n = keys.size();
    auto rows = parallel_map(n * n, parallelism, [&](std::size_t idx) {
        std::vector<DefectEntry> found;
        const BasisKey& x1 = keys[idx / n];
        const BasisKey& x2 = keys[idx % n];
        for (const auto& x3 : keys)
            for (const auto& x4 : keys)
                for (const auto& probe : probes) {
                    ModVec d = body(x1, x2, x3, x4, vec(probe));
                    if (!d.is_zero()) found.push_back({check, {x1, x2, x3, x4}, probe, std::move(d)});
                }
        return found;
    });
    DefectReport report;
    report.check = check;
    report.family = a.name();
    report.parameters = a.parameters();
    report.parameters["window"] = window.to_string();
    report.cases = n * n * n * n * probes.size();
    for (auto& row : rows)
        for (auto& e : row) report.entries.push_back(std::move(e));
    report.sort_entries();
    return report;
}

}  // namespace

DefectReport check_tri_axiom1(const TriAction& a, const Window& window, const std::vector<WeightKey>& probes,
                              unsigned parallelism) {
    return check_quadruples(
        a, window, probes, parallelism, "module-axiom-1",
        [&](const BasisKey& x1, const BasisKey& x2, const BasisKey& x3, const BasisKey& x4, const ModVec& v) {
            ModVec d = tri_apply(a, x1, x2, tri_apply(a, x3, x4, v));
            d -= tri_apply(a, x3, x4, tri_apply(a, x1, x2, v));
            d -= tri_apply(a, bracket_basis(x1, x2, x3), elem(x4), v);
            d -= tri_apply(a, elem(x3), bracket_basis(x1, x2, x4), v);
            return d;
        });
}

DefectReport check_tri_axiom2(const TriAction& a, const Window& window, const std::vector<WeightKey>& probes,
                              unsigned parallelism) {
    return check_quadruples(
        a, window, probes, parallelism, "module-axiom-2",
        [&](const BasisKey& x1, const BasisKey& x2, const BasisKey& x3, const BasisKey& x4, const ModVec& v) {
            ModVec d = tri_apply(a, x1, x2, tri_apply(a, x3, x4, v));
            d += tri_apply(a, x2, x3, tri_apply(a, x1, x4, v));
            d += tri_apply(a, x3, x1, tri_apply(a, x2, x4, v));
            d -= tri_apply(a, bracket_basis(x1, x2, x3), elem(x4), v);
            return d;
        });
}

namespace {

bool defects_vanish_on_mu_01(const DefectReport& r) {
    const Scalar mu = Scalar::mu();
    const Scalar m = mu * mu - mu;
    for (const auto& e : r.entries)
        for (const auto& [k, c] : std::get<ModVec>(e.defect))
            if (!divides(m, c)) return false;
    return true;
}

std::string probes_text(const std::vector<WeightKey>& probes) {
    std::string s;
    for (const auto& p : probes) s += p.label() + ",";
    return s;
}

}  // namespace

ModuleVerdict module_verdict(const TriAction& a, const Window& window, const std::vector<WeightKey>& probes,
                             unsigned parallelism) {
    ModuleVerdict v;
    v.axiom1 = check_tri_axiom1(a, window, probes, parallelism);
    v.axiom2 = check_tri_axiom2(a, window, probes, parallelism);
    v.is_module = defects_vanish_on_mu_01(v.axiom1) && defects_vanish_on_mu_01(v.axiom2);
    return v;
}

void require_module(const TriAction& a, const Window& window, const std::vector<WeightKey>& probes) {
    static std::mutex mutex;
    static std::map<std::string, bool> verdicts;
    const std::string key = a.name() + "|" + window.to_string() + "|" + probes_text(probes);
    bool ok;
    {
        std::lock_guard lock(mutex);
        auto it = verdicts.find(key);
        if (it != verdicts.end()) {
            ok = it->second;
        } else {
            ok = module_verdict(a, window, probes).is_module;
            verdicts.emplace(key, ok);
        }
    }
    if (!ok) throw NotAModule(a.name() + " violates the 3-Lie module axioms on window " + window.to_string());
}

ModVec induce_apply(const TriAction& t, const DerivExpr& d, const ModVec& v) {
    require_module(t);
    ModVec out;
    for (const auto& [g, c] : d) out.add_scaled(tri_apply(t, g.first, g.second, v), Scalar(c));
    return out;
}

DefectReport check_lie_module(const LieAction& a, const Window& window, const std::vector<WeightKey>& probes,
                              unsigned parallelism) {
    const auto keys = pqxz_keys(window);
    const std::size_t n = keys.size();
    auto rows = parallel_map(n * n, parallelism, [&](std::size_t idx) {
        const PqxzKey& x = keys[idx / n];
        const PqxzKey& y = keys[idx % n];
        const PqxzElem xy = pqxz_bracket_table(x, y);
        std::vector<DefectEntry> found;
        for (const auto& probe : probes) {
            const ModVec v = vec(probe);
            ModVec d = lie_apply(a, x, lie_apply(a, y, v)) - lie_apply(a, y, lie_apply(a, x, v)) - lie_apply(a, xy, v);
            if (!d.is_zero()) found.push_back({"lie-module", {x, y}, probe, std::move(d)});
        }
        return found;
    });
    DefectReport report;
    report.check = "lie-module";
    report.family = a.name();
    report.parameters = a.parameters();
    report.parameters["window"] = window.to_string();
    report.cases = n * n * probes.size();
    for (auto& row : rows)
        for (auto& e : row) report.entries.push_back(std::move(e));
    report.sort_entries();
    return report;
}

DefectReport check_induced(const TriAction& t, const LieAction& a, const Window& window,
                           const std::vector<WeightKey>& probes, unsigned parallelism) {
    require_module(t);
    const auto keys = pqxz_keys(window);
    auto rows = parallel_map(keys.size(), parallelism, [&](std::size_t i) {
        const DerivExpr expansion = pqxz_to_deriv(keys[i]);
        std::vector<DefectEntry> found;
        for (const auto& probe : probes) {
            const ModVec v = vec(probe);
            ModVec d = induce_apply(t, expansion, v) - lie_apply(a, keys[i], v);
            if (!d.is_zero()) found.push_back({"induced", {keys[i]}, probe, std::move(d)});
        }
        return found;
    });
    DefectReport report;
    report.check = "induced";
    report.family = "induced(" + t.name() + ") vs " + a.name();
    report.parameters = a.parameters();
    report.parameters["window"] = window.to_string();
    report.cases = keys.size() * probes.size();
    for (auto& row : rows)
        for (auto& e : row) report.entries.push_back(std::move(e));
    report.sort_entries();
    return report;
}

TriAction pullback_candidate(const LieAction& a) {
    if (std::holds_alternative<LieAction::Induced>(a.kind()))
        throw ConfigError("pullback_candidate expects Psi or Phi, got " + a.name());
    return TriAction::pullback(a);
}

// ---------------------------------------------------------------------------
// Weights

bool WeightReport::intermediate_series() const {
    return std::all_of(rows.begin(), rows.end(), [](const WeightRow& r) { return r.multiplicity == 1; });
}

WeightReport weight_report(const TriAction& a, const std::vector<WeightKey>& keys) {
    WeightReport report;
    for (const auto& key : keys) {
        ModVec image = tri_apply(a, Lk(0), Mk(0), vec(key));
        Scalar weight;
        if (!image.is_zero()) {
            if (image.size() != 1 || image.begin()->first != key)
                throw NotEigenvector(key.to_string() + " is not an eigenvector of rho(L[0],M[0]) under " + a.name());
            weight = image.begin()->second;
        }
        report.rows.push_back({key, std::move(weight), 0});
    }
    for (auto& row : report.rows)
        row.multiplicity = static_cast<std::size_t>(std::count_if(
            report.rows.begin(), report.rows.end(), [&](const WeightRow& o) { return o.weight == row.weight; }));
    return report;
}

// ---------------------------------------------------------------------------
// Orbits

std::string to_string(OrbitClass c) {
    switch (c) {
    case OrbitClass::TrivialLine: return "trivial line";
    case OrbitClass::InvariantSubspace: return "invariant window subspace";
    case OrbitClass::ContainsInvariantSub: return "indecomposable with irreducible sub (evidence)";
    case OrbitClass::Transitive: return "transitive on window";
    }
    return "?";
}

namespace {

struct Generator {
    std::string label;
    std::function<ModVec(const ModVec&)> apply;
};

std::vector<Generator> generators(const Action& a, const Window& window) {
    std::vector<Generator> gens;
    if (const auto* t = std::get_if<TriAction>(&a)) {
        for (const auto& g : generator_pairs(window))
            gens.push_back({"rho" + g.to_string().substr(2),
                            [t, g](const ModVec& v) { return tri_apply(*t, g.first, g.second, v); }});
    } else {
        const auto& lie = std::get<LieAction>(a);
        for (const auto& k : pqxz_keys(window))
            gens.push_back({k.to_string(), [&lie, k](const ModVec& v) { return lie_apply(lie, k, v); }});
    }
    return gens;
}

std::string keys_text(const std::vector<WeightKey>& keys) {
    std::string s;
    for (const auto& k : keys) s += (s.empty() ? "" : ", ") + k.to_string();
    return s;
}

}  // namespace

std::string OrbitReport::summary() const {
    switch (kind) {
    case OrbitClass::TrivialLine: return "trivial line";
    case OrbitClass::InvariantSubspace: return "invariant: misses " + keys_text(missed);
    case OrbitClass::ContainsInvariantSub:
        return "indecomposable evidence: reaches all of window; " + keys_text(non_returning) + " never return to " +
               start.to_string();
    case OrbitClass::Transitive: return "transitive on window";
    }
    return "?";
}

OrbitReport orbit_probe(const Action& a, const WeightKey& start, const Window& window) {
    if (!window.contains(start.offset()))
        throw ConfigError("start " + start.to_string() + " lies outside the key window " + window.to_string());
    OrbitReport report{start, {}, {}, {}, {}, {}, 0, OrbitClass::Transitive};
    for (auto m : window.values()) report.keys.push_back(start.shifted(m - start.offset()));
    const std::size_t n = report.keys.size();
    auto index_of = [&](const WeightKey& k) -> std::optional<std::size_t> {
        if (!k.same_coset(start) || !window.contains(k.offset())) return std::nullopt;
        return static_cast<std::size_t>(k.offset() - window.lo);
    };

    const auto gens = generators(a, window);
    report.generator_count = gens.size();
    std::vector<std::set<std::size_t>> edges(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& g : gens) {
            ModVec image = g.apply(vec(report.keys[i]));
            if (report.keys[i] == start && image.is_zero()) report.annihilators.push_back(g.label);
            for (const auto& [k, c] : image)
                if (auto j = index_of(k)) edges[i].insert(*j);
        }
    }
    auto reach_from = [&](std::size_t s) {
        std::vector<bool> seen(n, false);
        std::deque<std::size_t> queue{s};
        seen[s] = true;
        while (!queue.empty()) {
            auto i = queue.front();
            queue.pop_front();
            for (auto j : edges[i])
                if (!seen[j]) {
                    seen[j] = true;
                    queue.push_back(j);
                }
        }
        return seen;
    };

    const std::size_t s0 = *index_of(start);
    const auto from_start = reach_from(s0);
    for (std::size_t i = 0; i < n; ++i) (from_start[i] ? report.reached : report.missed).push_back(report.keys[i]);
    for (std::size_t i = 0; i < n; ++i)
        if (from_start[i] && i != s0 && !reach_from(i)[s0]) report.non_returning.push_back(report.keys[i]);

    if (report.annihilators.size() == gens.size())
        report.kind = OrbitClass::TrivialLine;
    else if (!report.missed.empty())
        report.kind = OrbitClass::InvariantSubspace;
    else if (!report.non_returning.empty())
        report.kind = OrbitClass::ContainsInvariantSub;
    else
        report.kind = OrbitClass::Transitive;
    return report;
}

// ---------------------------------------------------------------------------

PullbackCounterexample counterexample_phi(const Scalar& mu) {
    const TriAction rho = pullback_candidate(LieAction::phi(mu));
    const BasisKey x1 = Lk(4), x2 = Lk(3), x3 = Mk(2), x4 = Mk(1);
    const ModVec v0 = vec(WeightKey::rational(0));
    PullbackCounterexample out;
    out.lhs = tri_apply(rho, bracket_basis(x1, x2, x3), elem(x4), v0);
    out.rhs = tri_apply(rho, x1, x2, tri_apply(rho, x3, x4, v0));
    out.rhs += tri_apply(rho, x2, x3, tri_apply(rho, x1, x4, v0));
    out.rhs += tri_apply(rho, x3, x1, tri_apply(rho, x2, x4, v0));
    out.defect = out.lhs - out.rhs;
    return out;
}

}  // namespace trilie
