#include "trilie/derivations.hpp"

#include <map>

#include "trilie/errors.hpp"
#include "trilie/parallel.hpp"

namespace trilie {

DerivExpr ad(const BasisKey& u, const BasisKey& v) {
    if (u == v) return {};
    if (u < v) return DerivExpr(GenPair{u, v}, Rational(1));
    return DerivExpr(GenPair{v, u}, Rational(-1));
}

AlgElem ad_apply(const DerivExpr& d, const AlgElem& x) {
    AlgElem out;
    for (const auto& [g, c] : d)
        for (const auto& [k, ck] : x) out.add_scaled(bracket_basis(g.first, g.second, k), ck * Scalar(c));
    return out;
}

DerivExpr pqxz_to_deriv(const PqxzKey& k) {
    const std::int64_t r = k.index;
    DerivExpr out;
    auto put = [&](const BasisKey& u, const BasisKey& v, const Rational& c) { out.add_scaled(ad(u, v), c); };
    switch (k.family) {
    case Family::P:
        if (r == 0) {
            put(Lk(0), Mk(0), 1);
        } else {
            put(Lk(0), Mk(-r), Rational(1, 2));
            put(Lk(r), Mk(0), Rational(1, 2));
        }
        break;
    case Family::Q:
        if (r == 0) {
            put(Lk(0), Mk(0), 1);
            put(Lk(1), Mk(1), -1);
        } else {
            put(Lk(0), Mk(-r), Rational(1, r));
            put(Lk(r), Mk(0), Rational(-1, r));
        }
        break;
    case Family::X:
        if (r == 0)
            put(Lk(1), Lk(-1), Rational(1, 2));
        else
            put(Lk(r), Lk(0), Rational(1, r));
        break;
    case Family::Z:
        if (r == 0)
            put(Mk(1), Mk(-1), Rational(1, 2));
        else
            put(Mk(-r), Mk(0), Rational(-1, r));
        break;
    }
    return out;
}

DerivExpr pqxz_to_deriv(const PqxzElem& b) {
    DerivExpr out;
    for (const auto& [k, c] : b) out.add_scaled(pqxz_to_deriv(k), c);
    return out;
}

PqxzElem deriv_to_pqxz(const DerivExpr& d) {
    PqxzElem out;
    for (const auto& [g, c] : d) {
        const std::int64_t r = g.first.index, s = g.second.index;
        if (g.first.kind == Kind::L && g.second.kind == Kind::M) {
            out.add(PqxzKey(Family::P, r - s), c);
            out.add(PqxzKey(Family::Q, r - s), -c * Rational(r + s, 2));
        } else if (g.first.kind == Kind::L) {
            out.add(PqxzKey(Family::X, r + s), c * Rational(r - s));
        } else {
            out.add(PqxzKey(Family::Z, -(r + s)), c * Rational(r - s));
        }
    }
    return out;
}

AlgElem pqxz_apply(const PqxzKey& key, const AlgElem& x) {
    const std::int64_t k = key.index;
    AlgElem out;
    for (const auto& [b, c] : x) {
        const std::int64_t t = b.index;
        const bool is_l = b.kind == Kind::L;
        switch (key.family) {
        case Family::P:
            if (is_l)
                out.add(Lk(t + k), c * Scalar(Rational(k, 2) - Rational(t)));
            else
                out.add(Mk(t - k), c * Scalar(Rational(t) + Rational(k, 2)));
            break;
        case Family::Q:
            if (is_l)
                out.add(Lk(t + k), -c);
            else
                out.add(Mk(t - k), c);
            break;
        case Family::X:
            if (!is_l) out.add(Lk(k - t), -c);
            break;
        case Family::Z:
            if (is_l) out.add(Mk(-k - t), -c);
            break;
        }
    }
    return out;
}

AlgElem pqxz_apply(const PqxzElem& b, const AlgElem& x) {
    AlgElem out;
    for (const auto& [k, c] : b) out.add_scaled(pqxz_apply(k, x), Scalar(c));
    return out;
}

PqxzElem pqxz_bracket_table(const PqxzKey& a, const PqxzKey& b) {
    const std::int64_t r = a.index, s = b.index;
    auto term = [&](Family f, const Rational& c) { return pqxz(f, r + s, c); };
    using F = Family;
    switch (a.family) {
    case F::P:
        switch (b.family) {
        case F::P: return term(F::P, Rational(r - s));
        case F::Q: return term(F::Q, Rational(-s));
        case F::X: return term(F::X, Rational(-s));
        case F::Z: return term(F::Z, Rational(-s));
        }
        break;
    case F::Q:
        switch (b.family) {
        case F::P: return term(F::Q, Rational(r));
        case F::Q: return {};
        case F::X: return term(F::X, Rational(-2));
        case F::Z: return term(F::Z, Rational(2));
        }
        break;
    case F::X:
        switch (b.family) {
        case F::P: return term(F::X, Rational(r));
        case F::Q: return term(F::X, Rational(2));
        case F::X: return {};
        case F::Z: return term(F::Q, Rational(-1));
        }
        break;
    case F::Z:
        switch (b.family) {
        case F::P: return term(F::Z, Rational(r));
        case F::Q: return term(F::Z, Rational(-2));
        case F::X: return term(F::Q, Rational(1));
        case F::Z: return {};
        }
        break;
    }
    return {};
}

PqxzElem pqxz_bracket(const PqxzElem& a, const PqxzElem& b, const PqxzTable& table) {
    PqxzElem out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) out.add_scaled(table(ka, kb), ca * cb);
    return out;
}

bool deriv_equal(const DerivExpr& d1, const DerivExpr& d2, const Window& window) {
    if (window.size() < 3) throw WindowTooSmall("deriv_equal needs a window of at least 3 integers");
    const DerivExpr diff = d1 - d2;
    if (diff.is_zero()) return true;
    for (const auto& k : basis_keys(window))
        if (!ad_apply(diff, elem(k)).is_zero()) return false;
    return true;
}

std::vector<PqxzKey> pqxz_keys(const Window& window) {
    std::vector<PqxzKey> keys;
    for (Family f : {Family::P, Family::Q, Family::X, Family::Z})
        for (auto r : window.values()) keys.emplace_back(f, r);
    return keys;
}

std::vector<GenPair> generator_pairs(const Window& window) {
    auto keys = basis_keys(window);
    std::vector<GenPair> out;
    for (std::size_t i = 0; i < keys.size(); ++i)
        for (std::size_t j = i + 1; j < keys.size(); ++j) out.push_back({keys[i], keys[j]});
    return out;
}

DefectReport check_pqxz_table(const Window& window, const PqxzTable& table, unsigned parallelism) {
    const auto keys = pqxz_keys(window);
    const auto tests = basis_keys(window);
    const std::size_t n = keys.size();
    auto rows = parallel_map(n * n, parallelism, [&](std::size_t idx) {
        const PqxzKey& a = keys[idx / n];
        const PqxzKey& b = keys[idx % n];
        const PqxzElem ab = table(a, b);
        std::vector<DefectEntry> found;
        for (const auto& t : tests) {
            const AlgElem v = elem(t);
            AlgElem d = pqxz_apply(a, pqxz_apply(b, v)) - pqxz_apply(b, pqxz_apply(a, v)) - pqxz_apply(ab, v);
            if (!d.is_zero()) found.push_back({"pqxz-bracket", {a, b, t}, std::nullopt, std::move(d)});
        }
        return found;
    });
    DefectReport report;
    report.check = "pqxz-table";
    report.family = "ad(A_omega^delta)";
    report.parameters["window"] = window.to_string();
    report.cases = n * n * tests.size();
    for (auto& row : rows)
        for (auto& e : row) report.entries.push_back(std::move(e));
    report.sort_entries();
    return report;
}

std::vector<DerivExpr> kernel_relations(std::span<const GenPair> gens) {
    // Row index per p/q/x/z key occurring in some decomposition.
    std::map<PqxzKey, std::size_t> row_of;
    std::vector<PqxzElem> columns;
    for (const auto& g : gens) {
        columns.push_back(deriv_to_pqxz(ad(g.first, g.second)));
        for (const auto& [k, c] : columns.back()) row_of.try_emplace(k, 0);
    }
    std::size_t nrows = 0;
    for (auto& [k, i] : row_of) i = nrows++;
    const std::size_t ncols = gens.size();
    std::vector<std::vector<Rational>> m(nrows, std::vector<Rational>(ncols));
    for (std::size_t j = 0; j < ncols; ++j)
        for (const auto& [k, c] : columns[j]) m[row_of[k]][j] = c;

    // Reduced row echelon form.
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
        std::size_t p = row;
        while (p < nrows && m[p][col].is_zero()) ++p;
        if (p == nrows) continue;
        std::swap(m[p], m[row]);
        const Rational inv = Rational(1) / m[row][col];
        for (auto& v : m[row]) v *= inv;
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            const Rational f = m[i][col];
            for (std::size_t j = col; j < ncols; ++j) m[i][j] -= f * m[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }

    std::vector<bool> is_pivot(ncols, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    std::vector<DerivExpr> relations;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        DerivExpr rel = ad(gens[free].first, gens[free].second);
        for (std::size_t i = 0; i < pivot_col.size(); ++i) {
            const Rational& c = m[i][free];
            if (!c.is_zero()) rel.add_scaled(ad(gens[pivot_col[i]].first, gens[pivot_col[i]].second), -c);
        }
        relations.push_back(std::move(rel));
    }
    return relations;
}

}  // namespace trilie
