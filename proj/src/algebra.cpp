#include "trilie/algebra.hpp"

#include <utility>

#include "trilie/parallel.hpp"

namespace trilie {

AlgElem assoc_mul(const AlgElem& x, const AlgElem& y) {
    AlgElem out;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) {
            if (a.kind != b.kind) continue;
            out.add(BasisKey(a.kind, a.index + b.index), ca * cb);
        }
    return out;
}

AlgElem delta(const AlgElem& x) {
    AlgElem out;
    for (const auto& [k, c] : x) out.add(k, c * Scalar(k.index));
    return out;
}

AlgElem omega(const AlgElem& x) {
    AlgElem out;
    for (const auto& [k, c] : x) out.add(BasisKey(k.kind == Kind::L ? Kind::M : Kind::L, -k.index), c);
    return out;
}

std::optional<SortedTriple> canonical_order(const BasisKey& a, const BasisKey& b, const BasisKey& c) {
    SortedTriple t{1, {a, b, c}};
    auto& k = t.keys;
    // Three-element sorting network with transposition parity.
    auto cmp_swap = [&](int i, int j) {
        if (k[j] < k[i]) {
            std::swap(k[i], k[j]);
            t.sign = -t.sign;
        }
    };
    cmp_swap(0, 1);
    cmp_swap(1, 2);
    cmp_swap(0, 1);
    if (k[0] == k[1] || k[1] == k[2]) return std::nullopt;
    return t;
}

AlgElem table_entry(const std::array<BasisKey, 3>& s) {
    const auto& [x, y, z] = s;
    if (x.kind == Kind::L && y.kind == Kind::L && z.kind == Kind::M)
        return elem(BasisKey(Kind::L, x.index + y.index - z.index), Scalar(y.index - x.index));
    if (x.kind == Kind::L && y.kind == Kind::M && z.kind == Kind::M)
        return elem(BasisKey(Kind::M, y.index + z.index - x.index), Scalar(z.index - y.index));
    return {};
}

AlgElem bracket_basis(const BasisKey& a, const BasisKey& b, const BasisKey& c) {
    auto sorted = canonical_order(a, b, c);
    if (!sorted) return {};
    AlgElem v = table_entry(sorted->keys);
    return sorted->sign > 0 ? v : -v;
}

AlgElem bracket_with(const BasisBracket& table, const AlgElem& x, const AlgElem& y, const AlgElem& z) {
    AlgElem out;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) {
            Scalar cab = ca * cb;
            for (const auto& [c, cc] : z) out.add_scaled(table(a, b, c), cab * cc);
        }
    return out;
}

AlgElem bracket(const AlgElem& x, const AlgElem& y, const AlgElem& z) { return bracket_with(bracket_basis, x, y, z); }

AlgElem bracket_det(const AlgElem& x, const AlgElem& y, const AlgElem& z) {
    AlgElem dx = delta(x), dy = delta(y), dz = delta(z);
    AlgElem m1 = assoc_mul(y, dz) - assoc_mul(z, dy);
    AlgElem m2 = assoc_mul(x, dz) - assoc_mul(z, dx);
    AlgElem m3 = assoc_mul(x, dy) - assoc_mul(y, dx);
    return assoc_mul(omega(x), m1) - assoc_mul(omega(y), m2) + assoc_mul(omega(z), m3);
}

std::vector<BasisKey> basis_keys(const Window& window) {
    std::vector<BasisKey> keys;
    for (Kind kind : {Kind::L, Kind::M})
        for (auto r : window.values()) keys.emplace_back(kind, r);
    return keys;
}

DefectReport check_fundamental(const Window& window, const BasisBracket& table, unsigned parallelism) {
    const auto keys = basis_keys(window);
    const std::size_t n = keys.size();
    auto br = [&](const AlgElem& a, const AlgElem& b, const AlgElem& c) { return bracket_with(table, a, b, c); };

    // One task per (x1, x2) prefix; each scans the n^3 suffixes in order.
    auto rows = parallel_map(n * n, parallelism, [&](std::size_t idx) {
        std::vector<DefectEntry> found;
        const AlgElem x1 = elem(keys[idx / n]), x2 = elem(keys[idx % n]);
        for (std::size_t i3 = 0; i3 < n; ++i3)
            for (std::size_t i4 = 0; i4 < n; ++i4)
                for (std::size_t i5 = 0; i5 < n; ++i5) {
                    const AlgElem x3 = elem(keys[i3]), x4 = elem(keys[i4]), x5 = elem(keys[i5]);
                    AlgElem d = br(x1, x2, br(x3, x4, x5));
                    d -= br(br(x1, x2, x3), x4, x5);
                    d -= br(x3, br(x1, x2, x4), x5);
                    d -= br(x3, x4, br(x1, x2, x5));
                    if (!d.is_zero())
                        found.push_back({"fundamental",
                                         {keys[idx / n], keys[idx % n], keys[i3], keys[i4], keys[i5]},
                                         std::nullopt,
                                         std::move(d)});
                }
        return found;
    });

    DefectReport report;
    report.check = "fundamental-identity";
    report.family = "A_omega^delta";
    report.parameters["window"] = window.to_string();
    report.cases = n * n * n * n * n;
    for (auto& row : rows)
        for (auto& e : row) report.entries.push_back(std::move(e));
    report.sort_entries();
    return report;
}

}  // namespace trilie
