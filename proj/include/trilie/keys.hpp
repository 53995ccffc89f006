#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "trilie/lincomb.hpp"
#include "trilie/scalar.hpp"

namespace trilie {

/// Indices of L_r, M_r, p_r, ... and weight offsets stay within +-2^40, so
/// composite index arithmetic such as r + s - t never overflows int64.
inline constexpr std::int64_t kIndexBound = std::int64_t{1} << 40;

/// Returns v, or throws IndexOverflow when |v| > kIndexBound.
std::int64_t checked_index(std::int64_t v);

enum class Kind : std::uint8_t { L, M };

/// Basis vector L_r or M_r of the 3-Lie algebra. Ordered L before M, then by
/// ascending index.
struct BasisKey {
    Kind kind;
    std::int64_t index;

    BasisKey(Kind k, std::int64_t r) : kind(k), index(checked_index(r)) {}

    friend bool operator==(const BasisKey&, const BasisKey&) = default;
    friend auto operator<=>(const BasisKey&, const BasisKey&) = default;

    std::string to_string() const;
};

inline BasisKey Lk(std::int64_t r) { return {Kind::L, r}; }
inline BasisKey Mk(std::int64_t r) { return {Kind::M, r}; }

enum class Family : std::uint8_t { P, Q, X, Z };

/// Basis element p_r, q_r, x_r or z_r of the inner derivation algebra.
struct PqxzKey {
    Family family;
    std::int64_t index;

    PqxzKey(Family f, std::int64_t r) : family(f), index(checked_index(r)) {}

    friend bool operator==(const PqxzKey&, const PqxzKey&) = default;
    friend auto operator<=>(const PqxzKey&, const PqxzKey&) = default;

    std::string to_string() const;
};

/// Canonically ordered generator pair (first < second) of ad(first, second).
struct GenPair {
    BasisKey first;
    BasisKey second;

    friend bool operator==(const GenPair&, const GenPair&) = default;
    friend auto operator<=>(const GenPair&, const GenPair&) = default;

    std::string to_string() const;
};

/// Weight vector label v_alpha with alpha = tag + offset. A rational tag is
/// normalized into [0, 1) so that v_{alpha+m} keys unify exactly when they
/// share a Z-coset. A symbolic tag is generic: alpha is never an integer and
/// never satisfies an integrality condition.
class WeightKey {
public:
    using Tag = std::variant<Rational, Indeterminate>;

    /// v_value for a rational weight.
    static WeightKey rational(const Rational& value);
    /// v_{tag+offset} for the generic weight tag a_k.
    static WeightKey generic(Indeterminate tag, std::int64_t offset = 0);

    const Tag& tag() const { return tag_; }
    std::int64_t offset() const { return offset_; }
    bool is_generic() const { return std::holds_alternative<Indeterminate>(tag_); }
    /// alpha == 0 exactly (only possible for rational tag 0, offset 0).
    bool is_zero_weight() const;
    /// alpha as a Scalar (tag indeterminate plus offset, or the rational).
    Scalar alpha() const;
    /// Key of v_{alpha + d}. Throws IndexOverflow.
    WeightKey shifted(std::int64_t d) const;
    bool same_coset(const WeightKey& o) const { return tag_ == o.tag_; }

    friend bool operator==(const WeightKey&, const WeightKey&) = default;
    friend std::strong_ordering operator<=>(const WeightKey& a, const WeightKey& b);

    /// "v[-1/2]", "v[0]", "v[a0]", "v[a0+3]", "v[a0-1]".
    std::string to_string() const;
    /// The same without the "v[...]" wrapper.
    std::string label() const;

private:
    WeightKey(Tag tag, std::int64_t offset) : tag_(std::move(tag)), offset_(offset) {}
    Tag tag_;
    std::int64_t offset_;
};

/// Element of the 3-Lie algebra.
using AlgElem = LinComb<BasisKey, Scalar>;
/// Element of the module space V.
using ModVec = LinComb<WeightKey, Scalar>;
/// Inner derivation as a formal combination of ad(u, v) generators.
using DerivExpr = LinComb<GenPair, Rational>;
/// Inner derivation in the p/q/x/z basis.
using PqxzElem = LinComb<PqxzKey, Rational>;

inline AlgElem elem(const BasisKey& k, Scalar c = Scalar(1)) { return AlgElem(k, std::move(c)); }
inline ModVec vec(const WeightKey& k, Scalar c = Scalar(1)) { return ModVec(k, std::move(c)); }
inline PqxzElem pqxz(Family f, std::int64_t r, Rational c = Rational(1)) { return PqxzElem(PqxzKey(f, r), std::move(c)); }

/// "L[1] + 2 M[-3]", "(lam + 1) L[0]", "-1 z[-3]", "0". Parseable by the
/// matching parse_* functions.
std::string format(const AlgElem& x);
std::string format(const ModVec& v);
std::string format(const DerivExpr& d);
std::string format(const PqxzElem& p);

}  // namespace trilie
