#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "trilie/rational.hpp"

namespace trilie {

/// A polynomial indeterminate. Ids 0 and 1 are the reserved parameters
/// lambda and mu; ids 2, 3, ... are the weight tags a0, a1, ...
class Indeterminate {
public:
    static constexpr Indeterminate lambda() { return Indeterminate(0); }
    static constexpr Indeterminate mu() { return Indeterminate(1); }
    static constexpr Indeterminate tag(std::uint32_t k) { return Indeterminate(2 + k); }

    constexpr std::uint32_t id() const { return id_; }
    constexpr bool is_tag() const { return id_ >= 2; }
    constexpr std::uint32_t tag_number() const { return id_ - 2; }

    /// "lam", "mu", "a0", "a1", ...
    std::string name() const;

    friend constexpr bool operator==(Indeterminate, Indeterminate) = default;
    friend constexpr auto operator<=>(Indeterminate, Indeterminate) = default;

private:
    constexpr explicit Indeterminate(std::uint32_t id) : id_(id) {}
    std::uint32_t id_;
};

/// Largest exponent any indeterminate may carry.
inline constexpr std::uint32_t kMaxExponent = (1u << 16) - 1;

/// Power product of indeterminates: sorted (variable, exponent) pairs with
/// positive exponents. The empty monomial is 1.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(Indeterminate x, std::uint32_t exponent = 1);

    std::uint32_t degree() const;
    std::uint32_t exponent(Indeterminate x) const;
    bool is_one() const { return factors_.empty(); }
    const std::vector<std::pair<Indeterminate, std::uint32_t>>& factors() const { return factors_; }

    /// Throws ExponentOverflow if an exponent would exceed kMaxExponent.
    friend Monomial operator*(const Monomial& a, const Monomial& b);
    bool divisible_by(const Monomial& d) const;
    /// Requires divisible_by(d).
    Monomial divided_by(const Monomial& d) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

    std::string to_string() const;

private:
    std::vector<std::pair<Indeterminate, std::uint32_t>> factors_;
};

/// Graded lexicographic comparison with lambda > mu > a0 > a1 > ...
std::strong_ordering grlex(const Monomial& a, const Monomial& b);

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex(a, b) > 0; }
};

/// Element of Q[lambda, mu, a0, a1, ...]. Terms are kept in strictly
/// decreasing graded-lex order with nonzero coefficients, so structural
/// equality is mathematical equality.
class Scalar {
public:
    struct Term {
        Monomial monomial;
        Rational coeff;
        friend bool operator==(const Term&, const Term&) = default;
    };

    Scalar() = default;
    Scalar(const Rational& c);  // NOLINT(google-explicit-constructor)
    Scalar(std::int64_t c) : Scalar(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    Scalar(int c) : Scalar(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    explicit Scalar(Indeterminate x);
    Scalar(const Rational& c, Monomial m);

    static Scalar lambda() { return Scalar(Indeterminate::lambda()); }
    static Scalar mu() { return Scalar(Indeterminate::mu()); }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Value of a constant polynomial; nullopt otherwise.
    std::optional<Rational> constant_value() const;
    std::uint32_t degree() const;
    /// True if x occurs in some term.
    bool mentions(Indeterminate x) const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    Scalar pow(std::uint32_t n) const;

    friend bool operator==(const Scalar&, const Scalar&) = default;

    /// Splits off the rational content: *this == c * primitive, with the
    /// primitive part having coprime integer coefficients and a positive
    /// leading coefficient. Zero maps to (0, 0).
    std::pair<Rational, Scalar> content() const;

    /// Canonical text, e.g. "-mu^2 + mu" or "lam + a0 + 3"; parseable by
    /// parse_scalar.
    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

private:
    static Scalar from_sorted(std::vector<Term> terms);
    std::vector<Term> terms_;
};

using Assignment = std::map<Indeterminate, Rational>;

/// Substitutes the assigned indeterminates.
Scalar eval(const Scalar& a, const Assignment& assignment);

/// Quotient q with a == d * q if one exists. Throws ZeroDivisor if d == 0.
std::optional<Scalar> exact_quotient(const Scalar& a, const Scalar& d);

/// True iff d divides a in the polynomial ring. Throws ZeroDivisor if d == 0.
inline bool divides(const Scalar& d, const Scalar& a) { return exact_quotient(a, d).has_value(); }

}  // namespace trilie
