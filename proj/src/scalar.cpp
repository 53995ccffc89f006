#include "trilie/scalar.hpp"

#include <algorithm>
#include <sstream>

#include "trilie/errors.hpp"

namespace trilie {

std::string Indeterminate::name() const {
    if (id_ == 0) return "lam";
    if (id_ == 1) return "mu";
    return "a" + std::to_string(id_ - 2);
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(Indeterminate x, std::uint32_t exponent) {
    if (exponent > kMaxExponent)
        throw ExponentOverflow("exponent " + std::to_string(exponent) + " exceeds 2^16 - 1");
    if (exponent > 0) factors_.emplace_back(x, exponent);
}

std::uint32_t Monomial::degree() const {
    std::uint32_t d = 0;
    for (const auto& [x, e] : factors_) d += e;
    return d;
}

std::uint32_t Monomial::exponent(Indeterminate x) const {
    for (const auto& [y, e] : factors_)
        if (y == x) return e;
    return 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto i = a.factors_.begin(), j = b.factors_.begin();
    while (i != a.factors_.end() || j != b.factors_.end()) {
        if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
            out.factors_.push_back(*i++);
        } else if (i == a.factors_.end() || j->first < i->first) {
            out.factors_.push_back(*j++);
        } else {
            std::uint32_t e = i->second + j->second;
            if (e > kMaxExponent)
                throw ExponentOverflow("exponent of " + i->first.name() + " exceeds 2^16 - 1");
            out.factors_.emplace_back(i->first, e);
            ++i;
            ++j;
        }
    }
    return out;
}

bool Monomial::divisible_by(const Monomial& d) const {
    for (const auto& [x, e] : d.factors_)
        if (exponent(x) < e) return false;
    return true;
}

Monomial Monomial::divided_by(const Monomial& d) const {
    Monomial out;
    for (const auto& [x, e] : factors_) {
        std::uint32_t r = e - d.exponent(x);
        if (r > 0) out.factors_.emplace_back(x, r);
    }
    return out;
}

std::string Monomial::to_string() const {
    std::string s;
    for (const auto& [x, e] : factors_) {
        if (!s.empty()) s += '*';
        s += x.name();
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

std::strong_ordering grlex(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    auto i = fa.begin(), j = fb.begin();
    while (i != fa.end() || j != fb.end()) {
        // The lowest variable id present decides; the side lacking it is smaller.
        if (j == fb.end() || (i != fa.end() && i->first < j->first)) return std::strong_ordering::greater;
        if (i == fa.end() || j->first < i->first) return std::strong_ordering::less;
        if (auto c = i->second <=> j->second; c != 0) return c;
        ++i;
        ++j;
    }
    return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(const Rational& c) {
    if (!c.is_zero()) terms_.push_back({Monomial(), c});
}

Scalar::Scalar(Indeterminate x) { terms_.push_back({Monomial(x), Rational(1)}); }

Scalar::Scalar(const Rational& c, Monomial m) {
    if (!c.is_zero()) terms_.push_back({std::move(m), c});
}

Scalar Scalar::from_sorted(std::vector<Term> terms) {
    Scalar s;
    s.terms_ = std::move(terms);
    return s;
}

bool Scalar::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

std::optional<Rational> Scalar::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && terms_[0].monomial.is_one()) return terms_[0].coeff;
    return std::nullopt;
}

std::uint32_t Scalar::degree() const { return terms_.empty() ? 0 : terms_.front().monomial.degree(); }

bool Scalar::mentions(Indeterminate x) const {
    return std::any_of(terms_.begin(), terms_.end(), [x](const Term& t) { return t.monomial.exponent(x) > 0; });
}

Scalar Scalar::operator-() const {
    Scalar out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

namespace {

std::vector<Scalar::Term> merge_terms(const std::vector<Scalar::Term>& a, const std::vector<Scalar::Term>& b,
                                      bool negate_b) {
    std::vector<Scalar::Term> out;
    out.reserve(a.size() + b.size());
    auto i = a.begin(), j = b.begin();
    auto push_b = [&](const Scalar::Term& t) {
        out.push_back(negate_b ? Scalar::Term{t.monomial, -t.coeff} : t);
    };
    while (i != a.end() && j != b.end()) {
        auto c = grlex(i->monomial, j->monomial);
        if (c > 0) {
            out.push_back(*i++);
        } else if (c < 0) {
            push_b(*j++);
        } else {
            Rational sum = negate_b ? i->coeff - j->coeff : i->coeff + j->coeff;
            if (!sum.is_zero()) out.push_back({i->monomial, std::move(sum)});
            ++i;
            ++j;
        }
    }
    for (; i != a.end(); ++i) out.push_back(*i);
    for (; j != b.end(); ++j) push_b(*j);
    return out;
}

}  // namespace

Scalar& Scalar::operator+=(const Scalar& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) return *this = o;
    terms_ = merge_terms(terms_, o.terms_, false);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    if (o.terms_.empty()) return *this;
    terms_ = merge_terms(terms_, o.terms_, true);
    return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.terms_.empty() || b.terms_.empty()) return {};
    if (b.is_constant()) {
        const Rational& c = b.terms_[0].coeff;
        if (c.is_one()) return a;
        Scalar out = a;
        for (auto& t : out.terms_) t.coeff *= c;
        return out;
    }
    if (a.is_constant()) return b * a;
    std::map<Monomial, Rational, GrlexGreater> acc;
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_) {
            auto [it, inserted] = acc.try_emplace(s.monomial * t.monomial, s.coeff * t.coeff);
            if (!inserted) it->second += s.coeff * t.coeff;
        }
    std::vector<Scalar::Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) terms.push_back({m, c});
    return Scalar::from_sorted(std::move(terms));
}

Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }

Scalar Scalar::pow(std::uint32_t n) const {
    Scalar result(1);
    Scalar base = *this;
    while (n > 0) {
        if (n & 1u) result *= base;
        n >>= 1;
        if (n > 0) base *= base;
    }
    return result;
}

std::pair<Rational, Scalar> Scalar::content() const {
    if (terms_.empty()) return {Rational(0), Scalar()};
    mpz_class g(0), l(1);
    for (const auto& t : terms_) {
        mpz_class n = t.coeff.numerator();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        mpz_class d = t.coeff.denominator();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    Rational c(mpq_class(g, l));
    if (terms_.front().coeff.sign() < 0) c = -c;
    Scalar primitive = *this;
    for (auto& t : primitive.terms_) t.coeff /= c;
    return {c, primitive};
}

std::string Scalar::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        if (first) {
            if (c.sign() < 0) {
                os << '-';
                c = -c;
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            c = c.abs();
        }
        if (t.monomial.is_one()) {
            os << c;
        } else {
            if (!c.is_one()) os << c << '*';
            os << t.monomial.to_string();
        }
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------

Scalar eval(const Scalar& a, const Assignment& assignment) {
    if (assignment.empty()) return a;
    Scalar out;
    for (const auto& t : a.terms()) {
        Rational c = t.coeff;
        Monomial rest;
        for (const auto& [x, e] : t.monomial.factors()) {
            auto it = assignment.find(x);
            if (it == assignment.end()) {
                rest = rest * Monomial(x, e);
            } else {
                for (std::uint32_t k = 0; k < e; ++k) c *= it->second;
            }
        }
        out += Scalar(c, std::move(rest));
    }
    return out;
}

std::optional<Scalar> exact_quotient(const Scalar& a, const Scalar& d) {
    if (d.is_zero()) throw ZeroDivisor();
    const auto& lead = d.terms().front();
    Scalar rem = a;
    Scalar quotient;
    // Single-divisor division: a multiple of d always has its leading
    // monomial divisible by lt(d), so a stuck step proves non-divisibility.
    while (!rem.is_zero()) {
        const auto& lt = rem.terms().front();
        if (!lt.monomial.divisible_by(lead.monomial)) return std::nullopt;
        Scalar step(lt.coeff / lead.coeff, lt.monomial.divided_by(lead.monomial));
        quotient += step;
        rem -= step * d;
    }
    return quotient;
}

}  // namespace trilie
