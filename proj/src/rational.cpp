#include "trilie/rational.hpp"

#include "trilie/errors.hpp"

namespace trilie {

namespace {

static_assert(sizeof(long) == sizeof(std::int64_t), "GMP si conversions assume LP64");

mpz_class from_int64(std::int64_t v) { return mpz_class(static_cast<long>(v)); }

}  // namespace

Rational::Rational(std::int64_t value) : value_(from_int64(value)) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw ZeroDivisor();
    value_ = mpq_class(from_int64(num), from_int64(den));
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    mpz_class num, den(1);
    try {
        if (slash == std::string::npos) {
            num = s;
        } else {
            num = s.substr(0, slash);
            den = s.substr(slash + 1);
        }
    } catch (const std::invalid_argument&) {
        throw ParseError(0, {"rational literal"}, s);
    }
    if (den == 0) throw ZeroDivisor();
    mpq_class q(num, den);
    return Rational(std::move(q));
}

Rational Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return Rational(mpq_class(q));
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

std::int64_t Rational::to_int64() const {
    if (!is_integer()) throw IndexOverflow("non-integer value " + to_string());
    const mpz_class& n = value_.get_num();
    if (!n.fits_slong_p()) throw IndexOverflow("integer out of 64-bit range: " + to_string());
    return n.get_si();
}

std::string Rational::to_string() const { return value_.get_str(); }

Rational& Rational::operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ZeroDivisor();
    value_ /= o.value_;
    return *this;
}

}  // namespace trilie
