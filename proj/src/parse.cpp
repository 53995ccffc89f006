#include "trilie/parse.hpp"

#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "trilie/derivations.hpp"
#include "trilie/errors.hpp"

namespace trilie {

namespace {

std::string describe(const std::vector<std::string>& expected, const std::string& found) {
    std::string msg = "expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i) msg += i + 1 == expected.size() ? " or " : ", ";
        msg += expected[i];
    }
    return msg + ", found " + found;
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& found)
    : Error("parse error at offset " + std::to_string(offset) + ": " + describe(expected, found)),
      offset_(offset),
      expected_(std::move(expected)) {}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool starts_with(std::string_view word) {
        skip_ws();
        return text_.substr(pos_).starts_with(word);
    }

    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    [[noreturn]] void fail(std::vector<std::string> expected) {
        skip_ws();
        std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
        throw ParseError(pos_, std::move(expected), found);
    }

    void expect(char c) {
        if (!accept(c)) fail({std::string("'") + c + "'"});
    }

    void finish() {
        if (peek() != '\0') fail({"end of input"});
    }

    std::size_t pos() {
        skip_ws();
        return pos_;
    }

    std::string digits() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail({"digits"});
        return std::string(text_.substr(start, pos_ - start));
    }

    std::int64_t signed_int() {
        bool negative = false;
        if (accept('-'))
            negative = true;
        else
            accept('+');
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail({"integer"});
        Rational v = Rational::parse(digits());
        return (negative ? -v : v).to_int64();
    }

    Rational rational_literal() {
        std::string num = digits();
        if (accept('/')) {
            std::string den = digits();
            return Rational::parse(num + "/" + den);
        }
        return Rational::parse(num);
    }

    static bool is_atom_start(char c) {
        return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'l' || c == 'm' || c == 'a';
    }

    Scalar atom() {
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return Scalar(rational_literal());
        if (accept('(')) {
            Scalar s = sum();
            expect(')');
            return s;
        }
        if (starts_with("lam")) {
            pos_ += 3;
            return Scalar::lambda();
        }
        if (starts_with("mu")) {
            pos_ += 2;
            return Scalar::mu();
        }
        if (c == 'a' && pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
            ++pos_;
            return Scalar(Indeterminate::tag(tag_number()));
        }
        fail({"number", "'lam'", "'mu'", "'a<k>'", "'('"});
    }

    std::uint32_t tag_number() {
        std::string d = digits();
        if (d.size() > 6) throw ConfigError("symbol tag a" + d + " is out of range");
        return static_cast<std::uint32_t>(std::stoul(d));
    }

    Scalar power() {
        Scalar base = atom();
        if (accept('^')) {
            const std::size_t at = pos();
            std::string d = digits();
            if (d.size() > 9 || std::stoul(d) > kMaxExponent)
                throw ExponentOverflow("exponent " + d + " at offset " + std::to_string(at) + " exceeds " +
                                       std::to_string(kMaxExponent));
            base = base.pow(static_cast<std::uint32_t>(std::stoul(d)));
        }
        return base;
    }

    Scalar product() {
        Scalar s = power();
        while (peek() == '*' && atom_ahead(pos_ + 1)) {
            ++pos_;
            s *= power();
        }
        return s;
    }

    Scalar sum() {
        Scalar s;
        if (accept('-'))
            s = -product();
        else {
            accept('+');
            s = product();
        }
        for (;;) {
            if (accept('+'))
                s += product();
            else if (accept('-'))
                s -= product();
            else
                return s;
        }
    }

    bool at_basis() {
        const char c = peek();
        return (c == 'L' || c == 'M') && pos_ + 1 < text_.size() && next_non_ws(pos_ + 1) == '[';
    }

    bool atom_ahead(std::size_t i) const {
        while (i < text_.size() && std::isspace(static_cast<unsigned char>(text_[i]))) ++i;
        if (i >= text_.size()) return false;
        const char c = text_[i];
        if (c == 'a') return i + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i + 1]));
        return is_atom_start(c);
    }

    char next_non_ws(std::size_t i) const {
        while (i < text_.size() && std::isspace(static_cast<unsigned char>(text_[i]))) ++i;
        return i < text_.size() ? text_[i] : '\0';
    }

    BasisKey basis() {
        const char c = peek();
        if (c != 'L' && c != 'M') fail({"'L'", "'M'"});
        ++pos_;
        expect('[');
        std::int64_t r = signed_int();
        expect(']');
        return BasisKey(c == 'L' ? Kind::L : Kind::M, r);
    }

    AlgElem elem_term() {
        Scalar c(1);
        if (!at_basis()) {
            if (!is_atom_start(peek())) fail({"'L'", "'M'", "scalar"});
            c = product();
            accept('*');
        }
        return elem(basis(), std::move(c));
    }

    AlgElem elem_sum() {
        AlgElem out;
        if (accept('-'))
            out -= elem_term();
        else {
            accept('+');
            out += elem_term();
        }
        for (;;) {
            if (accept('+'))
                out += elem_term();
            else if (accept('-'))
                out -= elem_term();
            else
                return out;
        }
    }

    Rational rational_prefix() {
        const std::size_t at = pos();
        Scalar s = product();
        auto v = s.constant_value();
        if (!v) throw ParseError(at, {"rational scalar"}, "'" + s.to_string() + "'");
        accept('*');
        return *v;
    }

    static DerivExpr expand_ad(const AlgElem& u, const AlgElem& v, std::size_t at) {
        DerivExpr out;
        for (const auto& [ku, cu] : u)
            for (const auto& [kv, cv] : v) {
                auto c = (cu * cv).constant_value();
                if (!c) throw ParseError(at, {"rational scalar"}, "'" + (cu * cv).to_string() + "'");
                out.add_scaled(ad(ku, kv), *c);
            }
        return out;
    }

    void deriv_term(DerivInput& into, const Rational& sign) {
        Rational c = sign;
        const char ch = peek();
        const bool at_family = (ch == 'p' || ch == 'q' || ch == 'x' || ch == 'z') && next_non_ws(pos_ + 1) == '[';
        if (!starts_with("ad") && !at_family) {
            if (!is_atom_start(ch)) fail({"'ad'", "'p'", "'q'", "'x'", "'z'", "rational scalar"});
            c *= rational_prefix();
        }
        if (starts_with("ad")) {
            pos_ += 2;
            expect('(');
            const std::size_t at = pos();
            AlgElem u = elem_sum();
            expect(',');
            AlgElem v = elem_sum();
            expect(')');
            into.generators.add_scaled(expand_ad(u, v, at), c);
            return;
        }
        const char f = peek();
        Family family;
        switch (f) {
        case 'p': family = Family::P; break;
        case 'q': family = Family::Q; break;
        case 'x': family = Family::X; break;
        case 'z': family = Family::Z; break;
        default: fail({"'ad'", "'p'", "'q'", "'x'", "'z'"});
        }
        ++pos_;
        expect('[');
        std::int64_t r = signed_int();
        expect(']');
        into.basis.add(PqxzKey(family, r), c);
    }

    DerivInput deriv_sum() {
        DerivInput out;
        if (accept('-'))
            deriv_term(out, Rational(-1));
        else {
            accept('+');
            deriv_term(out, Rational(1));
        }
        for (;;) {
            if (accept('+'))
                deriv_term(out, Rational(1));
            else if (accept('-'))
                deriv_term(out, Rational(-1));
            else
                return out;
        }
    }

    WeightKey weight_key() {
        const bool wrapped = accept('v');
        if (wrapped) expect('[');
        WeightKey key = WeightKey::rational(0);
        if (accept('a')) {
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail({"digits"});
            const auto tag = Indeterminate::tag(tag_number());
            std::int64_t offset = 0;
            if (peek() == '+' || peek() == '-') offset = signed_int();
            key = WeightKey::generic(tag, offset);
        } else {
            bool negative = accept('-');
            if (!negative) accept('+');
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail({"rational", "'a<k>'"});
            Rational v = rational_literal();
            key = WeightKey::rational(negative ? -v : v);
        }
        if (wrapped) expect(']');
        return key;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text) {
    Parser p(text);
    Scalar s = p.sum();
    p.finish();
    return s;
}

AlgElem parse_elem(std::string_view text) {
    Parser p(text);
    AlgElem x = p.elem_sum();
    p.finish();
    return x;
}

DerivInput parse_deriv(std::string_view text) {
    Parser p(text);
    DerivInput d = p.deriv_sum();
    p.finish();
    return d;
}

WeightKey parse_weight_key(std::string_view text) {
    Parser p(text);
    WeightKey k = p.weight_key();
    p.finish();
    return k;
}

}  // namespace trilie
