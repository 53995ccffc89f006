#include "trilie/keys.hpp"

#include <sstream>

#include "trilie/errors.hpp"

namespace trilie {

std::int64_t checked_index(std::int64_t v) {
    if (v > kIndexBound || v < -kIndexBound)
        throw IndexOverflow("index " + std::to_string(v) + " outside +-2^40");
    return v;
}

std::string BasisKey::to_string() const {
    return std::string(kind == Kind::L ? "L" : "M") + "[" + std::to_string(index) + "]";
}

std::string PqxzKey::to_string() const {
    static constexpr char kNames[] = {'p', 'q', 'x', 'z'};
    return std::string(1, kNames[static_cast<int>(family)]) + "[" + std::to_string(index) + "]";
}

std::string GenPair::to_string() const { return "ad(" + first.to_string() + "," + second.to_string() + ")"; }

// ---------------------------------------------------------------------------
// WeightKey

WeightKey WeightKey::rational(const Rational& value) {
    Rational whole = value.floor();
    return WeightKey(value - whole, checked_index(whole.to_int64()));
}

WeightKey WeightKey::generic(Indeterminate tag, std::int64_t offset) {
    if (!tag.is_tag()) throw ConfigError("weight tags must be a0, a1, ...; got " + tag.name());
    return WeightKey(tag, checked_index(offset));
}

bool WeightKey::is_zero_weight() const {
    const auto* r = std::get_if<Rational>(&tag_);
    return r != nullptr && r->is_zero() && offset_ == 0;
}

Scalar WeightKey::alpha() const {
    if (const auto* r = std::get_if<Rational>(&tag_)) return Scalar(*r + Rational(offset_));
    return Scalar(std::get<Indeterminate>(tag_)) + Scalar(offset_);
}

WeightKey WeightKey::shifted(std::int64_t d) const { return WeightKey(tag_, checked_index(offset_ + d)); }

std::strong_ordering operator<=>(const WeightKey& a, const WeightKey& b) {
    if (auto c = a.tag_.index() <=> b.tag_.index(); c != 0) return c;
    if (const auto* ra = std::get_if<Rational>(&a.tag_)) {
        if (auto c = *ra <=> std::get<Rational>(b.tag_); c != 0) return c;
    } else {
        if (auto c = std::get<Indeterminate>(a.tag_) <=> std::get<Indeterminate>(b.tag_); c != 0) return c;
    }
    return a.offset_ <=> b.offset_;
}

std::string WeightKey::label() const {
    if (const auto* r = std::get_if<Rational>(&tag_)) return (*r + Rational(offset_)).to_string();
    std::string s = std::get<Indeterminate>(tag_).name();
    if (offset_ > 0) s += "+" + std::to_string(offset_);
    if (offset_ < 0) s += std::to_string(offset_);
    return s;
}

std::string WeightKey::to_string() const { return "v[" + label() + "]"; }

// ---------------------------------------------------------------------------
// Linear combination formatting

namespace {

std::string key_text(const BasisKey& k) { return k.to_string(); }
std::string key_text(const WeightKey& k) { return k.to_string(); }
std::string key_text(const GenPair& k) { return k.to_string(); }
std::string key_text(const PqxzKey& k) { return k.to_string(); }

/// Coefficient text in front of a key; empty for 1.
std::string coeff_prefix(const Scalar& c) {
    if (c == Scalar(1)) return "";
    if (c.terms().size() > 1) return "(" + c.to_string() + ") ";
    return c.to_string() + " ";
}

template <class LC>
std::string format_lincomb(const LC& x) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, coeff] : x) {
        Scalar c(coeff);
        if (!first) {
            bool single = c.terms().size() == 1;
            if (single && c.terms().front().coeff.sign() < 0) {
                os << " - ";
                c = -c;
            } else {
                os << " + ";
            }
        }
        os << coeff_prefix(c) << key_text(k);
        first = false;
    }
    return os.str();
}

}  // namespace

std::string format(const AlgElem& x) { return format_lincomb(x); }
std::string format(const ModVec& v) { return format_lincomb(v); }
std::string format(const DerivExpr& d) { return format_lincomb(d); }
std::string format(const PqxzElem& p) { return format_lincomb(p); }

}  // namespace trilie
