#pragma once

#include <map>
#include <utility>

namespace trilie {

/// Finitely supported linear combination sum_k c_k * k. Zero coefficients
/// are never stored, so the empty map is the zero vector and structural
/// equality is equality of vectors. Keys iterate in their natural order.
template <class Key, class Coeff>
class LinComb {
public:
    using key_type = Key;
    using coeff_type = Coeff;
    using map_type = std::map<Key, Coeff>;

    LinComb() = default;
    explicit LinComb(const Key& k, Coeff c = Coeff(1)) { add(k, std::move(c)); }

    static LinComb from_terms(std::initializer_list<std::pair<Key, Coeff>> terms) {
        LinComb out;
        for (const auto& [k, c] : terms) out.add(k, c);
        return out;
    }

    const map_type& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    /// Coefficient of k (zero when absent).
    Coeff coeff(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Coeff() : it->second;
    }

    /// Adds c * k.
    void add(const Key& k, const Coeff& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// Adds s * o.
    template <class S>
    void add_scaled(const LinComb& o, const S& s) {
        if (s.is_zero()) return;
        for (const auto& [k, c] : o.terms_) add(k, c * s);
    }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    LinComb operator-() const {
        LinComb out = *this;
        for (auto& [k, c] : out.terms_) c = -c;
        return out;
    }
    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }

    template <class S>
    LinComb scaled(const S& s) const {
        LinComb out;
        out.add_scaled(*this, s);
        return out;
    }

    friend bool operator==(const LinComb&, const LinComb&) = default;

private:
    map_type terms_;
};

}  // namespace trilie
