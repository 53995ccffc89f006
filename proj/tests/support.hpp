#pragma once

#include <cstdint>
#include <random>

#include "trilie/keys.hpp"

namespace trilie::testing {

inline Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> num(-9, 9), den(1, 5);
    return Rational(num(rng), den(rng));
}

/// Sparse polynomial in lam, mu and a0 with up to four terms of degree <= 3.
inline Scalar random_scalar(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> terms(0, 4), exp(0, 2);
    Scalar s;
    for (int i = terms(rng); i > 0; --i) {
        Monomial m;
        if (int e = exp(rng)) m = m * Monomial(Indeterminate::lambda(), e);
        if (int e = exp(rng)) m = m * Monomial(Indeterminate::mu(), e);
        if (int e = exp(rng) / 2) m = m * Monomial(Indeterminate::tag(0), e);
        s += Scalar(random_rational(rng), m);
    }
    return s;
}

inline Assignment random_point(std::mt19937_64& rng) {
    return {{Indeterminate::lambda(), random_rational(rng)},
            {Indeterminate::mu(), random_rational(rng)},
            {Indeterminate::tag(0), random_rational(rng)}};
}

inline AlgElem random_elem(std::mt19937_64& rng, int lo = -3, int hi = 3) {
    std::uniform_int_distribution<int> idx(lo, hi), kind(0, 1), terms(1, 3);
    AlgElem x;
    for (int i = terms(rng); i > 0; --i)
        x.add(BasisKey(kind(rng) ? Kind::M : Kind::L, idx(rng)), Scalar(random_rational(rng)));
    return x;
}

}  // namespace trilie::testing
