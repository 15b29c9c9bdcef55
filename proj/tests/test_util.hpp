#pragma once

#include <random>
#include <vector>

#include "chevalley/field.hpp"
#include "chevalley/matrix.hpp"

namespace testutil {

using namespace chevalley;

inline std::mt19937& rng() {
    static std::mt19937 gen(0x5eed);
    return gen;
}

inline Integer random_int(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return Integer(d(rng()));
}

/// Random scalar: residues for F_p, small fractions for Q, small polynomial
/// ratios for F_p(t), coordinate pairs for etale algebras.
inline Scalar random_scalar(const FieldPtr& f) {
    switch (f->kind()) {
        case FieldKind::PrimeField: {
            long p = static_cast<long>(f->prime_modulus());
            return f->from_integer(random_int(0, p - 1));
        }
        case FieldKind::Rationals: {
            Integer num = random_int(-9, 9);
            Integer den = random_int(1, 9);
            return f->parse(num.str() + "/" + den.str());
        }
        case FieldKind::RationalFunctions: {
            long p = static_cast<long>(f->prime_modulus());
            Scalar t = f->variable();
            Scalar num = f->from_integer(random_int(0, p - 1)) +
                         f->from_integer(random_int(0, p - 1)) * t +
                         f->from_integer(random_int(0, p - 1)) * t * t;
            Scalar den = f->one() + f->from_integer(random_int(0, p - 1)) * t;
            return num / den;
        }
        case FieldKind::QuadraticEtale:
            return f->etale_element(random_scalar(f->base()), random_scalar(f->base()));
    }
    return f->zero();
}

inline Scalar random_nonzero(const FieldPtr& f) {
    for (;;) {
        Scalar s = random_scalar(f);
        if (!s.is_zero()) return s;
    }
}

inline Matrix random_matrix(const FieldPtr& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = random_scalar(f);
    return m;
}

inline Matrix random_invertible(const FieldPtr& f, std::size_t n) {
    for (;;) {
        Matrix m = random_matrix(f, n);
        if (!determinant(m).is_zero()) return m;
    }
}

inline Matrix random_det_one(const FieldPtr& f, std::size_t n) {
    for (;;) {
        Matrix m = random_matrix(f, n);
        Scalar d = determinant(m);
        if (d.is_zero()) continue;
        // scale the first row to push the determinant to 1
        Scalar fix = d.inv();
        for (std::size_t j = 0; j < n; ++j) m.at(0, j) = fix * m.at(0, j);
        return m;
    }
}

} // namespace testutil
