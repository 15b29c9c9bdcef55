#pragma once

#include <map>
#include <optional>
#include <vector>

#include "chevalley/matrix.hpp"
#include "chevalley/polynomial.hpp"

namespace chevalley {

struct ElementClass {
    bool semisimple;
    bool nilpotent;
    bool unipotent;
};

/// nilpotent iff M^n = 0; unipotent iff M - I nilpotent; semisimple iff the
/// minimal polynomial is squarefree and separable (gcd(m, m') = 1).
inline ElementClass classify(const Matrix& m) {
    require(m.is_square(), "NonSquare", "classify needs a square matrix");
    ElementClass c{};
    c.nilpotent = m.pow(m.rows()).is_zero();
    c.unipotent = (m - Matrix::identity(m.field(), m.rows())).pow(m.rows()).is_zero();
    c.semisimple = min_poly(m).is_squarefree();
    return c;
}

namespace detail {

/// Factors a monic polynomial into linear factors over its own field, by
/// scanning all residues (F_p) or by rational-root candidates (Q). Returns
/// the root -> multiplicity table, or nullopt when an irreducible factor of
/// degree >= 2 remains.
inline std::optional<std::vector<std::pair<Scalar, std::size_t>>> split_into_roots(
    const Polynomial& poly) {
    const FieldPtr& f = poly.field();
    Polynomial rest = poly.monic();
    std::vector<std::pair<Scalar, std::size_t>> roots;
    auto strip_root = [&](const Scalar& r) {
        std::size_t mult = 0;
        Polynomial lin = Polynomial::linear_root(f, r);
        while (rest.degree() >= 1) {
            auto [q, rem] = divmod(rest, lin);
            if (!rem.is_zero()) break;
            rest = q;
            ++mult;
        }
        if (mult > 0) roots.emplace_back(r, mult);
    };
    switch (f->kind()) {
        case FieldKind::PrimeField: {
            long p = static_cast<long>(f->prime_modulus());
            for (long v = 0; v < p && rest.degree() >= 1; ++v)
                strip_root(f->from_integer(v));
            break;
        }
        case FieldKind::Rationals: {
            // monic over Q: clear denominators, then candidates are
            // (divisors of the constant term) / (divisors of the leading one)
            if (rest.degree() >= 1) {
                Integer denom_lcm = 1;
                for (const auto& c : rest.coefficients()) {
                    Integer d = boost::multiprecision::denominator(c.rational());
                    denom_lcm = denom_lcm / gcd_int(denom_lcm, d) * d;
                }
                std::vector<Integer> scaled;
                for (const auto& c : rest.coefficients()) {
                    Rational v = c.rational() * Rational(denom_lcm);
                    scaled.push_back(boost::multiprecision::numerator(v));
                }
                Integer lead = scaled.back();
                strip_root(f->zero());
                Integer constant = 0;
                for (std::size_t i = 0; i < scaled.size(); ++i)
                    if (scaled[i] != 0) {
                        constant = scaled[i];
                        break;
                    }
                if (rest.degree() >= 1 && constant != 0) {
                    for (const Integer& num : positive_divisors(constant))
                        for (const Integer& den : positive_divisors(lead))
                            for (int sign : {1, -1}) {
                                if (rest.degree() < 1) break;
                                Scalar cand(f, Rational(sign * num, den));
                                if (rest.eval(cand).is_zero()) strip_root(cand);
                            }
                }
            }
            break;
        }
        default:
            raise("NonSplitCharPoly", "root scanning supports F_p and Q coefficient domains");
    }
    if (rest.degree() >= 1) return std::nullopt;
    return roots;
}

} // namespace detail

struct JordanDecomposition {
    Matrix S;                // semisimple part
    Matrix N;                // nilpotent part, S + N = input
    Polynomial p_poly;       // S = p(input), zero constant term
    Polynomial q_poly;       // N = q(input) = X - p(X)
    std::optional<Matrix> U; // unipotent part I + S^{-1} N, when invertible
};

/// Additive (and, for invertible input, multiplicative) Jordan-Chevalley
/// decomposition. The interpolating polynomial p solves p = alpha mod
/// (X-alpha)^{n_alpha} for every eigenvalue alpha of the minimal polynomial,
/// plus p = 0 mod X when 0 is not an eigenvalue, by polynomial CRT.
inline JordanDecomposition jordan_decompose(const Matrix& m) {
    require(m.is_square(), "NonSquare", "jordan_decompose needs a square matrix");
    const FieldPtr& f = m.field();
    std::size_t n = m.rows();
    Polynomial mp = min_poly(m);
    auto roots = detail::split_into_roots(mp);
    require(roots.has_value(), "NonSplitCharPoly",
            "minimal polynomial has an irreducible factor of degree >= 2 over the base field");

    // CRT over the moduli (X - alpha)^{n_alpha}; the extra modulus X is
    // appended only when 0 is not an eigenvalue (otherwise p(0) = 0 already).
    std::vector<std::pair<Polynomial, Polynomial>> congruences; // (value, modulus)
    bool zero_is_root = false;
    for (const auto& [alpha, mult] : *roots) {
        if (alpha.is_zero()) zero_is_root = true;
        congruences.emplace_back(Polynomial::constant(f, alpha),
                                 Polynomial::linear_root(f, alpha).pow(mult));
    }
    if (!zero_is_root)
        congruences.emplace_back(Polynomial::zero(f), Polynomial::variable(f));

    Polynomial sol = congruences[0].first;
    Polynomial mod = congruences[0].second;
    for (std::size_t k = 1; k < congruences.size(); ++k) {
        const auto& [value, modulus] = congruences[k];
        // sol' = sol + mod * u with u = (value - sol) * mod^{-1}  (mod modulus)
        auto bezout = poly_ext_gcd(mod, modulus);
        require(bezout.g.degree() == 0, "InvalidSpec", "CRT moduli must be coprime");
        Polynomial diff = divmod(value - sol, modulus).second;
        Polynomial u = divmod(diff * bezout.u, modulus).second;
        sol = sol + mod * u;
        mod = mod * modulus;
        sol = divmod(sol, mod).second;
    }

    Polynomial p = sol;
    Polynomial q = Polynomial::variable(f) - p;
    Matrix s = eval_at(p, m);
    Matrix nmat = m - s;
    JordanDecomposition out{std::move(s), std::move(nmat), std::move(p), std::move(q),
                            std::nullopt};
    if (!determinant(m).is_zero()) {
        Matrix u = Matrix::identity(f, n) + inverse(out.S) * out.N;
        out.U = std::move(u);
    }
    return out;
}

} // namespace chevalley
