#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "chevalley/classical.hpp"
#include "chevalley/matrix.hpp"

namespace chevalley {

using LatticeVector = std::vector<long long>;

/// Root datum (X, R, Y, Rv) with X = Y = Z^rank, dot-product pairing, and the
/// root <-> coroot bijection by index.
struct RootDatum {
    std::size_t rank = 0;
    std::vector<LatticeVector> roots;
    std::vector<LatticeVector> coroots;
};

enum class RootDatumType { SL2, PGL2, GLn, Sp, SOEven, SOOdd };

inline long long pairing(const LatticeVector& x, const LatticeVector& y) {
    long long acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
    return acc;
}

namespace detail {

inline LatticeVector basis_vec(std::size_t rank, std::size_t i, long long v) {
    LatticeVector e(rank, 0);
    e[i] = v;
    return e;
}

inline LatticeVector vec_sub(const LatticeVector& a, const LatticeVector& b) {
    LatticeVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}
inline LatticeVector vec_add(const LatticeVector& a, const LatticeVector& b) {
    LatticeVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}
inline LatticeVector vec_neg(const LatticeVector& a) {
    LatticeVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

} // namespace detail

/// Builds the root datum of the named family: SL2 = (Z, {±2}, Z, {±1}),
/// PGL2 = (Z, {±1}, Z, {±2}), GL_n with roots e_i - e_j, Sp/SO per the
/// classical realizations (SO odd dual to type C).
inline RootDatum build_root_datum(RootDatumType type, std::size_t param = 0) {
    using detail::basis_vec;
    using detail::vec_add;
    using detail::vec_neg;
    using detail::vec_sub;
    RootDatum d;
    auto push = [&](LatticeVector root, LatticeVector coroot) {
        d.roots.push_back(std::move(root));
        d.coroots.push_back(std::move(coroot));
    };
    switch (type) {
        case RootDatumType::SL2:
            d.rank = 1;
            push({2}, {1});
            push({-2}, {-1});
            return d;
        case RootDatumType::PGL2:
            d.rank = 1;
            push({1}, {2});
            push({-1}, {-2});
            return d;
        case RootDatumType::GLn: {
            require(param >= 2, "InvalidRank", "GL_n needs n >= 2");
            std::size_t n = param;
            d.rank = n;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    if (i == j) continue;
                    LatticeVector r = vec_sub(basis_vec(n, i, 1), basis_vec(n, j, 1));
                    push(r, r);
                }
            return d;
        }
        case RootDatumType::Sp: {
            require(param >= 1, "InvalidRank", "Sp needs l >= 1");
            std::size_t l = param;
            d.rank = l;
            for (std::size_t i = 0; i < l; ++i)
                for (std::size_t j = 0; j < l; ++j) {
                    if (i == j) continue;
                    LatticeVector r = vec_sub(basis_vec(l, i, 1), basis_vec(l, j, 1));
                    push(r, r);
                }
            for (std::size_t i = 0; i < l; ++i)
                for (std::size_t j = i + 1; j < l; ++j) {
                    LatticeVector r = vec_add(basis_vec(l, i, 1), basis_vec(l, j, 1));
                    push(r, r);
                    push(vec_neg(r), vec_neg(r));
                }
            for (std::size_t i = 0; i < l; ++i) {
                push(basis_vec(l, i, 2), basis_vec(l, i, 1));
                push(basis_vec(l, i, -2), basis_vec(l, i, -1));
            }
            return d;
        }
        case RootDatumType::SOEven: {
            require(param >= 1, "InvalidRank", "SO_2l needs l >= 1");
            std::size_t l = param;
            d.rank = l;
            for (std::size_t i = 0; i < l; ++i)
                for (std::size_t j = 0; j < l; ++j) {
                    if (i == j) continue;
                    LatticeVector r = vec_sub(basis_vec(l, i, 1), basis_vec(l, j, 1));
                    push(r, r);
                }
            for (std::size_t i = 0; i < l; ++i)
                for (std::size_t j = i + 1; j < l; ++j) {
                    LatticeVector r = vec_add(basis_vec(l, i, 1), basis_vec(l, j, 1));
                    push(r, r);
                    push(vec_neg(r), vec_neg(r));
                }
            return d;
        }
        case RootDatumType::SOOdd: {
            require(param >= 1, "InvalidRank", "SO_2l+1 needs l >= 1");
            std::size_t l = param;
            d.rank = l;
            for (std::size_t i = 0; i < l; ++i)
                for (std::size_t j = 0; j < l; ++j) {
                    if (i == j) continue;
                    LatticeVector r = vec_sub(basis_vec(l, i, 1), basis_vec(l, j, 1));
                    push(r, r);
                }
            for (std::size_t i = 0; i < l; ++i)
                for (std::size_t j = i + 1; j < l; ++j) {
                    LatticeVector r = vec_add(basis_vec(l, i, 1), basis_vec(l, j, 1));
                    push(r, r);
                    push(vec_neg(r), vec_neg(r));
                }
            // short roots +-chi_i, dual to the long roots of type C
            for (std::size_t i = 0; i < l; ++i) {
                push(basis_vec(l, i, 1), basis_vec(l, i, 2));
                push(basis_vec(l, i, -1), basis_vec(l, i, -2));
            }
            return d;
        }
    }
    raise("InvalidSpec", "unknown root datum type");
}

// ---------------------------------------------------------------------------
// Axioms

struct ValidationReport {
    bool valid = true;
    std::string message = "valid";
};

inline LatticeVector reflect(const LatticeVector& x, const LatticeVector& root,
                             const LatticeVector& coroot) {
    long long k = pairing(x, coroot);
    LatticeVector r = x;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= k * root[i];
    return r;
}

/// Checks 0 not in R, distinctness, <alpha, alpha_v> = 2, s_alpha(R) = R and
/// s_alpha_v(Rv) = Rv; reports the first violation with a witness.
inline ValidationReport validate(const RootDatum& d) {
    auto fail = [&](std::string msg) { return ValidationReport{false, std::move(msg)}; };
    auto vec_str = [](const LatticeVector& v) {
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s + ")";
    };
    if (d.roots.size() != d.coroots.size()) return fail("root/coroot bijection size mismatch");
    LatticeVector zero(d.rank, 0);
    std::set<LatticeVector> root_set(d.roots.begin(), d.roots.end());
    if (root_set.count(zero)) return fail("0 is listed as a root");
    if (root_set.size() != d.roots.size()) return fail("roots are not pairwise distinct");
    std::multiset<LatticeVector> roots(d.roots.begin(), d.roots.end());
    std::multiset<LatticeVector> coroots(d.coroots.begin(), d.coroots.end());
    for (std::size_t k = 0; k < d.roots.size(); ++k) {
        if (pairing(d.roots[k], d.coroots[k]) != 2)
            return fail("<alpha, alpha_v> != 2 at root " + vec_str(d.roots[k]));
        std::multiset<LatticeVector> image, coimage;
        for (const auto& x : d.roots) image.insert(reflect(x, d.roots[k], d.coroots[k]));
        for (const auto& y : d.coroots) coimage.insert(reflect(y, d.coroots[k], d.roots[k]));
        if (image != roots)
            return fail("s_alpha does not preserve R at root " + vec_str(d.roots[k]));
        if (coimage != coroots)
            return fail("dual reflection does not preserve R_v at root " + vec_str(d.roots[k]));
    }
    return ValidationReport{};
}

// ---------------------------------------------------------------------------
// Weyl group closure

/// rank x rank integer matrix acting on X, row-major; columns are images of
/// the basis vectors.
using WeylElement = std::vector<long long>;

inline WeylElement reflection_matrix(const RootDatum& d, std::size_t k) {
    std::size_t n = d.rank;
    WeylElement m(n * n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        LatticeVector img = reflect(detail::basis_vec(n, j, 1), d.roots[k], d.coroots[k]);
        for (std::size_t i = 0; i < n; ++i) m[i * n + j] = img[i];
    }
    return m;
}

inline WeylElement weyl_mul(const WeylElement& a, const WeylElement& b, std::size_t n) {
    WeylElement r(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i * n + k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) r[i * n + j] += a[i * n + k] * b[k * n + j];
        }
    return r;
}

struct WeylClosure {
    std::vector<WeylElement> elements;
    std::size_t order = 0;
};

/// Breadth-first closure of the simple reflections under multiplication;
/// deterministic order (generation, then lexicographic within a generation).
inline WeylClosure weyl_closure(const RootDatum& d, std::size_t bound = 1'000'000) {
    std::size_t n = d.rank;
    std::set<WeylElement> gens_set;
    for (std::size_t k = 0; k < d.roots.size(); ++k) gens_set.insert(reflection_matrix(d, k));
    std::vector<WeylElement> gens(gens_set.begin(), gens_set.end());
    WeylElement id(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) id[i * n + i] = 1;
    std::set<WeylElement> seen{id};
    std::vector<WeylElement> ordered{id};
    std::vector<WeylElement> frontier{id};
    while (!frontier.empty()) {
        std::set<WeylElement> next;
        for (const auto& w : frontier)
            for (const auto& g : gens) {
                WeylElement p = weyl_mul(w, g, n);
                if (!seen.count(p)) next.insert(p);
            }
        frontier.assign(next.begin(), next.end());
        for (const auto& w : frontier) {
            seen.insert(w);
            ordered.push_back(w);
            require(ordered.size() <= bound, "ClosureBoundExceeded",
                    "Weyl closure exceeded the element bound");
        }
    }
    return WeylClosure{std::move(ordered), seen.size()};
}

// ---------------------------------------------------------------------------
// Cartan matrix

/// Entries <alpha_i, alpha_j_v> for the chosen simple roots (indices into the
/// datum); verifies that every root is an all-nonnegative or all-nonpositive
/// rational combination of the simple ones.
inline std::vector<std::vector<long long>> cartan_matrix(const RootDatum& d,
                                                         const std::vector<std::size_t>& simple) {
    require(!simple.empty(), "NotSimpleSystem", "empty simple system");
    std::size_t s = simple.size();
    // express each root over the simple roots by rational elimination
    auto q = Field::rationals();
    for (const auto& root : d.roots) {
        Matrix sys(q, d.rank, s + 1);
        for (std::size_t c = 0; c < s; ++c)
            for (std::size_t r = 0; r < d.rank; ++r)
                sys.at(r, c) = q->from_integer(d.roots[simple[c]][r]);
        for (std::size_t r = 0; r < d.rank; ++r) sys.at(r, s) = q->from_integer(root[r]);
        // row reduce [A | b]
        std::size_t row = 0;
        std::vector<long long> pivot_of_col(s, -1);
        for (std::size_t col = 0; col < s && row < d.rank; ++col) {
            std::size_t piv = row;
            while (piv < d.rank && sys.at(piv, col).is_zero()) ++piv;
            if (piv == d.rank) continue;
            for (std::size_t j = 0; j <= s; ++j) std::swap(sys.at(piv, j), sys.at(row, j));
            Scalar inv = sys.at(row, col).inv();
            for (std::size_t j = 0; j <= s; ++j) sys.at(row, j) = inv * sys.at(row, j);
            for (std::size_t i = 0; i < d.rank; ++i) {
                if (i == row || sys.at(i, col).is_zero()) continue;
                Scalar t = sys.at(i, col);
                for (std::size_t j = 0; j <= s; ++j)
                    sys.at(i, j) = sys.at(i, j) - t * sys.at(row, j);
            }
            pivot_of_col[col] = static_cast<long long>(row);
            ++row;
        }
        // consistency: zero rows must have zero rhs
        for (std::size_t r = row; r < d.rank; ++r)
            require(sys.at(r, s).is_zero(), "NotSimpleSystem",
                    "a root lies outside the span of the simple system");
        bool has_pos = false, has_neg = false;
        for (std::size_t c = 0; c < s; ++c) {
            Scalar coef = pivot_of_col[c] >= 0
                              ? sys.at(static_cast<std::size_t>(pivot_of_col[c]), s)
                              : q->zero();
            if (coef.is_zero()) continue;
            if (coef.rational() > 0) has_pos = true;
            else has_neg = true;
        }
        require(!(has_pos && has_neg), "NotSimpleSystem",
                "a root is a mixed-sign combination of the simple system");
    }
    std::vector<std::vector<long long>> cartan(s, std::vector<long long>(s, 0));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j)
            cartan[i][j] = pairing(d.roots[simple[i]], d.coroots[simple[j]]);
    return cartan;
}

/// The standard simple systems of the built families, as indices usable with
/// cartan_matrix.
inline std::vector<std::size_t> standard_simple_roots(const RootDatum& d, RootDatumType type,
                                                      std::size_t param) {
    auto find_root = [&](const LatticeVector& v) -> std::size_t {
        for (std::size_t k = 0; k < d.roots.size(); ++k)
            if (d.roots[k] == v) return k;
        raise("NotSimpleSystem", "expected root not present");
    };
    std::vector<std::size_t> out;
    switch (type) {
        case RootDatumType::SL2:
        case RootDatumType::PGL2: out.push_back(0); return out;
        case RootDatumType::GLn: {
            for (std::size_t i = 0; i + 1 < param; ++i) {
                LatticeVector v(param, 0);
                v[i] = 1;
                v[i + 1] = -1;
                out.push_back(find_root(v));
            }
            return out;
        }
        case RootDatumType::Sp: {
            for (std::size_t i = 0; i + 1 < param; ++i) {
                LatticeVector v(param, 0);
                v[i] = 1;
                v[i + 1] = -1;
                out.push_back(find_root(v));
            }
            LatticeVector last(param, 0);
            last[param - 1] = 2;
            out.push_back(find_root(last));
            return out;
        }
        case RootDatumType::SOEven: {
            require(param >= 2, "NotSimpleSystem", "D_l simple system needs l >= 2");
            for (std::size_t i = 0; i + 1 < param; ++i) {
                LatticeVector v(param, 0);
                v[i] = 1;
                v[i + 1] = -1;
                out.push_back(find_root(v));
            }
            LatticeVector last(param, 0);
            last[param - 2] = 1;
            last[param - 1] = 1;
            out.push_back(find_root(last));
            return out;
        }
        case RootDatumType::SOOdd: {
            for (std::size_t i = 0; i + 1 < param; ++i) {
                LatticeVector v(param, 0);
                v[i] = 1;
                v[i + 1] = -1;
                out.push_back(find_root(v));
            }
            LatticeVector last(param, 0);
            last[param - 1] = 1;
            out.push_back(find_root(last));
            return out;
        }
    }
    raise("InvalidSpec", "unknown root datum type");
}

// ---------------------------------------------------------------------------
// Ad weights: conjugate Lie-algebra basis vectors by a rational torus element
// with distinct prime entries and factor the scaling back into exponents.

struct AdWeight {
    std::string label;
    LatticeVector weight;
};

namespace detail {

inline const long kTorusPrimes[] = {2, 3, 5, 7};

/// Factors a nonzero rational as prod primes[i]^{e_i}; nullopt when any other
/// prime (or a sign) remains.
inline std::optional<LatticeVector> factor_over_primes(const Rational& value,
                                                       std::size_t count) {
    if (value <= 0) return std::nullopt;
    Integer num = boost::multiprecision::numerator(value);
    Integer den = boost::multiprecision::denominator(value);
    LatticeVector e(count, 0);
    for (std::size_t i = 0; i < count; ++i) {
        Integer p(kTorusPrimes[i]);
        while (num % p == 0) {
            num /= p;
            ++e[i];
        }
        while (den % p == 0) {
            den /= p;
            --e[i];
        }
    }
    if (num != 1 || den != 1) return std::nullopt;
    return e;
}

inline std::vector<AdWeight> ad_weights_from_basis(
    const std::vector<std::pair<std::string, Matrix>>& basis, const Matrix& torus,
    std::size_t rank) {
    Matrix torus_inv = inverse(torus);
    std::vector<AdWeight> out;
    for (const auto& [label, b] : basis) {
        Matrix conj = torus * b * torus_inv;
        // conj must be scalar * b; read the scalar off the first nonzero slot
        std::optional<Scalar> scale;
        for (std::size_t r = 0; r < b.rows() && !scale; ++r)
            for (std::size_t c = 0; c < b.cols() && !scale; ++c)
                if (!b.at(r, c).is_zero()) scale = conj.at(r, c) / b.at(r, c);
        require(scale.has_value(), "WeightExtractionFailure", "zero basis vector");
        require(conj == *scale * b, "WeightExtractionFailure",
                "conjugate is not a scalar multiple of the basis vector");
        auto weight = factor_over_primes(scale->rational(), rank);
        require(weight.has_value(), "WeightExtractionFailure",
                "scaling factor is not a product of the torus primes");
        out.push_back(AdWeight{label, *weight});
    }
    return out;
}

} // namespace detail

/// Weight of every Lie-algebra basis vector under the torus with entries the
/// first `rank` primes. The nonzero weights reproduce the root multiset of
/// build_root_datum; Cartan vectors get weight 0.
inline std::vector<AdWeight> ad_weights(RootDatumType type, std::size_t param = 0) {
    auto q = Field::rationals();
    switch (type) {
        case RootDatumType::SL2: {
            // sl_2 basis {h, e12, e21}, torus diag(p, p^-1)
            std::vector<std::pair<std::string, Matrix>> basis;
            Matrix h(q, 2, 2);
            h.at(0, 0) = q->one();
            h.at(1, 1) = -q->one();
            basis.emplace_back("h", h);
            basis.emplace_back("e(1,2)", Matrix::unit(q, 2, 0, 1));
            basis.emplace_back("e(2,1)", Matrix::unit(q, 2, 1, 0));
            Scalar p = q->from_integer(detail::kTorusPrimes[0]);
            Matrix torus = Matrix::diagonal(q, {p, p.inv()});
            return detail::ad_weights_from_basis(basis, torus, 1);
        }
        case RootDatumType::PGL2: {
            // pgl_2 basis {e11, e12, e21}, torus diag(p, 1)
            std::vector<std::pair<std::string, Matrix>> basis;
            basis.emplace_back("e(1,1)", Matrix::unit(q, 2, 0, 0));
            basis.emplace_back("e(1,2)", Matrix::unit(q, 2, 0, 1));
            basis.emplace_back("e(2,1)", Matrix::unit(q, 2, 1, 0));
            Scalar p = q->from_integer(detail::kTorusPrimes[0]);
            Matrix torus = Matrix::diagonal(q, {p, q->one()});
            return detail::ad_weights_from_basis(basis, torus, 1);
        }
        case RootDatumType::GLn: {
            require(param >= 2 && param <= 4, "InvalidRank", "GL_n ad weights support 2 <= n <= 4");
            std::size_t n = param;
            std::vector<std::pair<std::string, Matrix>> basis;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    std::string label =
                        "e(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
                    basis.emplace_back(label, Matrix::unit(q, n, i, j));
                }
            std::vector<Scalar> diag;
            for (std::size_t i = 0; i < n; ++i)
                diag.push_back(q->from_integer(detail::kTorusPrimes[i]));
            return detail::ad_weights_from_basis(basis, Matrix::diagonal(q, diag), n);
        }
        case RootDatumType::Sp:
        case RootDatumType::SOEven:
        case RootDatumType::SOOdd: {
            require(param >= 1 && param <= 4, "InvalidRank", "classical ad weights support l <= 4");
            FormFamily family = type == RootDatumType::Sp      ? FormFamily::Sp
                                : type == RootDatumType::SOEven ? FormFamily::SOEven
                                                                : FormFamily::SOOdd;
            FormSpec form = FormSpec::make(family, param, q);
            auto basis = lie_basis_labeled(form);
            std::vector<Scalar> diag;
            if (family == FormFamily::SOOdd) diag.push_back(q->one());
            for (std::size_t i = 0; i < param; ++i)
                diag.push_back(q->from_integer(detail::kTorusPrimes[i]));
            for (std::size_t i = 0; i < param; ++i)
                diag.push_back(q->from_integer(detail::kTorusPrimes[i]).inv());
            return detail::ad_weights_from_basis(basis, Matrix::diagonal(q, diag), param);
        }
    }
    raise("InvalidSpec", "unknown root datum type");
}

} // namespace chevalley
