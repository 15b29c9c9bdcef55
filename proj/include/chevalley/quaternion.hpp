#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "chevalley/matrix.hpp"

namespace chevalley {

/// Generalized quaternion algebra (a,b/k): i^2 = a, j^2 = b, ij = -ji, over a
/// base field of characteristic != 2.
class QuaternionAlgebra {
public:
    static std::shared_ptr<const QuaternionAlgebra> make(const FieldPtr& field, const Scalar& a,
                                                         const Scalar& b) {
        require(field->characteristic() != 2, "InvalidParameters",
                "quaternion algebras require characteristic != 2");
        require(field->same(*a.field()) && field->same(*b.field()), "DomainMismatch",
                "parameters live in the base field");
        require(!a.is_zero() && !b.is_zero(), "InvalidParameters", "parameters must be nonzero");
        return std::shared_ptr<const QuaternionAlgebra>(new QuaternionAlgebra(field, a, b));
    }

    const FieldPtr& field() const { return field_; }
    const Scalar& a() const { return a_; }
    const Scalar& b() const { return b_; }

    bool same(const QuaternionAlgebra& other) const {
        return field_->same(*other.field_) && a_ == other.a_ && b_ == other.b_;
    }

private:
    QuaternionAlgebra(FieldPtr field, Scalar a, Scalar b)
        : field_(std::move(field)), a_(std::move(a)), b_(std::move(b)) {}

    FieldPtr field_;
    Scalar a_, b_;
};

using AlgebraPtr = std::shared_ptr<const QuaternionAlgebra>;

/// Element x0 + x1 i + x2 j + x3 ij of a declared algebra.
struct Quaternion {
    AlgebraPtr algebra;
    std::vector<Scalar> c; // exactly four coordinates

    static Quaternion make(const AlgebraPtr& alg, Scalar x0, Scalar x1, Scalar x2, Scalar x3) {
        return Quaternion{alg, {std::move(x0), std::move(x1), std::move(x2), std::move(x3)}};
    }
    static Quaternion from_integers(const AlgebraPtr& alg, long x0, long x1, long x2, long x3) {
        const FieldPtr& f = alg->field();
        return make(alg, f->from_integer(x0), f->from_integer(x1), f->from_integer(x2),
                    f->from_integer(x3));
    }
    static Quaternion zero(const AlgebraPtr& alg) { return from_integers(alg, 0, 0, 0, 0); }
    static Quaternion one(const AlgebraPtr& alg) { return from_integers(alg, 1, 0, 0, 0); }

    bool is_zero() const {
        for (const auto& x : c)
            if (!x.is_zero()) return false;
        return true;
    }
    friend bool operator==(const Quaternion& x, const Quaternion& y) {
        return x.algebra->same(*y.algebra) && x.c == y.c;
    }

    std::string str() const {
        return "(" + c[0].str() + "," + c[1].str() + "," + c[2].str() + "," + c[3].str() + ")";
    }
};

namespace detail {
inline void check_same_algebra(const Quaternion& x, const Quaternion& y) {
    require(x.algebra->same(*y.algebra), "AlgebraMismatch",
            "operands live in different quaternion algebras");
}
} // namespace detail

inline Quaternion operator+(const Quaternion& x, const Quaternion& y) {
    detail::check_same_algebra(x, y);
    return Quaternion{x.algebra, {x.c[0] + y.c[0], x.c[1] + y.c[1], x.c[2] + y.c[2],
                                  x.c[3] + y.c[3]}};
}
inline Quaternion operator-(const Quaternion& x, const Quaternion& y) {
    detail::check_same_algebra(x, y);
    return Quaternion{x.algebra, {x.c[0] - y.c[0], x.c[1] - y.c[1], x.c[2] - y.c[2],
                                  x.c[3] - y.c[3]}};
}
inline Quaternion operator-(const Quaternion& x) {
    return Quaternion{x.algebra, {-x.c[0], -x.c[1], -x.c[2], -x.c[3]}};
}
inline Quaternion operator*(const Scalar& s, const Quaternion& x) {
    return Quaternion{x.algebra, {s * x.c[0], s * x.c[1], s * x.c[2], s * x.c[3]}};
}

inline Quaternion qmul(const Quaternion& x, const Quaternion& y) {
    detail::check_same_algebra(x, y);
    const Scalar& a = x.algebra->a();
    const Scalar& b = x.algebra->b();
    const Scalar &x0 = x.c[0], &x1 = x.c[1], &x2 = x.c[2], &x3 = x.c[3];
    const Scalar &y0 = y.c[0], &y1 = y.c[1], &y2 = y.c[2], &y3 = y.c[3];
    Scalar ab = a * b;
    return Quaternion{
        x.algebra,
        {x0 * y0 + a * (x1 * y1) + b * (x2 * y2) - ab * (x3 * y3),
         x0 * y1 + x1 * y0 - b * (x2 * y3) + b * (x3 * y2),
         x0 * y2 + x2 * y0 + a * (x1 * y3) - a * (x3 * y1),
         x0 * y3 + x3 * y0 + x1 * y2 - x2 * y1}};
}
inline Quaternion operator*(const Quaternion& x, const Quaternion& y) { return qmul(x, y); }

inline Quaternion qconj(const Quaternion& x) {
    return Quaternion{x.algebra, {x.c[0], -x.c[1], -x.c[2], -x.c[3]}};
}
inline Scalar qtrace(const Quaternion& x) {
    return x.algebra->field()->from_integer(2) * x.c[0];
}
/// N(x) = x0^2 - a x1^2 - b x2^2 + ab x3^2
inline Scalar qnorm(const Quaternion& x) {
    const Scalar& a = x.algebra->a();
    const Scalar& b = x.algebra->b();
    return x.c[0] * x.c[0] - a * (x.c[1] * x.c[1]) - b * (x.c[2] * x.c[2]) +
           a * b * (x.c[3] * x.c[3]);
}

// ---------------------------------------------------------------------------
// The five constructions, each producing structure constants on its own
// canonical basis (1, i, j, ij); all must coincide with Canonical(a, b).

/// basis_r * basis_s = sum_k at(r,s,k) basis_k; basis_0 is the identity.
struct StructureConstants {
    FieldPtr field;
    std::vector<Scalar> c; // 4*4*4 flattened

    const Scalar& at(std::size_t r, std::size_t s, std::size_t k) const {
        return c[(r * 4 + s) * 4 + k];
    }
    friend bool operator==(const StructureConstants& x, const StructureConstants& y) {
        return x.c == y.c;
    }
};

enum class ConstructionMethod { Canonical, GradedTensor, Doubling, Clifford, Cyclic };

namespace detail {

/// Graded tensor K (x) L: elements are 2x2 coefficient grids over k indexed
/// by (degree in alpha, degree in beta); multiplication picks up
/// (-1)^{deg(b) deg(a')} and reduces alpha^2 -> a, beta^2 -> b.
struct GradedElement {
    std::array<Scalar, 4> g; // [da + 2*db] coefficient of alpha^da beta^db
};

/// Clifford algebra C(V, q) for V = <x, y>, q = diag(a, b): elements are
/// combinations of the reduced words 1, x, y, xy; longer words are rewritten
/// with x^2 = a, y^2 = b, yx = -xy.
struct CliffordElement {
    std::array<Scalar, 4> w; // coefficients of 1, x, y, xy
};

} // namespace detail

inline StructureConstants construct(const FieldPtr& f, const Scalar& a, const Scalar& b,
                                    ConstructionMethod method) {
    require(f->characteristic() != 2, "InvalidParameters", "constructions need char != 2");
    require(!a.is_zero() && !b.is_zero(), "InvalidParameters", "parameters must be nonzero");
    switch (method) {
        case ConstructionMethod::Canonical: {
            auto alg = QuaternionAlgebra::make(f, a, b);
            std::array<Quaternion, 4> basis{
                Quaternion::from_integers(alg, 1, 0, 0, 0),
                Quaternion::from_integers(alg, 0, 1, 0, 0),
                Quaternion::from_integers(alg, 0, 0, 1, 0),
                Quaternion::from_integers(alg, 0, 0, 0, 1)};
            StructureConstants sc{f, {}};
            for (std::size_t r = 0; r < 4; ++r)
                for (std::size_t s = 0; s < 4; ++s) {
                    Quaternion p = qmul(basis[r], basis[s]);
                    for (std::size_t k = 0; k < 4; ++k) sc.c.push_back(p.c[k]);
                }
            return sc;
        }
        case ConstructionMethod::GradedTensor: {
            // K = k[alpha], L = k[beta]; basis 1, alpha(x)1, 1(x)beta,
            // alpha(x)beta; sign (-1)^{deg(b) deg(a')}
            auto mul = [&](const detail::GradedElement& u, const detail::GradedElement& v) {
                detail::GradedElement r{{f->zero(), f->zero(), f->zero(), f->zero()}};
                for (int da1 = 0; da1 < 2; ++da1)
                    for (int db1 = 0; db1 < 2; ++db1)
                        for (int da2 = 0; da2 < 2; ++da2)
                            for (int db2 = 0; db2 < 2; ++db2) {
                                Scalar term = u.g[da1 + 2 * db1] * v.g[da2 + 2 * db2];
                                if (term.is_zero()) continue;
                                if ((db1 * da2) % 2 == 1) term = -term;
                                if (da1 + da2 == 2) term = term * a;
                                if (db1 + db2 == 2) term = term * b;
                                int slot = (da1 + da2) % 2 + 2 * ((db1 + db2) % 2);
                                r.g[static_cast<std::size_t>(slot)] =
                                    r.g[static_cast<std::size_t>(slot)] + term;
                            }
                return r;
            };
            auto elem = [&](int slot) {
                detail::GradedElement e{{f->zero(), f->zero(), f->zero(), f->zero()}};
                e.g[static_cast<std::size_t>(slot)] = f->one();
                return e;
            };
            std::array<detail::GradedElement, 4> basis{elem(0), elem(1), elem(2), elem(3)};
            StructureConstants sc{f, {}};
            for (std::size_t r = 0; r < 4; ++r)
                for (std::size_t s = 0; s < 4; ++s) {
                    auto p = mul(basis[r], basis[s]);
                    for (std::size_t k = 0; k < 4; ++k) sc.c.push_back(p.g[k]);
                }
            return sc;
        }
        case ConstructionMethod::Doubling: {
            // Q = K (+) K with (x1,y1)(x2,y2) = (x1 x2 + lambda y1 conj(y2),
            // x1 y2 + conj(x2) y1), K = k[alpha], lambda = b.
            auto K = Field::quadratic_etale(f, a);
            using Pair = std::pair<Scalar, Scalar>;
            auto mul = [&](const Pair& u, const Pair& v) {
                Scalar cx2 = etale_conj_norm(v.first).conj;
                Scalar cy2 = etale_conj_norm(v.second).conj;
                Scalar lambda_k = K->etale_element(b, f->zero());
                return Pair{u.first * v.first + lambda_k * (u.second * cy2),
                            u.first * v.second + cx2 * u.second};
            };
            Scalar zero_k = K->zero(), one_k = K->one(), alpha = K->generator();
            std::array<Pair, 4> basis{Pair{one_k, zero_k}, Pair{alpha, zero_k},
                                      Pair{zero_k, one_k}, Pair{zero_k, alpha}};
            // coordinates: (x, y) = (x0 + x1 alpha, y0 + y1 alpha)
            //            = x0*1 + x1*i + y0*j + y1*ij
            StructureConstants sc{f, {}};
            for (std::size_t r = 0; r < 4; ++r)
                for (std::size_t s = 0; s < 4; ++s) {
                    Pair p = mul(basis[r], basis[s]);
                    sc.c.push_back(p.first.etale_coord(0));
                    sc.c.push_back(p.first.etale_coord(1));
                    sc.c.push_back(p.second.etale_coord(0));
                    sc.c.push_back(p.second.etale_coord(1));
                }
            return sc;
        }
        case ConstructionMethod::Clifford: {
            // rewrite words in x, y with x^2 -> a, y^2 -> b, yx -> -xy
            auto mul = [&](const detail::CliffordElement& u, const detail::CliffordElement& v) {
                detail::CliffordElement r{{f->zero(), f->zero(), f->zero(), f->zero()}};
                // product of reduced words as (sign, scalar, word)
                static const int words[4][2] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}}; // (#x, #y)
                for (std::size_t p = 0; p < 4; ++p)
                    for (std::size_t s = 0; s < 4; ++s) {
                        Scalar coef = u.w[p] * v.w[s];
                        if (coef.is_zero()) continue;
                        // concatenated word x^{p_x} y^{p_y} x^{s_x} y^{s_y}:
                        // commute the middle y^{p_y} past x^{s_x}
                        int px = words[p][0], py = words[p][1];
                        int sx = words[s][0], sy = words[s][1];
                        if ((py * sx) % 2 == 1) coef = -coef;
                        int tx = px + sx, ty = py + sy;
                        if (tx == 2) coef = coef * a;
                        if (ty == 2) coef = coef * b;
                        std::size_t slot = static_cast<std::size_t>(tx % 2 + 2 * (ty % 2));
                        r.w[slot] = r.w[slot] + coef;
                    }
                return r;
            };
            auto elem = [&](int slot) {
                detail::CliffordElement e{{f->zero(), f->zero(), f->zero(), f->zero()}};
                e.w[static_cast<std::size_t>(slot)] = f->one();
                return e;
            };
            std::array<detail::CliffordElement, 4> basis{elem(0), elem(1), elem(2), elem(3)};
            StructureConstants sc{f, {}};
            for (std::size_t r = 0; r < 4; ++r)
                for (std::size_t s = 0; s < 4; ++s) {
                    auto p = mul(basis[r], basis[s]);
                    for (std::size_t k = 0; k < 4; ++k) sc.c.push_back(p.w[k]);
                }
            return sc;
        }
        case ConstructionMethod::Cyclic: {
            // Q = K.1 (+) K.e with e^2 = b and e beta = sigma(beta) e;
            // i = alpha, j = e, ij = alpha e
            auto K = Field::quadratic_etale(f, a);
            using Pair = std::pair<Scalar, Scalar>; // u + v e
            auto mul = [&](const Pair& u, const Pair& v) {
                Scalar b_k = K->etale_element(b, f->zero());
                Scalar su = etale_conj_norm(v.first).conj;  // sigma(u2)
                Scalar sv = etale_conj_norm(v.second).conj; // sigma(v2)
                // (u1 + v1 e)(u2 + v2 e)
                //   = u1 u2 + b v1 sigma(v2) + (u1 v2 + v1 sigma(u2)) e
                return Pair{u.first * v.first + b_k * (u.second * sv),
                            u.first * v.second + u.second * su};
            };
            Scalar zero_k = K->zero(), one_k = K->one(), alpha = K->generator();
            std::array<Pair, 4> basis{Pair{one_k, zero_k}, Pair{alpha, zero_k},
                                      Pair{zero_k, one_k}, Pair{zero_k, alpha}};
            StructureConstants sc{f, {}};
            for (std::size_t r = 0; r < 4; ++r)
                for (std::size_t s = 0; s < 4; ++s) {
                    Pair p = mul(basis[r], basis[s]);
                    sc.c.push_back(p.first.etale_coord(0));
                    sc.c.push_back(p.first.etale_coord(1));
                    sc.c.push_back(p.second.etale_coord(0));
                    sc.c.push_back(p.second.etale_coord(1));
                }
            return sc;
        }
    }
    raise("InvalidParameters", "unknown construction method");
}

// ---------------------------------------------------------------------------
// Split test via the conic a x^2 + b y^2 = z^2

struct SplitResult {
    enum class Status { Split, Division, Unknown };
    Status status;
    std::optional<std::array<Integer, 3>> witness; // projective (x, y, z)
};

/// Over F_p: exhaustive search, always Split (finite fields carry no
/// quaternion division algebras). Over Q: search up to the height bound and
/// return Unknown past it; no Hilbert-symbol classification is attempted.
inline SplitResult is_split(const QuaternionAlgebra& alg,
                            std::optional<long> search_bound = std::nullopt) {
    const FieldPtr& f = alg.field();
    switch (f->kind()) {
        case FieldKind::PrimeField: {
            long p = static_cast<long>(f->prime_modulus());
            for (long x = 0; x < p; ++x)
                for (long y = 0; y < p; ++y)
                    for (long z = 0; z < p; ++z) {
                        if (x == 0 && y == 0 && z == 0) continue;
                        Scalar lhs = alg.a() * f->from_integer(x * x) +
                                     alg.b() * f->from_integer(y * y);
                        if (lhs == f->from_integer(z * z))
                            return SplitResult{SplitResult::Status::Split,
                                               std::array<Integer, 3>{x, y, z}};
                    }
            return SplitResult{SplitResult::Status::Division, std::nullopt};
        }
        case FieldKind::Rationals: {
            long bound = search_bound.value_or(50);
            // clear denominators of a, b to integers A, B; search
            // A x^2 + B y^2 = z^2 over integer triples of height <= bound
            Rational ra = alg.a().rational(), rb = alg.b().rational();
            Integer da = boost::multiprecision::denominator(ra);
            Integer db = boost::multiprecision::denominator(rb);
            Integer scale = da * db;
            // a x^2 + b y^2 = z^2  <=>  (a s^2) X^2 + (b s^2) Y^2 = (s Z)^2
            // with s = da*db; use integer coefficients A = a s^2, B = b s^2
            Rational s2(scale * scale);
            Integer A = boost::multiprecision::numerator(ra * s2);
            Integer B = boost::multiprecision::numerator(rb * s2);
            // only squares enter the equation, so nonnegative x, y suffice
            for (long h = 1; h <= bound; ++h)
                for (long x = 0; x <= h; ++x)
                    for (long y = 0; y <= h; ++y) {
                        if (std::max(x, y) != h) continue; // each height once
                        Integer lhs = A * Integer(x) * Integer(x) + B * Integer(y) * Integer(y);
                        if (lhs < 0) continue;
                        Integer z = boost::multiprecision::sqrt(lhs);
                        if (z * z == lhs && !(x == 0 && y == 0))
                            return SplitResult{SplitResult::Status::Split,
                                               std::array<Integer, 3>{Integer(x) * scale,
                                                                      Integer(y) * scale, z}};
                    }
            return SplitResult{SplitResult::Status::Unknown, std::nullopt};
        }
        default: raise("UnsupportedBase", "is_split supports F_p and Q bases");
    }
}

// ---------------------------------------------------------------------------
// Embedding into M_2(K), K = k[alpha] with alpha^2 = a

/// x = z1 + z2 j maps to [[z1, b z2], [conj(z2), conj(z1)]]; determinant and
/// trace of the image are the norm and trace of x.
inline Matrix embed_m2k(const Quaternion& x) {
    const FieldPtr& f = x.algebra->field();
    auto K = Field::quadratic_etale(f, x.algebra->a());
    Scalar z1 = K->etale_element(x.c[0], x.c[1]);
    Scalar z2 = K->etale_element(x.c[2], x.c[3]);
    Scalar b_k = K->etale_element(x.algebra->b(), f->zero());
    Matrix m(K, 2, 2);
    m.at(0, 0) = z1;
    m.at(0, 1) = b_k * z2;
    m.at(1, 0) = etale_conj_norm(z2).conj;
    m.at(1, 1) = etale_conj_norm(z1).conj;
    return m;
}

// ---------------------------------------------------------------------------
// Pure quaternions and the cross product

inline bool is_pure(const Quaternion& x) { return x.c[0].is_zero(); }

/// Bilinear form N_0 on pure quaternions: the polarization of the norm,
/// N_0(v, w) = -a v1 w1 - b v2 w2 + ab v3 w3.
inline Scalar pure_form(const Quaternion& v, const Quaternion& w) {
    detail::check_same_algebra(v, w);
    require(is_pure(v) && is_pure(w), "NotPure", "pure_form needs trace-zero arguments");
    const Scalar& a = v.algebra->a();
    const Scalar& b = v.algebra->b();
    return -(a * (v.c[1] * w.c[1])) - b * (v.c[2] * w.c[2]) + a * b * (v.c[3] * w.c[3]);
}

/// v x w = pure part of v*w (the scalar part is -N_0(v, w)).
inline Quaternion cross_product(const Quaternion& v, const Quaternion& w) {
    detail::check_same_algebra(v, w);
    require(is_pure(v) && is_pure(w), "NotPure", "cross_product needs trace-zero arguments");
    Quaternion p = qmul(v, w);
    return Quaternion{v.algebra, {v.algebra->field()->zero(), p.c[1], p.c[2], p.c[3]}};
}

/// Cross product on a rank-3 quadratic space <a, b, c> with trivial
/// discriminant (c^2 = (ab)^2 enforced):
/// v x w = det [[b e1, a e2, (c/ab) e3], [v], [w]].
struct QuadraticSpace3 {
    FieldPtr field;
    Scalar a, b, c;

    static QuadraticSpace3 make(const FieldPtr& f, const Scalar& a, const Scalar& b,
                                const Scalar& c) {
        require(!a.is_zero() && !b.is_zero() && !c.is_zero(), "InvalidParameters",
                "form entries must be nonzero");
        Scalar ab = a * b;
        require(c * c == ab * ab, "InvalidParameters",
                "trivial discriminant requires c^2 = (ab)^2");
        return QuadraticSpace3{f, a, b, c};
    }

    /// diagonal bilinear form <a, b, c>
    Scalar form(const std::array<Scalar, 3>& v, const std::array<Scalar, 3>& w) const {
        return a * (v[0] * w[0]) + b * (v[1] * w[1]) + c * (v[2] * w[2]);
    }

    std::array<Scalar, 3> cross(const std::array<Scalar, 3>& v,
                                const std::array<Scalar, 3>& w) const {
        Scalar m1 = v[1] * w[2] - v[2] * w[1];
        Scalar m2 = v[0] * w[2] - v[2] * w[0];
        Scalar m3 = v[0] * w[1] - v[1] * w[0];
        return {b * m1, -(a * m2), (c / (a * b)) * m3};
    }
};

// ---------------------------------------------------------------------------
// Four squares

/// (l, m) with 1 + l^2 + m^2 = 0 mod p and 0 <= l, m <= (p-1)/2, found by
/// intersecting T = {x^2} with -1 - T.
inline std::pair<Integer, Integer> find_lm(const Integer& p) {
    require(p >= 3 && is_prime(p), "NotOddPrime", "find_lm needs an odd prime");
    Integer half = (p - 1) / 2;
    std::map<Integer, Integer> squares; // value -> smallest preimage
    for (Integer x = 0; x <= half; ++x) {
        Integer v = mod_floor(x * x, p);
        if (!squares.count(v)) squares[v] = x;
    }
    for (Integer m = 0; m <= half; ++m) {
        Integer target = mod_floor(-1 - m * m, p);
        auto it = squares.find(target);
        if (it != squares.end()) return {it->second, m};
    }
    raise("NotOddPrime", "no (l, m) found; input was not an odd prime");
}

namespace detail {

using Quad = std::array<Integer, 4>;

inline Quad quad_mul(const Quad& x, const Quad& y) {
    // Lipschitz quaternion product: N(x) N(y) = N(xy) over Z
    return Quad{x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3],
                x[0] * y[1] + x[1] * y[0] + x[2] * y[3] - x[3] * y[2],
                x[0] * y[2] - x[1] * y[3] + x[2] * y[0] + x[3] * y[1],
                x[0] * y[3] + x[1] * y[2] - x[2] * y[1] + x[3] * y[0]};
}

inline Integer quad_norm(const Quad& x) {
    return x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
}

/// Four-square representation of a prime by descent: start from
/// k p = 1 + l^2 + m^2, halve while even, then shrink odd multipliers with
/// centered residues and the four-square identity.
inline Quad prime_four_square(const Integer& p) {
    if (p == 2) return Quad{1, 1, 0, 0};
    auto [l, m] = find_lm(p);
    Quad t{1, l, m, 0};
    Integer mult = quad_norm(t) / p;
    while (mult > 1) {
        if (mult % 2 == 0) {
            // pair entries of equal parity and replace by half-sums
            std::vector<Integer> odd, even;
            for (const auto& v : t)
                (mod_floor(v, 2) == 1 ? odd : even).push_back(v);
            Quad next;
            std::size_t slot = 0;
            auto emit = [&](const Integer& u, const Integer& v) {
                next[slot++] = (u - v) / 2;
                next[slot++] = (u + v) / 2;
            };
            if (odd.size() == 2) {
                emit(odd[0], odd[1]);
                emit(even[0], even[1]);
            } else if (odd.size() == 4) {
                emit(odd[0], odd[1]);
                emit(odd[2], odd[3]);
            } else {
                emit(even[0], even[1]);
                emit(even[2], even[3]);
            }
            t = next;
            mult /= 2;
            continue;
        }
        // centered residues in (-mult/2, mult/2)
        Quad w;
        for (std::size_t i = 0; i < 4; ++i) {
            Integer r = mod_floor(t[i], mult);
            if (2 * r > mult) r -= mult;
            w[i] = r;
        }
        Integer next_mult = quad_norm(w) / mult;
        require(next_mult != 0, "InvalidSpec", "descent degenerated; input was not prime");
        // product with the conjugate keeps every coordinate divisible by mult
        Quad prod = quad_mul(t, Quad{w[0], -w[1], -w[2], -w[3]});
        for (auto& v : prod) v /= mult;
        t = prod;
        mult = next_mult;
    }
    return t;
}

} // namespace detail

/// (a, b, c, d) with a^2 + b^2 + c^2 + d^2 = n; primes by descent, composites
/// via the four-square identity, output sorted descending by absolute value.
inline std::array<Integer, 4> four_square(const Integer& n) {
    require(n >= 0, "InvalidSpec", "four_square needs a nonnegative integer");
    detail::Quad acc{1, 0, 0, 0};
    if (n == 0) return {0, 0, 0, 0};
    for (const auto& [p, e] : factorize(n)) {
        detail::Quad rep = detail::prime_four_square(p);
        for (std::size_t k = 0; k < e; ++k) acc = detail::quad_mul(acc, rep);
    }
    std::array<Integer, 4> out;
    for (std::size_t i = 0; i < 4; ++i) out[i] = abs_int(acc[i]);
    std::sort(out.begin(), out.end(), [](const Integer& x, const Integer& y) { return x > y; });
    return out;
}

// ---------------------------------------------------------------------------
// Real unit quaternions: the SO_3 rotation and the SU_2 realization. These
// are the only floating-point operations in the module; tolerance 1e-9.

inline constexpr double kUnitTolerance = 1e-9;

using RealQuaternion = std::array<double, 4>;

inline RealQuaternion real_qmul(const RealQuaternion& x, const RealQuaternion& y) {
    return RealQuaternion{x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3],
                          x[0] * y[1] + x[1] * y[0] + x[2] * y[3] - x[3] * y[2],
                          x[0] * y[2] - x[1] * y[3] + x[2] * y[0] + x[3] * y[1],
                          x[0] * y[3] + x[1] * y[2] - x[2] * y[1] + x[3] * y[0]};
}

inline double real_qnorm(const RealQuaternion& x) {
    return x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
}

/// Matrix of v -> a v a^{-1} on the imaginary basis (i, j, k); lands in SO_3
/// and satisfies phi_a = phi_{-a}.
inline std::array<std::array<double, 3>, 3> unit_quat_rotation(const RealQuaternion& a) {
    require(std::abs(real_qnorm(a) - 1.0) <= kUnitTolerance, "NotUnit",
            "unit_quat_rotation needs a unit quaternion");
    RealQuaternion conj{a[0], -a[1], -a[2], -a[3]};
    std::array<std::array<double, 3>, 3> m{};
    for (std::size_t col = 0; col < 3; ++col) {
        RealQuaternion v{0, 0, 0, 0};
        v[col + 1] = 1.0;
        RealQuaternion image = real_qmul(real_qmul(a, v), conj);
        for (std::size_t row = 0; row < 3; ++row) m[row][col] = image[row + 1];
    }
    return m;
}

/// a = w + z j maps to [[w, -z], [conj z, conj w]] in SU_2(C).
inline std::array<std::array<std::complex<double>, 2>, 2> unit_quat_to_su2(
    const RealQuaternion& a) {
    require(std::abs(real_qnorm(a) - 1.0) <= kUnitTolerance, "NotUnit",
            "unit_quat_to_su2 needs a unit quaternion");
    std::complex<double> w(a[0], a[1]), z(a[2], a[3]);
    return {{{w, -z}, {std::conj(z), std::conj(w)}}};
}

} // namespace chevalley
