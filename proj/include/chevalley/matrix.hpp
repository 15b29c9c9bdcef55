#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chevalley/field.hpp"
#include "chevalley/polynomial.hpp"

namespace chevalley {

/// Dense matrix over an exact field, row-major, all entries sharing one
/// coefficient domain.
class Matrix {
public:
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols),
          e_(rows * cols, field_->zero()) {}

    static Matrix identity(const FieldPtr& f, std::size_t n) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f->one();
        return m;
    }
    static Matrix zero(const FieldPtr& f, std::size_t rows, std::size_t cols) {
        return Matrix(f, rows, cols);
    }
    /// I + t*e_{ij}
    static Matrix elementary(const FieldPtr& f, std::size_t n, std::size_t i, std::size_t j,
                             const Scalar& t) {
        require(i != j && i < n && j < n, "IndexError", "elementary matrix needs i != j in range");
        Matrix m = identity(f, n);
        m.at(i, j) = t;
        return m;
    }
    static Matrix unit(const FieldPtr& f, std::size_t n, std::size_t i, std::size_t j) {
        Matrix m(f, n, n);
        m.at(i, j) = f->one();
        return m;
    }
    static Matrix diagonal(const FieldPtr& f, const std::vector<Scalar>& d) {
        Matrix m(f, d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
        return m;
    }

    const FieldPtr& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Scalar& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "SizeMismatch", "matrix shape mismatch");
        Matrix r(a.field_, a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = a.e_[k] + b.e_[k];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "SizeMismatch", "matrix shape mismatch");
        Matrix r(a.field_, a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = a.e_[k] - b.e_[k];
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        require(a.cols_ == b.rows_, "SizeMismatch", "matrix product shape mismatch");
        detail::check_same_domain(a.e_.empty() ? a.field_->zero() : a.e_[0],
                                  b.e_.empty() ? b.field_->zero() : b.e_[0]);
        Matrix r(a.field_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Scalar& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r.at(i, j) = r.at(i, j) + aik * b.at(k, j);
            }
        return r;
    }
    friend Matrix operator*(const Scalar& s, const Matrix& a) {
        Matrix r(a.field_, a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = s * a.e_[k];
        return r;
    }

    Matrix operator-() const {
        Matrix r(field_, rows_, cols_);
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = -e_[k];
        return r;
    }

    Matrix transpose() const {
        Matrix r(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    Scalar trace() const {
        require(is_square(), "NonSquare", "trace of a non-square matrix");
        Scalar t = field_->zero();
        for (std::size_t i = 0; i < rows_; ++i) t = t + at(i, i);
        return t;
    }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    Matrix pow(std::size_t k) const {
        require(is_square(), "NonSquare", "power of a non-square matrix");
        Matrix r = identity(field_, rows_);
        Matrix b = *this;
        while (k > 0) {
            if (k & 1) r = r * b;
            b = b * b;
            k >>= 1;
        }
        return r;
    }

    /// `[[1,2],[0,3]]`, entries per the scalar grammar of the field.
    std::string str() const {
        std::string out = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i) out += ",";
            out += "[";
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) out += ",";
                out += at(i, j).str();
            }
            out += "]";
        }
        out += "]";
        return out;
    }

    static Matrix parse(const FieldPtr& f, std::string_view text);

private:
    FieldPtr field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> e_;
};

inline Matrix Matrix::parse(const FieldPtr& f, std::string_view text) {
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n'))
            ++pos;
    };
    auto expect = [&](char c) {
        skip();
        require(pos < text.size() && text[pos] == c, "ParseError",
                std::string("expected '") + c + "' in matrix literal");
        ++pos;
    };
    // an entry runs to the next ',' or ']' at parenthesis depth 0
    auto entry = [&]() -> std::string {
        skip();
        std::size_t start = pos;
        int depth = 0;
        while (pos < text.size()) {
            char c = text[pos];
            if (c == '(') ++depth;
            if (c == ')') --depth;
            if (depth == 0 && (c == ',' || c == ']')) break;
            ++pos;
        }
        return std::string(text.substr(start, pos - start));
    };

    expect('[');
    std::vector<std::vector<Scalar>> rows;
    skip();
    while (true) {
        expect('[');
        std::vector<Scalar> row;
        skip();
        if (pos < text.size() && text[pos] == ']') {
            ++pos;
        } else {
            while (true) {
                row.push_back(f->parse(entry()));
                skip();
                if (pos < text.size() && text[pos] == ',') {
                    ++pos;
                    continue;
                }
                expect(']');
                break;
            }
        }
        rows.push_back(std::move(row));
        skip();
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
            continue;
        }
        expect(']');
        break;
    }
    require(!rows.empty() && !rows[0].empty(), "ParseError", "empty matrix literal");
    for (const auto& r : rows)
        require(r.size() == rows[0].size(), "ParseError", "ragged matrix literal");
    Matrix m(f, rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

/// Direct sum A (+) B placed block-diagonally.
inline Matrix direct_sum(const Matrix& a, const Matrix& b) {
    Matrix r(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) r.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    return r;
}

/// r x r Jordan block with eigenvalue lambda and 1 on the superdiagonal.
inline Matrix jordan_block(const Scalar& lambda, std::size_t r) {
    Matrix m(lambda.field(), r, r);
    for (std::size_t i = 0; i < r; ++i) {
        m.at(i, i) = lambda;
        if (i + 1 < r) m.at(i, i + 1) = lambda.field()->one();
    }
    return m;
}

// ---------------------------------------------------------------------------
// det / inverse / rank by exact Gaussian elimination over the field

struct DetInverseRank {
    Scalar det;
    std::optional<Matrix> inverse;
    std::size_t rank;
};

inline DetInverseRank det_inverse_rank(const Matrix& m) {
    require(m.is_square(), "NonSquare", "det/inverse need a square matrix");
    const FieldPtr& f = m.field();
    std::size_t n = m.rows();
    Matrix a = m;
    Matrix inv = Matrix::identity(f, n);
    Scalar det = f->one();
    std::size_t rank = 0;
    for (std::size_t col = 0, row = 0; col < n && row < n; ++col) {
        std::size_t piv = row;
        while (piv < n && a.at(piv, col).is_zero()) ++piv;
        if (piv == n) continue;
        if (piv != row) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a.at(piv, j), a.at(row, j));
                std::swap(inv.at(piv, j), inv.at(row, j));
            }
            det = -det;
        }
        Scalar p = a.at(row, col);
        det = det * p;
        Scalar pinv = p.inv();
        for (std::size_t j = 0; j < n; ++j) {
            a.at(row, j) = pinv * a.at(row, j);
            inv.at(row, j) = pinv * inv.at(row, j);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || a.at(i, col).is_zero()) continue;
            Scalar factor = a.at(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a.at(i, j) = a.at(i, j) - factor * a.at(row, j);
                inv.at(i, j) = inv.at(i, j) - factor * inv.at(row, j);
            }
        }
        ++row;
        ++rank;
    }
    if (rank < n) return {f->zero(), std::nullopt, rank};
    return {det, std::move(inv), rank};
}

inline Scalar determinant(const Matrix& m) { return det_inverse_rank(m).det; }

inline Matrix inverse(const Matrix& m) {
    auto r = det_inverse_rank(m);
    require(r.inverse.has_value(), "Singular", "matrix is singular");
    return *std::move(r.inverse);
}

inline std::size_t rank(const Matrix& m) {
    // elimination on a square copy works for rank only when square; pad
    // rectangular input into a square frame
    if (m.is_square()) return det_inverse_rank(m).rank;
    std::size_t n = std::max(m.rows(), m.cols());
    Matrix sq(m.field(), n, n);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) sq.at(i, j) = m.at(i, j);
    return det_inverse_rank(sq).rank;
}

// ---------------------------------------------------------------------------
// Characteristic polynomial (Berkowitz: division-free, so it also serves the
// Z/mZ ring mode below) and minimal polynomial (first Krylov dependency).

namespace detail {

/// Berkowitz vectors over any commutative coefficient arithmetic given by the
/// callbacks. Coefficients are returned descending (leading term first).
template <typename T, typename Add, typename Mul, typename Neg>
std::vector<T> berkowitz(const std::vector<T>& a, std::size_t n, const T& one, const T& zero,
                         Add add, Mul mul, Neg neg) {
    auto at = [&](std::size_t i, std::size_t j) -> const T& { return a[i * n + j]; };
    std::vector<T> c{one, neg(at(0, 0))};
    for (std::size_t r = 2; r <= n; ++r) {
        // s_k = R * M^k * C with M the (r-1) leading principal block,
        // R the row a[r-1][0..r-2], C the column a[0..r-2][r-1]
        std::size_t m = r - 1;
        std::vector<T> v(m, zero);
        for (std::size_t j = 0; j < m; ++j) v[j] = at(j, r - 1);
        std::vector<T> s;
        s.reserve(r);
        for (std::size_t k = 0; k + 1 < r; ++k) {
            T acc = zero;
            for (std::size_t j = 0; j < m; ++j) acc = add(acc, mul(at(r - 1, j), v[j]));
            s.push_back(acc);
            if (k + 2 < r) {
                std::vector<T> nv(m, zero);
                for (std::size_t i = 0; i < m; ++i) {
                    T e = zero;
                    for (std::size_t j = 0; j < m; ++j) e = add(e, mul(at(i, j), v[j]));
                    nv[i] = e;
                }
                v = std::move(nv);
            }
        }
        const T d = at(r - 1, r - 1);
        std::vector<T> next(r + 1, zero);
        for (std::size_t i = 0; i <= r; ++i) {
            T acc = zero;
            for (std::size_t j = 0; j < r; ++j) {
                if (i == j) acc = add(acc, c[j]);
                else if (i == j + 1) acc = add(acc, neg(mul(d, c[j])));
                else if (i >= j + 2) acc = add(acc, neg(mul(s[i - j - 2], c[j])));
            }
            next[i] = acc;
        }
        c = std::move(next);
    }
    return c;
}

} // namespace detail

inline Polynomial char_poly(const Matrix& m) {
    require(m.is_square(), "NonSquare", "characteristic polynomial of a non-square matrix");
    const FieldPtr& f = m.field();
    std::size_t n = m.rows();
    std::vector<Scalar> flat;
    flat.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) flat.push_back(m.at(i, j));
    auto desc = detail::berkowitz<Scalar>(
        flat, n, f->one(), f->zero(), [](const Scalar& a, const Scalar& b) { return a + b; },
        [](const Scalar& a, const Scalar& b) { return a * b; },
        [](const Scalar& a) { return -a; });
    std::vector<Scalar> asc(desc.rbegin(), desc.rend());
    return Polynomial(f, std::move(asc));
}

/// Evaluates p at a square matrix (Horner).
inline Matrix eval_at(const Polynomial& p, const Matrix& m) {
    require(m.is_square(), "NonSquare", "polynomial evaluation at a non-square matrix");
    const FieldPtr& f = m.field();
    std::size_t n = m.rows();
    Matrix acc = Matrix::zero(f, n, n);
    const auto& c = p.coefficients();
    for (std::size_t i = c.size(); i-- > 0;) {
        acc = acc * m;
        for (std::size_t d = 0; d < n; ++d) acc.at(d, d) = acc.at(d, d) + c[i];
    }
    return acc;
}

inline Polynomial min_poly(const Matrix& m) {
    require(m.is_square(), "NonSquare", "minimal polynomial of a non-square matrix");
    const FieldPtr& f = m.field();
    std::size_t n = m.rows();
    std::size_t dim = n * n;
    // Krylov vectors vec(I), vec(M), vec(M^2), ... reduced against a growing
    // echelon basis; the first dependency yields the monic annihilator.
    struct EchelonRow {
        std::vector<Scalar> v;     // reduced vector
        std::vector<Scalar> rep;   // expression in terms of the original vectors
        std::size_t pivot;
    };
    std::vector<EchelonRow> basis;
    Matrix power = Matrix::identity(f, n);
    for (std::size_t k = 0;; ++k) {
        std::vector<Scalar> v;
        v.reserve(dim);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) v.push_back(power.at(i, j));
        std::vector<Scalar> rep(k + 1, f->zero());
        rep[k] = f->one();
        for (const auto& row : basis) {
            if (v[row.pivot].is_zero()) continue;
            Scalar factor = v[row.pivot];
            for (std::size_t t = 0; t < dim; ++t) v[t] = v[t] - factor * row.v[t];
            for (std::size_t t = 0; t < row.rep.size() && t < rep.size(); ++t)
                rep[t] = rep[t] - factor * row.rep[t];
        }
        std::size_t pivot = dim;
        for (std::size_t t = 0; t < dim; ++t)
            if (!v[t].is_zero()) {
                pivot = t;
                break;
            }
        if (pivot == dim) {
            // dependency: sum rep[t] * M^t = 0 with rep[k] = 1
            return Polynomial(f, std::move(rep));
        }
        Scalar pinv = v[pivot].inv();
        for (std::size_t t = 0; t < dim; ++t) v[t] = pinv * v[t];
        for (auto& t : rep) t = pinv * t;
        basis.push_back(EchelonRow{std::move(v), std::move(rep), pivot});
        power = power * m;
        require(k <= n, "InvalidSpec", "Krylov sequence exceeded the degree bound");
    }
}

// ---------------------------------------------------------------------------
// Nilpotent exponential

inline bool is_nilpotent(const Matrix& m) {
    require(m.is_square(), "NonSquare", "nilpotency test of a non-square matrix");
    return m.pow(m.rows()).is_zero();
}

/// exp(N) = sum N^r / r! for nilpotent N; exact, finitely many terms.
inline Matrix exp_nilpotent(const Matrix& nmat) {
    require(is_nilpotent(nmat), "NotNilpotent", "exp_nilpotent needs a nilpotent matrix");
    const FieldPtr& f = nmat.field();
    std::size_t n = nmat.rows();
    Matrix acc = Matrix::identity(f, n);
    Matrix term = Matrix::identity(f, n);
    Integer p = f->characteristic();
    for (std::size_t r = 1; r <= n; ++r) {
        term = term * nmat;
        if (term.is_zero()) break;
        require(p == 0 || Integer(r) < p, "CharacteristicTooSmall",
                "r! is not invertible in characteristic " + p.str());
        Scalar rfact_inv = f->from_integer(Integer(r)).inv();
        term = rfact_inv * term; // term now holds N^r / r!
        acc = acc + term;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Regular representation of a quadratic etale algebra and its trace form

/// Matrix of left multiplication by alpha on the basis {1, w} of K = k[w],
/// written over the base field k.
inline Matrix regular_rep(const Scalar& alpha) {
    require(alpha.field()->kind() == FieldKind::QuadraticEtale, "DomainMismatch",
            "regular_rep expects an element of a quadratic etale algebra");
    const FieldPtr& base = alpha.field()->base();
    const Scalar& a = alpha.field()->etale_param();
    const Scalar& x0 = alpha.etale_coord(0);
    const Scalar& x1 = alpha.etale_coord(1);
    Matrix m(base, 2, 2);
    m.at(0, 0) = x0;
    m.at(0, 1) = a * x1;
    m.at(1, 0) = x1;
    m.at(1, 1) = x0;
    return m;
}

/// Gram matrix of B(x,y) = trace(l_x l_y) on the basis {1, w}: diag(2, 2a).
/// Degenerate exactly when K is inseparable over the base.
inline Matrix trace_form_gram(const FieldPtr& etale) {
    require(etale->kind() == FieldKind::QuadraticEtale, "DomainMismatch",
            "trace_form_gram expects a quadratic etale algebra");
    const FieldPtr& base = etale->base();
    const Scalar& a = etale->etale_param();
    Scalar two = base->from_integer(2);
    Matrix g(base, 2, 2);
    g.at(0, 0) = two;
    g.at(1, 1) = two * a;
    return g;
}

// ---------------------------------------------------------------------------
// Symmetric power representation

/// Matrix of the n-th symmetric power of g in GL_2 on the ordered monomial
/// basis x^n, x^{n-1}y, ..., y^n, where g.x = a*x + c*y and g.y = b*x + d*y.
inline Matrix sym_power_rep(const Matrix& g, std::size_t n) {
    require(g.rows() == 2 && g.cols() == 2, "SizeMismatch", "sym_power_rep expects a 2x2 matrix");
    require(!determinant(g).is_zero(), "Singular", "sym_power_rep expects an invertible matrix");
    const FieldPtr& f = g.field();
    // image of x: (a, c); image of y: (b, d) as linear forms in x, y
    std::vector<Scalar> gx{g.at(0, 0), g.at(1, 0)};
    std::vector<Scalar> gy{g.at(0, 1), g.at(1, 1)};
    // expand (gx)^i (gy)^j as a homogeneous polynomial of degree n in x, y;
    // coefficient vector indexed by the power of y
    auto mul_form = [&](const std::vector<Scalar>& u, const std::vector<Scalar>& v) {
        std::vector<Scalar> r(u.size() + v.size() - 1, f->zero());
        for (std::size_t i = 0; i < u.size(); ++i)
            for (std::size_t j = 0; j < v.size(); ++j) r[i + j] = r[i + j] + u[i] * v[j];
        return r;
    };
    Matrix rep(f, n + 1, n + 1);
    for (std::size_t col = 0; col <= n; ++col) {
        std::size_t i = n - col, j = col; // basis monomial x^i y^j
        std::vector<Scalar> acc{f->one()};
        for (std::size_t k = 0; k < i; ++k) acc = mul_form(acc, gx);
        for (std::size_t k = 0; k < j; ++k) acc = mul_form(acc, gy);
        for (std::size_t row = 0; row <= n; ++row)
            rep.at(row, col) = row < acc.size() ? acc[row] : f->zero();
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Ring mode: matrices over Z/mZ (m not necessarily prime). Only the
// operations that are sound in the presence of zero divisors are offered:
// cofactor determinants for n <= 4 and the division-free characteristic
// polynomial, which still satisfies Cayley-Hamilton.

class RingMatrix {
public:
    RingMatrix(Integer modulus, std::size_t n)
        : m_(std::move(modulus)), n_(n), e_(n * n, Integer(0)) {
        require(m_ >= 2, "InvalidSpec", "ring modulus must be at least 2");
    }

    const Integer& modulus() const { return m_; }
    std::size_t size() const { return n_; }
    Integer& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const Integer& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

    static RingMatrix identity(const Integer& m, std::size_t n) {
        RingMatrix r(m, n);
        for (std::size_t i = 0; i < n; ++i) r.at(i, i) = 1;
        return r;
    }

    friend RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
        RingMatrix r(a.m_, a.n_);
        for (std::size_t i = 0; i < a.n_; ++i)
            for (std::size_t k = 0; k < a.n_; ++k) {
                if (a.at(i, k) == 0) continue;
                for (std::size_t j = 0; j < a.n_; ++j)
                    r.at(i, j) = mod_floor(r.at(i, j) + a.at(i, k) * b.at(k, j), a.m_);
            }
        return r;
    }

    bool is_zero() const {
        for (const auto& x : e_)
            if (x != 0) return false;
        return true;
    }

private:
    Integer m_;
    std::size_t n_;
    std::vector<Integer> e_;
};

/// Cofactor-expansion determinant mod m; sound over Z/mZ, n <= 4 by contract.
inline Integer ring_det(const RingMatrix& a) {
    std::size_t n = a.size();
    require(n <= 4, "InvalidSpec", "ring-mode determinant is limited to n <= 4");
    if (n == 1) return a.at(0, 0);
    Integer acc = 0;
    std::vector<std::size_t> cols(n);
    for (std::size_t j = 0; j < n; ++j) cols[j] = j;
    // expand along the first row
    for (std::size_t j = 0; j < n; ++j) {
        if (a.at(0, j) == 0) continue;
        RingMatrix minor(a.modulus(), n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = a.at(r, c);
            }
        }
        Integer term = a.at(0, j) * ring_det(minor);
        acc = mod_floor(j % 2 == 0 ? Integer(acc + term) : Integer(acc - term), a.modulus());
    }
    return acc;
}

/// Monic characteristic polynomial coefficients mod m, ascending degree.
inline std::vector<Integer> ring_char_poly(const RingMatrix& a) {
    std::size_t n = a.size();
    const Integer& m = a.modulus();
    std::vector<Integer> flat;
    flat.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) flat.push_back(a.at(i, j));
    auto desc = detail::berkowitz<Integer>(
        flat, n, Integer(1), Integer(0),
        [&](const Integer& x, const Integer& y) { return mod_floor(x + y, m); },
        [&](const Integer& x, const Integer& y) { return mod_floor(x * y, m); },
        [&](const Integer& x) { return mod_floor(-x, m); });
    return std::vector<Integer>(desc.rbegin(), desc.rend());
}

/// Evaluates an ascending coefficient vector at a ring matrix.
inline RingMatrix ring_eval(const std::vector<Integer>& poly, const RingMatrix& a) {
    std::size_t n = a.size();
    RingMatrix acc(a.modulus(), n);
    for (std::size_t i = poly.size(); i-- > 0;) {
        acc = acc * a;
        for (std::size_t d = 0; d < n; ++d)
            acc.at(d, d) = mod_floor(acc.at(d, d) + poly[i], a.modulus());
    }
    return acc;
}

} // namespace chevalley
