#pragma once

#include <numeric>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "chevalley/matrix.hpp"

namespace chevalley {

/// Permutation on {0..n-1} stored as the image list.
struct Permutation {
    std::vector<std::size_t> img;

    static Permutation identity(std::size_t n) {
        Permutation p;
        p.img.resize(n);
        std::iota(p.img.begin(), p.img.end(), std::size_t{0});
        return p;
    }
    std::size_t size() const { return img.size(); }
    std::size_t operator()(std::size_t i) const { return img[i]; }
    bool is_identity() const {
        for (std::size_t i = 0; i < img.size(); ++i)
            if (img[i] != i) return false;
        return true;
    }
    friend bool operator==(const Permutation& a, const Permutation& b) { return a.img == b.img; }

    /// Matrix with P e_i = e_{img[i]}, i.e. entry (img[i], i) = 1.
    Matrix matrix(const FieldPtr& f) const {
        Matrix m(f, img.size(), img.size());
        for (std::size_t i = 0; i < img.size(); ++i) m.at(img[i], i) = f->one();
        return m;
    }

    /// 1-based image list, the external form: `2 1 3`.
    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < img.size(); ++i) {
            if (i) out += " ";
            out += std::to_string(img[i] + 1);
        }
        return out;
    }
};

// Generator tokens. Indices are 0-based internally and 1-based in the text
// form `x(1,2;3) n(1,2;1) h(1,2;2) p(2 1 3)`.
struct ElemToken {
    std::size_t i, j;
    Scalar t;
}; // x_ij(t) = I + t e_ij
struct MonomialToken {
    std::size_t i, j;
    Scalar t;
}; // n_ij(t) = x_ij(t) x_ji(-1/t) x_ij(t)
struct TorusToken {
    std::size_t i, j;
    Scalar t;
}; // h_ij(t) = diag(.. t .. t^-1 ..)
struct PermToken {
    Permutation sigma;
};

using GeneratorToken = std::variant<ElemToken, MonomialToken, TorusToken, PermToken>;

inline Matrix monomial_matrix(const FieldPtr& f, std::size_t n, std::size_t i, std::size_t j,
                              const Scalar& t) {
    require(i != j && i < n && j < n, "IndexError", "monomial token needs i != j in range");
    require(!t.is_zero(), "IndexError", "monomial parameter must be nonzero");
    Matrix m = Matrix::identity(f, n);
    m.at(i, i) = f->zero();
    m.at(j, j) = f->zero();
    m.at(i, j) = t;
    m.at(j, i) = -t.inv();
    return m;
}

inline Matrix torus_matrix(const FieldPtr& f, std::size_t n, std::size_t i, std::size_t j,
                           const Scalar& t) {
    require(i != j && i < n && j < n, "IndexError", "torus token needs i != j in range");
    require(!t.is_zero(), "IndexError", "torus parameter must be nonzero");
    Matrix m = Matrix::identity(f, n);
    m.at(i, i) = t;
    m.at(j, j) = t.inv();
    return m;
}

/// Word of generator tokens; evaluation is the left-to-right product and the
/// empty word is the identity.
class GeneratorWord {
public:
    GeneratorWord(FieldPtr field, std::size_t n) : field_(std::move(field)), n_(n) {}

    const FieldPtr& field() const { return field_; }
    std::size_t size() const { return n_; }
    const std::vector<GeneratorToken>& tokens() const { return tokens_; }
    bool empty() const { return tokens_.empty(); }
    std::size_t length() const { return tokens_.size(); }

    void push(GeneratorToken tok) { tokens_.push_back(std::move(tok)); }
    void append(const GeneratorWord& other) {
        for (const auto& t : other.tokens_) tokens_.push_back(t);
    }

    Matrix token_matrix(const GeneratorToken& tok) const {
        return std::visit(
            [&](const auto& t) -> Matrix {
                using T = std::decay_t<decltype(t)>;
                if constexpr (std::is_same_v<T, ElemToken>)
                    return Matrix::elementary(field_, n_, t.i, t.j, t.t);
                else if constexpr (std::is_same_v<T, MonomialToken>)
                    return monomial_matrix(field_, n_, t.i, t.j, t.t);
                else if constexpr (std::is_same_v<T, TorusToken>)
                    return torus_matrix(field_, n_, t.i, t.j, t.t);
                else
                    return t.sigma.matrix(field_);
            },
            tok);
    }

    Matrix eval() const {
        Matrix acc = Matrix::identity(field_, n_);
        for (const auto& tok : tokens_) acc = acc * token_matrix(tok);
        return acc;
    }

    std::string str() const {
        std::string out;
        for (const auto& tok : tokens_) {
            if (!out.empty()) out += " ";
            out += std::visit(
                [&](const auto& t) -> std::string {
                    using T = std::decay_t<decltype(t)>;
                    if constexpr (std::is_same_v<T, ElemToken>)
                        return "x(" + std::to_string(t.i + 1) + "," + std::to_string(t.j + 1) +
                               ";" + t.t.str() + ")";
                    else if constexpr (std::is_same_v<T, MonomialToken>)
                        return "n(" + std::to_string(t.i + 1) + "," + std::to_string(t.j + 1) +
                               ";" + t.t.str() + ")";
                    else if constexpr (std::is_same_v<T, TorusToken>)
                        return "h(" + std::to_string(t.i + 1) + "," + std::to_string(t.j + 1) +
                               ";" + t.t.str() + ")";
                    else
                        return "p(" + t.sigma.str() + ")";
                },
                tok);
        }
        return out;
    }

    static GeneratorWord parse(const FieldPtr& f, std::size_t n, std::string_view text) {
        GeneratorWord w(f, n);
        std::size_t pos = 0;
        auto skip = [&] {
            while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
        };
        while (true) {
            skip();
            if (pos >= text.size()) break;
            char kind = text[pos++];
            require(kind == 'x' || kind == 'n' || kind == 'h' || kind == 'p', "ParseError",
                    "unknown token kind in word");
            skip();
            require(pos < text.size() && text[pos] == '(', "ParseError", "expected '('");
            ++pos;
            // body runs to the matching close parenthesis
            std::size_t depth = 1, start = pos;
            while (pos < text.size() && depth > 0) {
                if (text[pos] == '(') ++depth;
                if (text[pos] == ')') --depth;
                ++pos;
            }
            require(depth == 0, "ParseError", "unbalanced parentheses in word");
            std::string body(text.substr(start, pos - 1 - start));
            if (kind == 'p') {
                Permutation sigma;
                std::istringstream iss(body);
                std::size_t v;
                while (iss >> v) {
                    require(v >= 1, "ParseError", "permutation images are 1-based");
                    sigma.img.push_back(v - 1);
                }
                require(sigma.img.size() == n, "ParseError", "permutation size mismatch");
                w.push(PermToken{std::move(sigma)});
            } else {
                auto comma = body.find(',');
                auto semi = body.find(';');
                require(comma != std::string::npos && semi != std::string::npos && comma < semi,
                        "ParseError", "token body must be i,j;t");
                std::size_t i = std::stoul(body.substr(0, comma));
                std::size_t j = std::stoul(body.substr(comma + 1, semi - comma - 1));
                require(i >= 1 && j >= 1 && i <= n && j <= n, "ParseError",
                        "token indices out of range");
                Scalar t = f->parse(body.substr(semi + 1));
                if (kind == 'x') w.push(ElemToken{i - 1, j - 1, t});
                else if (kind == 'n') w.push(MonomialToken{i - 1, j - 1, t});
                else w.push(TorusToken{i - 1, j - 1, t});
            }
        }
        return w;
    }

private:
    FieldPtr field_;
    std::size_t n_;
    std::vector<GeneratorToken> tokens_;
};

inline Matrix eval_word(const GeneratorWord& w) { return w.eval(); }

// ---------------------------------------------------------------------------
// Decomposition into elementary matrices (det 1 input, Elem tokens only)

namespace detail {

/// The three-factor form for a 2x2 det-1 matrix with c != 0:
/// [[1,(a-1)/c],[0,1]] [[1,0],[c,1]] [[1,(d-1)/c],[0,1]].
inline void push_three_factor(GeneratorWord& w, const Matrix& m) {
    const Scalar& c = m.at(1, 0);
    Scalar cinv = c.inv();
    w.push(ElemToken{0, 1, (m.at(0, 0) - m.field()->one()) * cinv});
    w.push(ElemToken{1, 0, c});
    w.push(ElemToken{0, 1, (m.at(1, 1) - m.field()->one()) * cinv});
}

} // namespace detail

inline GeneratorWord elem_decompose(const Matrix& m) {
    require(m.is_square(), "NonSquare", "elem_decompose needs a square matrix");
    const FieldPtr& f = m.field();
    std::size_t n = m.rows();
    require(determinant(m) == f->one(), "DeterminantNotOne", "elem_decompose needs det 1");
    GeneratorWord w(f, n);
    if (m == Matrix::identity(f, n)) return w;
    if (n == 2) {
        if (!m.at(1, 0).is_zero()) {
            detail::push_three_factor(w, m);
            return w;
        }
        // add row 1 to row 2 so the three-factor form applies, then undo
        Matrix shifted = Matrix::elementary(f, 2, 1, 0, f->one()) * m;
        w.push(ElemToken{1, 0, -f->one()});
        detail::push_three_factor(w, shifted);
        return w;
    }
    // General n: eliminate to the identity with row operations (left) and
    // column operations (right), then invert the operation lists. Zero or
    // awkward pivots are repaired by adding another row first, smallest row
    // index winning the tie-break.
    Matrix a = m;
    std::vector<ElemToken> left_ops, right_ops;
    auto row_op = [&](std::size_t i, std::size_t j, const Scalar& t) {
        if (t.is_zero()) return;
        for (std::size_t c = 0; c < n; ++c) a.at(i, c) = a.at(i, c) + t * a.at(j, c);
        left_ops.push_back(ElemToken{i, j, t});
    };
    auto col_op = [&](std::size_t i, std::size_t j, const Scalar& t) {
        // right-multiplication by x_ij(t) adds t * (column i) to column j
        if (t.is_zero()) return;
        for (std::size_t r = 0; r < n; ++r) a.at(r, j) = a.at(r, j) + t * a.at(r, i);
        right_ops.push_back(ElemToken{i, j, t});
    };
    for (std::size_t k = 0; k < n; ++k) {
        if (!a.at(k, k).is_one()) {
            std::size_t helper = n;
            for (std::size_t r = k + 1; r < n; ++r)
                if (!a.at(r, k).is_zero()) {
                    helper = r;
                    break;
                }
            if (helper == n) {
                // the pivot itself is the only nonzero below; seed row k+1
                require(k + 1 < n, "DeterminantNotOne",
                        "final pivot should already be 1 for a det-1 matrix");
                row_op(k + 1, k, f->one());
                helper = k + 1;
            }
            row_op(k, helper, (f->one() - a.at(k, k)) / a.at(helper, k));
        }
        for (std::size_t r = k + 1; r < n; ++r) row_op(r, k, -a.at(r, k));
        for (std::size_t c = k + 1; c < n; ++c) col_op(k, c, -a.at(k, c));
    }
    require(a == Matrix::identity(f, n), "DeterminantNotOne", "elimination did not reach identity");
    // L_m..L_1 M R_1..R_m = I, hence M = inv(L_1)..inv(L_m) inv(R_m)..inv(R_1)
    for (const auto& op : left_ops) w.push(ElemToken{op.i, op.j, -op.t});
    for (auto it = right_ops.rbegin(); it != right_ops.rend(); ++it)
        w.push(ElemToken{it->i, it->j, -it->t});
    return w;
}

// ---------------------------------------------------------------------------
// Gaussian reduction with the restricted operations R1 / NR2 / NR3

struct GaussReduction {
    GeneratorWord left, right;
    Matrix diag;
};

/// Reduces M to diag(1,..,1,det M) (invertible case) or diag(1,..,1,0,..,0)
/// with rank-many ones (singular case): left.eval() * M * right.eval() = diag.
inline GaussReduction gauss_reduce(const Matrix& m) {
    require(m.is_square(), "NonSquare", "gauss_reduce needs a square matrix");
    const FieldPtr& f = m.field();
    std::size_t n = m.rows();
    Matrix a = m;
    GeneratorWord left(f, n), right(f, n);
    auto apply_left = [&](const GeneratorToken& tok) {
        left.push(tok);
        a = left.token_matrix(tok) * a;
    };
    auto apply_right = [&](const GeneratorToken& tok) {
        right.push(tok);
        a = a * right.token_matrix(tok);
    };
    std::size_t rank_seen = 0;
    for (std::size_t k = 0; k < n; ++k) {
        // bring some nonzero entry of the trailing block to (k, k)
        std::size_t pr = n, pc = n;
        for (std::size_t r = k; r < n && pr == n; ++r)
            for (std::size_t c = k; c < n; ++c)
                if (!a.at(r, c).is_zero()) {
                    pr = r;
                    pc = c;
                    break;
                }
        if (pr == n) break; // trailing block vanished: singular tail
        if (pr != k) apply_left(MonomialToken{k, pr, f->one()});
        if (pc != k) apply_right(MonomialToken{pc, k, -f->one()});
        ++rank_seen;
        for (std::size_t r = k + 1; r < n; ++r)
            if (!a.at(r, k).is_zero())
                apply_left(ElemToken{r, k, -a.at(r, k) / a.at(k, k)});
        for (std::size_t c = k + 1; c < n; ++c)
            if (!a.at(k, c).is_zero())
                apply_right(ElemToken{k, c, -a.at(k, c) / a.at(k, k)});
    }
    // normalise the diagonal: push each leading entry rightward through the
    // nonzero block with NR3, accumulating the product at the last slot
    for (std::size_t k = 0; k + 1 < rank_seen; ++k)
        apply_left(TorusToken{k, k + 1, a.at(k, k).inv()});
    if (rank_seen > 0 && rank_seen < n && !a.at(rank_seen - 1, rank_seen - 1).is_one()) {
        // singular case: absorb the leftover unit into a zero row below
        apply_left(TorusToken{rank_seen - 1, rank_seen, a.at(rank_seen - 1, rank_seen - 1).inv()});
    }
    return GaussReduction{std::move(left), std::move(right), std::move(a)};
}

// ---------------------------------------------------------------------------
// Bruhat decomposition M = b1 * P_w * b2 (b1, b2 upper triangular, diagonal
// absorbed into b1)

struct BruhatDecomposition {
    Matrix b1;
    Permutation w;
    Matrix b2;
};

inline BruhatDecomposition bruhat(const Matrix& m) {
    require(m.is_square(), "NonSquare", "bruhat needs a square matrix");
    const FieldPtr& f = m.field();
    std::size_t n = m.rows();
    require(!determinant(m).is_zero(), "Singular", "bruhat needs an invertible matrix");
    // Scan rows bottom-up; the pivot of each row is its first nonzero entry
    // (entries in the pivot columns of lower rows are already cleared).
    // Allowed moves keep u1, u2 upper unitriangular: add a lower row to an
    // upper row; add an earlier column to a later column.
    Matrix a = m;
    Matrix u1 = Matrix::identity(f, n); // accumulated left operations
    Matrix u2 = Matrix::identity(f, n); // accumulated right operations
    std::vector<std::size_t> pivot_col(n, 0);
    for (std::size_t rr = n; rr-- > 0;) {
        std::size_t c = 0;
        while (c < n && a.at(rr, c).is_zero()) ++c;
        pivot_col[rr] = c;
        Scalar pinv = a.at(rr, c).inv();
        // clear rightward inside row rr with column operations
        for (std::size_t cc = c + 1; cc < n; ++cc) {
            if (a.at(rr, cc).is_zero()) continue;
            Scalar t = -a.at(rr, cc) * pinv;
            for (std::size_t r2 = 0; r2 < n; ++r2) {
                a.at(r2, cc) = a.at(r2, cc) + t * a.at(r2, c);
                u2.at(r2, cc) = u2.at(r2, cc) + t * u2.at(r2, c);
            }
        }
        // clear upward inside column c with row operations
        for (std::size_t r2 = 0; r2 < rr; ++r2) {
            if (a.at(r2, c).is_zero()) continue;
            Scalar t = -a.at(r2, c) * pinv;
            for (std::size_t cc = 0; cc < n; ++cc) {
                a.at(r2, cc) = a.at(r2, cc) + t * a.at(rr, cc);
                u1.at(r2, cc) = u1.at(r2, cc) + t * u1.at(rr, cc);
            }
        }
    }
    // now u1 * m * u2 = a, a monomial with entry d_r at (r, pivot_col[r]);
    // a = D * P_w with w(pivot_col[r]) = r
    Permutation w;
    w.img.assign(n, 0);
    for (std::size_t r = 0; r < n; ++r) w.img[pivot_col[r]] = r;
    std::vector<Scalar> d;
    d.reserve(n);
    for (std::size_t r = 0; r < n; ++r) d.push_back(a.at(r, pivot_col[r]));
    Matrix b1 = inverse(u1) * Matrix::diagonal(f, d);
    Matrix b2 = inverse(u2);
    return BruhatDecomposition{std::move(b1), std::move(w), std::move(b2)};
}

// ---------------------------------------------------------------------------
// Flags, parabolic subgroups, Levi decomposition

/// Flag of subspaces, standard when no basis-change matrix is given:
/// V_i = span(e_1 .. e_{n_1+..+n_i}) for the partition (n_1,..,n_r).
struct Flag {
    std::vector<std::size_t> partition;
    std::optional<Matrix> basis;

    std::size_t dimension() const {
        std::size_t n = 0;
        for (auto p : partition) {
            require(p >= 1, "InvalidSpec", "flag partition entries are positive");
            n += p;
        }
        return n;
    }
};

inline bool parabolic_membership(const Matrix& m, const Flag& flag) {
    std::size_t n = flag.dimension();
    require(m.rows() == n && m.cols() == n, "SizeMismatch", "matrix does not match the flag");
    require(!determinant(m).is_zero(), "Singular", "parabolic membership is about GL elements");
    require(!flag.basis.has_value(), "InvalidSpec", "membership is tested against standard flags");
    // block upper triangular with respect to the partition
    std::size_t row_block_start = 0;
    std::vector<std::size_t> starts;
    for (auto p : flag.partition) {
        starts.push_back(row_block_start);
        row_block_start += p;
    }
    for (std::size_t bi = 0; bi < flag.partition.size(); ++bi)
        for (std::size_t bj = 0; bj < bi; ++bj)
            for (std::size_t r = starts[bi]; r < starts[bi] + flag.partition[bi]; ++r)
                for (std::size_t c = starts[bj]; c < starts[bj] + flag.partition[bj]; ++c)
                    if (!m.at(r, c).is_zero()) return false;
    return true;
}

struct LeviSplit {
    Matrix levi, unip;
};

inline LeviSplit levi_split(const Matrix& m, const Flag& flag) {
    require(parabolic_membership(m, flag), "NonMember", "matrix is not in the parabolic");
    const FieldPtr& f = m.field();
    std::size_t n = flag.dimension();
    Matrix levi(f, n, n);
    std::size_t start = 0;
    for (auto p : flag.partition) {
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t j = 0; j < p; ++j)
                levi.at(start + i, start + j) = m.at(start + i, start + j);
        start += p;
    }
    Matrix unip = inverse(levi) * m;
    return LeviSplit{std::move(levi), std::move(unip)};
}

/// The GL(V)-orbit of a flag is classified by its dimension-jump partition;
/// a basis change does not alter it.
inline std::vector<std::size_t> flag_orbit_type(const Flag& flag) {
    if (flag.basis.has_value()) {
        require(flag.basis->rows() == flag.dimension(), "SizeMismatch",
                "flag basis size mismatch");
        require(!determinant(*flag.basis).is_zero(), "Singular", "flag basis must be invertible");
    }
    return flag.partition;
}

/// Number of flag orbits for dimension n = number of compositions = 2^{n-1}.
inline Integer flag_orbit_count(std::size_t n) {
    require(n >= 1, "InvalidSpec", "dimension must be positive");
    return pow_int(2, n - 1);
}

// ---------------------------------------------------------------------------
// SL2 automorphisms

struct InnerAut {
    Matrix g;
};
struct GraphAut {};
/// Entry-wise field automorphism: identity or the etale conjugation.
struct FieldAut {
    bool conjugate = true;
};
using Sl2Automorphism = std::variant<InnerAut, GraphAut, FieldAut>;

inline Matrix sl2_automorphism(const Sl2Automorphism& kind, const Matrix& m) {
    require(m.rows() == 2 && m.cols() == 2, "SizeMismatch", "sl2_automorphism expects 2x2");
    require(determinant(m) == m.field()->one(), "DeterminantNotOne",
            "sl2_automorphism expects an SL_2 element");
    return std::visit(
        [&](const auto& k) -> Matrix {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, InnerAut>) {
                require(!determinant(k.g).is_zero(), "Singular", "conjugating element singular");
                return k.g * m * inverse(k.g);
            } else if constexpr (std::is_same_v<T, GraphAut>) {
                return inverse(m).transpose();
            } else {
                if (!k.conjugate) return m;
                require(m.field()->kind() == FieldKind::QuadraticEtale, "DomainMismatch",
                        "field automorphism needs etale entries");
                Matrix r(m.field(), 2, 2);
                for (std::size_t i = 0; i < 2; ++i)
                    for (std::size_t j = 0; j < 2; ++j)
                        r.at(i, j) = etale_conj_norm(m.at(i, j)).conj;
                return r;
            }
        },
        kind);
}

} // namespace chevalley
