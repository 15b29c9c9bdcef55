#pragma once

#include <string>
#include <vector>

#include "chevalley/matrix.hpp"

namespace chevalley {

enum class FormFamily { Sp, SOEven, SOOdd };

/// Form matrix and index bookkeeping for Sp_2l, SO_2l and SO_{2l+1} in the
/// split realizations: Sp uses J = [[0, I_l], [-I_l, 0]], SO even uses
/// [[0, I_l], [I_l, 0]] and SO odd prepends the 1x1 block (1).
/// Paper-style indices {1..l, -1..-l} (plus 0 in the odd case) map onto rows
/// (e_1..e_l, e_{-1}..e_{-l}) with 0 first when present.
class FormSpec {
public:
    static FormSpec make(FormFamily family, std::size_t l, const FieldPtr& field) {
        require(l >= 1, "InvalidRank", "rank must be at least 1");
        bool char2 = field->characteristic() == 2;
        if (family != FormFamily::Sp)
            require(!char2, "InvalidSpec", "orthogonal forms require characteristic != 2");
        FormSpec s;
        s.family_ = family;
        s.l_ = l;
        s.field_ = field;
        s.char2_warning_ = char2; // Sp over F_2 still makes sense; flagged
        std::size_t n = s.dim();
        Matrix j(field, n, n);
        std::size_t off = family == FormFamily::SOOdd ? 1 : 0;
        if (family == FormFamily::SOOdd) j.at(0, 0) = field->one();
        for (std::size_t i = 0; i < l; ++i) {
            j.at(off + i, off + l + i) = field->one();
            j.at(off + l + i, off + i) =
                family == FormFamily::Sp ? -field->one() : field->one();
        }
        s.j_ = std::make_shared<Matrix>(std::move(j));
        return s;
    }

    FormFamily family() const { return family_; }
    std::size_t rank() const { return l_; }
    const FieldPtr& field() const { return field_; }
    const Matrix& form_matrix() const { return *j_; }
    bool char2_warning() const { return char2_warning_; }

    std::size_t dim() const { return family_ == FormFamily::SOOdd ? 2 * l_ + 1 : 2 * l_; }

    /// Row of the basis vector with paper index in {-l..-1, 0, 1..l}.
    std::size_t row(long index) const {
        std::size_t off = family_ == FormFamily::SOOdd ? 1 : 0;
        if (index == 0) {
            require(family_ == FormFamily::SOOdd, "IndexError", "index 0 needs an odd form");
            return 0;
        }
        require(index != 0 && static_cast<std::size_t>(index > 0 ? index : -index) <= l_,
                "IndexError", "index out of range");
        if (index > 0) return off + static_cast<std::size_t>(index) - 1;
        return off + l_ + static_cast<std::size_t>(-index) - 1;
    }

    /// e_{a,b} in paper indexing.
    Matrix unit(long a, long b) const {
        return Matrix::unit(field_, dim(), row(a), row(b));
    }

private:
    FormFamily family_ = FormFamily::Sp;
    std::size_t l_ = 1;
    FieldPtr field_;
    std::shared_ptr<Matrix> j_;
    bool char2_warning_ = false;
};

/// tM J M = J
inline bool group_member(const Matrix& m, const FormSpec& form) {
    require(m.rows() == form.dim() && m.cols() == form.dim(), "SizeMismatch",
            "matrix size does not match the form");
    return m.transpose() * form.form_matrix() * m == form.form_matrix();
}

/// tX J = -J X
inline bool lie_member(const Matrix& x, const FormSpec& form) {
    require(x.rows() == form.dim() && x.cols() == form.dim(), "SizeMismatch",
            "matrix size does not match the form");
    return x.transpose() * form.form_matrix() == -(form.form_matrix() * x);
}

/// Basis of the Lie algebra, with printable labels; counts are 2l^2+l (Sp),
/// 2l^2-l (SO even), 2l^2+l (SO odd).
inline std::vector<std::pair<std::string, Matrix>> lie_basis_labeled(const FormSpec& form) {
    std::size_t l = form.rank();
    std::vector<std::pair<std::string, Matrix>> out;
    auto tag = [](long a, long b) {
        return "e(" + std::to_string(a) + "," + std::to_string(b) + ")";
    };
    auto pair_vec = [&](long a1, long b1, long a2, long b2, bool plus) {
        Matrix v = plus ? form.unit(a1, b1) + form.unit(a2, b2)
                        : form.unit(a1, b1) - form.unit(a2, b2);
        std::string label = tag(a1, b1) + (plus ? "+" : "-") + tag(a2, b2);
        out.emplace_back(std::move(label), std::move(v));
    };
    // Cartan diagonals first
    for (long i = 1; i <= static_cast<long>(l); ++i) pair_vec(i, i, -i, -i, false);
    for (long i = 1; i <= static_cast<long>(l); ++i)
        for (long j = 1; j <= static_cast<long>(l); ++j)
            if (i != j) pair_vec(i, j, -j, -i, false);
    bool sp = form.family() == FormFamily::Sp;
    for (long i = 1; i <= static_cast<long>(l); ++i)
        for (long j = i + 1; j <= static_cast<long>(l); ++j) {
            pair_vec(i, -j, j, -i, sp);
            pair_vec(-i, j, -j, i, sp);
        }
    if (sp) {
        for (long i = 1; i <= static_cast<long>(l); ++i) {
            out.emplace_back(tag(i, -i), form.unit(i, -i));
            out.emplace_back(tag(-i, i), form.unit(-i, i));
        }
    }
    if (form.family() == FormFamily::SOOdd) {
        for (long i = 1; i <= static_cast<long>(l); ++i) {
            pair_vec(i, 0, 0, -i, false);
            pair_vec(0, i, -i, 0, false);
        }
    }
    return out;
}

inline std::vector<Matrix> lie_basis(const FormSpec& form) {
    std::vector<Matrix> out;
    for (auto& [label, m] : lie_basis_labeled(form)) out.push_back(std::move(m));
    return out;
}

/// Chevalley generators of Sp_2l, the five one-parameter families.
enum class SpGenKind {
    Long,       // x_{i,j}(t)  = I + t(e_{i,j} - e_{-j,-i}),  i != j
    ShortPlus,  // x_{i,-j}(t) = I + t(e_{i,-j} + e_{j,-i}),  i < j
    ShortMinus, // x_{-i,j}(t) = I + t(e_{-i,j} + e_{-j,i}),  i < j
    DiagPos,    // x_{i,-i}(t) = I + t e_{i,-i}
    DiagNeg     // x_{-i,i}(t) = I + t e_{-i,i}
};

inline Matrix sp_chevalley(const FormSpec& form, SpGenKind kind, long i, long j, const Scalar& t) {
    require(form.family() == FormFamily::Sp, "InvalidSpec", "Chevalley generators are symplectic");
    long l = static_cast<long>(form.rank());
    Matrix id = Matrix::identity(form.field(), form.dim());
    switch (kind) {
        case SpGenKind::Long:
            require(i != j && i >= 1 && j >= 1 && i <= l && j <= l, "IndexError",
                    "Long needs 1 <= i != j <= l");
            return id + t * (form.unit(i, j) - form.unit(-j, -i));
        case SpGenKind::ShortPlus:
            require(i < j && i >= 1 && j <= l, "IndexError", "ShortPlus needs 1 <= i < j <= l");
            return id + t * (form.unit(i, -j) + form.unit(j, -i));
        case SpGenKind::ShortMinus:
            require(i < j && i >= 1 && j <= l, "IndexError", "ShortMinus needs 1 <= i < j <= l");
            return id + t * (form.unit(-i, j) + form.unit(-j, i));
        case SpGenKind::DiagPos:
            require(i >= 1 && i <= l, "IndexError", "DiagPos needs 1 <= i <= l");
            return id + t * form.unit(i, -i);
        case SpGenKind::DiagNeg:
            require(i >= 1 && i <= l, "IndexError", "DiagNeg needs 1 <= i <= l");
            return id + t * form.unit(-i, i);
    }
    raise("IndexError", "unknown generator kind");
}

/// All Chevalley generators for a fixed parameter t, in a deterministic order.
inline std::vector<Matrix> sp_chevalley_all(const FormSpec& form, const Scalar& t) {
    std::vector<Matrix> out;
    long l = static_cast<long>(form.rank());
    for (long i = 1; i <= l; ++i)
        for (long j = 1; j <= l; ++j)
            if (i != j) out.push_back(sp_chevalley(form, SpGenKind::Long, i, j, t));
    for (long i = 1; i <= l; ++i)
        for (long j = i + 1; j <= l; ++j) {
            out.push_back(sp_chevalley(form, SpGenKind::ShortPlus, i, j, t));
            out.push_back(sp_chevalley(form, SpGenKind::ShortMinus, i, j, t));
        }
    for (long i = 1; i <= l; ++i) {
        out.push_back(sp_chevalley(form, SpGenKind::DiagPos, i, 0, t));
        out.push_back(sp_chevalley(form, SpGenKind::DiagNeg, i, 0, t));
    }
    return out;
}

/// lambda with tM J M = lambda J (the multiplicative similitude character of
/// GSp with kernel Sp).
inline Scalar similitude_factor(const Matrix& m, const FormSpec& form) {
    require(form.family() == FormFamily::Sp, "InvalidSpec", "similitude factor is symplectic");
    require(m.rows() == form.dim() && m.cols() == form.dim(), "SizeMismatch",
            "matrix size does not match the form");
    Matrix lhs = m.transpose() * form.form_matrix() * m;
    const Matrix& j = form.form_matrix();
    Scalar lambda = m.field()->zero();
    bool found = false;
    for (std::size_t r = 0; r < j.rows() && !found; ++r)
        for (std::size_t c = 0; c < j.cols() && !found; ++c)
            if (!j.at(r, c).is_zero()) {
                lambda = lhs.at(r, c) / j.at(r, c);
                found = true;
            }
    require(found && lhs == lambda * j, "NotSimilitude",
            "tM J M is not a scalar multiple of J");
    require(!lambda.is_zero(), "NotSimilitude", "similitude factor must be nonzero");
    return lambda;
}

} // namespace chevalley
