#pragma once

#include <string>
#include <vector>

#include "chevalley/field.hpp"

namespace chevalley {

/// Dense univariate polynomial over an exact field, ascending coefficients,
/// canonical (no trailing zero coefficients; the zero polynomial is empty).
class Polynomial {
public:
    explicit Polynomial(FieldPtr field) : field_(std::move(field)) {}
    Polynomial(FieldPtr field, std::vector<Scalar> coeffs)
        : field_(std::move(field)), c_(std::move(coeffs)) {
        trim();
    }

    static Polynomial zero(const FieldPtr& f) { return Polynomial(f); }
    static Polynomial constant(const FieldPtr& f, const Scalar& v) {
        return Polynomial(f, {v});
    }
    static Polynomial variable(const FieldPtr& f) {
        return Polynomial(f, {f->zero(), f->one()});
    }
    /// (X - root)
    static Polynomial linear_root(const FieldPtr& f, const Scalar& root) {
        return Polynomial(f, {-root, f->one()});
    }

    const FieldPtr& field() const { return field_; }
    const std::vector<Scalar>& coefficients() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Scalar& leading() const { return c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    Scalar coeff(std::size_t k) const {
        return k < c_.size() ? c_[k] : field_->zero();
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Scalar> r;
        std::size_t n = std::max(a.c_.size(), b.c_.size());
        r.reserve(n);
        for (std::size_t i = 0; i < n; ++i) r.push_back(a.coeff(i) + b.coeff(i));
        return Polynomial(a.field_, std::move(r));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<Scalar> r;
        std::size_t n = std::max(a.c_.size(), b.c_.size());
        r.reserve(n);
        for (std::size_t i = 0; i < n; ++i) r.push_back(a.coeff(i) - b.coeff(i));
        return Polynomial(a.field_, std::move(r));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return zero(a.field_);
        std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1, a.field_->zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return Polynomial(a.field_, std::move(r));
    }
    friend Polynomial operator*(const Scalar& s, const Polynomial& a) {
        std::vector<Scalar> r;
        r.reserve(a.c_.size());
        for (const auto& ci : a.c_) r.push_back(s * ci);
        return Polynomial(a.field_, std::move(r));
    }

    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        require(!b.is_zero(), "DivisionByZero", "polynomial division by zero");
        Polynomial q = zero(a.field_), r = a;
        Scalar lead_inv = b.leading().inv();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
            Scalar coef = r.leading() * lead_inv;
            std::vector<Scalar> t(shift + 1, a.field_->zero());
            t[shift] = coef;
            Polynomial term(a.field_, std::move(t));
            q = q + term;
            r = r - term * b;
        }
        return {q, r};
    }

    Polynomial monic() const {
        require(!is_zero(), "DivisionByZero", "monic of the zero polynomial");
        return leading().inv() * *this;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return zero(field_);
        std::vector<Scalar> r;
        r.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            r.push_back(field_->from_integer(Integer(i)) * c_[i]);
        return Polynomial(field_, std::move(r));
    }

    Scalar eval(const Scalar& x) const {
        Scalar acc = field_->zero();
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Polynomial pow(std::size_t e) const {
        Polynomial r = constant(field_, field_->one());
        Polynomial b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    static Polynomial gcd(Polynomial a, Polynomial b) {
        while (!b.is_zero()) {
            Polynomial r = divmod(a, b).second;
            a = b;
            b = r;
        }
        return a.is_zero() ? a : a.monic();
    }

    bool is_squarefree() const {
        require(!is_zero(), "InvalidSpec", "squarefree test of the zero polynomial");
        Polynomial d = derivative();
        if (d.is_zero()) return false; // inseparable (only in characteristic p)
        return gcd(*this, d).degree() == 0;
    }

    /// Human-readable form, descending powers of X.
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (int d = degree(); d >= 0; --d) {
            const Scalar& cd = c_[static_cast<std::size_t>(d)];
            if (cd.is_zero()) continue;
            if (!out.empty()) out += " + ";
            std::string cs = cd.str();
            if (d == 0) {
                out += cs;
            } else {
                if (!cd.is_one()) {
                    if (cs.find_first_of("+-/", 1) != std::string::npos) cs = "(" + cs + ")";
                    out += cs + "*";
                }
                out += "X";
                if (d > 1) out += "^" + std::to_string(d);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    FieldPtr field_;
    std::vector<Scalar> c_;
};

/// g = gcd(a,b) monic together with u,v such that u*a + v*b = g.
struct PolyExtendedGcd {
    Polynomial g, u, v;
};

inline PolyExtendedGcd poly_ext_gcd(const Polynomial& a, const Polynomial& b) {
    const FieldPtr& f = a.field();
    Polynomial old_r = a, r = b;
    Polynomial old_u = Polynomial::constant(f, f->one()), u = Polynomial::zero(f);
    Polynomial old_v = Polynomial::zero(f), v = Polynomial::constant(f, f->one());
    while (!r.is_zero()) {
        auto [q, rem] = divmod(old_r, r);
        old_r = r;
        r = rem;
        Polynomial nu = old_u - q * u;
        old_u = u;
        u = nu;
        Polynomial nv = old_v - q * v;
        old_v = v;
        v = nv;
    }
    if (old_r.is_zero()) return {old_r, old_u, old_v};
    Scalar s = old_r.leading().inv();
    return {s * old_r, s * old_u, s * old_v};
}

} // namespace chevalley
