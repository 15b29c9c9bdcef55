#pragma once

#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "chevalley/error.hpp"
#include "chevalley/numbers.hpp"

namespace chevalley {

class Field;
class Scalar;
using FieldPtr = std::shared_ptr<const Field>;

enum class FieldKind { PrimeField, Rationals, QuadraticEtale, RationalFunctions };

namespace detail {

/// Dense polynomial over F_p, ascending coefficients, canonical (residues in
/// [0,p), no trailing zeros). Backs the rational function field F_p(t).
struct FpPoly {
    Integer p;
    std::vector<Integer> c;

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const Integer& leading() const { return c.back(); }

    static FpPoly zero(const Integer& p) { return FpPoly{p, {}}; }
    static FpPoly constant(const Integer& p, const Integer& v) {
        FpPoly r{p, {mod_floor(v, p)}};
        r.trim();
        return r;
    }
    static FpPoly variable(const Integer& p) { return FpPoly{p, {Integer(0), Integer(1)}}; }

    friend bool operator==(const FpPoly& a, const FpPoly& b) { return a.c == b.c; }

    friend FpPoly operator+(const FpPoly& a, const FpPoly& b) {
        FpPoly r{a.p, {}};
        r.c.resize(std::max(a.c.size(), b.c.size()), Integer(0));
        for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
        for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = mod_floor(r.c[i] + b.c[i], a.p);
        r.trim();
        return r;
    }
    friend FpPoly operator-(const FpPoly& a, const FpPoly& b) {
        FpPoly r{a.p, {}};
        r.c.resize(std::max(a.c.size(), b.c.size()), Integer(0));
        for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
        for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = mod_floor(r.c[i] - b.c[i], a.p);
        r.trim();
        return r;
    }
    friend FpPoly operator*(const FpPoly& a, const FpPoly& b) {
        if (a.is_zero() || b.is_zero()) return zero(a.p);
        FpPoly r{a.p, std::vector<Integer>(a.c.size() + b.c.size() - 1, Integer(0))};
        for (std::size_t i = 0; i < a.c.size(); ++i)
            for (std::size_t j = 0; j < b.c.size(); ++j)
                r.c[i + j] = mod_floor(r.c[i + j] + a.c[i] * b.c[j], a.p);
        r.trim();
        return r;
    }

    /// (quotient, remainder) with deg rem < deg divisor.
    friend std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) {
        require(!b.is_zero(), "DivisionByZero", "polynomial division by zero");
        FpPoly q = zero(a.p), r = a;
        Integer lead_inv = mod_inverse(b.leading(), a.p);
        while (!r.is_zero() && r.degree() >= b.degree()) {
            std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
            Integer coef = mod_floor(r.leading() * lead_inv, a.p);
            FpPoly term{a.p, std::vector<Integer>(shift + 1, Integer(0))};
            term.c[shift] = coef;
            q = q + term;
            r = r - term * b;
        }
        return {q, r};
    }

    static FpPoly gcd(FpPoly a, FpPoly b) {
        while (!b.is_zero()) {
            FpPoly r = divmod(a, b).second;
            a = b;
            b = r;
        }
        if (!a.is_zero() && a.leading() != 1) {
            Integer inv = mod_inverse(a.leading(), a.p);
            for (auto& ci : a.c) ci = mod_floor(ci * inv, a.p);
        }
        return a;
    }
};

/// Reduced fraction of FpPolys with monic denominator.
struct FuncRat {
    FpPoly num, den;

    void reduce() {
        if (num.is_zero()) {
            den = FpPoly::constant(num.p, 1);
            return;
        }
        FpPoly g = FpPoly::gcd(num, den);
        if (g.degree() > 0 || (g.degree() == 0 && g.c[0] != 1)) {
            num = divmod(num, g).first;
            den = divmod(den, g).first;
        }
        Integer inv = mod_inverse(den.leading(), num.p);
        for (auto& ci : num.c) ci = mod_floor(ci * inv, num.p);
        for (auto& ci : den.c) ci = mod_floor(ci * inv, num.p);
    }
    friend bool operator==(const FuncRat& a, const FuncRat& b) {
        return a.num == b.num && a.den == b.den;
    }
};

struct EtaleCoords {
    std::vector<Scalar> xs; // exactly two: x0 + x1*w
};

} // namespace detail

/// Element of one of the supported exact coefficient domains. Immutable value
/// in canonical form; equality is structural.
class Scalar {
public:
    using Payload = std::variant<Integer, Rational, detail::EtaleCoords, detail::FuncRat>;

    Scalar(FieldPtr field, Payload payload)
        : field_(std::move(field)), payload_(std::move(payload)) {}

    const FieldPtr& field() const { return field_; }
    const Payload& payload() const { return payload_; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar inv() const;
    Scalar pow(Integer e) const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string str() const;

    /// Residue payload for prime-field elements.
    const Integer& residue() const {
        require(std::holds_alternative<Integer>(payload_), "DomainMismatch",
                "residue() needs a prime-field scalar");
        return std::get<Integer>(payload_);
    }
    const Rational& rational() const {
        require(std::holds_alternative<Rational>(payload_), "DomainMismatch",
                "rational() needs a rational scalar");
        return std::get<Rational>(payload_);
    }
    /// Coordinates (x0, x1) of an etale element x0 + x1*w.
    const Scalar& etale_coord(int k) const {
        require(std::holds_alternative<detail::EtaleCoords>(payload_), "DomainMismatch",
                "etale coordinates of a non-etale scalar");
        return std::get<detail::EtaleCoords>(payload_).xs[static_cast<std::size_t>(k)];
    }

private:
    FieldPtr field_;
    Payload payload_;
};

/// Descriptor of a coefficient domain: F_p, Q, k[w] with w^2 = a over a base
/// k, or F_p(t). Construct through the static factories, which validate the
/// invariants (p prime, a != 0, etale nesting depth exactly one).
class Field : public std::enable_shared_from_this<Field> {
public:
    static FieldPtr prime(const Integer& p) {
        require(is_prime(p), "InvalidSpec", p.str() + " is not prime");
        auto f = std::shared_ptr<Field>(new Field());
        f->kind_ = FieldKind::PrimeField;
        f->p_ = p;
        return f;
    }

    static FieldPtr rationals() {
        auto f = std::shared_ptr<Field>(new Field());
        f->kind_ = FieldKind::Rationals;
        return f;
    }

    static FieldPtr rational_functions(const Integer& p) {
        require(is_prime(p), "InvalidSpec", p.str() + " is not prime");
        auto f = std::shared_ptr<Field>(new Field());
        f->kind_ = FieldKind::RationalFunctions;
        f->p_ = p;
        return f;
    }

    static FieldPtr quadratic_etale(const FieldPtr& base, const Scalar& a);

    FieldKind kind() const { return kind_; }
    const Integer& prime_modulus() const { return p_; }
    const FieldPtr& base() const {
        require(kind_ == FieldKind::QuadraticEtale, "DomainMismatch", "field has no base");
        return base_;
    }
    const Scalar& etale_param() const {
        require(kind_ == FieldKind::QuadraticEtale, "DomainMismatch", "field has no parameter");
        return *ext_param_;
    }

    Integer characteristic() const {
        switch (kind_) {
            case FieldKind::PrimeField:
            case FieldKind::RationalFunctions: return p_;
            case FieldKind::Rationals: return 0;
            case FieldKind::QuadraticEtale: return base_->characteristic();
        }
        return 0;
    }

    bool same(const Field& other) const {
        if (this == &other) return true;
        if (kind_ != other.kind_) return false;
        switch (kind_) {
            case FieldKind::Rationals: return true;
            case FieldKind::PrimeField:
            case FieldKind::RationalFunctions: return p_ == other.p_;
            case FieldKind::QuadraticEtale:
                return base_->same(*other.base_) && *ext_param_ == *other.ext_param_;
        }
        return false;
    }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_integer(const Integer& v) const;
    /// Etale generator w (with w^2 = parameter a).
    Scalar generator() const;
    /// Etale element x0 + x1*w from base-field coordinates.
    Scalar etale_element(const Scalar& x0, const Scalar& x1) const;
    /// For F_p(t): the variable t.
    Scalar variable() const;

    /// Whether the etale algebra is split (parameter is a square in the base),
    /// i.e. isomorphic to k x k and carrying zero divisors.
    bool is_split() const;

    Scalar parse(std::string_view text) const;
    std::string describe() const;

private:
    Field() = default;

    FieldKind kind_ = FieldKind::Rationals;
    Integer p_;
    FieldPtr base_;
    std::shared_ptr<const Scalar> ext_param_;
};

// ---------------------------------------------------------------------------
// Field factories and element construction

inline FieldPtr Field::quadratic_etale(const FieldPtr& base, const Scalar& a) {
    require(base->kind() != FieldKind::QuadraticEtale, "InvalidSpec",
            "etale algebras nest over a base field only");
    require(base->same(*a.field()), "DomainMismatch", "etale parameter lives in the base field");
    require(!a.is_zero(), "InvalidSpec", "etale parameter must be nonzero");
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = FieldKind::QuadraticEtale;
    f->base_ = base;
    f->ext_param_ = std::make_shared<const Scalar>(a);
    return f;
}

inline Scalar Field::from_integer(const Integer& v) const {
    switch (kind_) {
        case FieldKind::PrimeField: return Scalar(shared_from_this(), mod_floor(v, p_));
        case FieldKind::Rationals: return Scalar(shared_from_this(), Rational(v));
        case FieldKind::RationalFunctions: {
            detail::FuncRat fr{detail::FpPoly::constant(p_, v), detail::FpPoly::constant(p_, 1)};
            return Scalar(shared_from_this(), fr);
        }
        case FieldKind::QuadraticEtale: {
            detail::EtaleCoords e;
            e.xs.push_back(base_->from_integer(v));
            e.xs.push_back(base_->zero());
            return Scalar(shared_from_this(), std::move(e));
        }
    }
    raise("InvalidSpec", "unknown field kind");
}

inline Scalar Field::zero() const { return from_integer(0); }
inline Scalar Field::one() const { return from_integer(1); }

inline Scalar Field::generator() const {
    require(kind_ == FieldKind::QuadraticEtale, "DomainMismatch", "generator needs an etale algebra");
    detail::EtaleCoords e;
    e.xs.push_back(base_->zero());
    e.xs.push_back(base_->one());
    return Scalar(shared_from_this(), std::move(e));
}

inline Scalar Field::etale_element(const Scalar& x0, const Scalar& x1) const {
    require(kind_ == FieldKind::QuadraticEtale, "DomainMismatch",
            "etale_element needs an etale algebra");
    require(base_->same(*x0.field()) && base_->same(*x1.field()), "DomainMismatch",
            "etale coordinates live in the base field");
    detail::EtaleCoords e;
    e.xs.push_back(x0);
    e.xs.push_back(x1);
    return Scalar(shared_from_this(), std::move(e));
}

inline Scalar Field::variable() const {
    require(kind_ == FieldKind::RationalFunctions, "DomainMismatch",
            "variable needs a rational function field");
    detail::FuncRat fr{detail::FpPoly::variable(p_), detail::FpPoly::constant(p_, 1)};
    return Scalar(shared_from_this(), fr);
}

// ---------------------------------------------------------------------------
// Scalar arithmetic

namespace detail {
inline void check_same_domain(const Scalar& a, const Scalar& b) {
    require(a.field()->same(*b.field()), "DomainMismatch",
            "operands live in different coefficient domains");
}
} // namespace detail

inline bool Scalar::is_zero() const {
    return std::visit(
        [](const auto& v) -> bool {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Integer>) return v == 0;
            else if constexpr (std::is_same_v<T, Rational>) return v == 0;
            else if constexpr (std::is_same_v<T, detail::EtaleCoords>)
                return v.xs[0].is_zero() && v.xs[1].is_zero();
            else return v.num.is_zero();
        },
        payload_);
}

inline bool Scalar::is_one() const { return *this == field_->one(); }

inline Scalar operator+(const Scalar& a, const Scalar& b) {
    detail::check_same_domain(a, b);
    switch (a.field()->kind()) {
        case FieldKind::PrimeField:
            return Scalar(a.field(), mod_floor(std::get<Integer>(a.payload_) +
                                                   std::get<Integer>(b.payload_),
                                               a.field()->prime_modulus()));
        case FieldKind::Rationals:
            return Scalar(a.field(), Rational(std::get<Rational>(a.payload_) +
                                              std::get<Rational>(b.payload_)));
        case FieldKind::QuadraticEtale: {
            const auto& x = std::get<detail::EtaleCoords>(a.payload_);
            const auto& y = std::get<detail::EtaleCoords>(b.payload_);
            detail::EtaleCoords r;
            r.xs.push_back(x.xs[0] + y.xs[0]);
            r.xs.push_back(x.xs[1] + y.xs[1]);
            return Scalar(a.field(), std::move(r));
        }
        case FieldKind::RationalFunctions: {
            const auto& x = std::get<detail::FuncRat>(a.payload_);
            const auto& y = std::get<detail::FuncRat>(b.payload_);
            detail::FuncRat r{x.num * y.den + y.num * x.den, x.den * y.den};
            r.reduce();
            return Scalar(a.field(), std::move(r));
        }
    }
    raise("InvalidSpec", "unknown field kind");
}

inline Scalar Scalar::operator-() const {
    switch (field_->kind()) {
        case FieldKind::PrimeField:
            return Scalar(field_, mod_floor(-std::get<Integer>(payload_), field_->prime_modulus()));
        case FieldKind::Rationals: return Scalar(field_, Rational(-std::get<Rational>(payload_)));
        case FieldKind::QuadraticEtale: {
            const auto& x = std::get<detail::EtaleCoords>(payload_);
            detail::EtaleCoords r;
            r.xs.push_back(-x.xs[0]);
            r.xs.push_back(-x.xs[1]);
            return Scalar(field_, std::move(r));
        }
        case FieldKind::RationalFunctions: {
            const auto& x = std::get<detail::FuncRat>(payload_);
            detail::FuncRat r{detail::FpPoly::zero(x.num.p) - x.num, x.den};
            return Scalar(field_, std::move(r));
        }
    }
    raise("InvalidSpec", "unknown field kind");
}

inline Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

inline Scalar operator*(const Scalar& a, const Scalar& b) {
    detail::check_same_domain(a, b);
    switch (a.field()->kind()) {
        case FieldKind::PrimeField:
            return Scalar(a.field(), mod_floor(std::get<Integer>(a.payload_) *
                                                   std::get<Integer>(b.payload_),
                                               a.field()->prime_modulus()));
        case FieldKind::Rationals:
            return Scalar(a.field(), Rational(std::get<Rational>(a.payload_) *
                                              std::get<Rational>(b.payload_)));
        case FieldKind::QuadraticEtale: {
            const auto& x = std::get<detail::EtaleCoords>(a.payload_);
            const auto& y = std::get<detail::EtaleCoords>(b.payload_);
            const Scalar& p = a.field()->etale_param();
            detail::EtaleCoords r;
            r.xs.push_back(x.xs[0] * y.xs[0] + p * (x.xs[1] * y.xs[1]));
            r.xs.push_back(x.xs[0] * y.xs[1] + x.xs[1] * y.xs[0]);
            return Scalar(a.field(), std::move(r));
        }
        case FieldKind::RationalFunctions: {
            const auto& x = std::get<detail::FuncRat>(a.payload_);
            const auto& y = std::get<detail::FuncRat>(b.payload_);
            detail::FuncRat r{x.num * y.num, x.den * y.den};
            r.reduce();
            return Scalar(a.field(), std::move(r));
        }
    }
    raise("InvalidSpec", "unknown field kind");
}

inline Scalar Scalar::inv() const {
    require(!is_zero(), "DivisionByZero", "inverse of zero");
    switch (field_->kind()) {
        case FieldKind::PrimeField:
            return Scalar(field_, mod_inverse(std::get<Integer>(payload_), field_->prime_modulus()));
        case FieldKind::Rationals:
            return Scalar(field_, Rational(1 / std::get<Rational>(payload_)));
        case FieldKind::QuadraticEtale: {
            // x^{-1} = conj(x)/N(x); N(x) = 0 on a nonzero x marks a zero
            // divisor of the split algebra, not a division by zero.
            const auto& x = std::get<detail::EtaleCoords>(payload_);
            const Scalar& p = field_->etale_param();
            Scalar norm = x.xs[0] * x.xs[0] - p * (x.xs[1] * x.xs[1]);
            require(!norm.is_zero(), "NonInvertible",
                    "zero divisor in a split quadratic etale algebra");
            Scalar ninv = norm.inv();
            detail::EtaleCoords r;
            r.xs.push_back(x.xs[0] * ninv);
            r.xs.push_back(-(x.xs[1] * ninv));
            return Scalar(field_, std::move(r));
        }
        case FieldKind::RationalFunctions: {
            const auto& x = std::get<detail::FuncRat>(payload_);
            detail::FuncRat r{x.den, x.num};
            r.reduce();
            return Scalar(field_, std::move(r));
        }
    }
    raise("InvalidSpec", "unknown field kind");
}

inline Scalar operator/(const Scalar& a, const Scalar& b) {
    detail::check_same_domain(a, b);
    require(!b.is_zero(), "DivisionByZero", "division by zero");
    return a * b.inv();
}

inline Scalar Scalar::pow(Integer e) const {
    Scalar base = e < 0 ? inv() : *this;
    if (e < 0) e = -e;
    Scalar r = field_->one();
    while (e > 0) {
        if ((e & 1) != 0) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

inline bool operator==(const Scalar& a, const Scalar& b) {
    if (!a.field()->same(*b.field())) return false;
    return std::visit(
        [&](const auto& x) -> bool {
            using T = std::decay_t<decltype(x)>;
            const auto& y = std::get<T>(b.payload_);
            if constexpr (std::is_same_v<T, detail::EtaleCoords>)
                return x.xs[0] == y.xs[0] && x.xs[1] == y.xs[1];
            else
                return x == y;
        },
        a.payload_);
}

// ---------------------------------------------------------------------------
// Named field operations

/// Euler's criterion; pre: prime field, x != 0. The exhaustive residue scan
/// lives in the test oracles.
inline bool is_square(const Scalar& x) {
    require(x.field()->kind() == FieldKind::PrimeField, "DomainMismatch",
            "is_square expects a prime-field element");
    require(!x.is_zero(), "ZeroInput", "is_square expects a nonzero element");
    const Integer& p = x.field()->prime_modulus();
    if (p == 2) return true;
    return boost::multiprecision::powm(x.residue(), (p - 1) / 2, p) == 1;
}

struct EtaleConjNorm {
    Scalar conj;  // x0 - x1*w
    Scalar norm;  // x0^2 - a*x1^2, in the base field
    Scalar trace; // 2*x0, in the base field
};

inline EtaleConjNorm etale_conj_norm(const Scalar& x) {
    require(x.field()->kind() == FieldKind::QuadraticEtale, "DomainMismatch",
            "etale_conj_norm expects a quadratic etale element");
    const Scalar& a = x.field()->etale_param();
    const Scalar& x0 = x.etale_coord(0);
    const Scalar& x1 = x.etale_coord(1);
    detail::EtaleCoords c;
    c.xs.push_back(x0);
    c.xs.push_back(-x1);
    Scalar two = x0.field()->from_integer(2);
    return EtaleConjNorm{Scalar(x.field(), std::move(c)), x0 * x0 - a * (x1 * x1), two * x0};
}

inline bool Field::is_split() const {
    require(kind_ == FieldKind::QuadraticEtale, "DomainMismatch", "is_split needs an etale algebra");
    const Scalar& a = *ext_param_;
    switch (base_->kind()) {
        case FieldKind::PrimeField: {
            if (base_->prime_modulus() == 2) return true;
            return is_square(a);
        }
        case FieldKind::Rationals: {
            const Rational& r = a.rational();
            if (r < 0) return false;
            Integer n = boost::multiprecision::numerator(r);
            Integer d = boost::multiprecision::denominator(r);
            Integer sn = boost::multiprecision::sqrt(n), sd = boost::multiprecision::sqrt(d);
            return sn * sn == n && sd * sd == d;
        }
        case FieldKind::RationalFunctions: {
            // f/g is a square iff f*g is a square in F_p[t] (g monic, reduced).
            const auto& fr = std::get<detail::FuncRat>(a.payload());
            detail::FpPoly prod = fr.num * fr.den;
            if (prod.degree() % 2 != 0) return false;
            const Integer& p = prod.p;
            if (p == 2) {
                // Squaring is the Frobenius: g^2 has only even-degree terms.
                for (std::size_t i = 0; i < prod.c.size(); ++i)
                    if (i % 2 == 1 && prod.c[i] != 0) return false;
                return true;
            }
            // Coefficient matching from the leading term downward.
            auto sqrt_mod = [&](const Integer& v) -> std::optional<Integer> {
                for (Integer y = 0; y < p; ++y)
                    if (mod_floor(y * y, p) == v) return y;
                return std::nullopt;
            };
            int half = prod.degree() / 2;
            std::vector<Integer> g(static_cast<std::size_t>(half) + 1, Integer(0));
            auto lead = sqrt_mod(prod.leading());
            if (!lead) return false;
            g[static_cast<std::size_t>(half)] = *lead;
            Integer twice_lead_inv = mod_inverse(2 * *lead, p);
            for (int k = half - 1; k >= 0; --k) {
                // coefficient of t^{k+half} in g^2 must match prod
                Integer acc = 0;
                for (int i = k + 1; i < half; ++i) {
                    int j = k + half - i;
                    if (j >= 0 && j <= half && i <= half)
                        acc += g[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(j)];
                }
                Integer target = prod.c[static_cast<std::size_t>(k + half)];
                g[static_cast<std::size_t>(k)] =
                    mod_floor((target - acc) * twice_lead_inv, p);
            }
            detail::FpPoly gp{p, g};
            gp.trim();
            return gp * gp == prod;
        }
        default: return false;
    }
}

// ---------------------------------------------------------------------------
// Text form. Grammar: integers `-3`, fractions `2/7`, etale `3+2w`
// (coefficients with internal signs or slashes are parenthesised), rational
// functions `(t^2+1)/(t)`. Printing and parsing round-trip exactly.

namespace detail {

inline std::string fp_poly_str(const FpPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int d = f.degree(); d >= 0; --d) {
        const Integer& cd = f.c[static_cast<std::size_t>(d)];
        if (cd == 0) continue;
        if (!out.empty()) out += "+";
        if (d == 0) {
            out += cd.str();
        } else {
            if (cd != 1) out += cd.str();
            out += "t";
            if (d > 1) out += "^" + std::to_string(d);
        }
    }
    return out;
}

inline std::string funcrat_str(const FuncRat& f) {
    if (f.den.degree() == 0 && f.den.c[0] == 1) return fp_poly_str(f.num);
    return "(" + fp_poly_str(f.num) + ")/(" + fp_poly_str(f.den) + ")";
}

class ScalarParser {
public:
    ScalarParser(std::string_view text, FieldPtr field)
        : s_(text), field_(std::move(field)) {}

    Scalar run() {
        Scalar v = parse_field_element(*field_);
        skip_ws();
        require(pos_ == s_.size(), "ParseError", "trailing input in scalar literal");
        return v;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
    FieldPtr field_;

    void skip_ws() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
    }
    bool eof() { return pos_ >= s_.size(); }
    char peek() { return s_[pos_]; }
    bool accept(char c) {
        if (!eof() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        require(accept(c), "ParseError", std::string("expected '") + c + "' in scalar literal");
    }

    Integer parse_integer() {
        skip_ws();
        std::size_t start = pos_;
        if (!eof() && (peek() == '-' || peek() == '+')) ++pos_;
        std::size_t digits = 0;
        while (!eof() && peek() >= '0' && peek() <= '9') {
            ++pos_;
            ++digits;
        }
        require(digits > 0, "ParseError", "expected an integer");
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }

    Scalar parse_field_element(const Field& f) {
        switch (f.kind()) {
            case FieldKind::PrimeField: return f.from_integer(parse_integer());
            case FieldKind::Rationals: {
                Integer num = parse_integer();
                if (accept('/')) {
                    Integer den = parse_integer();
                    require(den != 0, "ParseError", "zero denominator");
                    return Scalar(f.shared_from_this(), Rational(num, den));
                }
                return f.from_integer(num);
            }
            case FieldKind::RationalFunctions: return parse_funcrat(f);
            case FieldKind::QuadraticEtale: return parse_etale(f);
        }
        raise("ParseError", "unknown field kind");
    }

    FpPoly parse_fp_poly(const Integer& p) {
        FpPoly acc = FpPoly::zero(p);
        skip_ws();
        bool first = true;
        while (true) {
            skip_ws();
            int sign = 1;
            if (accept('+')) {
                sign = 1;
            } else if (accept('-')) {
                sign = -1;
            } else if (!first) {
                break;
            }
            skip_ws();
            Integer coef = 1;
            bool saw_digits = false;
            if (!eof() && peek() >= '0' && peek() <= '9') {
                coef = parse_integer();
                saw_digits = true;
            }
            std::size_t deg = 0;
            if (!eof() && peek() == 't') {
                ++pos_;
                deg = 1;
                if (accept('^')) deg = static_cast<std::size_t>(parse_integer());
            } else {
                require(saw_digits, "ParseError", "expected a polynomial term");
            }
            FpPoly term{p, std::vector<Integer>(deg + 1, Integer(0))};
            term.c[deg] = mod_floor(sign * coef, p);
            term.trim();
            acc = acc + term;
            first = false;
            skip_ws();
            if (eof() || (peek() != '+' && peek() != '-')) break;
        }
        return acc;
    }

    Scalar parse_funcrat(const Field& f) {
        const Integer& p = f.prime_modulus();
        skip_ws();
        FuncRat fr{FpPoly::zero(p), FpPoly::constant(p, 1)};
        if (!eof() && peek() == '(') {
            expect('(');
            fr.num = parse_fp_poly(p);
            expect(')');
            skip_ws();
            if (accept('/')) {
                expect('(');
                fr.den = parse_fp_poly(p);
                expect(')');
            }
        } else {
            fr.num = parse_fp_poly(p);
        }
        require(!fr.den.is_zero(), "ParseError", "zero denominator");
        fr.reduce();
        return Scalar(f.shared_from_this(), fr);
    }

    std::string balanced_group() {
        expect('(');
        std::size_t depth = 1, start = pos_;
        while (pos_ < s_.size() && depth > 0) {
            if (s_[pos_] == '(') ++depth;
            if (s_[pos_] == ')') --depth;
            ++pos_;
        }
        require(depth == 0, "ParseError", "unbalanced parentheses");
        return std::string(s_.substr(start, pos_ - 1 - start));
    }

    // base-field coefficient of an etale literal, optionally parenthesised;
    // a group followed by /(...) is the rational-function ratio form itself.
    Scalar parse_etale_coeff(const Field& base, bool negate) {
        skip_ws();
        Scalar v = base.zero();
        if (!eof() && peek() == '(') {
            std::string g1 = balanced_group();
            if (!eof() && peek() == '/') {
                ++pos_;
                std::string g2 = balanced_group();
                v = base.parse("(" + g1 + ")/(" + g2 + ")");
            } else {
                v = base.parse(g1);
            }
        } else {
            v = parse_field_element(base);
        }
        return negate ? -v : v;
    }

    Scalar parse_etale(const Field& f) {
        const Field& base = *f.base();
        // Split the text at top-level into [x0
        // term][sign][x1 term 'w']; handle pure forms `w`, `-w`, `3w`, `3`.
        skip_ws();
        Scalar x0 = base.zero(), x1 = base.zero();
        bool neg = accept('-');
        // detect leading generator
        skip_ws();
        if (!eof() && peek() == 'w') {
            ++pos_;
            x1 = neg ? -base.one() : base.one();
            return make(f, x0, x1);
        }
        Scalar first = parse_etale_coeff(base, neg);
        skip_ws();
        if (!eof() && peek() == 'w') {
            ++pos_;
            return make(f, x0, first);
        }
        x0 = first;
        skip_ws();
        if (eof()) return make(f, x0, x1);
        bool neg2;
        if (accept('+')) neg2 = false;
        else if (accept('-')) neg2 = true;
        else raise("ParseError", "expected '+' or '-' in etale literal");
        skip_ws();
        if (!eof() && peek() == 'w') {
            ++pos_;
            x1 = neg2 ? -base.one() : base.one();
            return make(f, x0, x1);
        }
        x1 = parse_etale_coeff(base, neg2);
        skip_ws();
        expect('w');
        return make(f, x0, x1);
    }

    static Scalar make(const Field& f, const Scalar& x0, const Scalar& x1) {
        EtaleCoords e;
        e.xs.push_back(x0);
        e.xs.push_back(x1);
        return Scalar(f.shared_from_this(), std::move(e));
    }
};

inline bool needs_parens(const std::string& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '/' || c == '(') return true;
        if ((c == '+' || c == '-') && i > 0) return true;
    }
    return false;
}

} // namespace detail

inline std::string Scalar::str() const {
    switch (field_->kind()) {
        case FieldKind::PrimeField: return std::get<Integer>(payload_).str();
        case FieldKind::Rationals: {
            const Rational& r = std::get<Rational>(payload_);
            Integer num = boost::multiprecision::numerator(r);
            Integer den = boost::multiprecision::denominator(r);
            if (den == 1) return num.str();
            return num.str() + "/" + den.str();
        }
        case FieldKind::RationalFunctions:
            return detail::funcrat_str(std::get<detail::FuncRat>(payload_));
        case FieldKind::QuadraticEtale: {
            const Scalar& x0 = etale_coord(0);
            const Scalar& x1 = etale_coord(1);
            if (x1.is_zero()) return x0.str();
            std::string wpart;
            if (x1.is_one()) {
                wpart = "w";
            } else if ((-x1).is_one()) {
                wpart = "-w";
            } else {
                std::string c = x1.str();
                wpart = detail::needs_parens(c) ? "(" + c + ")w" : c + "w";
            }
            if (x0.is_zero()) return wpart;
            std::string head = x0.str();
            // Over F_p(t) a polynomial head would fuse with the +/- that
            // separates the w-term, so it is always parenthesised.
            if (field_->base()->kind() == FieldKind::RationalFunctions)
                head = "(" + head + ")";
            if (wpart[0] != '-') return head + "+" + wpart;
            return head + wpart;
        }
    }
    raise("InvalidSpec", "unknown field kind");
}

inline Scalar Field::parse(std::string_view text) const {
    return detail::ScalarParser(text, shared_from_this()).run();
}

inline std::string Field::describe() const {
    switch (kind_) {
        case FieldKind::PrimeField: return "fp:" + p_.str();
        case FieldKind::Rationals: return "q";
        case FieldKind::RationalFunctions: return "fpt:" + p_.str();
        case FieldKind::QuadraticEtale:
            return "etale:" + base_->describe() + ":" + ext_param_->str();
    }
    return "?";
}

/// Parses a field spec of the CLI grammar: `q`, `fp:P`, `fpt:P`,
/// `etale:<base>:<a>` (e.g. `etale:q:2`, `etale:fp:5:2`, `etale:fpt:2:t`).
inline FieldPtr parse_field_spec(std::string_view spec) {
    auto next = [&](std::string_view& rest) -> std::string {
        auto colon = rest.find(':');
        std::string tok(rest.substr(0, colon));
        rest = colon == std::string_view::npos ? std::string_view{} : rest.substr(colon + 1);
        return tok;
    };
    std::string_view rest = spec;
    std::string head = next(rest);
    if (head == "q") {
        require(rest.empty(), "UsageError", "unexpected suffix in field spec");
        return Field::rationals();
    }
    if (head == "fp") return Field::prime(Integer(next(rest)));
    if (head == "fpt") return Field::rational_functions(Integer(next(rest)));
    if (head == "etale") {
        std::string base_kind = next(rest);
        FieldPtr base;
        if (base_kind == "q") {
            base = Field::rationals();
        } else if (base_kind == "fp") {
            base = Field::prime(Integer(next(rest)));
        } else if (base_kind == "fpt") {
            base = Field::rational_functions(Integer(next(rest)));
        } else {
            raise("UsageError", "unknown etale base '" + base_kind + "'");
        }
        require(!rest.empty(), "UsageError", "missing etale parameter");
        return Field::quadratic_etale(base, base->parse(rest));
    }
    raise("UsageError", "unknown field spec '" + std::string(spec) + "'");
}

} // namespace chevalley
