#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

#include "chevalley/error.hpp"

namespace chevalley {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer abs_int(const Integer& a) { return a < 0 ? Integer(-a) : a; }

/// Least nonnegative residue of a mod m (m > 0).
inline Integer mod_floor(const Integer& a, const Integer& m) {
    Integer r = a % m;
    if (r < 0) r += m;
    return r;
}

/// Floor division (quotient rounding toward -inf), for any sign of b != 0.
inline Integer div_floor(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
    return q;
}

inline Integer gcd_int(const Integer& a, const Integer& b) {
    return boost::multiprecision::gcd(a, b);
}

inline Integer pow_int(const Integer& base, std::size_t e) {
    Integer r = 1, b = base;
    std::size_t k = e;
    while (k > 0) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

/// x with a*x = gcd(a,m) mod m; raises DivisionByZero when gcd != 1.
inline Integer mod_inverse(const Integer& a, const Integer& m) {
    Integer old_r = mod_floor(a, m), r = m;
    Integer old_s = 1, s = 0;
    while (r != 0) {
        Integer q = old_r / r;
        Integer t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    require(old_r == 1, "DivisionByZero", "element not invertible modulo " + m.str());
    return mod_floor(old_s, m);
}

/// Deterministic Miller-Rabin (the 12-base set is exact below 3.3e24, far
/// beyond desk scale).
inline bool is_prime(const Integer& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Integer d = n - 1;
    unsigned r = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++r;
    }
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        Integer x = boost::multiprecision::powm(Integer(a), d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned i = 0; i + 1 < r; ++i) {
            x = (x * x) % n;
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

/// Prime factorization by trial division; adequate for the desk-scale inputs
/// this library targets.
inline std::vector<std::pair<Integer, std::size_t>> factorize(Integer n) {
    require(n >= 1, "InvalidSpec", "factorize expects a positive integer");
    std::vector<std::pair<Integer, std::size_t>> out;
    auto strip = [&](const Integer& p) {
        std::size_t e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) out.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    for (Integer p = 5; p * p <= n; p += 6) {
        strip(p);
        strip(p + 2);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

/// All positive divisors of |n|, unsorted magnitude order not guaranteed.
inline std::vector<Integer> positive_divisors(const Integer& n) {
    Integer a = abs_int(n);
    require(a != 0, "InvalidSpec", "divisors of zero requested");
    std::vector<Integer> divs{1};
    for (const auto& [p, e] : factorize(a)) {
        std::size_t base = divs.size();
        Integer pk = 1;
        for (std::size_t k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

} // namespace chevalley
