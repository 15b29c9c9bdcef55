#pragma once

#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "chevalley/matrix.hpp"

namespace chevalley {

enum class GroupFamily { GL, SL };

struct GroupSpec {
    GroupFamily family;
    std::size_t n;
    Integer q;
};

/// Hard cap for the exhaustive oracles; the CHEVALLEY_MAX_ENUM environment
/// variable overrides it.
inline Integer enumeration_cap() {
    if (const char* env = std::getenv("CHEVALLEY_MAX_ENUM")) return Integer(env);
    return Integer(10'000'000);
}

// ---------------------------------------------------------------------------
// Closed-form counting

/// |GL_n(F_q)| = (q^n - 1)(q^n - q)...(q^n - q^{n-1}); q is treated as an
/// opaque integer >= 2 (the formula is a polynomial identity in q).
inline Integer order_formula(const GroupSpec& spec) {
    require(spec.n >= 1, "InvalidSpec", "group size must be at least 1");
    require(spec.q >= 2, "InvalidSpec", "q must be at least 2");
    Integer qn = pow_int(spec.q, spec.n);
    Integer acc = 1, qi = 1;
    for (std::size_t i = 0; i < spec.n; ++i) {
        acc *= qn - qi;
        qi *= spec.q;
    }
    if (spec.family == GroupFamily::SL) acc /= spec.q - 1;
    return acc;
}

inline Integer center_order(const GroupSpec& spec) {
    if (spec.family == GroupFamily::GL) return spec.q - 1;
    // scalar matrices lambda*I with lambda^n = 1 in the cyclic group k^*
    return gcd_int(Integer(spec.n), spec.q - 1);
}

inline Integer projective_order(const GroupSpec& spec) {
    return order_formula(spec) / center_order(spec);
}

/// Gaussian binomial [n choose r]_q as a polynomial in q (ascending integer
/// coefficients), via the q-Pascal recursion.
inline std::vector<Integer> gaussian_binomial_poly(std::size_t n, std::size_t r) {
    require(r <= n, "InvalidSpec", "need 0 <= r <= n");
    // row-by-row: G(m, k) = G(m-1, k-1) + q^k G(m-1, k)
    std::vector<std::vector<std::vector<Integer>>> g(n + 1);
    for (std::size_t m = 0; m <= n; ++m) {
        g[m].resize(std::min(m, r) + 1);
        for (std::size_t k = 0; k < g[m].size(); ++k) {
            if (k == 0 || k == m) {
                g[m][k] = {Integer(1)};
                continue;
            }
            std::vector<Integer> acc = g[m - 1][k - 1];
            if (k < g[m - 1].size()) {
                const auto& shifted = g[m - 1][k];
                if (acc.size() < shifted.size() + k) acc.resize(shifted.size() + k, Integer(0));
                for (std::size_t i = 0; i < shifted.size(); ++i) acc[i + k] += shifted[i];
            }
            g[m][k] = std::move(acc);
        }
    }
    return g[n][r];
}

inline Integer grassmann_count(std::size_t n, std::size_t r, const Integer& q) {
    require(r <= n, "InvalidSpec", "need 0 <= r <= n");
    require(q >= 2, "InvalidSpec", "q must be at least 2");
    Integer acc = 0, qk = 1;
    for (const Integer& c : gaussian_binomial_poly(n, r)) {
        acc += c * qk;
        qk *= q;
    }
    return acc;
}

/// Number of Sylow p-subgroups of GL_n(F_p):
/// (1+p)(1+p+p^2)...(1+p+...+p^{n-1}); empty product 1 for n = 1.
inline Integer sylow_p_count(std::size_t n, const Integer& p) {
    require(is_prime(p), "NotPrime", p.str() + " is not prime");
    require(n >= 1, "InvalidSpec", "group size must be at least 1");
    Integer acc = 1;
    Integer partial = 1, pk = 1;
    for (std::size_t k = 1; k < n; ++k) {
        pk *= p;
        partial += pk;
        acc *= partial;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration (prime q only)

/// All elements of GL_n(F_p) or SL_n(F_p) in lexicographic row-major order of
/// canonical residues. Aborts with TooLarge beyond the enumeration cap.
inline std::vector<Matrix> enumerate_group(const GroupSpec& spec) {
    require(is_prime(spec.q), "InvalidSpec", "enumeration needs a prime modulus");
    require(order_formula(spec) <= enumeration_cap(), "TooLarge",
            "group order exceeds the enumeration cap");
    auto f = Field::prime(spec.q);
    std::size_t n = spec.n;
    long p = static_cast<long>(spec.q);
    std::vector<Scalar> residues;
    for (long v = 0; v < p; ++v) residues.push_back(f->from_integer(v));
    std::vector<Matrix> out;
    std::vector<std::size_t> idx(n * n, 0);
    Scalar one = f->one();
    for (;;) {
        Matrix m(f, n, n);
        for (std::size_t k = 0; k < n * n; ++k) m.at(k / n, k % n) = residues[idx[k]];
        Scalar det = determinant(m);
        if (spec.family == GroupFamily::GL ? !det.is_zero() : det == one)
            out.push_back(std::move(m));
        std::size_t c = n * n;
        while (c > 0) {
            --c;
            if (++idx[c] < residues.size()) break;
            idx[c] = 0;
            if (c == 0) return out;
        }
    }
}

/// Brute-force |GL_n(F_p)| or |SL_n(F_p)|, the oracle for order_formula.
inline Integer order_bruteforce(const GroupSpec& spec) {
    return Integer(enumerate_group(spec).size());
}

/// Brute-force Grassmannian count: canonicalise the span of every independent
/// r-tuple of vectors by reduced row echelon form.
inline Integer grassmann_bruteforce(std::size_t n, std::size_t r, const Integer& q) {
    require(is_prime(q), "InvalidSpec", "enumeration needs a prime modulus");
    require(r <= n, "InvalidSpec", "need 0 <= r <= n");
    if (r == 0) return 1;
    auto f = Field::prime(q);
    long p = static_cast<long>(q);
    // enumerate all r x n matrices, keep rank-r ones, canonicalise by RREF
    std::vector<std::string> seen;
    std::vector<std::size_t> idx(r * n, 0);
    for (;;) {
        Matrix m(f, r, n);
        for (std::size_t k = 0; k < r * n; ++k) m.at(k / n, k % n) = f->from_integer(Integer(idx[k]));
        // reduced row echelon form
        Matrix a = m;
        std::size_t row = 0;
        for (std::size_t col = 0; col < n && row < r; ++col) {
            std::size_t piv = row;
            while (piv < r && a.at(piv, col).is_zero()) ++piv;
            if (piv == r) continue;
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(row, j));
            Scalar inv = a.at(row, col).inv();
            for (std::size_t j = 0; j < n; ++j) a.at(row, j) = inv * a.at(row, j);
            for (std::size_t i = 0; i < r; ++i) {
                if (i == row || a.at(i, col).is_zero()) continue;
                Scalar t = a.at(i, col);
                for (std::size_t j = 0; j < n; ++j) a.at(i, j) = a.at(i, j) - t * a.at(row, j);
            }
            ++row;
        }
        if (row == r) seen.push_back(a.str());
        std::size_t c = r * n;
        bool done = false;
        while (c > 0) {
            --c;
            if (++idx[c] < static_cast<std::size_t>(p)) break;
            idx[c] = 0;
            if (c == 0) done = true;
        }
        if (done) break;
    }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    return Integer(seen.size());
}

/// Brute-force Sylow p-subgroup count of GL_n(F_p): distinct conjugates of
/// the unitriangular subgroup U.
inline Integer sylow_bruteforce(std::size_t n, const Integer& p) {
    GroupSpec spec{GroupFamily::GL, n, p};
    auto group = enumerate_group(spec);
    auto f = Field::prime(p);
    // collect U = upper unitriangular matrices
    std::vector<Matrix> u_elems;
    for (const auto& m : group) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            if (!m.at(i, i).is_one()) ok = false;
            for (std::size_t j = 0; j < i && ok; ++j)
                if (!m.at(i, j).is_zero()) ok = false;
        }
        if (ok) u_elems.push_back(m);
    }
    std::vector<std::string> conjugates;
    for (const auto& g : group) {
        Matrix gi = inverse(g);
        std::vector<std::string> keys;
        keys.reserve(u_elems.size());
        for (const auto& u : u_elems) keys.push_back((g * u * gi).str());
        std::sort(keys.begin(), keys.end());
        std::string subgroup_key;
        for (const auto& k : keys) subgroup_key += k + "|";
        conjugates.push_back(std::move(subgroup_key));
    }
    std::sort(conjugates.begin(), conjugates.end());
    conjugates.erase(std::unique(conjugates.begin(), conjugates.end()), conjugates.end());
    return Integer(conjugates.size());
}

// ---------------------------------------------------------------------------
// Conjugacy classes by orbit enumeration

struct ConjClass {
    Matrix rep; // lexicographically smallest element of the class
    std::size_t size;
};

struct ConjClassTable {
    std::vector<ConjClass> classes;
    Integer order;
};

inline ConjClassTable conj_classes(const GroupSpec& spec) {
    auto group = enumerate_group(spec); // lexicographic order
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < group.size(); ++i) index[group[i].str()] = i;
    std::vector<Matrix> inverses;
    inverses.reserve(group.size());
    for (const auto& g : group) inverses.push_back(inverse(g));
    std::vector<bool> used(group.size(), false);
    ConjClassTable table;
    table.order = Integer(group.size());
    for (std::size_t i = 0; i < group.size(); ++i) {
        if (used[i]) continue;
        std::vector<std::size_t> orbit;
        for (std::size_t gi = 0; gi < group.size(); ++gi) {
            Matrix conj = group[gi] * group[i] * inverses[gi];
            std::size_t k = index.at(conj.str());
            if (!used[k]) {
                used[k] = true;
                orbit.push_back(k);
            }
        }
        // the first unclassified element in enumeration order is the
        // lexicographically smallest representative
        table.classes.push_back(ConjClass{group[i], orbit.size()});
    }
    return table;
}

// ---------------------------------------------------------------------------
// Centralizer / normalizer of a block-scalar torus

struct TorusReport {
    Integer centralizer_order;
    Integer normalizer_order;
    Integer weyl_order;
};

/// Brute force over GL_n(F_q) for the torus T_{(n_1..n_r)} of block-scalar
/// diagonal matrices. Centralizing the torus as an algebraic family amounts
/// to commuting with the block idempotents E_1..E_r (so the answer matches
/// prod |GL_{n_i}(F_q)| even when q leaves too few units to separate blocks);
/// normalizing amounts to permuting equal-size block spaces.
inline TorusReport torus_centralizer_normalizer(const std::vector<std::size_t>& partition,
                                                const Integer& q) {
    std::size_t n = 0;
    for (auto p : partition) {
        require(p >= 1, "InvalidSpec", "partition entries are positive");
        n += p;
    }
    GroupSpec spec{GroupFamily::GL, n, q};
    auto group = enumerate_group(spec);
    auto f = Field::prime(q);
    std::vector<Matrix> idempotents;
    std::size_t start = 0;
    for (auto p : partition) {
        Matrix e(f, n, n);
        for (std::size_t k = 0; k < p; ++k) e.at(start + k, start + k) = f->one();
        idempotents.push_back(std::move(e));
        start += p;
    }
    std::vector<std::string> idem_keys;
    for (const auto& e : idempotents) idem_keys.push_back(e.str());
    std::sort(idem_keys.begin(), idem_keys.end());

    Integer centralizer = 0, normalizer = 0;
    for (const auto& g : group) {
        Matrix gi = inverse(g);
        bool central = true;
        std::vector<std::string> conj_keys;
        for (const auto& e : idempotents) {
            Matrix c = g * e * gi;
            if (!(c == e)) central = false;
            conj_keys.push_back(c.str());
        }
        if (central) {
            centralizer += 1;
            normalizer += 1;
            continue;
        }
        std::sort(conj_keys.begin(), conj_keys.end());
        if (conj_keys == idem_keys) normalizer += 1;
    }
    return TorusReport{centralizer, normalizer, normalizer / centralizer};
}

} // namespace chevalley
