#include <catch2/catch_amalgamated.hpp>

#include "chevalley/field.hpp"
#include "test_util.hpp"

using namespace chevalley;
using testutil::random_scalar;

namespace {

std::vector<FieldPtr> sample_fields() {
    auto f5 = Field::prime(5);
    auto f7 = Field::prime(7);
    auto q = Field::rationals();
    auto f2t = Field::rational_functions(2);
    return {
        f5,
        q,
        f2t,
        Field::quadratic_etale(f7, f7->from_integer(3)),
        Field::quadratic_etale(q, q->from_integer(2)),
        Field::quadratic_etale(f2t, f2t->variable()),
    };
}

} // namespace

TEST_CASE("prime field inverse matches the exhaustive oracle", "[field]") {
    auto f5 = Field::prime(5);
    // oracle: scan all residues for 2*x = 1
    Scalar two = f5->from_integer(2);
    Scalar oracle = f5->zero();
    for (long r = 0; r < 5; ++r)
        if ((two * f5->from_integer(r)).is_one()) oracle = f5->from_integer(r);
    REQUIRE(oracle == f5->from_integer(3));
    REQUIRE(two.inv() == oracle);

    for (long p : {2, 3, 5, 7, 11}) {
        auto fp = Field::prime(p);
        for (long x = 1; x < p; ++x) {
            Scalar s = fp->from_integer(x);
            REQUIRE((s * s.inv()).is_one());
        }
        REQUIRE(fp->one().inv() == fp->one());
    }
}

TEST_CASE("field axioms hold on random samples in every domain", "[field]") {
    for (const auto& f : sample_fields()) {
        for (int trial = 0; trial < 40; ++trial) {
            Scalar x = random_scalar(f), y = random_scalar(f), z = random_scalar(f);
            REQUIRE((x + y) + z == x + (y + z));
            REQUIRE(x + y == y + x);
            REQUIRE(x * y == y * x);
            REQUIRE((x * y) * z == x * (y * z));
            REQUIRE(x * (y + z) == x * y + x * z);
            REQUIRE(x + (-x) == f->zero());
            if (!x.is_zero() && f->kind() != FieldKind::QuadraticEtale)
                REQUIRE((x * x.inv()).is_one());
        }
    }
}

TEST_CASE("Fermat identity x^p = x over small prime fields", "[field]") {
    for (long p : {2, 3, 5, 7}) {
        auto fp = Field::prime(p);
        for (long x = 0; x < p; ++x) {
            Scalar s = fp->from_integer(x);
            REQUIRE(s.pow(p) == s);
        }
    }
}

TEST_CASE("is_square agrees with scanning all residues", "[field]") {
    auto f7 = Field::prime(7);
    REQUIRE(is_square(f7->from_integer(4)));
    auto f5 = Field::prime(5);
    REQUIRE_FALSE(is_square(f5->from_integer(3)));

    for (long p : {3, 5, 7, 11, 13}) {
        auto fp = Field::prime(p);
        std::size_t square_count = 0;
        for (long x = 1; x < p; ++x) {
            bool oracle = false;
            for (long y = 1; y < p; ++y)
                if ((y * y) % p == x) oracle = true;
            REQUIRE(is_square(fp->from_integer(x)) == oracle);
            if (oracle) ++square_count;
        }
        REQUIRE(square_count == static_cast<std::size_t>((p - 1) / 2));
    }
    REQUIRE_THROWS_AS(is_square(f5->zero()), Error);
}

TEST_CASE("etale conjugation, norm and trace", "[field]") {
    auto q = Field::rationals();
    auto k = Field::quadratic_etale(q, q->from_integer(2));
    Scalar x = k->etale_element(q->from_integer(3), q->from_integer(2));
    auto r = etale_conj_norm(x);
    REQUIRE(r.norm == q->one());
    REQUIRE(r.trace == q->from_integer(6));
    REQUIRE(r.conj == k->etale_element(q->from_integer(3), q->from_integer(-2)));

    auto one = etale_conj_norm(k->one());
    REQUIRE(one.conj == k->one());
    REQUIRE(one.norm == q->one());
    REQUIRE(one.trace == q->from_integer(2));

    auto f7 = Field::prime(7);
    auto k7 = Field::quadratic_etale(f7, f7->from_integer(3));
    for (int trial = 0; trial < 100; ++trial) {
        Scalar a = random_scalar(k7), b = random_scalar(k7);
        REQUIRE(etale_conj_norm(a * b).norm == etale_conj_norm(a).norm * etale_conj_norm(b).norm);
    }
}

TEST_CASE("split etale algebras expose zero divisors as NonInvertible", "[field]") {
    auto q = Field::rationals();
    auto split = Field::quadratic_etale(q, q->from_integer(1)); // w^2 = 1
    Scalar zdiv = split->etale_element(q->one(), q->one());     // (1+w)(1-w) = 0
    REQUIRE((zdiv * split->etale_element(q->one(), q->from_integer(-1))).is_zero());
    try {
        zdiv.inv();
        FAIL("expected NonInvertible");
    } catch (const Error& e) {
        REQUIRE(e.code() == "NonInvertible");
    }
    REQUIRE(split->is_split());
    REQUIRE_FALSE(Field::quadratic_etale(q, q->from_integer(2))->is_split());
}

TEST_CASE("etale unit counts split versus field case over F_p", "[field]") {
    for (long p : {3, 5, 7}) {
        auto fp = Field::prime(p);
        for (long a = 1; a < p; ++a) {
            auto k = Field::quadratic_etale(fp, fp->from_integer(a));
            std::size_t invertible = 0, zero_divisors = 0;
            for (long x0 = 0; x0 < p; ++x0)
                for (long x1 = 0; x1 < p; ++x1) {
                    if (x0 == 0 && x1 == 0) continue;
                    Scalar s = k->etale_element(fp->from_integer(x0), fp->from_integer(x1));
                    try {
                        Scalar si = s.inv();
                        REQUIRE((s * si).is_one());
                        ++invertible;
                    } catch (const Error& e) {
                        REQUIRE(e.code() == "NonInvertible");
                        ++zero_divisors;
                    }
                }
            if (k->is_split()) {
                REQUIRE(invertible == static_cast<std::size_t>((p - 1) * (p - 1)));
                REQUIRE(zero_divisors == static_cast<std::size_t>(2 * (p - 1)));
            } else {
                REQUIRE(invertible == static_cast<std::size_t>(p * p - 1));
                REQUIRE(zero_divisors == 0);
            }
        }
    }
}

TEST_CASE("division errors carry their distinct codes", "[field]") {
    auto f5 = Field::prime(5);
    try {
        (void)(f5->one() / f5->zero());
        FAIL("expected DivisionByZero");
    } catch (const Error& e) {
        REQUIRE(e.code() == "DivisionByZero");
    }
    auto f7 = Field::prime(7);
    try {
        (void)(f5->one() + f7->one());
        FAIL("expected DomainMismatch");
    } catch (const Error& e) {
        REQUIRE(e.code() == "DomainMismatch");
    }
}

TEST_CASE("rational function field arithmetic stays reduced", "[field]") {
    auto f2t = Field::rational_functions(2);
    Scalar t = f2t->variable();
    Scalar a = (t * t + f2t->one()) / t; // (t^2+1)/t
    REQUIRE(a * t == t * t + f2t->one());
    Scalar b = t / (t * t + t); // = 1/(t+1)
    REQUIRE(b * (t + f2t->one()) == f2t->one());
    // char 2: (t+1)^2 = t^2+1
    REQUIRE((t + f2t->one()) * (t + f2t->one()) == t * t + f2t->one());
}

TEST_CASE("text form round-trips exactly in every domain", "[field]") {
    for (const auto& f : sample_fields()) {
        for (int trial = 0; trial < 60; ++trial) {
            Scalar x = random_scalar(f);
            Scalar re = f->parse(x.str());
            REQUIRE(re == x);
            REQUIRE(re.str() == x.str());
        }
    }
    auto q = Field::rationals();
    REQUIRE(q->parse("-3").str() == "-3");
    REQUIRE(q->parse("2/7").str() == "2/7");
    auto k = Field::quadratic_etale(q, q->from_integer(2));
    REQUIRE(k->parse("3+2w").str() == "3+2w");
    auto f2t = Field::rational_functions(2);
    REQUIRE(f2t->parse("(t^2+1)/(t)").str() == "(t^2+1)/(t)");
}

TEST_CASE("field spec grammar", "[field]") {
    REQUIRE(parse_field_spec("q")->kind() == FieldKind::Rationals);
    REQUIRE(parse_field_spec("fp:5")->prime_modulus() == 5);
    REQUIRE(parse_field_spec("fpt:2")->kind() == FieldKind::RationalFunctions);
    auto k = parse_field_spec("etale:fp:5:2");
    REQUIRE(k->kind() == FieldKind::QuadraticEtale);
    REQUIRE(k->etale_param() == Field::prime(5)->from_integer(2));
    auto kt = parse_field_spec("etale:fpt:2:t");
    REQUIRE(kt->base()->kind() == FieldKind::RationalFunctions);
    REQUIRE_THROWS_AS(parse_field_spec("fp:6"), Error);
    REQUIRE_THROWS_AS(Field::quadratic_etale(kt, kt->one()), Error);
}
