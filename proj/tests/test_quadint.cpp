#include "bcls/quadint.hpp"

#include <doctest.h>

#include <random>

using namespace bcls::quadint;

namespace {

// index of the rank-2 lattice spanned by the rows {g, g*w : g in gens},
// computed as the gcd of all 2x2 minors (independent of the HNF code)
Int minor_gcd_norm(FieldLabel f, const std::vector<AlgebraicInt>& gens) {
    std::vector<std::pair<Int, Int>> rows;
    AlgebraicInt w = make_int(f, 0, 1);
    for (const auto& g : gens) {
        rows.push_back({g.a, g.b});
        AlgebraicInt gw = g * w;
        rows.push_back({gw.a, gw.b});
    }
    Int g = 0;
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = i + 1; j < rows.size(); ++j) {
            Int det = rows[i].first * rows[j].second - rows[i].second * rows[j].first;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
        }
    return g;
}

AlgebraicInt random_element(FieldLabel f, std::mt19937& rng, int span = 9) {
    std::uniform_int_distribution<int> dist(-span, span);
    return make_int(f, dist(rng), dist(rng));
}

}  // namespace

TEST_CASE("element arithmetic and the paper's norm values") {
    auto f2 = make_field(2);
    // (1 + 3w)(1 - 3w) = 1 + 2*9 = 19 for w = sqrt(-2)
    auto z = make_int(f2, 1, 3) * make_int(f2, 1, -3);
    CHECK(z == make_int(f2, 19, 0));

    // z + 0 = z
    auto any = make_int(f2, -4, 7);
    CHECK(any + make_int(f2, 0, 0) == any);

    // d=7: w * (1 - w) with w^2 = w - 2, cross-checked by norm multiplicativity
    auto f7 = make_field(7);
    auto w = make_int(f7, 0, 1);
    auto p = w * (make_int(f7, 1, 0) - w);
    CHECK(p == make_int(f7, 2, 0));  // w - w^2 = 2
    CHECK(norm(p) == norm(w) * norm(make_int(f7, 1, -1)));

    CHECK(norm(make_int(f2, 1, 2)) == 9);                     // 1+2sqrt(-2)
    CHECK(norm(parse_element(f7, "(1+3*sqrt-7)/2")) == 16);   // Table 1
    CHECK(norm(make_int(f7, 0, 0)) == 0);
    CHECK(norm(parse_element(f7, "(7+sqrt-7)/2")) == 14);
    CHECK(norm(parse_element(make_field(11), "(5+sqrt-11)/2")) == 9);
}

TEST_CASE("conjugation is a norm-preserving involution") {
    auto f2 = make_field(2);
    CHECK(conj(make_int(f2, 1, 1)) == make_int(f2, 1, -1));

    std::mt19937 rng(42);
    for (long d : {1L, 2L, 3L, 7L, 11L, 19L, 5L, 6L}) {
        auto f = make_field(d);
        for (int k = 0; k < 50; ++k) {
            auto z = random_element(f, rng);
            CHECK(conj(conj(z)) == z);
            CHECK(norm(conj(z)) == norm(z));
            // z * conj(z) is the rational integer norm(z)
            CHECK(z * conj(z) == make_int(f, norm(z), Int(0)));
        }
    }
}

TEST_CASE("norm is multiplicative") {
    std::mt19937 rng(7);
    for (long d : {1L, 2L, 3L, 7L, 15L, 71L}) {
        auto f = make_field(d);
        for (int k = 0; k < 100; ++k) {
            auto z = random_element(f, rng), w = random_element(f, rng);
            CHECK(norm(z * w) == norm(z) * norm(w));
        }
    }
}

TEST_CASE("ideal_from_gens: HNF against the minor-gcd oracle") {
    auto f5 = make_field(5);
    auto I = ideal_from_gens(f5, {make_int(f5, 3, 0), make_int(f5, 1, 1)});
    CHECK(ideal_norm(I) == 3);
    CHECK(minor_gcd_norm(f5, {make_int(f5, 3, 0), make_int(f5, 1, 1)}) == 3);

    auto f2 = make_field(2);
    auto J = ideal_from_gens(f2, {make_int(f2, 1, 3)});
    CHECK(ideal_norm(J) == 19);  // the peripheral lattice index for <1+3w>

    CHECK(ideal_from_gens(f2, {make_int(f2, 1, 0)}) == unit_ideal(f2));
    CHECK(ideal_norm(unit_ideal(f2)) == 1);

    CHECK_THROWS_AS(ideal_from_gens(f2, {make_int(f2, 0, 0)}), std::invalid_argument);

    // idempotent: re-feeding the HNF basis reproduces the same HNF
    std::mt19937 rng(3);
    for (long d : {1L, 2L, 7L, 5L, 23L}) {
        auto f = make_field(d);
        for (int k = 0; k < 40; ++k) {
            auto g1 = random_element(f, rng), g2 = random_element(f, rng);
            if (g1.is_zero() && g2.is_zero()) continue;
            auto I1 = ideal_from_gens(f, {g1, g2});
            auto I2 = ideal_from_gens(f, {make_int(f, I1.a, Int(0)), make_int(f, I1.b, I1.c)});
            CHECK(I1 == I2);
            CHECK(is_ideal_lattice(I1));
            CHECK(minor_gcd_norm(f, {g1, g2}) == ideal_norm(I1));
        }
    }
}

TEST_CASE("ideal norms of the paper's principal levels") {
    auto f7 = make_field(7);
    CHECK(ideal_norm(principal_ideal(parse_element(f7, "(7+sqrt-7)/2"))) == 14);
    auto f11 = make_field(11);
    CHECK(ideal_norm(principal_ideal(parse_element(f11, "(5+sqrt-11)/2"))) == 9);
}

TEST_CASE("containment matches the integer row-span test") {
    std::mt19937 rng(11);
    for (long d : {2L, 7L, 5L}) {
        auto f = make_field(d);
        for (int k = 0; k < 60; ++k) {
            auto g = random_element(f, rng);
            if (g.is_zero()) continue;
            auto I = principal_ideal(g);
            std::uniform_int_distribution<int> dist(-5, 5);
            // s*(a,0) + t*(b,c) is in I for all integer s, t
            Int s = dist(rng), t = dist(rng);
            AlgebraicInt z = make_int(f, s * I.a + t * I.b, t * I.c);
            CHECK(I.contains(z));
            // shifting off-lattice by less than a leaves the span
            if (I.a > 1) CHECK(!I.contains(z + make_int(f, 1, 0)));
        }
    }
}

TEST_CASE("ideal multiplication: norm multiplicativity") {
    std::mt19937 rng(13);
    for (long d : {1L, 2L, 3L, 7L, 5L, 15L}) {
        auto f = make_field(d);
        for (int k = 0; k < 40; ++k) {
            auto g1 = random_element(f, rng), g2 = random_element(f, rng);
            if (g1.is_zero() || g2.is_zero()) continue;
            auto I = principal_ideal(g1), J = principal_ideal(g2);
            CHECK(ideal_norm(mul(I, J)) == ideal_norm(I) * ideal_norm(J));
        }
    }
}

TEST_CASE("factor_ideal reproduces the input and classifies correctly") {
    auto f2 = make_field(2);
    // <1+2sqrt(-2)> = P^2 with norm(P) = 3; (1-sqrt(-2))^2 is a unit multiple
    auto x = make_int(f2, 1, 2);
    auto fac = factor_ideal(principal_ideal(x));
    REQUIRE(fac.terms.size() == 1);
    CHECK(fac.terms[0].exponent == 2);
    CHECK(ideal_norm(fac.terms[0].prime) == 3);
    auto y = make_int(f2, 1, -1);
    CHECK(is_associate(y * y, x));

    // <(1+3sqrt(-7))/2> = P^4 with norm(P) = 2, by repeated exact division
    auto f7 = make_field(7);
    auto z = parse_element(f7, "(1+3*sqrt-7)/2");
    auto fac7 = factor_ideal(principal_ideal(z));
    REQUIRE(fac7.terms.size() == 1);
    CHECK(fac7.terms[0].exponent == 4);
    CHECK(ideal_norm(fac7.terms[0].prime) == 2);
    auto p = parse_element(f7, "(1-sqrt-7)/2");
    AlgebraicInt cur = z;
    for (int k = 0; k < 4; ++k) {
        auto q = divide_exact(cur, p);
        REQUIRE(q.has_value());
        cur = *q;
    }
    CHECK(is_unit(cur));

    // d=1: 3 is inert (kronecker(-4, 3) = -1)
    auto f1 = make_field(1);
    CHECK(mpz_kronecker_si(Int(-4).get_mpz_t(), 3) == -1);
    auto fac1 = factor_ideal(principal_ideal(make_int(f1, 3, 0)));
    REQUIRE(fac1.terms.size() == 1);
    CHECK(fac1.terms[0].exponent == 1);
    CHECK(ideal_norm(fac1.terms[0].prime) == 9);
}

TEST_CASE("factorization round-trip on random ideals") {
    std::mt19937 rng(17);
    for (long d : {1L, 2L, 3L, 7L, 11L, 19L, 5L, 6L, 15L, 23L}) {
        auto f = make_field(d);
        for (int k = 0; k < 25; ++k) {
            auto g1 = random_element(f, rng, 6), g2 = random_element(f, rng, 6);
            if (g1.is_zero() && g2.is_zero()) continue;
            auto I = ideal_from_gens(f, {g1, g2});
            auto fac = factor_ideal(I);  // throws if the product mismatches
            Int n = 1;
            for (const auto& t : fac.terms)
                for (long e = 0; e < t.exponent; ++e) n *= ideal_norm(t.prime);
            CHECK(n == ideal_norm(I));
        }
    }
}

TEST_CASE("class numbers") {
    CHECK(class_number(make_field(7)) == 1);
    CHECK(class_number(make_field(5)) == 2);
    CHECK(class_number(make_field(71)) == 7);
    // the class-number-one fields among the admissible d
    for (long d : {1L, 2L, 3L, 7L, 11L, 19L}) CHECK(class_number(make_field(d)) == 1);
    for (long d : {5L, 6L, 15L, 23L, 31L, 39L, 47L, 71L}) CHECK(class_number(make_field(d)) > 1);
}

TEST_CASE("is_principal") {
    auto f5 = make_field(5);
    auto P3 = ideal_from_gens(f5, {make_int(f5, 3, 0), make_int(f5, 1, 1)});
    CHECK(!is_principal(P3));  // a^2 + 5b^2 = 3 has no solution

    auto f2 = make_field(2);
    auto I = principal_ideal(make_int(f2, 3, 1));
    auto g = is_principal(I);
    REQUIRE(g.has_value());
    CHECK(is_associate(*g, make_int(f2, 3, 1)));

    auto f7 = make_field(7);
    auto P2 = ideal_from_gens(f7, {make_int(f7, 2, 0), make_int(f7, 0, 1)});
    auto g7 = is_principal(P2);
    REQUIRE(g7.has_value());
    CHECK(norm(*g7) == 2);
}

TEST_CASE("canonical representative up to conjugation") {
    auto f2 = make_field(2);
    auto self = principal_ideal(make_int(f2, 3, 0));
    CHECK(canonical_up_to_conjugation(self) == self);

    auto f7 = make_field(7);
    auto w = parse_element(f7, "(1+sqrt-7)/2");
    auto I = principal_ideal(w), J = conj_ideal(I);
    CHECK(!(I == J));  // the two primes above 2 are distinct
    CHECK(canonical_up_to_conjugation(I) == canonical_up_to_conjugation(J));

    auto A = principal_ideal(make_int(f2, 1, 3)), B = principal_ideal(make_int(f2, 1, -3));
    CHECK(canonical_up_to_conjugation(A) == canonical_up_to_conjugation(B));

    std::mt19937 rng(23);
    for (long d : {1L, 2L, 7L, 15L}) {
        auto f = make_field(d);
        for (int k = 0; k < 40; ++k) {
            auto g = random_element(f, rng);
            if (g.is_zero()) continue;
            auto I1 = principal_ideal(g);
            CHECK(conj_ideal(conj_ideal(I1)) == I1);
            auto c = canonical_up_to_conjugation(I1);
            CHECK(canonical_up_to_conjugation(c) == c);  // idempotent
        }
    }
}

TEST_CASE("element parsing and printing") {
    auto f2 = make_field(2);
    CHECK(parse_element(f2, "1+3*w") == make_int(f2, 1, 3));
    CHECK(parse_element(f2, "1+2*sqrt-2") == make_int(f2, 1, 2));
    CHECK(parse_element(f2, "-w") == make_int(f2, 0, -1));
    auto f7 = make_field(7);
    CHECK(parse_element(f7, "(1+3*sqrt-7)/2") == make_int(f7, -1, 3));
    CHECK(parse_element(f7, "sqrt-7") == make_int(f7, -1, 2));
    auto f1 = make_field(1);
    CHECK(parse_element(f1, "2+i") == make_int(f1, 2, 1));
    CHECK_THROWS(parse_element(f7, "(1+sqrt-7)/4"));
    CHECK_THROWS(parse_element(f7, "(2+sqrt-7)/2"));  // not integral
    CHECK_THROWS(parse_element(f2, "sqrt-3"));        // wrong field

    std::mt19937 rng(29);
    for (long d : {1L, 2L, 3L, 7L}) {
        auto f = make_field(d);
        for (int k = 0; k < 30; ++k) {
            auto z = random_element(f, rng);
            CHECK(parse_element(f, to_string(z)) == z);
        }
    }
}

TEST_CASE("units") {
    CHECK(units(make_field(1)).size() == 4);
    CHECK(units(make_field(3)).size() == 6);
    CHECK(units(make_field(2)).size() == 2);
    for (long d : {1L, 2L, 3L, 7L})
        for (const auto& u : units(make_field(d))) CHECK(norm(u) == 1);
}
