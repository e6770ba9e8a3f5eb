#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Exact arithmetic in the ring of integers O_d of Q(sqrt(-d)) and its
// nonzero ideals.  Elements are stored in the integral basis (1, w) with
//     w = sqrt(-d)         if d = 1, 2 (mod 4),
//     w = (1+sqrt(-d))/2   if d = 3 (mod 4).
// Ideals are stored as full-rank 2x2 row-style Hermite normal forms over Z,
// which gives a unique representative and an O(1) equality test.
namespace bcls::quadint {

using Int = mpz_class;

bool is_square_free(long d);

// The label of the field Q(sqrt(-d)); carries the conventions derived
// from d that element arithmetic needs.
struct FieldLabel {
    long d = 0;

    // w = (1+sqrt(-d))/2 instead of sqrt(-d)
    bool half_integral() const { return d % 4 == 3; }

    // w^2 = s1*w + s0
    long omega_sq_lin() const { return half_integral() ? 1 : 0; }
    long omega_sq_const() const { return half_integral() ? -(d + 1) / 4 : -d; }

    long trace_omega() const { return half_integral() ? 1 : 0; }
    long norm_omega() const { return half_integral() ? (d + 1) / 4 : d; }

    // field discriminant: -d if d = 3 (mod 4), else -4d
    long discriminant() const { return half_integral() ? -d : -4 * d; }

    bool operator==(const FieldLabel&) const = default;
};

FieldLabel make_field(long d);

// Element a + b*w of O_d.
struct AlgebraicInt {
    FieldLabel field;
    Int a, b;

    bool is_zero() const { return a == 0 && b == 0; }
    bool operator==(const AlgebraicInt&) const = default;
};

AlgebraicInt make_int(FieldLabel f, Int a, Int b);
AlgebraicInt make_int(FieldLabel f, long a, long b);

AlgebraicInt operator+(const AlgebraicInt& z, const AlgebraicInt& w);
AlgebraicInt operator-(const AlgebraicInt& z, const AlgebraicInt& w);
AlgebraicInt operator*(const AlgebraicInt& z, const AlgebraicInt& w);
AlgebraicInt operator-(const AlgebraicInt& z);

Int norm(const AlgebraicInt& z);   // z * conj(z), a non-negative rational integer
Int trace(const AlgebraicInt& z);
AlgebraicInt conj(const AlgebraicInt& z);

// Exact division in O_d: z/w if w | z, nullopt otherwise.
std::optional<AlgebraicInt> divide_exact(const AlgebraicInt& z, const AlgebraicInt& w);

bool is_unit(const AlgebraicInt& z);
// The unit group: {1,-1}, plus {i,-i} for d=1 and the six units for d=3.
std::vector<AlgebraicInt> units(FieldLabel f);
// true when z = u*w for a unit u
bool is_associate(const AlgebraicInt& z, const AlgebraicInt& w);

// Nonzero ideal of O_d.  Basis rows (a,0) and (b,c) in coordinates (1,w),
// i.e. I = a*Z + (b+c*w)*Z, with a,c > 0 and 0 <= b < a.
struct QIdeal {
    FieldLabel field;
    Int a, b, c;

    Int norm() const { return a * c; }
    bool is_unit_ideal() const { return a == 1 && c == 1; }
    bool contains(const AlgebraicInt& z) const;
    bool contains(const QIdeal& other) const;  // other is a subset, i.e. this | other

    bool operator==(const QIdeal&) const = default;
};

// Lexicographic order on the HNF triple (a, b, c); a total order on ideals.
int compare(const QIdeal& I, const QIdeal& J);

QIdeal ideal_from_gens(FieldLabel f, const std::vector<AlgebraicInt>& gens);
QIdeal principal_ideal(const AlgebraicInt& z);
QIdeal unit_ideal(FieldLabel f);
Int ideal_norm(const QIdeal& I);
QIdeal mul(const QIdeal& I, const QIdeal& J);
QIdeal conj_ideal(const QIdeal& I);

// sanity predicate: the stored lattice is closed under multiplication by w
bool is_ideal_lattice(const QIdeal& I);

struct PrimeFactorization {
    struct Term {
        QIdeal prime;
        long exponent;
    };
    std::vector<Term> terms;
};

// Prime ideals above the rational prime p, via the Kronecker symbol of the
// field discriminant: split (two primes of norm p), inert (one of norm p^2)
// or ramified (one of norm p, squared).
std::vector<QIdeal> primes_above(FieldLabel f, const Int& p);
PrimeFactorization factor_ideal(const QIdeal& I);

long class_number(FieldLabel f);

// Exhaustive search over elements of norm = norm(I); nullopt is a proof of
// non-principality.
std::optional<AlgebraicInt> is_principal(const QIdeal& I);

// All elements with the given norm, up to sign (one of {z,-z} listed).
std::vector<AlgebraicInt> elements_of_norm(FieldLabel f, const Int& n);

// The lexicographically smaller of {I, conj(I)}; the canonical representative
// of an ideal up to complex conjugation.
QIdeal canonical_up_to_conjugation(const QIdeal& I);

// --- text I/O ------------------------------------------------------------
//
// Element syntax: "a+b*w" in the basis above; "sqrt-D" for sqrt(-D) and the
// half-integral form "(a+b*sqrt-D)/2" are accepted and converted.  For d=1,
// "i" is an alias for w.  Ideals are comma-separated generator lists.

AlgebraicInt parse_element(FieldLabel f, const std::string& text);
QIdeal parse_ideal(FieldLabel f, const std::string& comma_separated_gens);
std::string to_string(const AlgebraicInt& z);
std::string to_string(const QIdeal& I);

}  // namespace bcls::quadint
