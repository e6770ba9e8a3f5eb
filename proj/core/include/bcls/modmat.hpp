#pragma once

#include "bcls/quadint.hpp"

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

// Finite quotient rings O_d/I, the groups PSL(2, O_d/I) by formula and by
// explicit enumeration, cusp counting, and torsion detection in the
// principal congruence subgroup of level I.
namespace bcls::modmat {

using quadint::AlgebraicInt;
using quadint::FieldLabel;
using quadint::Int;
using quadint::QIdeal;

// O_d/I with canonical coset representatives (x, y), 0 <= x < a, 0 <= y < c
// for the HNF basis rows (a,0),(b,c); elements are indexed x + a*y.
class ResidueRing {
  public:
    explicit ResidueRing(QIdeal ideal);

    const QIdeal& ideal() const { return ideal_; }
    long size() const { return n_; }

    long reduce(const AlgebraicInt& z) const;
    long zero() const { return 0; }
    long one() const { return one_; }
    long omega() const { return omega_; }

    long add(long u, long v) const;
    long neg(long u) const;
    long mul(long u, long v) const;

    AlgebraicInt lift(long u) const;  // the canonical representative

  private:
    QIdeal ideal_;
    long n_, A_, B_, C_;
    long one_, omega_;
    long s0_, s1_;  // w^2 = s1*w + s0
    bool tables_;
    std::vector<int32_t> add_tab_, mul_tab_, neg_tab_;

    long reduce_xy(long x, long y) const;
    long mul_raw(long u, long v) const;
};

struct MatModI {
    long a, b, c, d;  // ring element indices
};

struct FiniteMatrixGroup {
    QIdeal ideal;
    std::vector<uint64_t> elements;  // packed +-normalized matrices, sorted
    std::vector<MatModI> generators;

    size_t order() const { return elements.size(); }
};

// |SL(2, O_d/I)| = N(I)^3 * prod_{P | I} (1 - N(P)^-2), from the ideal
// factorization; |PSL| halves it unless 2 lies in I (when -Id = Id).
Int sl2_order(const QIdeal& I);
Int psl2_order(const QIdeal& I);

// Explicit closure of the elementary generators; an independent oracle for
// the order formula. Throws when psl2_order(I) exceeds `bound`.
FiniteMatrixGroup build_group(const QIdeal& I, size_t bound = 1'000'000);

// |PSL(2,O_d/I)| / |B|, with B generated by the images of the translations
// x -> x+1, x -> x+w and the unit diagonals diag(v, v^-1); class number one
// fields only.
long cusp_count(FieldLabel f, const QIdeal& I, size_t bound = 1'000'000);

struct TorsionWitness {
    AlgebraicInt a, b, c, d;  // matrix in SL(2, O_d), congruent to +-Id mod I
    int order;                // 2 or 3 (in PSL)
};

// A finite-order element of the principal congruence subgroup of level I, if
// one exists. Fast path: none unless 2 or 3 lies in I (elliptic traces are
// the rational integers 0, +-1). The search is bounded by coordinate height.
std::optional<TorsionWitness> torsion_in_gamma(FieldLabel f, const QIdeal& I, long height = 10);

}  // namespace bcls::modmat
