#pragma once

#include "bcls/fpgroup.hpp"
#include "bcls/quadint.hpp"

#include <array>
#include <optional>
#include <string>

// Presentations of PSL(2, O_d) with explicit matrix generators (class number
// one fields), peripheral word construction, and the quotient presentations
// used by the parabolic-generation criterion.
namespace bcls::bianchi {

using quadint::AlgebraicInt;
using quadint::FieldLabel;
using quadint::Int;
using quadint::QIdeal;

struct Mat2 {
    AlgebraicInt a, b, c, d;

    bool operator==(const Mat2&) const = default;
};

Mat2 mat_mul(const Mat2& x, const Mat2& y);
Mat2 mat_inverse(const Mat2& m);  // requires det = 1
AlgebraicInt mat_det(const Mat2& m);
bool is_plus_minus_identity(const Mat2& m);

struct BianchiPresentation {
    long d = 0;
    fpgroup::Presentation pres;
    std::vector<Mat2> matrices;  // one per generator
    int t_index = -1, u_index = -1;  // cusp translations x->x+1 and x->x+w
};

// evaluate a word under the generator -> matrix map (in SL; compare mod +-Id)
Mat2 eval_word(const BianchiPresentation& bp, const fpgroup::Word& w);

// true iff every relator evaluates to +-Id
bool verify_matrices(const BianchiPresentation& bp);

// Parse the presentation data format: `field:`, `gens: ... ; rels: ...`,
// one `matrix: g = [[e,e],[e,e]]` block per generator (entries in element
// syntax), and `cusp: t u` naming the translation generators. Lines starting
// with '#' are comments.
BianchiPresentation load_presentation_text(const std::string& text);

// The supported class-number-one fields.
const std::array<long, 6>& swan_fields();

// Embedded presentation for d in {1,2,3,7,11,19}; gated by verify_matrices.
const BianchiPresentation& presentation_of(long d);

struct PeripheralData {
    QIdeal ideal;
    fpgroup::Word w1, w2;  // words in t, u whose exponent rows span the ideal lattice
};

// Words t^p u^q, t^r u^s for the HNF rows (p,q), (r,s) of I; their exponent
// matrix has |det| = norm(I).
PeripheralData peripheral_words(long d, const QIdeal& I);

// presentation_of(d) plus the two peripheral words as relators
fpgroup::Presentation quotient_presentation(long d, const QIdeal& I);

enum class ParabolicResult { Generated, NotGenerated, Unknown };

struct ParabolicTestOptions {
    fpgroup::EnumLimits limits{};
    fpgroup::Strategy strategy = fpgroup::Strategy::HltLookahead;
    // on overflow, look for a finite-index subgroup with infinite
    // abelianization (which certifies NotGenerated); 0 disables
    size_t low_index_bound = 5;
};

struct ParabolicTestOutcome {
    ParabolicResult result = ParabolicResult::Unknown;
    std::optional<size_t> quotient_index;  // when the enumeration closed
    std::string detail;
};

// The coset-enumeration criterion: the principal congruence subgroup of
// level I is generated by parabolics iff the quotient by the peripheral
// normal closure has order psl2_order(I).
ParabolicTestOutcome parabolic_generation_test(long d, const QIdeal& I,
                                               const ParabolicTestOptions& opts = {});

}  // namespace bcls::bianchi
