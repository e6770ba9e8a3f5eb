#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Finitely presented groups: words stored run-length, Todd-Coxeter coset
// enumeration (HLT with lookahead, Felsch by flag), Reidemeister-Schreier
// rewriting, and abelianization via integer Smith normal form.
namespace bcls::fpgroup {

using Int = mpz_class;

// ---- words ---------------------------------------------------------------

// Generator-exponent sequence, freely reduced on construction: adjacent
// syllables have distinct generators and nonzero exponents.
struct Word {
    struct Syllable {
        int gen;
        long exp;
        bool operator==(const Syllable&) const = default;
    };
    std::vector<Syllable> syl;

    bool empty() const { return syl.empty(); }
    long length() const;  // letter count, sum of |exp|
    bool operator==(const Word&) const = default;
};

Word make_word(std::vector<Word::Syllable> syllables);  // reduces freely
Word concat(const Word& a, const Word& b);
Word inverse(const Word& a);
Word power(const Word& a, long e);
Word cyclically_reduce(const Word& a);

// letters: positive gen g -> 2g, inverse -> 2g+1
std::vector<int> to_letters(const Word& a);
Word from_letters(const std::vector<int>& letters);

// ---- presentations ---------------------------------------------------------

struct Presentation {
    std::vector<std::string> gens;
    std::vector<Word> relators;  // freely and cyclically reduced

    int ngens() const { return static_cast<int>(gens.size()); }
};

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

// Grammar: `gens: a t u ; rels: a^2, (t*a)^3, t*u*t^-1*u^-1`
// with `*` concatenation, `^` integer exponents, parentheses allowed.
Presentation parse_presentation(const std::string& text);
Word parse_word(const Presentation& pres, const std::string& text);
std::string print_word(const Presentation& pres, const Word& w);
std::string print_presentation(const Presentation& pres);

// Appends words as relators (reduced); the result is a quotient of `pres`.
Presentation add_relators(const Presentation& pres, const std::vector<Word>& words);

// ---- integer matrices and Smith normal form ---------------------------------

struct IntMatrix {
    size_t rows = 0, cols = 0;
    std::vector<Int> a;  // row-major

    IntMatrix() = default;
    IntMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}
    Int& at(size_t i, size_t j) { return a[i * cols + j]; }
    const Int& at(size_t i, size_t j) const { return a[i * cols + j]; }
};

struct SnfResult {
    std::vector<Int> invariant_factors;  // d1 | d2 | ... | dr, all positive
    size_t rank = 0;
    // optional unimodular transforms with U * A * V = diag(invariant_factors)
    std::optional<IntMatrix> U, V;
};

SnfResult smith_normal_form(const IntMatrix& m, bool with_transforms = false);

struct AbelianInvariants {
    std::vector<Int> factors;  // invariant factors > 1, divisibility chain
    long free_rank = 0;

    bool is_finite() const { return free_rank == 0; }
    bool operator==(const AbelianInvariants&) const = default;
};

AbelianInvariants abelianization(const Presentation& pres);

// ---- coset enumeration -------------------------------------------------------

struct EnumLimits {
    size_t max_cosets = 2'000'000;
    double max_seconds = 60.0;
};

enum class Strategy { HltLookahead, Felsch };

// Closed or partial coset table. Cosets are 1-based; column 2g is the action
// of generator g, column 2g+1 of its inverse. Entry 0 means undefined.
// Coset 1 is the subgroup coset.
class CosetTable {
  public:
    CosetTable(int ngens, size_t nrows) : ngens_(ngens), tab_(2 * ngens * nrows, 0) {}

    int ngens() const { return ngens_; }
    size_t size() const { return tab_.size() / (2 * ngens_); }
    int32_t get(size_t coset, int letter) const { return tab_[(coset - 1) * 2 * ngens_ + letter]; }
    void set(size_t coset, int letter, int32_t to) { tab_[(coset - 1) * 2 * ngens_ + letter] = to; }

    // image of a coset under a word; 0 if the path leaves the table
    int32_t trace(size_t coset, const Word& w) const;
    // permutation induced by one letter on the (closed) table
    std::vector<int32_t> column(int letter) const;

  private:
    int ngens_;
    std::vector<int32_t> tab_;
};

struct TcResult {
    enum class Status { Closed, Overflow };
    Status status = Status::Overflow;
    size_t index = 0;        // [G : H] when closed
    CosetTable table{0, 0};  // closed and standardized when status == Closed
    size_t total_cosets_defined = 0;

    bool closed() const { return status == Status::Closed; }
};

TcResult todd_coxeter(const Presentation& pres, const std::vector<Word>& subgroup_gens,
                      const EnumLimits& limits = {}, Strategy strategy = Strategy::HltLookahead);

// ---- subgroup machinery --------------------------------------------------------

struct SubgroupPresentation {
    Presentation presentation;
    std::vector<Word> generators_in_parent;  // one per subgroup generator
};

// Presentation of the index-n subgroup from a closed table (Schreier
// transversal + Reidemeister rewriting). Throws if the table is not closed.
SubgroupPresentation reidemeister_schreier(const Presentation& pres, const CosetTable& table);

// All subgroups of index <= max_index up to conjugacy, as closed standardized
// coset tables (index 1 included). Throws std::runtime_error when the
// backtrack search exceeds its node budget.
std::vector<CosetTable> low_index_subgroups(const Presentation& pres, size_t max_index = 12,
                                            size_t max_nodes = 10'000'000);

enum class CertifyResult { Trivial, NonTrivial, Unknown };

// True result iff enumerating pres + slopes over the trivial subgroup closes
// with index 1; Overflow maps to Unknown, never to a false positive.
CertifyResult certify_trivializing_slopes(const Presentation& pres, const std::vector<Word>& slopes,
                                          const EnumLimits& limits = {});

}  // namespace bcls::fpgroup
