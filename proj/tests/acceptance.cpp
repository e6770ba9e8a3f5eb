// Acceptance suite: one named criterion per section, one pass/fail line
// each, with wall-clock timing. Exit status is the number of failed
// criteria.

#include "bcls/bianchi.hpp"
#include "bcls/fpgroup.hpp"
#include "bcls/modmat.hpp"
#include "bcls/pipeline.hpp"
#include "bcls/quadint.hpp"

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>

#include "perm_oracle.hpp"
#include "snf_oracle.hpp"

using namespace bcls;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

struct Criterion {
    std::string name;
    Clock::time_point start = Clock::now();
    bool ok = true;
    std::string why;

    explicit Criterion(std::string n) : name(std::move(n)) {}

    void require(bool cond, const std::string& message) {
        if (!cond && ok) {
            ok = false;
            why = message;
        }
    }

    ~Criterion() {
        double secs = std::chrono::duration<double>(Clock::now() - start).count();
        std::ostringstream line;
        line << (ok ? "[PASS] " : "[FAIL] ") << name << "  (" << secs << "s)";
        if (!ok) line << "  -- " << why;
        std::cout << line.str() << std::endl;
        if (!ok) ++failures;
    }
};

void criterion1_table1() {
    Criterion c("1. Table-1 reproduction: all 8 rows (norm, order, cusps) exact");
    auto rep = pipeline::table1_report();
    c.require(rep.rows.size() == 8, "expected 8 rows");
    for (const auto& r : rep.rows)
        c.require(r.ok, "row d=" + std::to_string(r.expected.d) + " x=" + r.expected.x_text +
                            " computed (" + r.norm.get_str() + ", " + r.order.get_str() + ", " +
                            std::to_string(r.cusps) + ")");
    // spot checks against the stated triples
    auto f2 = quadint::make_field(2);
    auto i2 = quadint::parse_ideal(f2, "1+2*w");
    c.require(quadint::ideal_norm(i2) == 9 && modmat::psl2_order(i2) == 324 &&
                  modmat::cusp_count(f2, i2) == 36,
              "(2, 1+2w) != (9, 324, 36)");
    auto f7 = quadint::make_field(7);
    auto i7 = quadint::parse_ideal(f7, "(1+3*sqrt-7)/2");
    c.require(quadint::ideal_norm(i7) == 16 && modmat::psl2_order(i7) == 1536 &&
                  modmat::cusp_count(f7, i7) == 96,
              "(7, (1+3sqrt-7)/2) != (16, 1536, 96)");
    auto f11 = quadint::make_field(11);
    auto i11 = quadint::parse_ideal(f11, "(5+sqrt-11)/2");
    c.require(quadint::ideal_norm(i11) == 9 && modmat::psl2_order(i11) == 324 &&
                  modmat::cusp_count(f11, i11) == 36,
              "(11, (5+sqrt-11)/2) != (9, 324, 36)");
}

void criterion2_enumeration() {
    Criterion c("2. Candidate enumeration: 302 candidates and exactly 6 torsion pairs");
    long total = 0, torsion = 0;
    for (long d : pipeline::admissible_fields()) {
        auto f = quadint::make_field(d);
        for (const auto& I : pipeline::candidate_levels(d)) {
            ++total;
            if (modmat::torsion_in_gamma(f, I)) ++torsion;
        }
    }
    c.require(torsion == 6, "torsion pairs = " + std::to_string(torsion));
    c.require(total - torsion == 302,
              "net candidates = " + std::to_string(total - torsion) + " (total " +
                  std::to_string(total) + ") under the documented convention");
}

void criterion3_coset_enumeration() {
    Criterion c("3. Coset enumeration: (7, sqrt-7) -> 168 and (2, 1+2w) -> 324");
    auto f7 = quadint::make_field(7);
    auto r7 = fpgroup::todd_coxeter(bianchi::quotient_presentation(7, quadint::parse_ideal(f7, "sqrt-7")), {});
    c.require(r7.closed() && r7.index == 168,
              "(7, sqrt-7) enumerated to " + (r7.closed() ? std::to_string(r7.index) : "overflow"));
    c.require(r7.closed() && quadint::Int(168) == modmat::psl2_order(quadint::parse_ideal(f7, "sqrt-7")),
              "index != psl2_order");
    auto f2 = quadint::make_field(2);
    auto r2 = fpgroup::todd_coxeter(bianchi::quotient_presentation(2, quadint::parse_ideal(f2, "1+2*w")), {});
    c.require(r2.closed() && r2.index == 324,
              "(2, 1+2w) enumerated to " + (r2.closed() ? std::to_string(r2.index) : "overflow"));
}

void criterion4_peripheral() {
    Criterion c("4. Peripheral words of (2, 1+3w) span the lattice {(6,-1),(19,0)}");
    auto f2 = quadint::make_field(2);
    auto I = quadint::parse_ideal(f2, "1+3*w");
    auto pd = bianchi::peripheral_words(2, I);
    const auto& bp = bianchi::presentation_of(2);
    auto rows_of = [&](const fpgroup::Word& w) {
        long p = 0, q = 0;
        for (const auto& s : w.syl) {
            if (s.gen == bp.t_index) p += s.exp;
            if (s.gen == bp.u_index) q += s.exp;
        }
        return quadint::make_int(f2, p, q);
    };
    auto computed = quadint::ideal_from_gens(f2, {rows_of(pd.w1), rows_of(pd.w2)});
    auto expected = quadint::ideal_from_gens(
        f2, {quadint::make_int(f2, 6, -1), quadint::make_int(f2, 19, 0)});
    c.require(computed == expected, "lattices differ: " + quadint::to_string(computed) + " vs " +
                                        quadint::to_string(expected));
}

void criterion5_presentations() {
    Criterion c("5. Presentation verification: all embedded data passes, d=2 literal");
    for (long d : bianchi::swan_fields()) {
        const auto& bp = bianchi::presentation_of(d);
        c.require(bianchi::verify_matrices(bp),
                  "matrix verification failed for d=" + std::to_string(d));
    }
    auto expected = fpgroup::parse_presentation(
        "gens: a t u ; rels: a^2, (t*a)^3, (a*u^-1*a*u)^2, t*u*t^-1*u^-1");
    const auto& bp2 = bianchi::presentation_of(2);
    c.require(bp2.pres.gens == expected.gens && bp2.pres.relators == expected.relators,
              "d=2 relators are not the displayed ones");
}

void criterion6_order_oracle() {
    Criterion c("6. Order formula vs explicit enumeration on every candidate level");
    long checked = 0;
    for (long d : pipeline::admissible_fields()) {
        for (const auto& I : pipeline::candidate_levels(d)) {
            auto expect = modmat::psl2_order(I);
            if (expect > 100000) continue;  // none at desk scale, but stated bound
            auto g = modmat::build_group(I);
            if (quadint::Int(static_cast<long>(g.order())) != expect) {
                c.require(false, "order mismatch at d=" + std::to_string(d) + ", ideal " +
                                     quadint::to_string(I));
                return;
            }
            ++checked;
        }
    }
    c.require(checked >= 302, "only checked " + std::to_string(checked) + " ideals");
}

void criterion7_property_suites() {
    Criterion c("7. Property suites: SNF determinantal divisors, coset tables vs oracles");
    std::mt19937 rng(2024);
    // >= 1000 random integer matrices, dims <= 6, entries in [-9, 9]
    std::uniform_int_distribution<size_t> dim(1, 6);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (int iter = 0; iter < 1000; ++iter) {
        fpgroup::IntMatrix m(dim(rng), dim(rng));
        for (auto& x : m.a) x = entry(rng);
        auto s = fpgroup::smith_normal_form(m);
        fpgroup::Int prod = 1;
        for (size_t k = 1; k <= s.rank; ++k) {
            prod *= s.invariant_factors[k - 1];
            if (prod != snf_oracle::minor_gcd(m, k)) {
                c.require(false, "determinantal divisor mismatch at iteration " +
                                     std::to_string(iter));
                return;
            }
        }
        for (size_t i = 0; i + 1 < s.invariant_factors.size(); ++i)
            if (s.invariant_factors[i + 1] % s.invariant_factors[i] != 0) {
                c.require(false, "divisibility chain violated");
                return;
            }
    }
    // >= 100 random presentations: closed tables are genuine permutation
    // representations, orders agree with the regular representation
    int done = 0, attempts = 0;
    std::uniform_int_distribution<int> ex(2, 4), len(2, 6), coin(0, 1);
    while (done < 100 && attempts < 5000) {
        ++attempts;
        fpgroup::Presentation p;
        p.gens = {"a", "b"};
        p.relators.push_back(fpgroup::make_word({{0, ex(rng)}}));
        p.relators.push_back(fpgroup::make_word({{1, ex(rng)}}));
        std::vector<fpgroup::Word::Syllable> syl;
        for (int i = 0, L = len(rng); i < L; ++i) syl.push_back({coin(rng), coin(rng) ? 1L : -1L});
        auto mixed = fpgroup::cyclically_reduce(fpgroup::make_word(syl));
        if (!mixed.empty()) p.relators.push_back(mixed);
        auto r = fpgroup::todd_coxeter(p, {}, {20000, 5.0});
        if (!r.closed() || r.index > 600) continue;
        ++done;
        auto perms = perm_oracle::table_perms(r.table);
        for (const auto& rel : p.relators)
            if (perm_oracle::eval_word(perms, rel) !=
                perm_oracle::identity(static_cast<int>(r.index))) {
                c.require(false, "relator acts nontrivially on a closed table");
                return;
            }
        if (perm_oracle::closure(perms).size() != r.index) {
            c.require(false, "regular representation order mismatch");
            return;
        }
    }
    c.require(done >= 100, "only " + std::to_string(done) + " presentations closed");
}

void criterion8_final_case() {
    Criterion c("8. Honesty on the final case: (2, 1+3w) never Generated/KnownLink");
    auto f2 = quadint::make_field(2);
    auto I = quadint::parse_ideal(f2, "1+3*w");
    pipeline::ClassifyLimits lim;
    lim.enum_limits = {400'000, 30.0};
    lim.low_index_bound = 6;
    auto rec = pipeline::classify(2, I, lim);
    c.require(rec.status != pipeline::Status::Generated, "status Generated");
    c.require(rec.status != pipeline::Status::KnownLink, "status KnownLink");
    bool lemma_note = false, attempt_note = false;
    for (const auto& n : rec.notes) {
        if (n.find("non-link") != std::string::npos) lemma_note = true;
        if (n.find("quotient test") != std::string::npos) attempt_note = true;
    }
    c.require(lemma_note, "missing the external non-link note");
    c.require(attempt_note, "missing the quotient-test attempt log");
    // the infiniteness proof is external; desk-scale low-index attempts are
    // recorded as inconclusive, never borrowed as a certificate
    auto qp = bianchi::quotient_presentation(2, I);
    auto subs = fpgroup::low_index_subgroups(qp, 6);
    bool certificate = false;
    for (const auto& t : subs) {
        auto sub = fpgroup::reidemeister_schreier(qp, t);
        if (!fpgroup::abelianization(sub.presentation).is_finite()) certificate = true;
    }
    std::cout << "       (low-index attempt to index 6: " << subs.size() << " subgroups, "
              << (certificate ? "infinite abelianization found" : "all abelianizations finite; inconclusive")
              << ")\n";
    c.require(rec.status == pipeline::Status::UnresolvedDesk ||
                  rec.status == pipeline::Status::NotGenerated,
              "unexpected status " + pipeline::to_string(rec.status));
}

}  // namespace

int main() {
    std::cout << "acceptance criteria\n-------------------\n";
    criterion1_table1();
    criterion2_enumeration();
    criterion3_coset_enumeration();
    criterion4_peripheral();
    criterion5_presentations();
    criterion6_order_oracle();
    criterion7_property_suites();
    criterion8_final_case();
    std::cout << "-------------------\n"
              << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAILED")
              << std::endl;
    return failures;
}
