#include "bcls/bianchi.hpp"
#include "bcls/modmat.hpp"

#include <map>
#include <sstream>

namespace bcls::bianchi {

using fpgroup::Presentation;
using fpgroup::Word;
using quadint::make_int;

Mat2 mat_mul(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

AlgebraicInt mat_det(const Mat2& m) { return m.a * m.d - m.b * m.c; }

Mat2 mat_inverse(const Mat2& m) {
    if (!(mat_det(m) == make_int(m.a.field, 1, 0)))
        throw std::invalid_argument("mat_inverse requires determinant 1");
    return {m.d, -m.b, -m.c, m.a};
}

bool is_plus_minus_identity(const Mat2& m) {
    FieldLabel f = m.a.field;
    AlgebraicInt one = make_int(f, 1, 0), zero = make_int(f, 0, 0);
    return (m.b == zero && m.c == zero) &&
           ((m.a == one && m.d == one) || (m.a == -one && m.d == -one));
}

Mat2 eval_word(const BianchiPresentation& bp, const Word& w) {
    FieldLabel f = quadint::make_field(bp.d);
    Mat2 acc{make_int(f, 1, 0), make_int(f, 0, 0), make_int(f, 0, 0), make_int(f, 1, 0)};
    for (const auto& s : w.syl) {
        Mat2 base = s.exp > 0 ? bp.matrices.at(s.gen) : mat_inverse(bp.matrices.at(s.gen));
        for (long k = 0; k < std::abs(s.exp); ++k) acc = mat_mul(acc, base);
    }
    return acc;
}

bool verify_matrices(const BianchiPresentation& bp) {
    for (const auto& r : bp.pres.relators)
        if (!is_plus_minus_identity(eval_word(bp, r))) return false;
    return true;
}

BianchiPresentation load_presentation_text(const std::string& text) {
    BianchiPresentation bp;
    std::map<std::string, Mat2> mats;
    std::string cusp_t, cusp_u, pres_line;
    std::istringstream in(text);
    std::string line;
    std::optional<FieldLabel> field;

    auto strip = [](std::string s) {
        size_t b = s.find_first_not_of(" \t\r");
        size_t e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };

    while (std::getline(in, line)) {
        line = strip(line);
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("field:", 0) == 0) {
            bp.d = std::stol(strip(line.substr(6)));
            field = quadint::make_field(bp.d);
        } else if (line.rfind("gens:", 0) == 0) {
            pres_line = line;
        } else if (line.rfind("matrix:", 0) == 0) {
            if (!field) throw std::invalid_argument("presentation data: field: must precede matrix:");
            std::string rest = strip(line.substr(7));
            size_t eq = rest.find('=');
            if (eq == std::string::npos) throw std::invalid_argument("presentation data: bad matrix line");
            std::string name = strip(rest.substr(0, eq));
            std::string body = strip(rest.substr(eq + 1));
            // [[e, e], [e, e]] with entries in element syntax
            std::vector<std::string> entries;
            std::string cur;
            int depth = 0;
            for (char ch : body) {
                if (ch == '[') {
                    ++depth;
                    continue;
                }
                if (ch == ']' || (ch == ',' && depth == 1)) {
                    if (ch == ']') --depth;
                    if (!strip(cur).empty()) entries.push_back(strip(cur));
                    cur.clear();
                    continue;
                }
                if (ch == ',' && depth == 2) {
                    entries.push_back(strip(cur));
                    cur.clear();
                    continue;
                }
                cur += ch;
            }
            if (entries.size() != 4) throw std::invalid_argument("presentation data: matrix needs 4 entries");
            mats.emplace(name, Mat2{quadint::parse_element(*field, entries[0]),
                                    quadint::parse_element(*field, entries[1]),
                                    quadint::parse_element(*field, entries[2]),
                                    quadint::parse_element(*field, entries[3])});
        } else if (line.rfind("cusp:", 0) == 0) {
            std::istringstream cs(line.substr(5));
            cs >> cusp_t >> cusp_u;
        } else {
            throw std::invalid_argument("presentation data: unrecognized line: " + line);
        }
    }
    if (!field) throw std::invalid_argument("presentation data: missing field:");
    if (pres_line.empty()) throw std::invalid_argument("presentation data: missing gens:/rels:");
    bp.pres = fpgroup::parse_presentation(pres_line);
    AlgebraicInt one = make_int(*field, 1, 0);
    for (int g = 0; g < bp.pres.ngens(); ++g) {
        auto it = mats.find(bp.pres.gens[g]);
        if (it == mats.end())
            throw std::invalid_argument("presentation data: no matrix for generator " + bp.pres.gens[g]);
        if (!(mat_det(it->second) == one))
            throw std::invalid_argument("presentation data: generator matrix must have determinant 1");
        bp.matrices.push_back(it->second);
        if (bp.pres.gens[g] == cusp_t) bp.t_index = g;
        if (bp.pres.gens[g] == cusp_u) bp.u_index = g;
    }
    if (bp.t_index < 0 || bp.u_index < 0)
        throw std::invalid_argument("presentation data: cusp: must name two generators");
    // the cusp translations are pinned to x -> x+1 and x -> x+w
    Mat2 t_expected{one, one, make_int(*field, 0, 0), one};
    Mat2 u_expected{one, make_int(*field, 0, 1), make_int(*field, 0, 0), one};
    if (!(bp.matrices[bp.t_index] == t_expected) || !(bp.matrices[bp.u_index] == u_expected))
        throw std::invalid_argument("presentation data: cusp generators must be the unit translations");
    return bp;
}

namespace detail {
const char* presentation_text(long d);  // presentations_data.cpp
}

const std::array<long, 6>& swan_fields() {
    static const std::array<long, 6> fields = {1, 2, 3, 7, 11, 19};
    return fields;
}

const BianchiPresentation& presentation_of(long d) {
    static const std::map<long, BianchiPresentation> cache = [] {
        std::map<long, BianchiPresentation> m;
        for (long dd : swan_fields()) {
            BianchiPresentation bp = load_presentation_text(detail::presentation_text(dd));
            if (!verify_matrices(bp))
                throw std::logic_error("embedded presentation for d=" + std::to_string(dd) +
                                       " fails matrix verification");
            m.emplace(dd, std::move(bp));
        }
        return m;
    }();
    auto it = cache.find(d);
    if (it == cache.end())
        throw std::invalid_argument("no embedded presentation: h_d != 1 for d=" + std::to_string(d));
    return it->second;
}

PeripheralData peripheral_words(long d, const QIdeal& I) {
    const BianchiPresentation& bp = presentation_of(d);
    if (I.field.d != d) throw std::invalid_argument("peripheral_words: field mismatch");
    if (!I.a.fits_slong_p() || !I.b.fits_slong_p() || !I.c.fits_slong_p())
        throw std::invalid_argument("peripheral_words: ideal too large");
    long a = I.a.get_si(), b = I.b.get_si(), c = I.c.get_si();
    PeripheralData out{I, {}, {}};
    out.w1 = fpgroup::make_word({{bp.t_index, a}});
    out.w2 = fpgroup::make_word({{bp.t_index, b}, {bp.u_index, c}});
    return out;
}

Presentation quotient_presentation(long d, const QIdeal& I) {
    const BianchiPresentation& bp = presentation_of(d);
    PeripheralData pd = peripheral_words(d, I);
    return fpgroup::add_relators(bp.pres, {pd.w1, pd.w2});
}

ParabolicTestOutcome parabolic_generation_test(long d, const QIdeal& I,
                                               const ParabolicTestOptions& opts) {
    ParabolicTestOutcome out;
    Int target = modmat::psl2_order(I);
    Presentation qp = quotient_presentation(d, I);
    fpgroup::TcResult tc = fpgroup::todd_coxeter(qp, {}, opts.limits, opts.strategy);
    if (tc.closed()) {
        out.quotient_index = tc.index;
        if (Int(static_cast<long>(tc.index)) == target) {
            out.result = ParabolicResult::Generated;
            out.detail = "quotient order " + std::to_string(tc.index) + " equals |PSL(2,O/I)|";
        } else if (Int(static_cast<long>(tc.index)) > target) {
            out.result = ParabolicResult::NotGenerated;
            out.detail = "quotient order " + std::to_string(tc.index) + " exceeds |PSL(2,O/I)| = " +
                         target.get_str();
        } else {
            throw std::logic_error("quotient enumerated below |PSL(2,O/I)|; presentation data is wrong");
        }
        return out;
    }
    // enumeration overflowed; look for an infinite-abelianization subgroup,
    // which certifies that the quotient is infinite
    if (opts.low_index_bound >= 1) {
        std::vector<fpgroup::CosetTable> tables;
        try {
            tables = fpgroup::low_index_subgroups(qp, opts.low_index_bound);
        } catch (const std::runtime_error& e) {
            out.detail = std::string("enumeration overflow; low-index fallback gave up: ") + e.what();
            out.result = ParabolicResult::Unknown;
            return out;
        }
        for (const auto& tab : tables) {
            auto sub = fpgroup::reidemeister_schreier(qp, tab);
            auto inv = fpgroup::abelianization(sub.presentation);
            if (!inv.is_finite()) {
                out.result = ParabolicResult::NotGenerated;
                out.detail = "index-" + std::to_string(tab.size()) +
                             " subgroup has infinite abelianization (free rank " +
                             std::to_string(inv.free_rank) + "), so the quotient is infinite";
                return out;
            }
        }
        out.detail = "enumeration overflow; no infinite-abelianization subgroup of index <= " +
                     std::to_string(opts.low_index_bound);
    } else {
        out.detail = "enumeration overflow";
    }
    out.result = ParabolicResult::Unknown;
    return out;
}

}  // namespace bcls::bianchi
