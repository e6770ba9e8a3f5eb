#include "bcls/bianchi.hpp"
#include "bcls/fpgroup.hpp"
#include "bcls/modmat.hpp"
#include "bcls/pipeline.hpp"
#include "bcls/quadint.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

// bianchi-cls: classification of principal congruence levels at desk scale.
// Exit codes: 0 all checks pass, 1 mismatch against the embedded reference
// data, 2 resource overflow somewhere.
namespace {

using namespace bcls;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitOverflow = 2;

quadint::QIdeal ideal_from_options(long d, const std::string& gens) {
    auto f = quadint::make_field(d);
    return quadint::parse_ideal(f, gens);
}

fpgroup::Strategy strategy_from(const std::string& name) {
    if (name == "hlt") return fpgroup::Strategy::HltLookahead;
    if (name == "felsch") return fpgroup::Strategy::Felsch;
    throw CLI::ValidationError("--strategy", "expected hlt or felsch");
}

int cmd_enumerate(const std::string& which) {
    std::vector<long> fields;
    if (which == "all") {
        fields = pipeline::admissible_fields();
    } else {
        fields = {std::stol(which)};
    }
    long total = 0, torsion = 0;
    for (long d : fields) {
        auto f = quadint::make_field(d);
        auto levels = pipeline::candidate_levels(d);
        std::cout << "d=" << d << " (h=" << quadint::class_number(f) << "): " << levels.size()
                  << " candidate levels\n";
        for (const auto& I : levels) {
            bool tor = modmat::torsion_in_gamma(f, I).has_value();
            std::cout << "  " << quadint::to_string(I) << "  norm " << I.norm()
                      << (tor ? "  [torsion]" : "") << "\n";
            ++total;
            if (tor) ++torsion;
        }
    }
    std::cout << "total " << total << ", torsion-excluded " << torsion << ", net "
              << (total - torsion) << "\n";
    if (which == "all") {
        std::cout << "\nbound conventions (h=1 max norm / h>1 max norm):\n";
        for (const auto& cc : pipeline::convention_report())
            std::cout << "  " << cc.bounds.h1_norm_max << "/" << cc.bounds.hplus_norm_max << ": "
                      << cc.total << " candidates, " << cc.torsion << " torsion, net " << cc.net
                      << (cc.net == 302 ? "   <- matches the reference count" : "") << "\n";
    }
    return kExitOk;
}

int cmd_order(long d, const std::string& gens) {
    auto I = ideal_from_options(d, gens);
    std::cout << "norm " << I.norm() << "\n";
    std::cout << "|SL(2,O/I)|  = " << modmat::sl2_order(I) << "\n";
    std::cout << "|PSL(2,O/I)| = " << modmat::psl2_order(I) << "\n";
    return kExitOk;
}

int cmd_cusps(long d, const std::string& gens) {
    auto I = ideal_from_options(d, gens);
    std::cout << modmat::cusp_count(quadint::make_field(d), I) << "\n";
    return kExitOk;
}

int cmd_quotient(long d, const std::string& gens, size_t max_cosets, const std::string& strategy,
                 double max_seconds) {
    auto I = ideal_from_options(d, gens);
    bianchi::ParabolicTestOptions opts;
    opts.limits.max_cosets = max_cosets;
    opts.limits.max_seconds = max_seconds;
    opts.strategy = strategy_from(strategy);
    auto pd = bianchi::peripheral_words(d, I);
    const auto& bp = bianchi::presentation_of(d);
    std::cout << "peripheral words: " << fpgroup::print_word(bp.pres, pd.w1) << ", "
              << fpgroup::print_word(bp.pres, pd.w2) << "\n";
    std::cout << "|PSL(2,O/I)| = " << modmat::psl2_order(I) << "\n";
    auto outcome = bianchi::parabolic_generation_test(d, I, opts);
    if (outcome.quotient_index)
        std::cout << "quotient index: " << *outcome.quotient_index << "\n";
    switch (outcome.result) {
        case bianchi::ParabolicResult::Generated:
            std::cout << "parabolic generation: Generated (" << outcome.detail << ")\n";
            return kExitOk;
        case bianchi::ParabolicResult::NotGenerated:
            std::cout << "parabolic generation: NotGenerated (" << outcome.detail << ")\n";
            return kExitOk;
        case bianchi::ParabolicResult::Unknown:
            std::cout << "parabolic generation: Unknown (" << outcome.detail << ")\n";
            return kExitOverflow;
    }
    return kExitOk;
}

int cmd_torsion(long d, const std::string& gens) {
    auto I = ideal_from_options(d, gens);
    auto w = modmat::torsion_in_gamma(quadint::make_field(d), I);
    if (!w) {
        std::cout << "no torsion witness found\n";
        return kExitOk;
    }
    std::cout << "torsion witness of order " << w->order << ": [[" << quadint::to_string(w->a)
              << ", " << quadint::to_string(w->b) << "], [" << quadint::to_string(w->c) << ", "
              << quadint::to_string(w->d) << "]]\n";
    return kExitOk;
}

int cmd_certify(const std::string& pres_file, const std::string& slopes, size_t max_cosets,
                double max_seconds) {
    std::ifstream in(pres_file);
    if (!in) {
        std::cerr << "cannot open " << pres_file << "\n";
        return kExitMismatch;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    fpgroup::Presentation pres;
    // accept either a bare presentation or the bianchi data format
    if (text.find("matrix:") != std::string::npos) {
        pres = bianchi::load_presentation_text(text).pres;
    } else {
        std::string joined;
        for (char c : text) joined += c == '\n' ? ' ' : c;
        pres = fpgroup::parse_presentation(joined);
    }
    std::vector<fpgroup::Word> slope_words;
    size_t start = 0;
    while (start <= slopes.size()) {
        size_t semi = slopes.find(';', start);
        std::string piece =
            slopes.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
        if (piece.find_first_not_of(" \t") != std::string::npos)
            slope_words.push_back(fpgroup::parse_word(pres, piece));
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    fpgroup::EnumLimits limits{max_cosets, max_seconds};
    switch (fpgroup::certify_trivializing_slopes(pres, slope_words, limits)) {
        case fpgroup::CertifyResult::Trivial:
            std::cout << "trivializing: true\n";
            return kExitOk;
        case fpgroup::CertifyResult::NonTrivial:
            std::cout << "trivializing: false\n";
            return kExitOk;
        case fpgroup::CertifyResult::Unknown:
            std::cout << "trivializing: unknown (enumeration overflow)\n";
            return kExitOverflow;
    }
    return kExitOk;
}

int cmd_table1() {
    auto rep = pipeline::table1_report();
    std::cout << "d    x                norm  order  cusps\n";
    for (const auto& r : rep.rows) {
        std::cout << r.expected.d << "    " << r.expected.x_text;
        for (size_t k = r.expected.x_text.size(); k < 17; ++k) std::cout << ' ';
        std::cout << r.norm << "     " << r.order << "    " << r.cusps << (r.ok ? "" : "  MISMATCH")
                  << "\n";
        if (!r.ok)
            std::cout << "  expected: norm " << r.expected.norm << ", order " << r.expected.order
                      << ", cusps " << r.expected.cusps << "\n";
    }
    std::cout << (rep.all_match ? "all rows match\n" : "MISMATCH against reference rows\n");
    return rep.all_match ? kExitOk : kExitMismatch;
}

int cmd_report(const std::string& out_path, const std::string& format, size_t max_cosets,
               double max_seconds, unsigned threads) {
    pipeline::ClassifyLimits limits;
    limits.enum_limits.max_cosets = max_cosets;
    limits.enum_limits.max_seconds = max_seconds;
    auto records = pipeline::run_all(limits, threads);
    pipeline::ReportFormat fmt;
    if (format == "json") fmt = pipeline::ReportFormat::Json;
    else if (format == "csv") fmt = pipeline::ReportFormat::Csv;
    else if (format == "text") fmt = pipeline::ReportFormat::Text;
    else throw CLI::ValidationError("--format", "expected json, csv or text");

    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "cannot write " << out_path << "\n";
        return kExitMismatch;
    }
    pipeline::emit_report(records, fmt, out);

    bool overflow = false;
    for (const auto& r : records)
        if (r.status == pipeline::Status::UnresolvedDesk) overflow = true;
    std::cout << records.size() << " records written to " << out_path << "\n";
    return overflow ? kExitOverflow : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"principal congruence level classification at desk scale"};
    app.require_subcommand(1);

    std::string which_d = "all";
    auto* enumerate = app.add_subcommand("enumerate", "list candidate levels (d, I)");
    enumerate->add_option("--d", which_d, "field label d or 'all'");

    long d = 0;
    std::string ideal_gens, strategy = "hlt", format = "json", out_path = "report.json";
    std::string pres_file, slopes;
    size_t max_cosets = 2'000'000;
    double max_seconds = 60.0;
    unsigned threads = 2;

    auto* order = app.add_subcommand("order", "|PSL(2, O_d/I)| from the ideal factorization");
    order->add_option("--d", d)->required();
    order->add_option("--ideal", ideal_gens, "comma-separated generators")->required();

    auto* cusps = app.add_subcommand("cusps", "cusp count of the level-I principal congruence manifold");
    cusps->add_option("--d", d)->required();
    cusps->add_option("--ideal", ideal_gens)->required();

    auto* quotient = app.add_subcommand("quotient", "coset enumeration of the peripheral quotient");
    quotient->add_option("--d", d)->required();
    quotient->add_option("--ideal", ideal_gens)->required();
    quotient->add_option("--max-cosets", max_cosets);
    quotient->add_option("--strategy", strategy, "hlt or felsch");
    quotient->add_option("--max-seconds", max_seconds);

    auto* torsion = app.add_subcommand("torsion", "search for torsion in the congruence subgroup");
    torsion->add_option("--d", d)->required();
    torsion->add_option("--ideal", ideal_gens)->required();

    auto* certify = app.add_subcommand("certify", "check that slopes trivialize a presentation");
    certify->add_option("--pres", pres_file, "presentation file")->required();
    certify->add_option("--slopes", slopes, "semicolon-separated words")->required();
    certify->add_option("--max-cosets", max_cosets);
    certify->add_option("--max-seconds", max_seconds);

    app.add_subcommand("table1", "re-derive the eight reference rows (norm, order, cusps)");

    auto* report = app.add_subcommand("report", "classify all candidates and write a report");
    report->add_option("--out", out_path)->required();
    report->add_option("--format", format, "json, csv or text");
    report->add_option("--max-cosets", max_cosets);
    report->add_option("--max-seconds", max_seconds);
    report->add_option("--threads", threads);

    CLI11_PARSE(app, argc, argv);

    try {
        if (enumerate->parsed()) return cmd_enumerate(which_d);
        if (order->parsed()) return cmd_order(d, ideal_gens);
        if (cusps->parsed()) return cmd_cusps(d, ideal_gens);
        if (quotient->parsed()) return cmd_quotient(d, ideal_gens, max_cosets, strategy, max_seconds);
        if (torsion->parsed()) return cmd_torsion(d, ideal_gens);
        if (certify->parsed()) return cmd_certify(pres_file, slopes, max_cosets, max_seconds);
        if (app.get_subcommand("table1")->parsed()) return cmd_table1();
        if (report->parsed()) return cmd_report(out_path, format, max_cosets, max_seconds, threads);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    }
    return kExitOk;
}
