#include "bcls/pipeline.hpp"

#include <json.hpp>

#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

namespace bcls::pipeline {

int schema_version() { return 1; }

namespace {

using nlohmann::json;

json int_field(const Int& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

json record_to_json(const CandidateRecord& r) {
    json j;
    j["schema_version"] = schema_version();
    j["d"] = r.d;
    j["ideal_hnf"] = {{int_field(r.ideal.a), 0}, {int_field(r.ideal.b), int_field(r.ideal.c)}};
    if (r.generator) j["generator"] = quadint::to_string(*r.generator);
    j["norm"] = int_field(r.norm);
    j["order"] = int_field(r.order);
    if (r.cusps) j["cusps"] = *r.cusps;
    else j["cusps"] = nullptr;
    j["torsion"] = r.torsion;
    j["status"] = to_string(r.status);
    j["notes"] = r.notes;
    return j;
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

}  // namespace

void emit_report(const std::vector<CandidateRecord>& records, ReportFormat format,
                 std::ostream& out) {
    switch (format) {
        case ReportFormat::Json: {
            json j;
            j["schema_version"] = schema_version();
            j["records"] = json::array();
            for (const auto& r : records) j["records"].push_back(record_to_json(r));
            out << j.dump(2) << "\n";
            return;
        }
        case ReportFormat::Csv: {
            out << "d,ideal_hnf,norm,order,cusps,status,notes\n";
            for (const auto& r : records) {
                std::string notes;
                for (size_t i = 0; i < r.notes.size(); ++i) {
                    if (i) notes += "; ";
                    notes += r.notes[i];
                }
                out << r.d << "," << csv_quote(quadint::to_string(r.ideal)) << "," << r.norm << ","
                    << r.order << "," << (r.cusps ? std::to_string(*r.cusps) : "") << ","
                    << to_string(r.status) << "," << csv_quote(notes) << "\n";
            }
            return;
        }
        case ReportFormat::Text: {
            out << std::left << std::setw(4) << "d" << std::setw(24) << "ideal" << std::setw(8)
                << "norm" << std::setw(10) << "order" << std::setw(7) << "cusps" << std::setw(17)
                << "status"
                << "notes\n";
            for (const auto& r : records) {
                std::string notes;
                for (size_t i = 0; i < r.notes.size(); ++i) {
                    if (i) notes += "; ";
                    notes += r.notes[i];
                }
                out << std::left << std::setw(4) << r.d << std::setw(24)
                    << quadint::to_string(r.ideal) << std::setw(8) << r.norm.get_str()
                    << std::setw(10) << r.order.get_str() << std::setw(7)
                    << (r.cusps ? std::to_string(*r.cusps) : "-") << std::setw(17)
                    << to_string(r.status) << notes << "\n";
            }
            return;
        }
    }
}

std::vector<CandidateRecord> parse_report_json(std::istream& in) {
    json j;
    in >> j;
    if (!j.contains("schema_version") || j["schema_version"].get<int>() != schema_version())
        throw std::invalid_argument("report: unsupported schema version");
    std::vector<CandidateRecord> out;
    for (const auto& rj : j.at("records")) {
        CandidateRecord r;
        r.d = rj.at("d").get<long>();
        auto f = quadint::make_field(r.d);
        auto as_int = [](const json& v) {
            if (v.is_string()) return Int(v.get<std::string>());
            return Int(v.get<long>());
        };
        const auto& h = rj.at("ideal_hnf");
        r.ideal = QIdeal{f, as_int(h.at(0).at(0)), as_int(h.at(1).at(0)), as_int(h.at(1).at(1))};
        if (rj.contains("generator")) r.generator = quadint::parse_element(f, rj["generator"]);
        r.norm = as_int(rj.at("norm"));
        r.order = as_int(rj.at("order"));
        if (!rj.at("cusps").is_null()) r.cusps = rj.at("cusps").get<long>();
        r.torsion = rj.at("torsion").get<bool>();
        auto st = status_from_string(rj.at("status").get<std::string>());
        if (!st) throw std::invalid_argument("report: bad status");
        r.status = *st;
        r.notes = rj.at("notes").get<std::vector<std::string>>();
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace bcls::pipeline
