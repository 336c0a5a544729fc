#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "equindex/stiefel.hpp"
#include "equindex/tower.hpp"

namespace equindex {

using ordered_json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

inline std::string case_label(CaseFlag flag) {
    switch (flag) {
        case CaseFlag::two_k_less_l: return "2k<l";
        case CaseFlag::two_k_greater_l: return "2k>l";
        case CaseFlag::two_k_equals_l: return "2k=l";
    }
    throw internal_error("unreachable case flag");
}

inline std::string certification_label(Certification c) {
    switch (c) {
        case Certification::theorem_certified: return "theorem_certified";
        case Certification::obstruction_search: return "obstruction_search";
        case Certification::none: return "none";
    }
    throw internal_error("unreachable certification");
}

// Stable JSON object for a certificate; key order is part of the format.
inline ordered_json certificate_to_json(const NonTidyCertificate& cert) {
    ordered_json j;
    j["l"] = cert.params.l;
    j["k"] = cert.params.k;
    j["N"] = cert.truncation_exponent;
    j["cindex"] = cert.cindex;
    j["coind_lower"] = cert.coind_lower;
    j["coind_upper"] = cert.coind_upper;
    j["s"] = cert.family.s;
    if (cert.family.alpha)
        j["alpha"] = *cert.family.alpha;
    else
        j["alpha"] = "none";
    j["in_family"] = cert.family.in_family;
    j["case"] = case_label(cert.case_flag);
    if (cert.sq_degree)
        j["sq_degree"] = *cert.sq_degree;
    else
        j["sq_degree"] = "none";
    j["certification"] = certification_label(cert.certification);
    return j;
}

inline ordered_json tower_report_to_json(const TowerReport& report) {
    ordered_json j;
    j["k"] = report.k;
    j["p"] = report.p;
    j["ht_z"] = report.ht_z;
    j["ht_ez"] = report.ht_ez;
    j["cindex_exact"] = report.cindex_exact;
    j["paper_lower"] = report.paper_lower;
    j["paper_alternatives"] = {report.paper_alternatives[0], report.paper_alternatives[1]};
    j["coind"] = report.coind;
    j["coind_provenance"] = report.coind_provenance;
    return j;
}

// A report flattened to scalar columns. Absent values are the literal "none";
// small arrays join with ';'. Columns are the JSON keys in their fixed order
// with schema_version appended, so the CSV and JSON forms carry identical
// information.
struct SurveyRow {
    std::vector<std::string> columns;
    std::vector<std::string> values;

    friend bool operator==(const SurveyRow&, const SurveyRow&) = default;
};

inline std::string scalar_string(const ordered_json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_array()) {
        std::string out;
        for (const auto& x : v) {
            if (!out.empty()) out += ';';
            out += scalar_string(x);
        }
        return out;
    }
    throw structural_error("survey rows hold integers, booleans, strings and flat arrays only");
}

inline SurveyRow row_from_json(const ordered_json& obj) {
    if (!obj.is_object()) throw structural_error("survey row must be a JSON object");
    SurveyRow row;
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        row.columns.push_back(it.key());
        row.values.push_back(scalar_string(it.value()));
    }
    return row;
}

inline ordered_json survey_object(const NonTidyCertificate& cert) {
    ordered_json j = certificate_to_json(cert);
    j["schema_version"] = schema_version;
    return j;
}

inline ordered_json survey_object(const TowerReport& report) {
    ordered_json j = tower_report_to_json(report);
    j["schema_version"] = schema_version;
    return j;
}

inline SurveyRow stiefel_survey_row(const NonTidyCertificate& cert) {
    return row_from_json(survey_object(cert));
}

inline SurveyRow tower_survey_row(const TowerReport& report) {
    return row_from_json(survey_object(report));
}

inline const std::vector<std::string>& stiefel_columns() {
    static const std::vector<std::string> cols = {
        "l",     "k",         "N",    "cindex",    "coind_lower",   "coind_upper",    "s",
        "alpha", "in_family", "case", "sq_degree", "certification", "schema_version"};
    return cols;
}

inline const std::vector<std::string>& tower_columns() {
    static const std::vector<std::string> cols = {
        "k",     "p",     "ht_z", "ht_ez", "cindex_exact", "paper_lower", "paper_alternatives",
        "coind", "coind_provenance", "schema_version"};
    return cols;
}

// No value in the fixed schemas ever contains a comma, so CSV needs no quoting.
inline std::string csv_join(const std::vector<std::string>& parts) {
    std::string line;
    for (const auto& part : parts) {
        if (part.find(',') != std::string::npos || part.find('\n') != std::string::npos)
            throw structural_error("survey value not CSV-safe: " + part);
        if (!line.empty()) line += ',';
        line += part;
    }
    return line;
}

inline std::string csv_from_rows(const std::vector<std::string>& columns,
                                 const std::vector<SurveyRow>& rows) {
    std::ostringstream os;
    os << csv_join(columns) << '\n';
    for (const auto& row : rows) {
        if (row.columns != columns) throw structural_error("survey row columns do not match header");
        os << csv_join(row.values) << '\n';
    }
    return os.str();
}

inline std::vector<SurveyRow> rows_from_csv_text(const std::string& text) {
    std::vector<std::vector<std::string>> lines;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (line.back() == ',') cells.push_back("");
        lines.push_back(std::move(cells));
    }
    if (lines.empty()) throw structural_error("CSV text has no header");
    std::vector<SurveyRow> rows;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].size() != lines[0].size())
            throw structural_error("CSV row width does not match header");
        rows.push_back({lines[0], lines[i]});
    }
    return rows;
}

inline std::vector<SurveyRow> rows_from_json_text(const std::string& text) {
    const ordered_json doc = ordered_json::parse(text);
    if (!doc.is_array()) throw structural_error("survey JSON must be an array of objects");
    std::vector<SurveyRow> rows;
    for (const auto& obj : doc) rows.push_back(row_from_json(obj));
    return rows;
}

enum class ScanFilter { all, in_family, certified };

inline ScanFilter parse_scan_filter(const std::string& name) {
    if (name == "all") return ScanFilter::all;
    if (name == "in_family") return ScanFilter::in_family;
    if (name == "certified") return ScanFilter::certified;
    throw parameter_error("unknown scan filter '" + name + "'");
}

// Deterministic row order: l ascending, then k ascending. "certified" keeps
// rows whose certification is anything other than none.
inline std::vector<NonTidyCertificate> run_scan(int l_max, int k_max, ScanFilter filter) {
    if (l_max < 2) throw parameter_error("scan: l_max must be >= 2");
    if (k_max < 1) throw parameter_error("scan: k_max must be >= 1");
    std::vector<NonTidyCertificate> out;
    for (int l = 2; l <= l_max; ++l) {
        for (int k = 1; k <= std::min(k_max, l - 1); ++k) {
            NonTidyCertificate cert = nontidy_certificate(StiefelParams(l, k));
            const bool keep = filter == ScanFilter::all ||
                              (filter == ScanFilter::in_family && cert.family.in_family) ||
                              (filter == ScanFilter::certified &&
                               cert.certification != Certification::none);
            if (keep) out.push_back(std::move(cert));
        }
    }
    return out;
}

namespace detail {

struct Palette {
    bool on = false;
    const char* bold() const { return on ? "\x1b[1m" : ""; }
    const char* green() const { return on ? "\x1b[32m" : ""; }
    const char* yellow() const { return on ? "\x1b[33m" : ""; }
    const char* dim() const { return on ? "\x1b[2m" : ""; }
    const char* reset() const { return on ? "\x1b[0m" : ""; }
};

}  // namespace detail

inline std::string render_certificate(const NonTidyCertificate& cert, bool color) {
    const detail::Palette c{color};
    const int l = cert.params.l;
    const int N = cert.truncation_exponent;
    std::ostringstream os;
    os << c.bold() << "V(" << l << "," << cert.params.k << ") with the antipodal C_2-action"
       << c.reset() << '\n';
    os << "  index ideal      <u^" << N << ">\n";
    os << "  cindex           " << cert.cindex << '\n';
    os << "  coind bounds     [" << cert.coind_lower << ", " << cert.coind_upper << "]\n";
    os << "  family           ";
    if (cert.family.in_family)
        os << "l = k-1+alpha*2^s with s=" << cert.family.s << ", alpha=" << *cert.family.alpha << '\n';
    else
        os << "not of the form k-1+alpha*2^s (s=" << cert.family.s << ")\n";
    os << "  case             " << case_label(cert.case_flag) << '\n';
    const char* tone = cert.certification == Certification::theorem_certified ? c.green()
                       : cert.certification == Certification::obstruction_search ? c.yellow()
                                                                                 : "";
    os << "  certification    " << tone << certification_label(cert.certification) << c.reset()
       << '\n';
    if (cert.sq_degree) {
        const int d = *cert.sq_degree;
        os << "  obstruction      Sq^" << d << "(u^" << N - 1 << ") = u^" << N - 1 + d
           << " != 0 in F_2[u]/(u^" << l << ")\n";
        os << "  witnesses        C(" << N - 1 << "," << d << ") mod 2 = 1 and " << N - 1 << "+"
           << d << " <= " << l - 1 << '\n';
        os << "  verdict          non-tidy: coind <= " << cert.cindex << " < ind\n";
    } else {
        os << "  verdict          no Sq obstruction in range; non-tidiness not certified\n";
    }
    return os.str();
}

inline std::string render_tower_report(const TowerReport& report, bool color) {
    const detail::Palette c{color};
    std::ostringstream os;
    os << c.bold() << "X(" << report.k << ") tower over C_" << report.p << c.reset() << '\n';
    os << "  ht(z" << report.k << ")              " << report.ht_z << '\n';
    os << "  min b: e*z^b = 0    " << report.ht_ez << '\n';
    os << "  cindex (exact)      " << report.cindex_exact << '\n';
    os << "  paper lower bound   " << report.paper_lower << '\n';
    os << "  paper alternatives  {" << report.paper_alternatives[0] << ", "
       << report.paper_alternatives[1] << "}\n";
    os << "  coind               " << report.coind << "  " << c.dim() << "["
       << report.coind_provenance << "]" << c.reset() << '\n';
    return os.str();
}

}  // namespace equindex
