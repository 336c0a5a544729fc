#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>

#include "equindex/steenrod.hpp"
#include "equindex/survey.hpp"

namespace {

bool use_color() {
    if (std::getenv("EQUINDEX_NO_COLOR") != nullptr) return false;
    return isatty(fileno(stdout)) != 0;
}

int run_stiefel(int l, int k, const std::string& format) {
    const equindex::StiefelParams params(l, k);
    const auto cert = equindex::nontidy_certificate(params);
    if (format == "json") {
        std::cout << equindex::certificate_to_json(cert).dump(2) << '\n';
    } else if (format == "csv") {
        const auto row = equindex::stiefel_survey_row(cert);
        std::cout << equindex::csv_from_rows(equindex::stiefel_columns(), {row});
    } else {
        std::cout << equindex::render_certificate(cert, use_color());
    }
    return 0;
}

int run_scan(int l_max, int k_max, const std::string& filter_name, const std::string& out_path,
             const std::string& format) {
    const int effective_k_max = k_max > 0 ? k_max : l_max - 1;
    const auto filter = equindex::parse_scan_filter(filter_name);
    const auto certs = equindex::run_scan(l_max, effective_k_max, filter);

    std::string payload;
    if (format == "json") {
        equindex::ordered_json arr = equindex::ordered_json::array();
        for (const auto& cert : certs) arr.push_back(equindex::survey_object(cert));
        payload = arr.dump(2) + "\n";
    } else if (format == "human") {
        std::string blocks;
        for (const auto& cert : certs) {
            if (!blocks.empty()) blocks += "\n";
            blocks += equindex::render_certificate(cert, out_path.empty() && use_color());
        }
        payload = blocks;
    } else {
        std::vector<equindex::SurveyRow> rows;
        rows.reserve(certs.size());
        for (const auto& cert : certs) rows.push_back(equindex::stiefel_survey_row(cert));
        payload = equindex::csv_from_rows(equindex::stiefel_columns(), rows);
    }

    if (out_path.empty()) {
        std::cout << payload;
        std::cerr << certs.size() << " rows\n";
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "equindex: cannot open '" << out_path << "' for writing\n";
        return 2;
    }
    out << payload;
    out.flush();
    if (!out.good()) {
        std::cerr << "equindex: write to '" << out_path << "' failed\n";
        return 2;
    }
    std::cout << certs.size() << " rows -> " << out_path << '\n';
    return 0;
}

int run_tower(int k, long long p, const std::string& format, bool show_elements) {
    const auto report = equindex::tower_cindex(k, p);
    if (format == "json") {
        std::cout << equindex::tower_report_to_json(report).dump(2) << '\n';
        return 0;
    }
    if (format == "csv") {
        const auto row = equindex::tower_survey_row(report);
        std::cout << equindex::csv_from_rows(equindex::tower_columns(), {row});
        return 0;
    }
    std::cout << equindex::render_tower_report(report, use_color());
    if (show_elements) {
        const auto level = equindex::build_tower(k, p);
        const std::string zn = "z" + std::to_string(k);
        const std::string en = "e" + std::to_string(k);
        const auto z = equindex::tower_generator(level, zn);
        const auto e = equindex::tower_generator(level, en);
        std::cout << "  normal forms:\n";
        for (int n = 1; n <= report.ht_z; ++n)
            std::cout << "    " << zn << "^" << n << " = " << power(z, n).str() << '\n';
        for (int b = report.ht_ez - 1; b <= report.ht_ez; ++b)
            std::cout << "    " << en << "*" << zn << "^" << b << " = "
                      << multiply(e, power(z, b)).str() << '\n';
    }
    return 0;
}

int run_sq(int k, int m, int trunc) {
    const equindex::TruncatedPolyRing ring(trunc);
    const auto image = equindex::sq(k, m, ring);
    if (image)
        std::cout << "u^" << *image << '\n';
    else
        std::cout << "0\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact indices and non-tidiness certificates for free C_p-spaces"};
    app.require_subcommand(1);

    auto* stiefel = app.add_subcommand("stiefel", "certificate for V(l,k) with the antipodal C_2-action");
    int st_l = 0, st_k = 0;
    std::string st_format = "human";
    stiefel->add_option("--l", st_l, "ambient dimension (l >= 2)")->required();
    stiefel->add_option("--k", st_k, "frame size (1 <= k <= l-1)")->required();
    stiefel->add_option("--format", st_format, "output format")
        ->check(CLI::IsMember({"human", "json", "csv"}));

    auto* scan = app.add_subcommand("scan", "survey certificates over a parameter range");
    int sc_lmax = 0, sc_kmax = 0;
    std::string sc_filter = "all", sc_out, sc_format = "csv";
    scan->add_option("--l-max", sc_lmax, "largest l (scan covers 2 <= l <= l-max)")->required();
    scan->add_option("--k-max", sc_kmax, "largest k (default: l-1 per row)");
    scan->add_option("--filter", sc_filter, "row filter")
        ->check(CLI::IsMember({"all", "in_family", "certified"}));
    scan->add_option("--out", sc_out, "output file (default: stdout)");
    scan->add_option("--format", sc_format, "output format (default csv; rows need a row format)")
        ->check(CLI::IsMember({"human", "json", "csv"}));

    auto* tower = app.add_subcommand("tower", "report for the C_p tower space X(k)");
    int tw_k = 0;
    long long tw_p = 0;
    std::string tw_format = "human";
    bool tw_show = false;
    tower->add_option("--k", tw_k, "tower level (k >= 0)")->required();
    tower->add_option("--p", tw_p, "odd prime")->required();
    tower->add_option("--format", tw_format, "output format")
        ->check(CLI::IsMember({"human", "json", "csv"}));
    tower->add_flag("--show-element", tw_show, "print normal forms of the witness classes");

    auto* sqcmd = app.add_subcommand("sq", "evaluate Sq^k(u^m) in F_2[u]/(u^t)");
    int sq_k = -1, sq_m = -1, sq_t = 0;
    sqcmd->add_option("--k", sq_k, "operation degree")->required();
    sqcmd->add_option("--m", sq_m, "class exponent")->required();
    sqcmd->add_option("--trunc", sq_t, "truncation t (u^t = 0)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "equindex: " << e.what() << '\n';
        return 2;
    }

    try {
        if (stiefel->parsed()) return run_stiefel(st_l, st_k, st_format);
        if (scan->parsed()) return run_scan(sc_lmax, sc_kmax, sc_filter, sc_out, sc_format);
        if (tower->parsed()) return run_tower(tw_k, tw_p, tw_format, tw_show);
        if (sqcmd->parsed()) return run_sq(sq_k, sq_m, sq_t);
        std::cerr << "equindex: no subcommand\n";
        return 2;
    } catch (const equindex::parameter_error& e) {
        std::cerr << "equindex: " << e.what() << '\n';
        return 2;
    } catch (const equindex::structural_error& e) {
        std::cerr << "equindex: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "equindex: internal error: " << e.what() << '\n';
        return 1;
    }
}
