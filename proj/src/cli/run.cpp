#include <fstream>
#include <iostream>
#include <sstream>

#include "reeb/cli.hpp"
#include "reeb/error.hpp"

namespace reeb::cli {

using nlohmann::json;

namespace {

std::string extremal_output(const RunConfig& cfg) {
    ExtremalReport ex;
    ex.b_lo = cfg.b_lo;
    ex.b_hi = cfg.b_hi;
    try {
        ex.window = admissibility_boundary(cfg.params, cfg.b_lo, cfg.b_hi, cfg.tolerance, cfg.probes);
    } catch (const DomainError& e) {
        ex.error = e.what();
    }
    for (const auto& ray : cfg.rays) ex.solutions.push_back(extremal_solution(cfg.params, ray));

    if (cfg.format == Format::Csv) {
        std::ostringstream os;
        os << "v1,v2,b,alpha,beta,admissible\n";
        for (const auto& s : ex.solutions) {
            os << s.ray.v1().get_str() << "," << s.ray.v2().get_str() << "," << s.ray.b() << "," << s.alpha << ","
               << s.beta << "," << (s.admissible ? "true" : "false") << "\n";
        }
        return os.str();
    }
    if (cfg.format == Format::Json) {
        const json params{{"dN", cfg.params.dN}, {"A", cfg.params.A.to_string()}, {"l1", cfg.params.l1},
                          {"l2", cfg.params.l2}, {"w1", cfg.params.w1}, {"w2", cfg.params.w2}};
        return json{{"params", params}, {"extremal", extremal_report_json(ex)}}.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "join " << cfg.params.to_string() << "\n";
    os << "admissibility scan over [" << ex.b_lo << ", " << ex.b_hi << "] with " << cfg.probes << " probes\n";
    if (ex.window) {
        if (ex.window->lower) {
            os << "  b1 ~ " << ex.window->lower->estimate().to_decimal(12) << "  in [" << ex.window->lower->lo << ", "
               << ex.window->lower->hi << "]\n";
        }
        if (ex.window->upper) {
            os << "  b2 ~ " << ex.window->upper->estimate().to_decimal(12) << "  in [" << ex.window->upper->lo << ", "
               << ex.window->upper->hi << "]\n";
        }
    } else {
        os << "  " << ex.error << "\n";
    }
    for (const auto& s : ex.solutions) {
        os << "ray " << s.ray.to_string() << ": alpha = " << s.alpha << ", beta = " << s.beta
           << ", F(z) = " << s.F.to_string("z") << "  " << (s.admissible ? "admissible" : "not admissible") << "\n";
    }
    return os.str();
}

std::string scan_text(const std::vector<ScanRow>& rows) {
    std::ostringstream os;
    os << "    l2  csc  critical  classifications\n";
    for (const auto& row : rows) {
        std::string cls;
        for (auto c : row.classifications) cls += (cls.empty() ? "" : ", ") + to_string(c);
        os.width(6);
        os << row.l2;
        os.width(5);
        os << row.csc_rays;
        os.width(10);
        os << row.critical << "  " << cls << "\n";
    }
    return os.str();
}

std::string sample_json(const FunctionalBundle& fb, const RunConfig& cfg) {
    json rows = json::array();
    std::istringstream in(sample_csv(fb, cfg.b_min, cfg.b_max, cfg.count));
    std::string line;
    std::getline(in, line);  // header
    const char* cols[] = {"b", "H", "dH", "f_csc", "S_num", "V_num", "verdict"};
    while (std::getline(in, line)) {
        json row;
        std::istringstream fields(line);
        std::string field;
        for (const char* c : cols) {
            std::getline(fields, field, ',');
            row[c] = field;
        }
        rows.push_back(std::move(row));
    }
    return json{{"rows", rows}}.dump(2) + "\n";
}

std::string golden_output(const GoldenResult& g, Format fmt) {
    if (fmt == Format::Json) {
        json items = json::array();
        for (const auto& i : g.items) items.push_back({{"name", i.name}, {"passed", i.passed}, {"detail", i.detail}});
        return json{{"items", items}, {"notes", g.notes}, {"all_passed", g.all_passed()}}.dump(2) + "\n";
    }
    std::ostringstream os;
    for (const auto& i : g.items) {
        os << (i.passed ? "PASS " : "FAIL ") << i.name;
        if (!i.detail.empty()) os << "  [" << i.detail << "]";
        os << "\n";
    }
    for (const auto& n : g.notes) os << "NOTE " << n << "\n";
    os << (g.all_passed() ? "all golden checks passed" : "golden checks FAILED") << "\n";
    return os.str();
}

}  // namespace

int run_subcommand(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::string artifact;
    int code = 0;
    try {
        if (cfg.command == "analyze") {
            ReportOptions opts;
            opts.tolerance = cfg.tolerance;
            opts.extremal_probes = cfg.probes;
            if (cfg.extremal) opts.extremal_range = std::make_pair(cfg.b_lo, cfg.b_hi);
            const AnalysisReport rep = full_report(cfg.params, cfg.rays, opts);
            if (cfg.format == Format::Json) artifact = report_to_json(rep).dump(2) + "\n";
            else if (cfg.format == Format::Csv) artifact = report_to_csv(rep);
            else artifact = report_to_text(rep);
        } else if (cfg.command == "scan") {
            const auto rows = scan_l2(cfg.params, cfg.l2_from, cfg.l2_to);
            if (cfg.format == Format::Json) artifact = scan_to_json(cfg.params, rows).dump(2) + "\n";
            else if (cfg.format == Format::Csv) artifact = scan_to_csv(rows);
            else artifact = scan_text(rows);
        } else if (cfg.command == "extremal") {
            artifact = extremal_output(cfg);
        } else if (cfg.command == "sample") {
            const FunctionalBundle fb = FunctionalBundle::build(cfg.params);
            artifact = cfg.format == Format::Json ? sample_json(fb, cfg) : sample_csv(fb, cfg.b_min, cfg.b_max, cfg.count);
        } else if (cfg.command == "verify-paper") {
            const GoldenResult g = run_golden_suite();
            artifact = golden_output(g, cfg.format);
            if (!g.all_passed()) code = 3;
        } else {
            err << "unknown subcommand '" << cfg.command << "'\n";
            return 2;
        }
    } catch (const InconsistencyError& e) {
        err << "internal inconsistency: " << e.what() << "\n";
        return 3;
    } catch (const DomainError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    }

    if (cfg.output.empty()) {
        out << artifact;
    } else {
        std::ofstream f(cfg.output, std::ios::binary);
        if (!f) {
            err << "--output: cannot write '" << cfg.output << "'\n";
            return 2;
        }
        f << artifact;
    }
    return code;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    try {
        cfg = parse_config(args);
    } catch (const UsageError& e) {
        err << e.what() << "\n";
        return 2;
    }
    return run_subcommand(cfg, out, err);
}

}  // namespace reeb::cli
