#include <fstream>
#include <map>

#include <CLI11.hpp>

#include "reeb/cli.hpp"
#include "reeb/error.hpp"

namespace reeb::cli {

namespace {

// key -> flag spelling
const std::map<std::string, std::string>& known_keys() {
    static const std::map<std::string, std::string> keys{
        {"dN", "--dN"},         {"A", "--A"},           {"l1", "--l1"},           {"l2", "--l2"},
        {"w1", "--w1"},         {"w2", "--w2"},         {"rays", "--ray"},        {"tol", "--tol"},
        {"l2_from", "--l2-from"}, {"l2_to", "--l2-to"}, {"format", "--format"},   {"output", "--output"},
        {"bmin", "--bmin"},     {"bmax", "--bmax"},     {"count", "--count"},     {"extremal", "--extremal"},
        {"b_lo", "--b-lo"},     {"b_hi", "--b-hi"},     {"probes", "--probes"},
    };
    return keys;
}

using Values = std::map<std::string, std::vector<std::string>>;

std::string json_scalar(const nlohmann::json& v, const std::string& key) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_number()) return v.dump();  // decimal text, converted exactly later
    throw UsageError("config key '" + key + "': expected a scalar value");
}

Values load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("config: cannot open '" + path + "'");
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw UsageError("config: invalid JSON in '" + path + "': " + e.what());
    }
    if (!doc.is_object()) throw UsageError("config: top level must be a JSON object");
    Values out;
    for (const auto& [key, value] : doc.items()) {
        if (!known_keys().contains(key)) throw UsageError("config: unknown key '" + key + "'");
        if (key == "rays") {
            if (!value.is_array()) throw UsageError("config key 'rays': expected an array");
            for (const auto& r : value) {
                if (r.is_array() && r.size() == 2) out[key].push_back(json_scalar(r[0], key) + "," + json_scalar(r[1], key));
                else out[key].push_back(json_scalar(r, key));
            }
        } else {
            out[key].push_back(json_scalar(value, key));
        }
    }
    return out;
}

Rational rational_field(const std::string& key, const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const DomainError& e) {
        throw UsageError(known_keys().at(key) + ": " + e.what());
    }
}

long integer_field(const std::string& key, const std::string& text) {
    const Rational v = rational_field(key, text);
    if (!v.is_integer() || !v.num().fits_slong_p()) throw UsageError(known_keys().at(key) + ": expected an integer, got '" + text + "'");
    return v.num().get_si();
}

RayId ray_field(const std::string& text) {
    const auto sep = text.find_first_of(",:");
    if (sep == std::string::npos) throw UsageError("--ray: expected 'v1,v2', got '" + text + "'");
    const long v1 = integer_field("rays", text.substr(0, sep));
    const long v2 = integer_field("rays", text.substr(sep + 1));
    try {
        return RayId(v1, v2);
    } catch (const DomainError& e) {
        throw UsageError(std::string("--ray: ") + e.what());
    }
}

}  // namespace

RunConfig parse_config(const std::vector<std::string>& args) {
    CLI::App app{"Einstein-Hilbert functional on the w-cone of Sasaki joins", "reebcone"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    Values flags;
    std::string config_path;
    std::map<std::string, std::string> scratch;
    std::vector<std::string> ray_scratch;
    bool as_json = false, as_csv = false, as_text = false, extremal_flag = false;

    auto* const analyze = app.add_subcommand("analyze", "critical rays, cscS rays and verdicts");
    auto* const scan = app.add_subcommand("scan", "sweep l2 over a range");
    auto* const extremal = app.add_subcommand("extremal", "admissibility window and per-ray extremal profiles");
    auto* const sample = app.add_subcommand("sample", "tabulate H, H', f_csc, S_num, V_num on a grid");
    auto* const verify = app.add_subcommand("verify-paper", "golden reference checks and identity suite");

    for (auto* sub : {analyze, scan, extremal, sample, verify}) {
        sub->add_option("--config", config_path, "flat JSON config file");
        for (const auto& [key, flag] : known_keys()) {
            if (key == "rays") {
                sub->add_option("--ray", ray_scratch, "ray v1,v2 (repeatable)");
            } else if (key == "extremal") {
                sub->add_flag("--extremal", extremal_flag, "include the admissibility window");
            } else {
                sub->add_option(flag, scratch[key]);
            }
        }
        sub->add_flag("--json", as_json, "JSON output");
        sub->add_flag("--csv", as_csv, "CSV output");
        sub->add_flag("--text", as_text, "text output");
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw UsageError(app.help());
    } catch (const CLI::CallForAllHelp&) {
        throw UsageError(app.help("", CLI::AppFormatMode::All));
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    RunConfig cfg;
    for (auto* sub : {analyze, scan, extremal, sample, verify}) {
        if (sub->parsed()) cfg.command = sub->get_name();
    }
    auto* const chosen = app.get_subcommands().front();

    Values merged = config_path.empty() ? Values{} : load_file(config_path);
    for (const auto& [key, flag] : known_keys()) {
        if (key == "rays") {
            if (chosen->count("--ray") > 0) merged[key] = ray_scratch;
        } else if (key == "extremal") {
            if (extremal_flag) merged[key] = {"true"};
        } else if (chosen->count(flag) > 0) {
            merged[key] = {scratch[key]};
        }
    }
    if (as_json) merged["format"] = {"json"};
    if (as_csv) merged["format"] = {"csv"};
    if (as_text) merged["format"] = {"text"};

    auto one = [&](const std::string& key) -> const std::string* {
        auto it = merged.find(key);
        return it == merged.end() || it->second.empty() ? nullptr : &it->second.back();
    };
    if (auto v = one("dN")) cfg.params.dN = static_cast<int>(integer_field("dN", *v));
    if (auto v = one("A")) cfg.params.A = rational_field("A", *v);
    if (auto v = one("l1")) cfg.params.l1 = integer_field("l1", *v);
    if (auto v = one("l2")) cfg.params.l2 = integer_field("l2", *v);
    if (auto v = one("w1")) cfg.params.w1 = integer_field("w1", *v);
    if (auto v = one("w2")) cfg.params.w2 = integer_field("w2", *v);
    if (auto it = merged.find("rays"); it != merged.end()) {
        for (const auto& r : it->second) cfg.rays.push_back(ray_field(r));
    }
    if (auto v = one("tol")) cfg.tolerance = rational_field("tol", *v);
    if (auto v = one("l2_from")) cfg.l2_from = integer_field("l2_from", *v);
    if (auto v = one("l2_to")) cfg.l2_to = integer_field("l2_to", *v);
    if (auto v = one("output")) cfg.output = *v;
    if (auto v = one("bmin")) cfg.b_min = rational_field("bmin", *v);
    if (auto v = one("bmax")) cfg.b_max = rational_field("bmax", *v);
    if (auto v = one("count")) cfg.count = static_cast<int>(integer_field("count", *v));
    if (auto v = one("b_lo")) cfg.b_lo = rational_field("b_lo", *v);
    if (auto v = one("b_hi")) cfg.b_hi = rational_field("b_hi", *v);
    if (auto v = one("probes")) cfg.probes = static_cast<int>(integer_field("probes", *v));
    if (auto v = one("extremal")) {
        if (*v != "true" && *v != "false") throw UsageError("--extremal: expected true or false");
        cfg.extremal = *v == "true";
    }
    if (auto v = one("format")) {
        if (*v == "text") cfg.format = Format::Text;
        else if (*v == "json") cfg.format = Format::Json;
        else if (*v == "csv") cfg.format = Format::Csv;
        else throw UsageError("--format: expected text, json or csv, got '" + *v + "'");
    }

    if (cfg.tolerance.sign() <= 0) throw UsageError("--tol: tolerance must be positive");
    if (cfg.count < 2) throw UsageError("--count: sample grid needs at least 2 points");
    if (cfg.b_min.sign() <= 0) throw UsageError("--bmin: must be positive");
    if (!(cfg.b_min < cfg.b_max)) throw UsageError("--bmax: must exceed --bmin");
    if (cfg.b_lo.sign() <= 0 || !(cfg.b_lo < cfg.b_hi)) throw UsageError("--b-lo/--b-hi: need 0 < b_lo < b_hi");
    if (cfg.probes < 2) throw UsageError("--probes: need at least 2");
    if (cfg.l2_from < 1 || cfg.l2_from > cfg.l2_to) throw UsageError("--l2-from/--l2-to: need 1 <= from <= to");

    if (cfg.command != "verify-paper") {
        std::vector<std::string> violations;
        try {
            JoinParams check = cfg.params;
            if (cfg.command == "scan") check.l2 = 1;  // l2 comes from the range
            violations = validate(check);
        } catch (const DomainError& e) {
            throw UsageError(e.what());
        }
        if (!violations.empty()) {
            std::string msg;
            for (const auto& s : violations) msg += (msg.empty() ? "" : "; ") + s;
            throw UsageError(msg);
        }
    }
    return cfg;
}

}  // namespace reeb::cli
