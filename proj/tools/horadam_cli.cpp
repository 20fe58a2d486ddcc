// Command-line front end: sequence tables, identity checking with JSON
// reports, generating-function expansion, fuzzing, preset listing.
//
// Exit codes: 0 all checks pass, 1 an identity check failed, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "horadam/horadam.hpp"

namespace {

using horadam::HoradamParams;
using horadam::IdentityKind;
using horadam::Quaternion;
using horadam::Rational;

struct Selection {
    HoradamParams params{0, 1, 1, 1};
    std::string preset;  // empty for raw --params
};

Selection resolve_selection(const std::string& preset_name, const std::string& params_text) {
    if (!preset_name.empty() && !params_text.empty())
        throw horadam::ParamParseError("--preset and --params are mutually exclusive");
    if (preset_name.empty() && params_text.empty())
        throw horadam::ParamParseError("one of --preset or --params is required");
    if (!preset_name.empty()) {
        const horadam::Preset& preset = horadam::preset_lookup(preset_name);
        return {preset.params, preset.name};
    }
    return {HoradamParams::parse(params_text), ""};
}

std::string csv_row(long long n, const Quaternion<Rational>& q) {
    std::string row = std::to_string(n);
    for (const std::string& s : horadam::scalar_strings(q)) row += ",\"" + s + "\"";
    return row;
}

int cmd_gen(const Selection& sel, long long from, long long to, const std::string& format) {
    if (from < 0 || to < from) throw horadam::InvalidRange("need 0 <= from <= to");
    if (format == "json") {
        std::cout << horadam::gen_table_json(sel.params, sel.preset, from, to).dump(2) << "\n";
        return 0;
    }
    std::vector<Quaternion<Rational>> seq = qw_sequence(sel.params, to);
    if (format == "csv") {
        std::cout << "n,w,x,y,z\n";
        for (long long n = from; n <= to; ++n)
            std::cout << csv_row(n, seq[static_cast<std::size_t>(n)]) << "\n";
    } else {
        for (long long n = from; n <= to; ++n)
            std::cout << n << "\t" << seq[static_cast<std::size_t>(n)].to_string() << "\n";
    }
    return 0;
}

int cmd_gf(const Selection& sel, long long order, const std::string& format) {
    if (order < 0) throw horadam::InvalidRange("need order >= 0");
    if (format == "json") {
        std::cout << horadam::gf_table_json(sel.params, sel.preset, order).dump(2) << "\n";
        return 0;
    }
    auto [constant, linear] = gf_numerator(sel.params);
    horadam::QuatSeries series = gf_expand(sel.params, order);
    if (format == "csv") {
        std::cout << "k,w,x,y,z\n";
        for (std::size_t k = 0; k < series.coefficients.size(); ++k)
            std::cout << csv_row(static_cast<long long>(k), series.coefficients[k]) << "\n";
    } else {
        std::cout << "numerator\t" << constant.to_string() << " + " << linear.to_string()
                  << " t\n";
        std::cout << "denominator\t1 - (" << sel.params.p.to_string() << ")t - ("
                  << sel.params.q.to_string() << ")t^2\n";
        for (std::size_t k = 0; k < series.coefficients.size(); ++k)
            std::cout << k << "\t" << series.coefficients[k].to_string() << "\n";
    }
    return 0;
}

int cmd_check(const Selection& sel, const std::string& identity, long long to,
              const std::string& out_path) {
    std::vector<IdentityKind> kinds;
    if (identity == "all") {
        kinds = horadam::all_identities();
    } else {
        auto kind = horadam::parse_identity(identity);
        if (!kind) throw horadam::ParamParseError("unknown identity: " + identity);
        kinds = {*kind};
    }

    bool all_passed = true;
    nlohmann::json output;
    if (kinds.size() == 1) {
        horadam::IdentityReport report = run_check(sel.params, sel.preset, kinds[0], to);
        all_passed = report.passed();
        output = report.to_json();
    } else {
        output["identity"] = "all";
        output["params"] = {{"a", sel.params.a.to_string()},
                            {"b", sel.params.b.to_string()},
                            {"p", sel.params.p.to_string()},
                            {"q", sel.params.q.to_string()}};
        if (!sel.preset.empty()) output["preset"] = sel.preset;
        output["reports"] = nlohmann::json::array();
        for (IdentityKind kind : kinds) {
            horadam::IdentityReport report = run_check(sel.params, sel.preset, kind, to);
            all_passed = all_passed && report.passed();
            output["reports"].push_back(report.to_json());
        }
        output["status"] = all_passed ? "pass" : "fail";
    }

    if (out_path.empty()) {
        std::cout << output.dump(2) << "\n";
    } else {
        std::ofstream file(out_path);
        if (!file) throw horadam::InvalidRange("cannot open output file: " + out_path);
        file << output.dump(2) << "\n";
    }
    return all_passed ? 0 : 1;
}

int cmd_fuzz(std::uint64_t seed, long long count, long long bound, long long to) {
    if (bound < 1) throw horadam::InvalidRange("need bound >= 1");
    if (count < 0 || to < 0) throw horadam::InvalidRange("need count >= 0 and to >= 0");
    horadam::FuzzReport report = horadam::run_fuzz({seed, count, bound, to});
    std::cout << report.to_json().dump(2) << "\n";
    return report.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Horadam quaternion sequences and identity verification"};
    app.require_subcommand(1);

    std::string preset_name, params_text, format = "plain", identity = "all", out_path;
    long long from = 0, to = -1, order = 0, count = 100, bound = 9, fuzz_to = 30;
    std::uint64_t seed = 1;

    CLI::App* gen = app.add_subcommand("gen", "print Q_{w,n} for a range of n");
    gen->add_option("--preset", preset_name, "preset family name");
    gen->add_option("--params", params_text, "a,b,p,q as comma-separated rationals");
    gen->add_option("--from", from, "first index (default 0)");
    gen->add_option("--to", to, "last index")->required();
    gen->add_option("--format", format)->check(CLI::IsMember({"plain", "csv", "json"}));

    CLI::App* check = app.add_subcommand("check", "verify closed-form identities");
    check->add_option("--preset", preset_name, "preset family name");
    check->add_option("--params", params_text, "a,b,p,q as comma-separated rationals");
    check->add_option("--identity", identity)
        ->required()
        ->check(CLI::IsMember(
            {"binet", "cassini", "sum", "norm", "genfunc", "paper_remarks", "all"}));
    check->add_option("--to", to, "largest index checked")->required();
    check->add_option("--out", out_path, "write the JSON report to a file");

    CLI::App* gf = app.add_subcommand("gf", "expand the generating function");
    gf->add_option("--preset", preset_name, "preset family name");
    gf->add_option("--params", params_text, "a,b,p,q as comma-separated rationals");
    gf->add_option("--order", order, "truncation order")->required();
    gf->add_option("--format", format)->check(CLI::IsMember({"plain", "csv", "json"}));

    CLI::App* fuzz = app.add_subcommand("fuzz", "check identities on random integer tuples");
    fuzz->add_option("--seed", seed, "RNG seed (default 1)");
    fuzz->add_option("--count", count, "number of tuples (default 100)");
    fuzz->add_option("--bound", bound, "|a|,|b|,|p|,|q| bound (default 9)");
    fuzz->add_option("--to", fuzz_to, "largest index checked (default 30)");

    CLI::App* presets = app.add_subcommand("presets", "list the named families as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (presets->parsed()) {
            std::cout << horadam::presets_json().dump(2) << "\n";
            return 0;
        }
        if (fuzz->parsed()) return cmd_fuzz(seed, count, bound, fuzz_to);
        Selection sel = resolve_selection(preset_name, params_text);
        if (gen->parsed()) return cmd_gen(sel, from, to, format);
        if (gf->parsed()) return cmd_gf(sel, order, format);
        if (check->parsed()) return cmd_check(sel, identity, to, out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
