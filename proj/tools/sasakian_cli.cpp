// Command-line front end. Three verbs:
//   validate      run only the structural validation of an input algebra
//   analyze       run a selection of analyses (default: all) and print a report
//   builtin-list  list the packaged example algebras
//
// Exit codes: 0 completed, 2 invalid input/usage, 3 a requested analysis was
// inapplicable to the input.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sasakian/report.hpp"

namespace {

struct CommonOptions {
    std::string input_path;
    std::string builtin;
    std::string omega;
    std::string format = "text";
    std::string output_path;
};

void add_input_options(CLI::App* cmd, CommonOptions& opt) {
    auto* input = cmd->add_option("--input", opt.input_path, "path to an algebra JSON file");
    auto* builtin = cmd->add_option("--builtin", opt.builtin,
                                    "builtin name or product expression (see builtin-list)");
    input->excludes(builtin);
    builtin->excludes(input);
    cmd->add_option("--omega", opt.omega,
                    "comma-separated H^2 coefficients overriding the stored omega");
    cmd->add_option("--format", opt.format, "output format: text or structured")
        ->check(CLI::IsMember({"text", "structured"}));
    cmd->add_option("--output", opt.output_path, "write the report to this file");
}

int emit(const std::string& payload, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << payload;
        return 0;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write output file: " << output_path << "\n";
        return 2;
    }
    out << payload;
    return 0;
}

int run_command(const CommonOptions& opt, const std::vector<std::string>& analyses) {
    sasakian::RunConfig config;
    if (!opt.builtin.empty()) {
        config.source_kind = "builtin";
        config.source = opt.builtin;
    } else if (!opt.input_path.empty()) {
        config.source_kind = "file";
        config.source = opt.input_path;
    } else {
        std::cerr << "error: provide --input or --builtin\n";
        return 2;
    }
    if (!opt.omega.empty()) config.omega_override = opt.omega;
    config.analyses = analyses;
    config.format = opt.format;

    const sasakian::RunResult result = sasakian::run(config);
    const int emit_rc = emit(result.rendered(config.format), opt.output_path);
    return emit_rc != 0 ? emit_rc : result.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sasakian obstruction analyzer for degree-6 duality algebras"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(sasakian::kToolVersion));

    CommonOptions validate_opt;
    auto* validate_cmd = app.add_subcommand("validate", "structural validation only");
    add_input_options(validate_cmd, validate_opt);

    CommonOptions analyze_opt;
    std::vector<std::string> analyses;
    auto* analyze_cmd = app.add_subcommand("analyze", "run analyses and print a report");
    add_input_options(analyze_cmd, analyze_opt);
    analyze_cmd->add_option(
        "--analyses", analyses,
        "subset to run (validate, hard-lefschetz, gysin, obstructions, formality, "
        "massey, model); default all")
        ->delimiter(',');

    CommonOptions list_opt;
    auto* list_cmd = app.add_subcommand("builtin-list", "list packaged example algebras");
    list_cmd->add_option("--format", list_opt.format, "output format: text or structured")
        ->check(CLI::IsMember({"text", "structured"}));
    list_cmd->add_option("--output", list_opt.output_path, "write the list to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // CLI11 uses 0 for --help/--version, nonzero for usage errors.
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (list_cmd->parsed()) {
            const std::string payload = list_opt.format == "structured"
                                            ? sasakian::builtin_list_json().dump(2) + "\n"
                                            : sasakian::builtin_list_text();
            return emit(payload, list_opt.output_path);
        }
        if (validate_cmd->parsed())
            return run_command(validate_opt, {"validate"});
        return run_command(analyze_opt, analyses);
    } catch (const sasakian::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const sasakian::inapplicable_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
