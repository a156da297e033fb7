#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qmb/errors.hpp"
#include "qmb/harness.hpp"
#include "qmb/oracle.hpp"

namespace {

using qmb::json;

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw qmb::ConfigError("cannot read file '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw qmb::ConfigError("malformed JSON in '" + path + "': " + e.what());
    }
}

// A target argument is a catalog id, an inline JSON expression, or an
// @file holding JSON.
json parse_target_arg(const std::string& arg) {
    if (!arg.empty() && arg.front() == '@') return read_json_file(arg.substr(1));
    if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) {
        try {
            return json::parse(arg);
        } catch (const json::exception& e) {
            throw qmb::ConfigError(std::string("malformed inline JSON: ") + e.what());
        }
    }
    return json(arg);
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw qmb::ConfigError("cannot write file '" + out_path + "'");
    out << text << "\n";
}

struct VerifyArgs {
    std::string suite;
    std::string target;
    std::string second;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    double tol = 0.0;
    double delta = 0.0;
    std::string bornology;
    std::string format = "text";
    std::string out_path;
    bool strict = false;
};

int run_verify(const VerifyArgs& args, const CLI::App& cmd) {
    json config = json::object();
    if (!args.target.empty() && args.target.front() == '@') {
        config = read_json_file(args.target.substr(1));
        if (!config.is_object()) throw qmb::ConfigError("config file must hold a JSON object");
    } else if (!args.target.empty()) {
        config["target"] = parse_target_arg(args.target);
    }
    if (cmd.count("--suite")) config["suite"] = args.suite;
    if (cmd.count("--second")) config["second"] = parse_target_arg(args.second);
    if (cmd.count("--samples")) config["samples"] = args.samples;
    if (cmd.count("--seed")) config["seed"] = args.seed;
    if (cmd.count("--tol")) config["tol"] = args.tol;
    if (cmd.count("--delta")) config["delta"] = args.delta;
    if (cmd.count("--bornology")) config["bornology"] = args.bornology;
    if (!config.contains("suite")) throw qmb::ConfigError("verify needs --suite");

    const qmb::SuiteConfig suite_config = qmb::SuiteConfig::from_json(config);
    const qmb::VerificationReport report = qmb::run_suite(suite_config);
    write_output(args.format == "json" ? report.to_json().dump(2) : report.to_text(),
                 args.out_path);
    int code = 0;
    if (report.any_fail()) code |= 1;
    if (args.strict && report.any_inconclusive()) code |= 4;
    return code;
}

int run_construct_chi(const std::string& target, double delta, const std::string& base_arg,
                      const std::string& out_path) {
    json base_spec;
    if (!base_arg.empty()) base_spec = parse_target_arg(base_arg);
    const json result = qmb::construct_chi(target, base_spec, delta);
    write_output(result.dump(2), out_path);
    return 0;
}

int run_zoo_list(const std::string& format) {
    const json listing = qmb::list_zoo();
    if (format == "json") {
        std::cout << listing.dump(2) << "\n";
        return 0;
    }
    for (const auto& entry : listing.at("spaces")) {
        std::cout << entry.at("id").get<std::string>() << "  ["
                  << entry.at("class").get<std::string>() << ", "
                  << entry.at("carrier").get<std::string>() << "]  "
                  << entry.at("notes").get<std::string>() << "\n";
    }
    return 0;
}

int run_oracle_random(std::size_t nodes, double density, std::uint64_t seed,
                      const std::string& export_path) {
    const qmb::WeightedDigraph g = qmb::random_digraph(nodes, density, seed);
    const std::string text = g.to_text();
    if (export_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(export_path);
    if (!out) throw qmb::ConfigError("cannot write file '" + export_path + "'");
    out << text;
    std::cout << "wrote " << nodes << "-node digraph with " << g.edge_count()
              << " edges to " << export_path << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quasi-metric space verification toolkit"};
    app.require_subcommand(1);

    VerifyArgs vargs;
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", vargs.suite, "suite id")
        ->check(CLI::IsMember(qmb::suite_ids()));
    verify->add_option("--target", vargs.target,
                       "catalog id, inline expression JSON, or @config.json");
    verify->add_option("--second", vargs.second, "partner target for the pair suites");
    verify->add_option("--samples", vargs.samples, "sample budget per check");
    verify->add_option("--seed", vargs.seed, "master seed");
    verify->add_option("--tol", vargs.tol, "numeric tolerance");
    verify->add_option("--delta", vargs.delta, "absorption delta");
    verify->add_option("--bornology", vargs.bornology, "attached bornology selector");
    verify->add_option("--format", vargs.format, "report format")
        ->check(CLI::IsMember({"json", "text"}));
    verify->add_option("--out", vargs.out_path, "write the report to a file");
    verify->add_flag("--strict", vargs.strict,
                     "exit with bit 4 set when any check is inconclusive");

    CLI::App* construct = app.add_subcommand("construct", "build a named object");
    std::string chi_target;
    double chi_delta = 1.0;
    std::string chi_base;
    std::string chi_out;
    CLI::App* chi = construct->add_subcommand("chi", "staircase function over a base");
    chi->add_option("--target", chi_target, "catalog id")->required();
    chi->add_option("--delta", chi_delta, "band transition width");
    chi->add_option("--base", chi_base, "baseSpec JSON, inline or @file");
    chi->add_option("--out", chi_out, "write the result to a file");
    construct->require_subcommand(1);

    CLI::App* zoo = app.add_subcommand("zoo", "catalog operations");
    std::string zoo_format = "json";
    CLI::App* zoo_list = zoo->add_subcommand("list", "list catalog spaces");
    zoo_list->add_option("--format", zoo_format, "listing format")
        ->check(CLI::IsMember({"json", "text"}));
    zoo->require_subcommand(1);

    CLI::App* oracle = app.add_subcommand("oracle", "finite reference instances");
    std::size_t nodes = 8;
    double density = 0.5;
    std::uint64_t oracle_seed = 0;
    std::string export_path;
    CLI::App* random_cmd = oracle->add_subcommand("random", "sample a random digraph");
    random_cmd->add_option("--nodes", nodes, "node count");
    random_cmd->add_option("--density", density, "edge probability");
    random_cmd->add_option("--seed", oracle_seed, "generator seed");
    random_cmd->add_option("--export", export_path, "write the digraph to a file");
    oracle->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) return run_verify(vargs, *verify);
        if (chi->parsed()) return run_construct_chi(chi_target, chi_delta, chi_base, chi_out);
        if (zoo_list->parsed()) return run_zoo_list(zoo_format);
        if (random_cmd->parsed())
            return run_oracle_random(nodes, density, oracle_seed, export_path);
    } catch (const qmb::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const qmb::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
