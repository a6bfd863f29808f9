#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "optdeg/workbench.hpp"

using nlohmann::json;

namespace {

json read_job(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in) throw optdeg::Error(optdeg::Errc::schema, "cannot open job file '" + path + "'");
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw optdeg::Error(optdeg::Errc::schema, std::string("job is not valid JSON: ") + e.what());
    }
}

// key=value with value read as JSON, or as a string when it is not valid JSON.
void apply_param(json& job, const std::string& param) {
    auto eq = param.find('=');
    if (eq == std::string::npos || eq == 0) throw optdeg::Error(optdeg::Errc::schema, "--param expects key=value, got '" + param + "'");
    auto key = param.substr(0, eq);
    auto raw = param.substr(eq + 1);
    json value = json::parse(raw, nullptr, false);
    if (value.is_discarded()) value = raw;
    job["options"][key] = std::move(value);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"optdeg: algebraic degrees of p-norm and rational optimization problems"};
    std::string command;
    std::string kind;
    std::string job_path;
    std::string out_path;
    std::vector<std::string> params;
    optdeg::RunOptions opts;
    std::uint64_t seed = 0;
    int trials = 0;
    std::string field;
    std::uint64_t budget = 0;

    app.add_option("command", command, "degree | projective-degree | polar | conormal | joint | formula | evolute | tower-check | crossvalidate | gb")
        ->required()
        ->check(CLI::IsMember({"degree", "projective-degree", "polar", "conormal", "joint", "formula", "evolute",
                               "tower-check", "crossvalidate", "gb"}));
    app.add_option("kind", kind, "formula kind (formula command only)");
    app.add_option("--job", job_path, "job document (JSON), '-' for stdin");
    auto* seed_opt = app.add_option("--seed", seed, "master seed");
    auto* trials_opt = app.add_option("--trials", trials, "number of random trials")->check(CLI::PositiveNumber);
    auto* field_opt = app.add_option("--field", field, "rational | prime:<q>");
    auto* budget_opt = app.add_option("--budget", budget, "reduction step budget per Groebner computation")->check(CLI::PositiveNumber);
    app.add_option("--out", out_path, "write the report here instead of stdout");
    app.add_option("--param", params, "formula or command option as key=value (repeatable)");
    app.add_flag("--timings", opts.timings, "include wall-clock timings in the report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        json job = job_path.empty() ? json::object() : read_job(job_path);
        for (const auto& p : params) apply_param(job, p);
        if (*seed_opt) opts.seed = seed;
        if (*trials_opt) opts.trials = trials;
        if (*field_opt) opts.field = field;
        if (*budget_opt) opts.budget = budget;
        if (!kind.empty()) {
            if (command != "formula") throw optdeg::Error(optdeg::Errc::schema, "a kind argument is only valid for 'formula'");
            opts.formula_kind = kind;
        }
        auto text = optdeg::run_job(command, job, opts).dump(2) + "\n";
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(out_path, std::ios::binary);
            if (!out || !(out << text)) throw optdeg::Error(optdeg::Errc::schema, "cannot write '" + out_path + "'");
        }
        return 0;
    } catch (const optdeg::Error& e) {
        std::cerr << optdeg::error_document(e).dump(2) << "\n";
        return optdeg::exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << optdeg::error_document(optdeg::Error(optdeg::Errc::invalid_argument, e.what())).dump(2) << "\n";
        return 3;
    }
}
