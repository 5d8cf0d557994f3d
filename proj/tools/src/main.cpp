// algcut: exact fixed-point computations for torus cuts of projective space.
//
//   algcut <command> <scenario.json> [--order N] [--dmax N] [--format text|json]
//   algcut <command> <dir> --out-dir <dir>      (batch, one report per scenario)
//   algcut verify [corpus-dir]
//
// Exit codes: 0 ok, 2 invalid input, 3 property failure, 4 precision retries exhausted.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>

#include "CLI11.hpp"

#include "algcut_app/report.hpp"
#include "algcut_app/verify.hpp"

namespace fs = std::filesystem;
using namespace algcut::app;

namespace {

struct Outcome {
    int code = 0;
    std::string text;
    std::string error;
};

Outcome run_one(Command cmd, const fs::path& path, const RunOptions& opts)
{
    Outcome out;
    try {
        const auto report = run_command(cmd, load_scenario(path), opts);
        out.text = report.render(opts.format);
        out.code = report.property_failure ? 3 : 0;
    } catch (const std::exception& e) {
        out.error = e.what();
        out.code = exit_code_for(e);
    }
    return out;
}

int run_batch(Command cmd, const fs::path& dir, const fs::path& out_dir, const RunOptions& opts)
{
    std::vector<fs::path> inputs;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.path().extension() == ".json")
            inputs.push_back(entry.path());
    std::sort(inputs.begin(), inputs.end());
    fs::create_directories(out_dir);

    std::vector<std::future<Outcome>> jobs;
    jobs.reserve(inputs.size());
    for (const auto& in : inputs)
        jobs.push_back(std::async(std::launch::async, run_one, cmd, in, opts));

    int worst = 0;
    const std::string ext = opts.format == Format::json ? ".json" : ".txt";
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        const auto result = jobs[i].get();
        const auto target = out_dir / (inputs[i].stem().string() + "." + std::string(to_string(cmd)) + ext);
        std::ofstream(target, std::ios::binary) << (result.error.empty() ? result.text : "error: " + result.error + "\n");
        if (!result.error.empty())
            std::cerr << inputs[i].string() << ": " << result.error << "\n";
        worst = std::max(worst, result.code);
    }
    return worst;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact fixed-point formulas for algebraic cuts of torus actions on P(V)"};
    std::string command;
    std::string scenario;
    std::string format = "text";
    std::string out_dir;
    std::optional<int> order;
    std::optional<unsigned> dmax;

    app.add_option("command", command, "stability | inventory | kalkman | euler | todd | oracle | verify")
        ->required();
    app.add_option("scenario", scenario, "Scenario JSON file (or a directory for batch / verify)");
    app.add_option("--order", order, "Series working order override")->check(CLI::PositiveNumber);
    app.add_option("--dmax", dmax, "Oracle monomial degree cap")->check(CLI::PositiveNumber);
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out-dir", out_dir, "Batch mode output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    RunOptions opts;
    opts.order = order;
    opts.dmax = dmax;
    opts.format = format == "json" ? Format::json : Format::text;

    try {
        const Command cmd = parse_command(command);
        if (cmd == Command::verify) {
            std::optional<fs::path> corpus;
            if (!scenario.empty()) {
                if (!fs::is_directory(scenario))
                    throw ValidationError(scenario + ": verify expects a corpus directory");
                corpus = scenario;
            }
            const auto report = run_verify(corpus);
            std::cout << report.render(opts.format);
            return report.property_failure ? 3 : 0;
        }
        if (scenario.empty())
            throw ValidationError("command '" + command + "' needs a scenario path");
        if (fs::is_directory(scenario)) {
            if (out_dir.empty())
                throw ValidationError("batch mode over a directory needs --out-dir");
            return run_batch(cmd, scenario, out_dir, opts);
        }
        const auto report = run_command(cmd, load_scenario(scenario), opts);
        std::cout << report.render(opts.format);
        return report.property_failure ? 3 : 0;
    } catch (const std::exception& e) {
        std::cerr << "algcut: " << e.what() << "\n";
        return exit_code_for(e);
    }
}
