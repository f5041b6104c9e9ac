// Command-line front end: verify a configuration file, run the published
// failure corpus, run seeded search campaigns, render figures.
#include "butterfly/config.hpp"
#include "butterfly/explorer.hpp"
#include "butterfly/svg.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

namespace {

using namespace butterfly;

constexpr int kInvalid = static_cast<int>(CliExit::InvalidInput);

int run_verify(const std::string& path) {
    ButterflyProblem problem = parse_config_file(path);
    std::vector<Violation> violations = validate_problem(problem);
    if (!violations.empty()) {
        for (const Violation& v : violations)
            std::cerr << "error: invalid problem: " << v.detail << "\n";
        return kInvalid;
    }
    TraceResult trace = trace_butterfly(problem);
    std::cout << verify_report(problem, trace);
    return static_cast<int>(verify_exit(trace));
}

int run_table1() {
    bool all_fail = true;
    int row = 0;
    for (const ButterflyProblem& problem : table1_corpus()) {
        ++row;
        TraceResult trace = trace_butterfly(problem);
        const auto* t = std::get_if<ButterflyTrace>(&trace);
        if (t == nullptr) {
            std::cout << "row " << row << ": degenerate\n";
            all_fail = false;
            continue;
        }
        std::cout << "row " << row << ": holds = " << (t->holds ? "true" : "false")
                  << ", deviation = " << t->deviation << "\n";
        all_fail = all_fail && !t->holds;
    }
    // The published claim is that every row fails; a row that holds is a
    // regression.
    return all_fail ? 0 : 1;
}

const std::map<std::string, std::pair<SampleMode, SymmetryKind>> kModes = {
    {"random", {SampleMode::Random, SymmetryKind::ReflectVertical}},
    {"axis-vertical", {SampleMode::AxisSymmetric, SymmetryKind::ReflectVertical}},
    {"axis-horizontal", {SampleMode::AxisSymmetric, SymmetryKind::ReflectHorizontal}},
    {"axis-diagonal", {SampleMode::AxisSymmetric, SymmetryKind::ReflectDiagonal}},
    {"axis-antidiagonal", {SampleMode::AxisSymmetric, SymmetryKind::ReflectAntidiagonal}},
    {"center", {SampleMode::Center, SymmetryKind::ReflectVertical}},
    {"paper-hypothesis-only-diagonal",
     {SampleMode::PaperHypothesisOnlyDiagonal, SymmetryKind::ReflectDiagonal}},
    {"paper-hypothesis-only-antidiagonal",
     {SampleMode::PaperHypothesisOnlyDiagonal, SymmetryKind::ReflectAntidiagonal}},
};

std::string snake_case(std::string_view name) {
    std::string out;
    for (char ch : name) {
        if (std::isupper(static_cast<unsigned char>(ch))) {
            if (!out.empty())
                out += '_';
            out += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        } else {
            out += ch;
        }
    }
    return out;
}

int run_search(const std::string& geometry, const std::string& mode, std::uint32_t count,
               std::uint64_t seed, std::uint32_t max_den, const std::string& emit_dir) {
    SampleSpec spec;
    if (geometry == "taxicab") {
        spec.geometry = GeometryKind::Taxicab;
    } else if (geometry == "euclid") {
        spec.geometry = GeometryKind::Euclid;
    } else {
        std::cerr << "error: geometry must be 'taxicab' or 'euclid'\n";
        return kInvalid;
    }
    auto it = kModes.find(mode);
    if (it == kModes.end()) {
        std::cerr << "error: unknown mode '" << mode << "'\n";
        return kInvalid;
    }
    spec.mode = it->second.first;
    spec.axis = it->second.second;
    spec.count = count;
    spec.seed = seed;
    spec.max_denominator = max_den;

    CampaignStats stats = run_campaign(spec);

    std::cout << "geometry = " << geometry << "\n";
    std::cout << "mode = " << mode << "\n";
    std::cout << "count = " << count << "\n";
    std::cout << "seed = " << seed << "\n";
    std::cout << "max_denominator = " << max_den << "\n";
    for (Outcome o : all_outcomes)
        std::cout << to_string(o) << " = " << stats.count_for(o) << "\n";

    if (!emit_dir.empty()) {
        std::filesystem::create_directories(emit_dir);
        for (Outcome o : {Outcome::FailsNoHypothesis, Outcome::PaperHypothesisButFails}) {
            const auto& kept = stats.exemplars_for(o);
            for (std::size_t i = 0; i < kept.size(); ++i) {
                std::filesystem::path file =
                    std::filesystem::path(emit_dir) /
                    (snake_case(to_string(o)) + "_" + std::to_string(i) + ".cfg");
                std::ofstream out(file);
                if (!out) {
                    std::cerr << "error: cannot write " << file.string() << "\n";
                    return kInvalid;
                }
                out << to_config(kept[i]);
            }
        }
    }
    return 0;
}

int run_figure(const std::string& path, const std::string& out_path) {
    ButterflyProblem problem = parse_config_file(path);
    std::vector<Violation> violations = validate_problem(problem);
    if (!violations.empty()) {
        for (const Violation& v : violations)
            std::cerr << "error: invalid problem: " << v.detail << "\n";
        return kInvalid;
    }
    std::string svg = render_svg(problem, trace_butterfly(problem));
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write '" << out_path << "'\n";
        return kInvalid;
    }
    out << svg;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact butterfly-theorem configurations on taxicab and Euclidean circles"};
    app.require_subcommand(1);

    std::string verify_path;
    CLI::App* verify = app.add_subcommand("verify", "Trace one configuration file and report");
    verify->add_option("file", verify_path, "problem configuration file")->required();

    CLI::App* table1 = app.add_subcommand(
        "table1", "Run the five published failure rows on the radius-10 circle");

    std::string geometry = "taxicab";
    std::string mode = "random";
    std::uint32_t count = 100;
    std::uint64_t seed = 0;
    std::uint32_t max_den = 32;
    std::string emit_dir;
    CLI::App* search = app.add_subcommand("search", "Run a seeded sampling campaign");
    search->add_option("--geometry", geometry, "taxicab or euclid");
    search->add_option("--mode", mode,
                       "random, axis-vertical, axis-horizontal, axis-diagonal, "
                       "axis-antidiagonal, center, paper-hypothesis-only-diagonal, "
                       "paper-hypothesis-only-antidiagonal");
    search->add_option("--count", count, "number of samples");
    search->add_option("--seed", seed, "campaign seed");
    search->add_option("--max-den", max_den, "largest sampled denominator");
    search->add_option("--emit-counterexamples", emit_dir,
                       "directory for exemplar configs of the failing categories");

    std::string figure_path;
    std::string figure_out;
    CLI::App* figure = app.add_subcommand("figure", "Render a configuration to SVG");
    figure->add_option("file", figure_path, "problem configuration file")->required();
    figure->add_option("--out", figure_out, "output SVG path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            app.exit(e);
            return 0;
        }
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }

    try {
        if (verify->parsed())
            return run_verify(verify_path);
        if (table1->parsed())
            return run_table1();
        if (search->parsed())
            return run_search(geometry, mode, count, seed, max_den, emit_dir);
        if (figure->parsed())
            return run_figure(figure_path, figure_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
    std::cerr << "error: no subcommand\n";
    return kInvalid;
}
