#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "nakayama/report.hpp"

namespace {

using namespace nakayama;

enum class Format { Text, Structured };

Format parseFormat(const std::string& s) {
    return s == "structured" ? Format::Structured : Format::Text;
}

void emit(const AnalysisReport& rep, Format fmt, std::ostream& out) {
    if (fmt == Format::Structured)
        out << toStructured(rep) << '\n';
    else
        out << toText(rep);
}

int analyzeOne(const std::string& text, const AnalysisOptions& opts, Format fmt) {
    try {
        emit(analyze(parse(text), opts), fmt, std::cout);
        return 0;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

int analyzeFile(const std::string& path, const AnalysisOptions& opts, Format fmt) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open file '" << path << "'\n";
        return 2;
    }
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const int rc = analyzeOne(line, opts, fmt);
        if (rc != 0) return rc;
    }
    return 0;
}

int defaultJobs() {
    if (const char* env = std::getenv("ANALYZER_JOBS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

struct SeriesArgs {
    std::vector<std::string> tokens;
    std::string file;
    std::string format = "text";

    std::string joined() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < tokens.size(); ++i) {
            if (i) os << ' ';
            os << tokens[i];
        }
        return os.str();
    }
};

void addSeriesOptions(CLI::App* sub, SeriesArgs& args) {
    sub->add_option("series", args.tokens, "Kupisch series, e.g. 2,3,3 or '2 3 3'");
    sub->add_option("--file", args.file, "read one series per line from a file");
    sub->add_option("--format", args.format, "output format")
        ->check(CLI::IsMember({"text", "structured"}));
}

int runSeriesCommand(const SeriesArgs& args, const AnalysisOptions& opts) {
    const auto fmt = parseFormat(args.format);
    if (!args.file.empty()) return analyzeFile(args.file, opts, fmt);
    if (args.tokens.empty()) {
        std::cerr << "error: no series given (positional argument or --file)\n";
        return 2;
    }
    return analyzeOne(args.joined(), opts, fmt);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"resolution-quiver analyzer for connected Nakayama algebras"};
    app.require_subcommand(1);

    SeriesArgs analyzeArgs;
    AnalysisOptions analyzeOpts;
    auto* cmdAnalyze = app.add_subcommand(
        "analyze", "decide finiteness of the global dimension and Gorensteinness");
    addSeriesOptions(cmdAnalyze, analyzeArgs);
    cmdAnalyze->add_flag("--oracle", analyzeOpts.withOracle,
                         "include brute-force projective/injective dimensions");
    cmdAnalyze->add_flag("--cartan", analyzeOpts.withCartan,
                         "include the Cartan matrix, determinant and Smith normal form");
    cmdAnalyze->add_flag("--retract", analyzeOpts.withRetraction,
                         "include the left-retraction chain");

    SeriesArgs cartanArgs;
    auto* cmdCartan =
        app.add_subcommand("cartan", "Cartan matrix, determinant, rank and Smith normal form");
    addSeriesOptions(cmdCartan, cartanArgs);

    SeriesArgs retractArgs;
    auto* cmdRetract =
        app.add_subcommand("retract", "left-retraction chain down to a selfinjective algebra");
    addSeriesOptions(cmdRetract, retractArgs);

    SeriesArgs oracleArgs;
    auto* cmdOracle = app.add_subcommand(
        "oracle", "brute-force homological dimensions of every simple module");
    addSeriesOptions(cmdOracle, oracleArgs);

    CensusConfig censusCfg;
    censusCfg.jobs = defaultJobs();
    std::string censusChecks;
    std::string censusFormat = "text";
    auto* cmdCensus = app.add_subcommand(
        "census", "enumerate algebras up to bounds and verify every registered property");
    cmdCensus->add_option("--n-max", censusCfg.nMax, "largest number of simple modules");
    cmdCensus->add_option("--c-max", censusCfg.cMax, "largest admissible-sequence entry");
    cmdCensus->add_option("--checks", censusChecks, "comma-separated check ids (default: all)");
    cmdCensus->add_option("--jobs", censusCfg.jobs, "worker threads (env ANALYZER_JOBS)");
    cmdCensus->add_option("--budget", censusCfg.budget,
                          "bounded-enumeration budget for the linear-system check");
    cmdCensus->add_option("--format", censusFormat, "output format")
        ->check(CLI::IsMember({"text", "structured"}));
    cmdCensus->add_flag_callback("--list-checks", [] {
        for (const auto& id : allCheckIds()) std::cout << id << '\n';
        std::exit(0);
    });

    CLI11_PARSE(app, argc, argv);

    if (cmdAnalyze->parsed()) return runSeriesCommand(analyzeArgs, analyzeOpts);
    if (cmdCartan->parsed())
        return runSeriesCommand(cartanArgs, AnalysisOptions{false, true, false});
    if (cmdRetract->parsed())
        return runSeriesCommand(retractArgs, AnalysisOptions{false, false, true});
    if (cmdOracle->parsed())
        return runSeriesCommand(oracleArgs, AnalysisOptions{true, false, false});

    if (cmdCensus->parsed()) {
        if (!censusChecks.empty()) {
            std::stringstream ss(censusChecks);
            std::string id;
            while (std::getline(ss, id, ','))
                if (!id.empty()) censusCfg.checks.push_back(id);
        }
        try {
            const auto report = verifyAll(censusCfg);
            if (censusFormat == "structured")
                std::cout << toStructured(report, censusCfg) << '\n';
            else
                std::cout << toText(report, censusCfg);
            return report.allPassed() ? 0 : 1;
        } catch (const std::invalid_argument& e) {
            std::cerr << "error: " << e.what() << '\n';
            return 2;
        }
    }
    return 0;
}
