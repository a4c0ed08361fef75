#include "cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "curv/classifier.hpp"
#include "curv/curvature.hpp"
#include "curv/families.hpp"
#include "curv/formats.hpp"

namespace curv::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Everything a single invocation needs, filled by the argument parser.
struct RunConfig {
    std::string subcommand;
    std::string input_path;
    std::string family_name;
    std::optional<int> param;
    std::string input_format = "auto";
    std::string output_format = "table";
    std::string target_format = "graph6";
    std::string output_path;
    std::optional<int> decimal_digits;
    int max_n = 8;
    std::string suite;
    int samples = 50;
    std::uint64_t seed = 20240917;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string resolve_format(const RunConfig& config) {
    if (config.input_format != "auto") return config.input_format;
    const auto& p = config.input_path;
    if (p.ends_with(".g6") || p.ends_with(".graph6")) return "graph6";
    if (p.ends_with(".txt") || p.ends_with(".edges") || p.ends_with(".el")) return "edgelist";
    return "graph6";
}

std::vector<Graph> read_graphs(const RunConfig& config) {
    const std::string text = read_text_file(config.input_path);
    if (resolve_format(config) == "edgelist") {
        return {parse_edgelist(text)};
    }
    auto graphs = parse_graph6_lines(text);
    if (graphs.empty()) {
        throw FormatError(fmt::format("'{}' contains no graphs", config.input_path));
    }
    return graphs;
}

/// Exactly one of --input / --family.
Graph single_input(const RunConfig& config) {
    const bool has_file = !config.input_path.empty();
    const bool has_family = !config.family_name.empty();
    if (has_file == has_family) {
        throw UsageError("give exactly one of --input or --family");
    }
    if (has_family) return family(config.family_name, config.param);
    auto graphs = read_graphs(config);
    if (graphs.size() != 1) {
        throw UsageError(fmt::format("'{}' holds {} graphs; curvature takes exactly one", config.input_path, graphs.size()));
    }
    return graphs.front();
}

Json graph_json(const Graph& g) {
    Json edges = Json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    return Json{{"n", g.order()}, {"edges", edges}};
}

void write_curvature(const CurvatureReport& report, const RunConfig& config, std::ostream& os) {
    const auto& digits = config.decimal_digits;
    if (config.output_format == "json") {
        Json rows = Json::array();
        for (const auto& row : report.rows) {
            Json entry{{"u", row.u}, {"v", row.v}, {"kappa", to_fraction_string(row.kappa)}};
            if (digits) entry["kappa_decimal"] = to_decimal_string(row.kappa, *digits);
            rows.push_back(std::move(entry));
        }
        Json doc{{"graph", graph_json(report.graph)},
                 {"edges", rows},
                 {"min_kappa", to_fraction_string(report.min_kappa)},
                 {"positively_curved", report.positively_curved}};
        os << doc.dump(2) << '\n';
    } else if (config.output_format == "csv") {
        os << "u,v,kappa_num,kappa_den" << (digits ? ",kappa_decimal" : "") << '\n';
        for (const auto& row : report.rows) {
            os << row.u << ',' << row.v << ',' << numerator_of(row.kappa).str() << ',' << denominator_of(row.kappa).str();
            if (digits) os << ',' << to_decimal_string(row.kappa, *digits);
            os << '\n';
        }
    } else {
        os << fmt::format("graph {} (n = {}, m = {})\n", emit_graph6(report.graph), report.graph.order(),
                          report.graph.size());
        os << fmt::format("{:>4} {:>4}  {:>10}{}\n", "u", "v", "kappa", digits ? "  decimal" : "");
        for (const auto& row : report.rows) {
            os << fmt::format("{:>4} {:>4}  {:>10}", row.u, row.v, to_fraction_string(row.kappa));
            if (digits) os << "  " << to_decimal_string(row.kappa, *digits);
            os << '\n';
        }
        os << fmt::format("min kappa {}  positively curved: {}\n", to_fraction_string(report.min_kappa),
                          report.positively_curved ? "yes" : "no");
    }
}

int cmd_curvature(const RunConfig& config, std::ostream& os) {
    const Graph g = single_input(config);
    const CurvatureReport report = curvature_report(g);
    write_curvature(report, config, os);
    return report.positively_curved ? kExitOk : kExitNegative;
}

int cmd_classify(const RunConfig& config, std::ostream& os) {
    ClassificationResult result;
    if (!config.input_path.empty()) {
        const auto corpus = read_graphs(config);
        result = classify_corpus(corpus);
    } else {
        result = classify_theorem_15(config.max_n);
    }
    if (config.output_format == "json") {
        Json survivors = Json::array();
        for (const auto& s : result.survivors) {
            survivors.push_back({{"graph6", emit_graph6(s.graph)},
                                 {"graph", graph_json(s.graph)},
                                 {"max_degree", max_degree(s.graph)},
                                 {"min_kappa", to_fraction_string(s.report.min_kappa)}});
        }
        Json doc{{"n_max", result.n_max}, {"survivors", survivors}, {"matched_known_set", result.matched_known_set}};
        os << doc.dump(2) << '\n';
    } else if (config.output_format == "csv") {
        os << "graph6,n,m,max_degree,min_kappa_num,min_kappa_den\n";
        for (const auto& s : result.survivors) {
            os << emit_graph6(s.graph) << ',' << s.graph.order() << ',' << s.graph.size() << ','
               << max_degree(s.graph) << ',' << numerator_of(s.report.min_kappa).str() << ','
               << denominator_of(s.report.min_kappa).str() << '\n';
        }
    } else {
        os << fmt::format("{:<10} {:>3} {:>3} {:>6}  {}\n", "graph6", "n", "m", "maxdeg", "min kappa");
        for (const auto& s : result.survivors) {
            os << fmt::format("{:<10} {:>3} {:>3} {:>6}  {}\n", emit_graph6(s.graph), s.graph.order(), s.graph.size(),
                              max_degree(s.graph), to_fraction_string(s.report.min_kappa));
        }
        os << fmt::format("{} survivors up to n = {}; matches {{C3, C5, F2, F3, T}}: {}\n", result.survivors.size(),
                          result.n_max, result.matched_known_set ? "yes" : "no");
    }
    return result.matched_known_set ? kExitOk : kExitNegative;
}

VerificationReport run_suite(const RunConfig& config) {
    const std::string& suite = config.suite;
    auto corpus = [&](auto make_default) {
        return config.input_path.empty() ? make_default() : read_graphs(config);
    };
    if (suite == "lemma31") return verify_lemma_31(corpus(default_lemma_corpus));
    if (suite == "lemma32") return verify_lemma_32(corpus(default_lemma_corpus));
    if (suite == "lemma33") return verify_lemma_33(corpus(default_lemma_corpus));
    if (suite == "lemma21") return verify_edge_reduction(corpus([] { return connected_graphs_up_to(6); }));
    if (suite == "theorem14") return verify_theorem_14(config.max_n);
    if (suite == "theorem15") return verify_theorem_15(config.max_n);
    if (suite == "pendant") return verify_pendant_corollary();
    if (suite == "duality") return verify_duality(config.samples, config.seed);
    if (suite == "oracle") {
        return verify_oracle(corpus([&] { return default_oracle_corpus(100, config.seed); }));
    }
    throw UsageError(fmt::format("unknown suite '{}'", suite));
}

int cmd_verify(const RunConfig& config, std::ostream& os) {
    const VerificationReport report = run_suite(config);
    if (config.output_format == "json") {
        Json violations = Json::array();
        for (const auto& v : report.violations) {
            violations.push_back({{"graph6", v.graph6}, {"u", v.u}, {"v", v.v}, {"detail", v.detail}});
        }
        Json doc{{"suite", report.suite},
                 {"graphs_checked", report.graphs_checked},
                 {"items_checked", report.items_checked},
                 {"violations", violations},
                 {"notes", report.notes},
                 {"passed", report.passed()}};
        os << doc.dump(2) << '\n';
    } else {
        os << fmt::format("suite {}: {} graphs, {} checks, {} violations\n", report.suite, report.graphs_checked,
                          report.items_checked, report.violations.size());
        for (const auto& v : report.violations) {
            os << fmt::format("  violation {} ({}, {}): {}\n", v.graph6, v.u, v.v, v.detail);
        }
        for (const auto& note : report.notes) os << "  " << note << '\n';
        os << (report.passed() ? "PASS" : "FAIL") << '\n';
    }
    return report.passed() ? kExitOk : kExitNegative;
}

void write_graph(const Graph& g, const std::string& format, std::ostream& os) {
    if (format == "edgelist") {
        os << emit_edgelist(g);
    } else {
        os << emit_graph6(g) << '\n';
    }
}

int cmd_family(const RunConfig& config, std::ostream& os) {
    write_graph(family(config.family_name, config.param), config.target_format, os);
    return kExitOk;
}

int cmd_convert(const RunConfig& config, std::ostream& os) {
    for (const Graph& g : read_graphs(config)) write_graph(g, config.target_format, os);
    return kExitOk;
}

void build_parser(CLI::App& app, RunConfig& config) {
    app.require_subcommand(1);
    const std::vector<std::string> input_formats{"auto", "graph6", "edgelist"};
    const std::vector<std::string> graph_formats{"graph6", "edgelist"};
    const std::vector<std::string> report_formats{"table", "json", "csv"};

    auto* curvature = app.add_subcommand("curvature", "Per-edge Lin-Lu-Yau curvature of one graph");
    curvature->add_option("--input,-i", config.input_path, "Graph file (graph6 or edge list)");
    curvature->add_option("--family", config.family_name,
                          "Named graph: cycle, path, complete, star, friendship, t, f3prime, g1, f");
    curvature->add_option("--param,-k", config.param, "Family parameter");
    curvature->add_option("--format", config.input_format, "Input format")->check(CLI::IsMember(input_formats));
    curvature->add_option("--output", config.output_format, "table, json or csv")->check(CLI::IsMember(report_formats));
    curvature->add_option("--decimal", config.decimal_digits, "Add an approximate decimal column")
        ->check(CLI::Range(0, 60));
    curvature->add_option("--out,-o", config.output_path, "Write output to this file");

    auto* classify = app.add_subcommand("classify", "Positively curved C4-free graphs with minimum degree 2");
    classify->add_option("--max-n", config.max_n, "Largest order to enumerate")->check(CLI::Range(3, kEnumerationCap));
    classify->add_option("--input,-i", config.input_path, "Classify a graph6 corpus instead of enumerating");
    classify->add_option("--format", config.input_format, "Input format")->check(CLI::IsMember(input_formats));
    classify->add_option("--output", config.output_format, "table, json or csv")->check(CLI::IsMember(report_formats));
    classify->add_option("--out,-o", config.output_path, "Write output to this file");

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", config.suite,
                       "lemma31, lemma32, lemma33, lemma21, theorem14, theorem15, pendant, duality, oracle")
        ->required();
    verify->add_option("--max-n", config.max_n, "Largest order for theorem suites")->check(CLI::Range(3, kEnumerationCap));
    verify->add_option("--input,-i", config.input_path, "Replace the default corpus with a graph6 file");
    verify->add_option("--format", config.input_format, "Input format")->check(CLI::IsMember(input_formats));
    verify->add_option("--samples", config.samples, "Random samples for the duality suite")->check(CLI::PositiveNumber);
    verify->add_option("--seed", config.seed, "Seed for random corpora");
    verify->add_option("--output", config.output_format, "table or json")
        ->check(CLI::IsMember(std::vector<std::string>{"table", "json"}));
    verify->add_option("--out,-o", config.output_path, "Write output to this file");

    auto* fam = app.add_subcommand("family", "Emit a named graph");
    fam->add_option("--name", config.family_name, "cycle, path, complete, star, friendship, t, f3prime, g1, f")
        ->required();
    fam->add_option("--param,-k", config.param, "Family parameter");
    fam->add_option("--format", config.target_format, "graph6 or edgelist")->check(CLI::IsMember(graph_formats));
    fam->add_option("--out,-o", config.output_path, "Write output to this file");

    auto* convert = app.add_subcommand("convert", "Transcode between graph6 and edge list");
    convert->add_option("--input,-i", config.input_path, "Source file")->required();
    convert->add_option("--from", config.input_format, "Source format")->check(CLI::IsMember(input_formats));
    convert->add_option("--to", config.target_format, "Target format")->check(CLI::IsMember(graph_formats));
    convert->add_option("--out,-o", config.output_path, "Write output to this file");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig config;
    CLI::App app{"Exact Ollivier and Lin-Lu-Yau Ricci curvature on small graphs", "curv"};
    build_parser(app, config);

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
    for (const auto* sub : app.get_subcommands()) config.subcommand = sub->get_name();

    std::ostringstream buffer;
    int code = kExitError;
    try {
        if (config.subcommand == "curvature") code = cmd_curvature(config, buffer);
        else if (config.subcommand == "classify") code = cmd_classify(config, buffer);
        else if (config.subcommand == "verify") code = cmd_verify(config, buffer);
        else if (config.subcommand == "family") code = cmd_family(config, buffer);
        else if (config.subcommand == "convert") code = cmd_convert(config, buffer);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }

    if (config.output_path.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(config.output_path, std::ios::binary);
        if (!(file << buffer.str())) {
            err << "error: cannot write '" << config.output_path << "'\n";
            return kExitError;
        }
    }
    return code;
}

}  // namespace curv::cli
