#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pancyc/analysis.hpp"
#include "pancyc/bounds.hpp"
#include "pancyc/constructions.hpp"
#include "pancyc/cycle_enum.hpp"
#include "pancyc/json_io.hpp"
#include "pancyc/search.hpp"

namespace pancyc::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, std::istream& in) {
    std::ostringstream buf;
    if (path.empty() || path == "-") {
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path);
    if (!file) throw UsageError("cannot open input file " + path);
    buf << file.rdbuf();
    return buf.str();
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

Json spectrum_report(const ChordedCycle& g) {
    const auto s = spectrum(g);
    const auto bound = max_cycle_bound(g.k());
    return Json{{"n", g.n()},
                {"lengths", s.lengths.to_vector()},
                {"cycle_count", s.cycle_count},
                {"pancyclic", s.lengths.contains_range(3, g.n())},
                {"missing_lengths", missing_lengths(g)},
                {"shi_bound", bound},
                {"within_shi_bound", s.cycle_count <= bound}};
}

struct SearchFlags {
    int max_k = kMaxSearchChords;
    int jobs = 0;
    bool validate = false;
    bool degree_prune = false;
    bool no_lower_bound_skip = false;
    double budget = 0.0;
    bool timing = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--max-k", max_k, "Largest chord count to try")->check(CLI::Range(0, kMaxSearchChords));
        cmd->add_option("--jobs", jobs, "Worker threads (0: OpenMP default)")->check(CLI::NonNegativeNumber);
        cmd->add_flag("--validate", validate, "Spectrum-check every candidate skipped by the degree prune");
        cmd->add_flag("--degree-prune", degree_prune, "Skip chord sets whose busiest vertex caps the cycle count");
        cmd->add_flag("--no-lower-bound-skip", no_lower_bound_skip, "Start at k = 0 instead of the counting bound");
        cmd->add_option("--budget", budget, "Time budget in seconds (0: none)")->check(CLI::NonNegativeNumber);
        cmd->add_flag("--timing", timing, "Include wall time in the JSON output");
    }

    SearchConfig config() const {
        SearchConfig c;
        c.max_k = max_k;
        c.jobs = jobs;
        c.validate = validate;
        c.degree_prune = degree_prune;
        c.lower_bound_skip = !no_lower_bound_skip;
        if (budget > 0) c.time_budget_seconds = budget;
        if (const char* dir = std::getenv("PANCYC_OUTDIR"); dir != nullptr && *dir != '\0') {
            c.journal_dir = std::filesystem::path(dir);
        }
        return c;
    }
};

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Minimum pancyclic graphs: cycle spectra, searches, bounds and constructions", "pancyc"};
    app.require_subcommand(1);

    std::string input;

    auto* spectrum_cmd = app.add_subcommand("spectrum", "Cycle lengths and count of a graph document");
    spectrum_cmd->add_option("input", input, "Graph JSON file, or - for stdin");

    bool oracle = false;
    auto* verify_cmd = app.add_subcommand("verify", "Check pancyclicity, cross-checking with the brute-force oracle");
    verify_cmd->add_option("input", input, "Graph JSON file, or - for stdin");
    verify_cmd->add_flag("--oracle", oracle, "Require the brute-force oracle comparison");

    int n = 0;
    SearchFlags search_flags;
    auto* search_cmd = app.add_subcommand("search", "Exhaustive search for m(n)");
    search_cmd->add_option("--n", n, "Vertex count")->required()->check(CLI::Range(3, kMaxSearchVertices));
    search_flags.attach(search_cmd);

    int k = 0;
    SearchFlags prove_flags;
    auto* prove_cmd = app.add_subcommand("prove-none", "Certify that no k-chord graph on n vertices is pancyclic");
    prove_cmd->add_option("--n", n, "Vertex count")->required()->check(CLI::Range(3, kMaxSearchVertices));
    prove_cmd->add_option("--k", k, "Chord count")->required()->check(CLI::Range(0, kMaxSearchChords));
    prove_flags.attach(prove_cmd);

    int from = 3;
    int to = 3;
    std::string format = "csv";
    SearchFlags table_flags;
    auto* table_cmd = app.add_subcommand("table", "Table of n, k, m(n)");
    table_cmd->add_option("--from", from, "First n")->required()->check(CLI::Range(3, kMaxSearchVertices));
    table_cmd->add_option("--to", to, "Last n")->required()->check(CLI::Range(3, kMaxSearchVertices));
    table_cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    table_flags.attach(table_cmd);

    auto* bounds_cmd = app.add_subcommand("bounds", "Lower bounds on m(n)");
    bounds_cmd->add_option("--n", n, "Vertex count")->required()->check(CLI::PositiveNumber);

    bool fig2 = false;
    auto* construct_cmd = app.add_subcommand("construct", "Build and verify the five-chord construction");
    auto* construct_n = construct_cmd->add_option("--n", n, "Vertex count (>= 22)");
    auto* construct_fig2 = construct_cmd->add_flag("--figure2", fig2, "The 14-vertex example instead");
    construct_n->excludes(construct_fig2);

    auto* reduce_cmd = app.add_subcommand("reduce", "Apply the structural reductions to a pancyclic graph");
    reduce_cmd->add_option("--input,input", input, "Graph JSON file, or - for stdin");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ExitCode::ok : ExitCode::usage;
    }

    try {
        if (spectrum_cmd->parsed()) {
            const auto doc = parse_graph_document(read_input(input, in));
            emit(out, spectrum_report(doc.graph));
            return ExitCode::ok;
        }

        if (verify_cmd->parsed()) {
            const auto doc = parse_graph_document(read_input(input, in));
            const auto& g = doc.graph;
            const auto s = spectrum(g);
            Json report{{"graph", to_json(g)},
                        {"pancyclic", s.lengths.contains_range(3, g.n())},
                        {"missing_lengths", missing_lengths(g)},
                        {"spectrum", to_json(s)}};
            bool agree = true;
            if (g.n() <= kBruteForceMaxN) {
                const auto o = brute_force_spectrum(g);
                agree = o == s;
                report["oracle"] = {{"spectrum", to_json(o)}, {"agreement", agree ? "methods agree" : "methods disagree"}};
            } else if (oracle) {
                throw PreconditionError("the brute-force oracle is limited to n <= " + std::to_string(kBruteForceMaxN));
            } else {
                report["oracle"] = nullptr;
            }
            emit(out, report);
            return agree ? ExitCode::ok : ExitCode::failure;
        }

        if (search_cmd->parsed()) {
            const auto result = find_min_chords(n, search_flags.config());
            emit(out, to_json(result, search_flags.timing));
            return ExitCode::ok;
        }

        if (prove_cmd->parsed()) {
            const auto cert = prove_no_pancyclic(n, k, prove_flags.config());
            emit(out, to_json(cert, prove_flags.timing));
            if (cert.validation_violations > 0) return ExitCode::failure;
            return cert.complete ? ExitCode::ok : ExitCode::failure;
        }

        if (table_cmd->parsed()) {
            if (from > to) throw UsageError("--from must not exceed --to");
            const auto rows = build_table(from, to, table_flags.config());
            bool failed = false;
            if (format == "csv") {
                out << "n,k,m\n";
                for (const auto& row : rows) {
                    if (row.result) {
                        out << row.n << ',' << row.result->k_min << ',' << row.result->m << '\n';
                    } else {
                        failed = true;
                        err << "n=" << row.n << ": " << row.error << '\n';
                    }
                }
            } else {
                Json arr = Json::array();
                for (const auto& row : rows) {
                    if (row.result) {
                        arr.push_back(to_json(*row.result, table_flags.timing));
                    } else {
                        failed = true;
                        arr.push_back({{"n", row.n}, {"error", row.error}});
                    }
                }
                emit(out, arr);
            }
            return failed ? ExitCode::failure : ExitCode::ok;
        }

        if (bounds_cmd->parsed()) {
            emit(out, to_json(bounds_report(n)));
            return ExitCode::ok;
        }

        if (construct_cmd->parsed()) {
            if (!fig2 && construct_n->count() == 0) throw UsageError("construct needs --n N or --figure2");
            if (!fig2 && n < 22) throw UsageError("the five-chord construction needs n >= 22");
            const auto g = fig2 ? figure2() : figure1(n - 21);
            auto verification = spectrum_report(g);
            verification["edge_count"] = g.edge_count();
            emit(out, Json{{"graph", to_json(g)}, {"verification", verification}});
            return ExitCode::ok;
        }

        if (reduce_cmd->parsed()) {
            const auto doc = parse_graph_document(read_input(input, in));
            const auto& g = doc.graph;
            if (!is_pancyclic(g)) throw PreconditionError("reduce needs a pancyclic graph");
            Json report{{"graph", to_json(g)}};
            const auto prop3 = prop3_reduce(g);
            report["prop3"] = prop3 ? to_json(*prop3) : Json(nullptr);
            Json thm4 = Json::array();
            if (g.n() > 6) {
                for (const auto& r : thm4_reduce(g)) thm4.push_back(to_json(r));
            }
            report["thm4"] = thm4;
            Json prop5 = Json::array();
            if (g.n() % 2 == 0) {
                for (const auto& arc : arcs_of(g)) {
                    if (arc.length != g.n() / 2 - 1 || arc.start == arc.end) continue;
                    auto j = to_json(prop5_analyze(g, arc));
                    j["arc"] = to_json(arc);
                    prop5.push_back(j);
                }
            }
            report["prop5"] = prop5;
            emit(out, report);
            return ExitCode::ok;
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return ExitCode::usage;
    } catch (const MalformedDocument& e) {
        err << "error: " << e.what() << '\n';
        return ExitCode::usage;
    } catch (const InvalidGraph& e) {
        err << "invalid graph: " << e.what() << '\n';
        return ExitCode::invalid_data;
    } catch (const PreconditionError& e) {
        err << "invalid input: " << e.what() << '\n';
        return ExitCode::invalid_data;
    } catch (const SearchFailure& e) {
        err << "search failed: " << e.what() << '\n';
        return ExitCode::failure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return ExitCode::failure;
    }
    return ExitCode::usage;
}

} // namespace pancyc::cli
