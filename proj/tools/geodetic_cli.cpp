#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "geodetic/canon.hpp"
#include "geodetic/constructions.hpp"
#include "geodetic/errors.hpp"
#include "geodetic/graph.hpp"
#include "geodetic/graph6.hpp"
#include "geodetic/oracle.hpp"
#include "geodetic/search.hpp"

using namespace geodetic;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitCapacity = 2;
constexpr int kExitVerification = 3;

char yn(bool b) { return b ? 'y' : 'n'; }

// Reads whole lines from the named files, or stdin for an empty list / "-".
// Returns false on an unreadable file.
bool gather_lines(const std::vector<std::string>& files, std::vector<std::string>& lines) {
    auto drain = [&lines](std::istream& in) {
        std::string line;
        while (std::getline(in, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
            lines.push_back(line);
        }
    };
    if (files.empty()) {
        drain(std::cin);
        return true;
    }
    for (const auto& f : files) {
        if (f == "-") {
            drain(std::cin);
            continue;
        }
        std::ifstream in(f);
        if (!in) {
            std::cerr << "cannot open " << f << "\n";
            return false;
        }
        drain(in);
    }
    return true;
}

int cmd_enumerate(int n, int threads, size_t cache_size, bool regular,
                  const std::string& output) {
    search::Options opts;
    opts.threads = threads;
    opts.cache_capacity = cache_size;
    uint64_t last_trees = 0;
    opts.progress = [&last_trees](const search::Stats& s) {
        if (s.trees == last_trees) return;
        last_trees = s.trees;
        std::cerr << "n=" << s.n << " trees=" << s.trees << " states=" << s.states
                  << " found=" << s.emitted << "\n";
    };
    search::Result res =
        regular ? search::enumerate_regular(n, opts) : search::enumerate_geodetic(n, opts);
    std::ofstream file;
    bool to_file = !output.empty() && output != "-";
    if (to_file) {
        file.open(output);
        if (!file) {
            std::cerr << "cannot open " << output << "\n";
            return kExitUsage;
        }
    }
    std::ostream& out = to_file ? static_cast<std::ostream&>(file) : std::cout;
    // print the canonical member of each class: stable bytes no matter how
    // the search was scheduled
    for (const auto& [key, g] : res.graphs) {
        Graph c = canonical_graph(key);
        if (!is_geodetic(c) || !is_biconnected(c) || !are_isomorphic(c, g)) {
            std::cerr << "internal error: emitted graph fails re-check\n";
            return kExitVerification;
        }
        out << graph6_encode(c) << "\n";
    }
    std::cerr << "n=" << n << " count=" << res.graphs.size() << "\n";
    return 0;
}

int cmd_check(const std::vector<std::string>& files) {
    std::vector<std::string> lines;
    if (!gather_lines(files, lines)) return kExitUsage;
    int failures = 0;
    for (size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        try {
            Graph g = graph6_decode(lines[i]);
            std::cout << "geodetic=" << yn(is_geodetic(g)) << " connected=" << yn(is_connected(g))
                      << " biconnected=" << yn(is_biconnected(g)) << "\n";
        } catch (const std::exception& e) {
            std::cerr << "line " << i + 1 << ": " << e.what() << "\n";
            ++failures;
        }
    }
    return failures ? kExitVerification : 0;
}

int cmd_report(const std::vector<std::string>& files) {
    std::vector<std::string> lines;
    if (!gather_lines(files, lines)) return kExitUsage;
    int failures = 0;
    for (size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        try {
            Graph g = graph6_decode(lines[i]);
            GraphReport r = graph_report(g);
            CanonicalResult c = canonicalize(g);
            std::cout << g.order() << " " << r.radius << " " << r.diameter << " " << r.min_degree
                      << " " << yn(r.regular) << " " << yn(r.hamiltonian) << " "
                      << aut_count_to_string(c.aut_order) << "\n";
        } catch (const std::exception& e) {
            std::cerr << "line " << i + 1 << ": " << e.what() << "\n";
            ++failures;
        }
    }
    return failures ? kExitVerification : 0;
}

Graph read_one_graph() {
    std::string line;
    while (std::getline(std::cin, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (!line.empty()) return graph6_decode(line);
    }
    throw FormatError("expected one graph6 line on standard input");
}

int cmd_construct(const std::string& family, const std::vector<int>& params) {
    auto need = [&](size_t k) {
        if (params.size() != k)
            throw BadParameterError(family + " takes " + std::to_string(k) + " parameter(s)");
    };
    Graph g;
    if (family == "complete") {
        need(1);
        g = complete_graph(params[0]);
    } else if (family == "cycle") {
        need(1);
        g = cycle_graph(params[0]);
    } else if (family == "petersen") {
        need(0);
        g = petersen_graph();
    } else if (family == "h") {
        need(3);
        g = h_graph(params[0], params[1], params[2]);
    } else if (family == "H") {
        need(4);
        g = big_h_graph(params[0], params[1], params[2], params[3]);
    } else if (family == "F") {
        need(1);
        g = f_graph(params[0]);
    } else if (family == "wp") {
        need(1);
        g = widespread_petersen(params[0]);
    } else if (family == "plane") {
        need(1);
        g = projective_plane_graph(params[0]);
    } else if (family == "subdiv-complete") {
        g = subdivide_complete(params);
    } else if (family == "subdiv-uniform") {
        need(1);
        g = subdivide_uniform(read_one_graph(), params[0]);
    } else if (family == "subdiv-cut") {
        need(2);
        if (params[0] < 0) throw BadParameterError("cut mask must be >= 0");
        g = subdivide_cut(read_one_graph(), Cut{uint32_t(params[0])}, params[1]);
    } else {
        throw BadParameterError("unknown family " + family);
    }
    std::cout << graph6_encode(g) << "\n";
    return 0;
}

int cmd_oracle(int n, int threads) {
    OracleCounts c = brute_force_counts(n, threads);
    std::cout << n << " " << c.geodetic << " " << c.connected << " " << c.biconnected << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exhaustive search and constructions for geodetic graphs"};
    app.require_subcommand(1);
    int default_threads = int(std::thread::hardware_concurrency());
    if (default_threads < 1) default_threads = 1;

    auto* enumerate = app.add_subcommand("enumerate", "All biconnected geodetic graphs on n vertices");
    int enum_n = 0;
    int enum_threads = default_threads;
    size_t enum_cache = 1'000'000;
    bool enum_regular = false;
    std::string enum_output;
    enumerate->add_option("n", enum_n, "number of vertices")->required()->check(CLI::Range(2, 32));
    enumerate->add_option("--threads", enum_threads, "worker threads")->check(CLI::Range(1, 256));
    enumerate->add_option("--cache-size", enum_cache, "isomorphism cache entries per step (0 disables)");
    enumerate->add_flag("--regular", enum_regular, "regular graphs on 2..n vertices instead");
    enumerate->add_option("--output", enum_output, "write graph6 lines here instead of stdout");

    auto* check = app.add_subcommand("check", "Check graph6 input for the geodetic property");
    std::vector<std::string> check_files;
    check->add_option("files", check_files, "graph6 files (default: stdin)");

    auto* report = app.add_subcommand("report", "Radius, diameter, degree, regularity, hamiltonicity, |Aut|");
    std::vector<std::string> report_files;
    report->add_option("files", report_files, "graph6 files (default: stdin)");

    auto* construct = app.add_subcommand("construct", "Emit one member of a geodetic family");
    std::string family;
    std::vector<int> family_params;
    construct
        ->add_option("family", family,
                     "complete | cycle | petersen | h | H | F | wp | plane | subdiv-complete | "
                     "subdiv-uniform | subdiv-cut")
        ->required();
    construct->add_option("params", family_params, "family parameters");

    auto* oracle = app.add_subcommand("oracle", "Brute-force class counts for n <= 8");
    int oracle_n = 0;
    int oracle_threads = default_threads;
    oracle->add_option("n", oracle_n, "number of vertices")->required()->check(CLI::Range(1, 8));
    oracle->add_option("--threads", oracle_threads, "worker threads")->check(CLI::Range(1, 256));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*enumerate)
            return cmd_enumerate(enum_n, enum_threads, enum_cache, enum_regular, enum_output);
        if (*check) return cmd_check(check_files);
        if (*report) return cmd_report(report_files);
        if (*construct) return cmd_construct(family, family_params);
        if (*oracle) return cmd_oracle(oracle_n, oracle_threads);
    } catch (const CapacityError& e) {
        std::cerr << e.what() << "\n";
        return kExitCapacity;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
