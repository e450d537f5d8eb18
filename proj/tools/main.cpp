#include "report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>

using namespace shrinker;
using namespace shrinker::cli;

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

void write_report(const RunConfig& cfg, const Outcome& o) {
    std::ofstream file;
    if (!cfg.out.empty()) {
        file.open(cfg.out);
        if (!file) throw ConfigError("cannot open output file " + cfg.out);
    }
    std::ostream& os = cfg.out.empty() ? std::cout : file;
    if (cfg.format == "json") {
        os << o.report.dump(2) << "\n";
        return;
    }
    for (std::size_t i = 0; i < o.csv_header.size(); ++i) os << (i ? "," : "") << csv_escape(o.csv_header[i]);
    os << "\n";
    for (const auto& row : o.csv_rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_escape(row[i]);
        os << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and numeric checks for products of spheres as self-shrinkers"};
    app.set_help_flag("--help", "Print this help message and exit");
    RunConfig cfg;
    std::string a_text = "1";
    unsigned threads = std::thread::hardware_concurrency();
    double tol = 0, s_min = 0, s_max = 0;

    app.add_option("command", cfg.command, "Subcommand")->required()->check(CLI::IsMember(command_names()));
    app.add_option("--k1", cfg.k1, "Dimension of the first sphere");
    app.add_option("--k2", cfg.k2, "Dimension of the second sphere");
    app.add_option("--bigN", cfg.N, "Ambient dimension (default k1+k2+2)");
    app.add_option("--a", a_text, "Diagonal coefficients as p/q, comma separated");
    app.add_option("--seed", cfg.seed, "RNG seed");
    app.add_option("--h", cfg.h, "Finite-difference step");
    auto* o_smin = app.add_option("--s-min", s_min, "Smallest s in fit grids");
    auto* o_smax = app.add_option("--s-max", s_max, "Largest s in fit grids");
    app.add_option("--points", cfg.points, "Sample points, grid size or Monte-Carlo samples (command dependent)");
    auto* o_tol = app.add_option("--tol", tol, "Acceptance tolerance (command dependent)");
    app.add_option("--s0", cfg.s0, "Initial s for reduced-flow");
    app.add_option("--tau-min", cfg.tau_min, "Start of the reduced-flow fit window");
    app.add_option("--tau-max", cfg.tau_max, "End of the reduced-flow fit window");
    app.add_flag("--reverse", cfg.reverse, "Integrate the time-reversed reduced flow");
    app.add_option("--threads", threads, "Worker threads");
    app.add_option("--out", cfg.out, "Output file (default stdout)");
    app.add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        cfg.a = parse_coefficients(a_text);
        if (*o_smin) cfg.s_min = s_min;
        if (*o_smax) cfg.s_max = s_max;
        if (*o_tol) cfg.tol = tol;
        std::unique_ptr<ThreadPool> pool;
        if (threads > 1) pool = std::make_unique<ThreadPool>(threads);
        cfg.pool = pool.get();
        Outcome o = run_command(cfg);
        write_report(cfg, o);
        return o.pass ? 0 : 1;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return 1;
    }
}
