// grunwald: fractional-derivative scheme toolbox.
//
// Subcommands: weights, stability, norms, table1, example1, consistency.
// Tables are CSV (header row, shortest round-trip decimals), reports are
// JSON.  With --out a run manifest is written next to each output file.
// Exit codes: 0 ok, 2 precondition violation, 3 numerical failure.

#include <chrono>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "grunwald/fourier_norms.hpp"
#include "grunwald/oracles.hpp"
#include "grunwald/pde.hpp"
#include "grunwald/schemes.hpp"
#include "grunwald/studies.hpp"
#include "grunwald/symbols.hpp"
#include "grunwald/types.hpp"
#include "grunwald/weights.hpp"

namespace {

using json = nlohmann::json;
using namespace grunwald;

std::string fmt(double v) {
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, r.ptr);
}

struct OutputSink {
    std::string out_path; // empty: stdout
    std::string command;
    std::map<std::string, std::string> params;
    std::vector<std::string> written;

    void write(const std::string& payload, const std::string& suffix = "") {
        if (out_path.empty()) {
            std::cout << payload;
            return;
        }
        const std::string path = out_path + suffix;
        std::ofstream os(path, std::ios::binary);
        if (!os) throw PreconditionError("cannot open output file " + path);
        os << payload;
        written.push_back(path);
    }

    void finish() {
        if (out_path.empty() || written.empty()) return;
        json manifest;
        manifest["command"] = command;
        manifest["parameters"] = params;
        manifest["tool_version"] = kVersion;
        const auto now = std::chrono::system_clock::now();
        const std::time_t tt = std::chrono::system_clock::to_time_t(now);
        char ts[32];
        std::strftime(ts, sizeof(ts), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&tt));
        manifest["timestamp"] = ts;
        manifest["outputs"] = written;
        std::ofstream os(out_path + ".manifest.json", std::ios::binary);
        os << manifest.dump(2) << "\n";
    }
};

Scheme parse_scheme(const std::string& spec, const FracOrder& order) {
    if (spec.rfind("p:", 0) == 0) {
        const int p = std::stoi(spec.substr(2));
        return make_single_term_scheme(order, static_cast<double>(p));
    }
    if (spec == "order1") return make_optimal_scheme(order);
    if (spec == "order2") return second_order_scheme(order);
    if (spec == "order3") return third_order_scheme(order);
    throw PreconditionError("unknown scheme spec '" + spec + "' (use p:<int>|order1|order2|order3)");
}

// "a,b,c" or "log:lo:hi:n"
std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> out;
    if (text.rfind("log:", 0) == 0) {
        std::istringstream ss(text.substr(4));
        std::string lo_s, hi_s, n_s;
        if (!std::getline(ss, lo_s, ':') || !std::getline(ss, hi_s, ':') ||
            !std::getline(ss, n_s, ':'))
            throw PreconditionError("bad log grid spec '" + text + "'");
        const double lo = std::stod(lo_s), hi = std::stod(hi_s);
        const int n = std::stoi(n_s);
        if (n < 2 || !(lo > 0.0) || !(hi > lo))
            throw PreconditionError("bad log grid spec '" + text + "'");
        for (int i = 0; i < n; ++i)
            out.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
        return out;
    }
    std::istringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    if (out.empty()) throw PreconditionError("empty grid spec");
    return out;
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
    std::vector<std::size_t> out;
    std::istringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoul(item));
    if (out.empty()) throw PreconditionError("empty resolution list");
    return out;
}

std::string table_csv(const ConvergenceTable& t, const std::string& res_name) {
    std::ostringstream os;
    os << res_name << ",h,error,ratio,fitted_order\n";
    for (const auto& row : t.rows)
        os << fmt(row.resolution) << "," << fmt(row.h) << "," << fmt(row.error) << ","
           << fmt(row.ratio) << "," << fmt(t.fitted_order) << "\n";
    return os.str();
}

int run(int argc, char** argv) {
    CLI::App app{"Grunwald-type fractional derivative schemes: weights, stability "
                 "certificates, multiplier norms, and convergence studies"};
    app.require_subcommand(1);

    OutputSink sink;

    // weights ---------------------------------------------------------------
    auto* weights_cmd = app.add_subcommand("weights", "Grunwald weights w_m = (-1)^m binom(alpha,m)");
    std::string w_alpha_text;
    std::size_t w_count = 0;
    std::string w_format = "csv";
    weights_cmd->add_option("--alpha", w_alpha_text, "fractional order")->required();
    weights_cmd->add_option("--count", w_count, "largest index M")->required();
    weights_cmd->add_option("--format", w_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    weights_cmd->add_option("--out", sink.out_path, "output file prefix");
    weights_cmd->callback([&] {
        sink.command = "weights";
        sink.params = {{"alpha", w_alpha_text}, {"count", std::to_string(w_count)}, {"format", w_format}};
        const long double w_alpha = std::strtold(w_alpha_text.c_str(), nullptr);
        FracOrder(static_cast<double>(w_alpha)); // validates alpha > 0
        const auto w = grunwald_weights(w_alpha, w_count);
        std::ostringstream os;
        if (w_format == "json") {
            json j;
            j["alpha"] = static_cast<double>(w_alpha);
            j["weights"] = w;
            os << j.dump(2) << "\n";
            sink.write(os.str(), sink.out_path.empty() ? "" : ".json");
        } else {
            for (std::size_t i = 0; i <= w_count; ++i) os << (i ? "," : "") << "w" << i;
            os << "\n";
            for (std::size_t i = 0; i <= w_count; ++i) os << (i ? "," : "") << fmt(w[i]);
            os << "\n";
            sink.write(os.str(), sink.out_path.empty() ? "" : ".csv");
        }
    });

    // stability --------------------------------------------------------------
    auto* stab_cmd = app.add_subcommand("stability", "certify the Theorem-4.1-type symbol conditions");
    double s_alpha = 0.0;
    std::string s_scheme = "order1";
    std::size_t s_samples = 4096;
    stab_cmd->add_option("--alpha", s_alpha, "fractional order")->required();
    stab_cmd->add_option("--scheme", s_scheme, "p:<int>|order1|order2|order3")->required();
    stab_cmd->add_option("--samples", s_samples, "uniform k samples (>= 1024)");
    stab_cmd->add_option("--out", sink.out_path, "output file prefix");
    stab_cmd->callback([&] {
        sink.command = "stability";
        sink.params = {{"alpha", fmt(s_alpha)}, {"scheme", s_scheme}, {"samples", std::to_string(s_samples)}};
        const FracOrder order(s_alpha);
        const Scheme scheme = parse_scheme(s_scheme, order);
        const auto rep = certify_stability(combined_symbol(scheme, 1.0), s_samples);
        json j;
        j["alpha"] = s_alpha;
        j["scheme"] = s_scheme;
        j["C"] = rep.C_bound;
        j["Cprime"] = rep.Cprime_bound;
        j["c"] = rep.c_coercivity;
        j["sign_change"] = rep.sign_change;
        j["k_grid_size"] = rep.k_grid_size;
        sink.write(j.dump(2) + "\n", sink.out_path.empty() ? "" : ".json");
    });

    // norms -------------------------------------------------------------------
    auto* norms_cmd = app.add_subcommand("norms", "L1 multiplier norms of e^{t phi_h} over a (t,h) grid");
    double n_alpha = 0.0;
    std::string n_scheme = "order1", n_tgrid = "log:1e-3:1e3:12", n_hgrid = "1";
    bool n_analyticity = false;
    norms_cmd->add_option("--alpha", n_alpha, "fractional order")->required();
    norms_cmd->add_option("--scheme", n_scheme, "p:<int>|order1|order2|order3")->required();
    norms_cmd->add_option("--tgrid", n_tgrid, "comma list or log:lo:hi:n");
    norms_cmd->add_option("--hgrid", n_hgrid, "comma list or log:lo:hi:n");
    norms_cmd->add_flag("--analyticity", n_analyticity, "also scan t*||T_{phi e^{t phi}}||");
    norms_cmd->add_option("--out", sink.out_path, "output file prefix");
    norms_cmd->callback([&] {
        sink.command = "norms";
        sink.params = {{"alpha", fmt(n_alpha)}, {"scheme", n_scheme}, {"tgrid", n_tgrid},
                       {"hgrid", n_hgrid}, {"analyticity", n_analyticity ? "true" : "false"}};
        const FracOrder order(n_alpha);
        const Scheme scheme = parse_scheme(n_scheme, order);
        const auto scan = semigroup_norm_scan(scheme, parse_grid(n_tgrid), parse_grid(n_hgrid),
                                              n_analyticity);
        std::ostringstream os;
        os << "t,h,norm" << (n_analyticity ? ",analyticity_product" : "") << "\n";
        for (std::size_t i = 0; i < scan.t_grid.size(); ++i)
            for (std::size_t j = 0; j < scan.h_grid.size(); ++j) {
                os << fmt(scan.t_grid[i]) << "," << fmt(scan.h_grid[j]) << ","
                   << fmt(scan.norms[i][j]);
                if (n_analyticity) os << "," << fmt(scan.analyticity_products[i][j]);
                os << "\n";
            }
        sink.write(os.str(), sink.out_path.empty() ? "" : ".csv");
    });

    // table1 -------------------------------------------------------------------
    auto* t1_cmd = app.add_subcommand("table1", "max-error table of the variable-coefficient test problem");
    std::string t1_scheme = "order2";
    std::string t1_res = "10,15,20,25";
    t1_cmd->add_option("--scheme", t1_scheme, "order2|order3")->check(CLI::IsMember({"order2", "order3"}));
    t1_cmd->add_option("--resolutions", t1_res, "comma list of nx");
    t1_cmd->add_option("--out", sink.out_path, "output file prefix");
    t1_cmd->callback([&] {
        sink.command = "table1";
        sink.params = {{"scheme", t1_scheme}, {"resolutions", t1_res}};
        const auto kind = (t1_scheme == "order2") ? TadjeranScheme::second : TadjeranScheme::third;
        const auto study = tadjeran_study(kind, parse_sizes(t1_res));
        std::ostringstream os;
        os << "dx,error,ratio\n";
        for (const auto& row : study.table.rows)
            os << fmt(row.h) << "," << fmt(row.error) << "," << fmt(row.ratio) << "\n";
        sink.write(os.str(), sink.out_path.empty() ? "" : ".csv");
    });

    // example1 -----------------------------------------------------------------
    auto* ex1_cmd = app.add_subcommand("example1", "half-line experiment rates (alpha = 0.8, t = 1)");
    std::string e_f = "f3", e_scheme = "2", e_res = "32,64,128,256";
    ex1_cmd->add_option("--f", e_f, "f1|f2|f3")->check(CLI::IsMember({"f1", "f2", "f3"}));
    ex1_cmd->add_option("--scheme", e_scheme, "1|2")->check(CLI::IsMember({"1", "2"}));
    ex1_cmd->add_option("--resolutions", e_res, "comma list of nested nx");
    ex1_cmd->add_option("--out", sink.out_path, "output file prefix");
    ex1_cmd->callback([&] {
        sink.command = "example1";
        sink.params = {{"f", e_f}, {"scheme", e_scheme}, {"resolutions", e_res}};
        const Example1Initial kind = (e_f == "f1")   ? Example1Initial::f1
                                     : (e_f == "f2") ? Example1Initial::f2
                                                     : Example1Initial::f3;
        const auto study = example1_study(kind, std::stoi(e_scheme), parse_sizes(e_res));
        sink.write(table_csv(study.table, "nx"), sink.out_path.empty() ? "" : ".csv");
    });

    // consistency ----------------------------------------------------------------
    auto* con_cmd = app.add_subcommand("consistency", "Gaussian consistency orders against the spectral oracle");
    double c_alpha = 1.8;
    std::string c_scheme = "order2", c_levels = "4,5,6,7,8,9";
    con_cmd->add_option("--alpha", c_alpha, "fractional order")->required();
    con_cmd->add_option("--scheme", c_scheme, "p:<int>|order1|order2|order3")->required();
    con_cmd->add_option("--resolutions", c_levels, "comma list of levels (h = 2^-level)");
    con_cmd->add_option("--out", sink.out_path, "output file prefix");
    con_cmd->callback([&] {
        sink.command = "consistency";
        sink.params = {{"alpha", fmt(c_alpha)}, {"scheme", c_scheme}, {"resolutions", c_levels}};
        const FracOrder order(c_alpha);
        const Scheme scheme = parse_scheme(c_scheme, order);
        const auto table = consistency_study(scheme, parse_sizes(c_levels));
        sink.write(table_csv(table, "level"), sink.out_path.empty() ? "" : ".csv");
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2; // bad flags are precondition violations
    }
    sink.finish();
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const PreconditionError& e) {
        std::cerr << "precondition violation: " << e.what() << "\n";
        return 2;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "bad argument: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
