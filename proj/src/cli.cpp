#include "sp6/cli.hpp"

#include <chrono>
#include <complex>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sp6/bmquad.hpp"
#include "sp6/json_io.hpp"
#include "sp6/lfunc.hpp"
#include "sp6/packets.hpp"
#include "sp6/uchar.hpp"
#include "sp6/wedge.hpp"

namespace sp6 {
namespace {

using nlohmann::json;

/// Machine-readable error category; most-derived classes first (domain_error
/// and invalid_argument both derive from logic_error, overflow_error from
/// runtime_error).
std::string error_type(const std::exception& e) {
    if (dynamic_cast<const std::invalid_argument*>(&e) != nullptr) return "invalid_argument";
    if (dynamic_cast<const std::domain_error*>(&e) != nullptr) return "domain_error";
    if (dynamic_cast<const std::overflow_error*>(&e) != nullptr) return "overflow";
    if (dynamic_cast<const std::logic_error*>(&e) != nullptr) return "internal_consistency";
    if (dynamic_cast<const std::runtime_error*>(&e) != nullptr) return "computation";
    return "error";
}

struct CommandOutput {
    json payload;                    // what --json prints
    std::vector<std::string> table;  // table-mode lines
};

std::string fmt_double(double x) {
    std::ostringstream s;
    s << std::setprecision(12) << x;
    return s.str();
}

std::string fmt_complex(std::complex<double> z) {
    std::ostringstream s;
    s << std::setprecision(12) << z.real();
    if (z.imag() >= 0) s << "+";
    s << std::setprecision(12) << z.imag() << "i";
    return s.str();
}

json complex_to_json(std::complex<double> z) {
    return {{"re", z.real()}, {"im", z.imag()}};
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    try {
        json j;
        in >> j;
        return j;
    } catch (const json::exception& e) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
    }
}

// ---- packets ----------------------------------------------------------------

CommandOutput run_packets(const std::string& lambda_text) {
    const Weight lambda = parse_weight(lambda_text);
    const auto members = packet(lambda);

    CommandOutput out;
    out.payload = json::array();
    for (const DiscreteSeriesDescriptor& d : members) out.payload.push_back(descriptor_to_json(d));

    out.table.push_back("discrete-series packet at lambda = " + lambda.str());
    out.table.push_back("  index  hc_param      min_ktype     hodge   notes");
    for (const DiscreteSeriesDescriptor& d : members) {
        std::ostringstream row;
        row << "  " << std::setw(5) << d.index << "  " << std::left << std::setw(12)
            << d.hc_param.str() << "  " << std::setw(12) << d.min_ktype.str() << "  " << std::right
            << "(" << d.hodge_p << "," << d.hodge_q << ")";
        if (d.holomorphic) row << "   holomorphic";
        if (d.antiholomorphic) row << "   antiholomorphic";
        out.table.push_back(row.str());
    }
    return out;
}

// ---- ktypes -----------------------------------------------------------------

CommandOutput run_ktypes(int p, int q) {
    if (p < 0 || p > 6 || q < 0 || q > 6)
        throw std::invalid_argument("exterior powers must lie in 0..6");
    const DecompTable table = decompose(wedge_char(PSpace::plus, p) * wedge_char(PSpace::minus, q));

    CommandOutput out;
    out.payload = decomp_to_json(table);

    out.table.push_back("Lambda^" + std::to_string(p) + "(p+) (x) Lambda^" + std::to_string(q) +
                        "(p-)   total dimension " + std::to_string(table.total_dim()));
    out.table.push_back("  mult  highest weight  dim");
    for (const auto& [hw, mult] : table.entries) {
        std::ostringstream row;
        row << "  " << std::setw(4) << mult << "  " << std::left << std::setw(14) << hw.str()
            << "  " << std::right << dim(hw);
        out.table.push_back(row.str());
    }
    return out;
}

// ---- hwv-check --------------------------------------------------------------

json check_one_hwv(const Weight& target, std::vector<std::string>& table) {
    const WedgeVector v = highest_weight_vector(target);
    const auto by_weight = weight_decompose(v);
    const bool weight_ok = by_weight.size() == 1 && by_weight.begin()->first == target;

    json ann;
    bool all_killed = true;
    const char* names[3] = {"e1-e2", "e2-e3", "e1-e3"};
    const Weight raising[3] = {Weight{1, -1, 0}, Weight{0, 1, -1}, Weight{1, 0, -1}};
    for (int i = 0; i < 3; ++i) {
        const bool killed = ad(raising[i], v).is_zero();
        ann[names[i]] = killed;
        all_killed = all_killed && killed;
    }

    std::ostringstream row;
    row << "  " << std::left << std::setw(12) << target.str() << "  weight "
        << (weight_ok ? "ok  " : "BAD ") << " raising operators "
        << (all_killed ? "annihilate" : "DO NOT annihilate");
    table.push_back(row.str());

    return {{"target", weight_to_json(target)},
            {"weight_ok", weight_ok},
            {"annihilated", ann},
            {"highest_weight", weight_ok && all_killed},
            {"vector", wedge_to_json(v)}};
}

CommandOutput run_hwv_check(const std::string& target_text) {
    std::vector<Weight> targets;
    if (target_text.empty()) {
        targets = {Weight{2, 2, -4}, Weight{4, -2, -2}};
    } else {
        targets = {parse_weight(target_text)};
    }
    CommandOutput out;
    out.table.push_back("highest-weight vector check");
    out.payload = json::array();
    for (const Weight& t : targets) out.payload.push_back(check_one_hwv(t, out.table));
    return out;
}

// ---- projector --------------------------------------------------------------

CommandOutput run_projector(const std::string& target_text) {
    const Weight target = parse_weight(target_text);
    const ProjectorData data = projector_data(target);

    CommandOutput out;
    out.payload = {{"alpha", data.alpha.str()},
                   {"step1", data.c1.str()},
                   {"step2", data.c2.str()}};
    out.table.push_back("projector onto the K-type of highest weight " + target.str());
    out.table.push_back("  step1 (raising composite on x0):   " + data.c1.str());
    out.table.push_back("  step2 (round-trip composite):      " + data.c2.str());
    out.table.push_back("  alpha (projection coefficient):    " + data.alpha.str());
    return out;
}

// ---- lfactor ----------------------------------------------------------------

json denominator_to_json(const SatakeData& d, bool exact) {
    json coeffs = json::array();
    if (exact) {
        for (const Rat& c : spin_factor_exact(d).denom) coeffs.push_back(c.str());
    } else {
        for (const std::complex<double>& c : spin_factor(d).denom)
            coeffs.push_back(json::array({c.real(), c.imag()}));
    }
    return coeffs;
}

CommandOutput run_lfactor(const std::string& path, bool has_s, double s, std::int64_t cutoff) {
    const std::vector<SatakeData> data = satake_list_from_json(read_json_file(path));
    if (data.empty()) throw std::invalid_argument("no Satake data in " + path);

    bool all_exact = true;
    for (const SatakeData& d : data) all_exact = all_exact && d.all_exact();
    const bool numeric = has_s || !all_exact;

    CommandOutput out;
    json local = json::array();
    for (const SatakeData& d : data) {
        const json denom = denominator_to_json(d, all_exact);
        local.push_back({{"prime", d.prime},
                         {"denominator", denom},
                         {"degree", static_cast<int>(denom.size()) - 1}});
        std::ostringstream row;
        row << "  prime " << std::setw(6) << d.prime << "  degree "
            << static_cast<int>(denom.size()) - 1 << "  denominator " << denom.dump();
        out.table.push_back(row.str());
    }
    out.payload = {{"mode", numeric ? "float" : "exact"}, {"local", local}};
    out.table.insert(out.table.begin(),
                     "local Spin factors (" + std::string(numeric ? "float" : "exact") + " mode)");

    if (has_s) {
        const std::complex<double> product = partial_l(data, s, cutoff);
        const std::complex<double> dirichlet = partial_l_dirichlet(data, s, cutoff);
        const double agreement = std::abs(product - dirichlet);
        out.payload["evaluation"] = {{"s", s},
                                     {"cutoff", cutoff},
                                     {"product", complex_to_json(product)},
                                     {"dirichlet", complex_to_json(dirichlet)},
                                     {"agreement", agreement}};
        out.table.push_back("partial L at s = " + fmt_double(s) + ", cutoff " +
                            std::to_string(cutoff));
        out.table.push_back("  Euler product:       " + fmt_complex(product));
        out.table.push_back("  Dirichlet expansion: " + fmt_complex(dirichlet));
        out.table.push_back("  |difference|:        " + fmt_double(agreement));
    }
    return out;
}

// ---- gamma ------------------------------------------------------------------

CommandOutput run_gamma(const std::string& path, std::int64_t at) {
    const HodgeNumbers h = hodge_from_json(read_json_file(path));
    const GammaFactorList factors = gamma_factor(h);
    const int order = pole_order(h, at);

    CommandOutput out;
    out.payload = {{"at", at}, {"factors", gamma_list_to_json(factors)}, {"pole_order", order}};
    out.table.push_back("archimedean factor");
    for (const GammaFactor& f : factors) {
        std::ostringstream row;
        row << "  Gamma_" << (f.kind == GammaKind::C ? "C" : "R") << "(s";
        if (f.shift > 0) row << " - " << f.shift;
        if (f.shift < 0) row << " + " << -f.shift;
        row << ")";
        if (f.exponent != 1) row << "^" << f.exponent;
        out.table.push_back(row.str());
    }
    if (factors.empty()) out.table.push_back("  (trivial)");
    out.table.push_back("pole order at s = " + std::to_string(at) + ": " + std::to_string(order));
    return out;
}

// ---- bm-verify ----------------------------------------------------------------

CommandOutput run_bm_verify(int N, int grid_points, int levels, double tol) {
    if (levels < 1) throw std::invalid_argument("need at least one refinement level");
    const auto grid = default_grid(grid_points);
    // Compactly supported test bump (no logarithmic factor), vanishing both
    // near the puncture and near the outer boundary.
    const RadialTestForm g{0, 0.4, 0.05};

    CommandOutput out;
    json level_rows = json::array();
    std::vector<double> residuals;
    for (int i = 0; i < levels; ++i) {
        QuadratureConfig cfg;
        cfg.radial = 4 << i;
        cfg.angular = 40 << i;
        cfg.tol = tol;
        cfg.self_check = false;  // the levels themselves are the refinement study
        const HomotopyResult hr = homotopy_residual(g, grid, cfg);
        residuals.push_back(hr.residual);
        level_rows.push_back({{"radial", cfg.radial},
                              {"angular", cfg.angular},
                              {"residual", hr.residual},
                              {"skipped", hr.skipped}});
    }
    json ratios = json::array();
    for (std::size_t i = 1; i < residuals.size(); ++i)
        ratios.push_back(residuals[i - 1] > 0 ? residuals[i] / residuals[i - 1] : 0.0);

    QuadratureConfig fine;
    fine.tol = tol;
    const double dbar = dbar_consistency(g, grid, fine);
    const DecaySweepResult sweep = decay_sweep(N, fine);

    out.payload = {
        {"mode", "float"},
        {"homotopy",
         {{"grid_points", static_cast<int>(grid.size())},
          {"levels", level_rows},
          {"ratios", ratios},
          {"test_form", {{"N", g.N}, {"inner", g.inner}, {"outer", g.outer}}}}},
        {"dbar_residual", dbar},
        {"decay",
         {{"N", sweep.N},
          {"expected_exponent", N - 1},
          {"fitted_exponent", sweep.fitted_exponent},
          {"radii", sweep.radii},
          {"deviation", sweep.deviation},
          {"c_infinity", sweep.c_infinity},
          {"consistency", sweep.consistency}}},
        {"kernel_convention",
         "K h (z) = (1/pi) int h(w)/(z-w) dA(w); the (1/(2 pi i)) dw wedge dw-bar "
         "normalization is its negative, and the decay estimate governs K h - K h(0+)"}};

    out.table.push_back("homotopy identity K(dbar g) = g on " + std::to_string(grid.size()) +
                        " grid points");
    for (std::size_t i = 0; i < residuals.size(); ++i) {
        std::ostringstream row;
        row << "  level " << i << "  (radial " << (4 << i) << ", angular " << (40 << i)
            << ")  residual " << fmt_double(residuals[i]);
        out.table.push_back(row.str());
    }
    out.table.push_back("dbar-side residual (finite differences): " + fmt_double(dbar));
    out.table.push_back("decay sweep N = " + std::to_string(N) + ":  fitted exponent " +
                        fmt_double(sweep.fitted_exponent) + "  (expected " +
                        std::to_string(N - 1) + ")");
    out.table.push_back("  c_infinity " + fmt_double(sweep.c_infinity) + "  split consistency " +
                        fmt_double(sweep.consistency));
    return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Sp(6) discrete-series combinatorics, Spin L-data, and a "
                 "Bochner-Martinelli quadrature bench"};
    app.require_subcommand(1);
    bool as_json = false;

    auto* packets_cmd = app.add_subcommand("packets", "discrete-series packet of a dominant parameter");
    std::string lambda_text;
    packets_cmd->add_option("--lambda", lambda_text, "dominant parameter a,b,c")->required();
    packets_cmd->add_flag("--json", as_json, "emit JSON");

    auto* ktypes_cmd = app.add_subcommand("ktypes", "K-type decomposition of Lambda^p(p+) (x) Lambda^q(p-)");
    int p = 0, q = 0;
    ktypes_cmd->add_option("--p", p, "exterior power of p+")->required();
    ktypes_cmd->add_option("--q", q, "exterior power of p-")->required();
    ktypes_cmd->add_flag("--json", as_json, "emit JSON");

    auto* hwv_cmd = app.add_subcommand("hwv-check", "verify the pinned highest-weight vectors");
    std::string target_text;
    hwv_cmd->add_option("--target", target_text, "restrict to one target a,b,c");
    hwv_cmd->add_flag("--json", as_json, "emit JSON");

    auto* proj_cmd = app.add_subcommand("projector", "exact projection coefficient onto a K-type");
    std::string proj_target;
    proj_cmd->add_option("--target", proj_target, "K-type highest weight a,b,c")->required();
    proj_cmd->add_flag("--json", as_json, "emit JSON");

    auto* lfactor_cmd = app.add_subcommand("lfactor", "local Spin L-factors and partial L-values");
    std::string satake_path;
    double s_value = 0.0;
    std::int64_t cutoff = std::numeric_limits<std::int64_t>::max();
    lfactor_cmd->add_option("--satake", satake_path, "Satake data JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    auto* s_opt = lfactor_cmd->add_option("--s", s_value, "evaluation point");
    lfactor_cmd->add_option("--cutoff", cutoff, "largest prime to include");
    lfactor_cmd->add_flag("--json", as_json, "emit JSON");

    auto* gamma_cmd = app.add_subcommand("gamma", "archimedean factor and its pole order");
    std::string hodge_path;
    std::int64_t at = 0;
    gamma_cmd->add_option("--hodge", hodge_path, "Hodge numbers JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    gamma_cmd->add_option("--at", at, "integer evaluation point")->required();
    gamma_cmd->add_flag("--json", as_json, "emit JSON");

    auto* bm_cmd = app.add_subcommand("bm-verify", "Bochner-Martinelli homotopy and decay report");
    int bm_n = 6, bm_grid = 16, bm_levels = 3;
    double bm_tol = 1e-3;
    bm_cmd->add_option("--N", bm_n, "logarithmic decay exponent of the test form");
    bm_cmd->add_option("--grid", bm_grid, "number of grid points");
    bm_cmd->add_option("--levels", bm_levels, "refinement levels for the homotopy study");
    bm_cmd->add_option("--tol", bm_tol, "quadrature tolerance");
    bm_cmd->add_flag("--json", as_json, "emit JSON");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    const auto t0 = std::chrono::steady_clock::now();
    try {
        CommandOutput result;
        if (packets_cmd->parsed()) {
            result = run_packets(lambda_text);
        } else if (ktypes_cmd->parsed()) {
            result = run_ktypes(p, q);
        } else if (hwv_cmd->parsed()) {
            result = run_hwv_check(target_text);
        } else if (proj_cmd->parsed()) {
            result = run_projector(proj_target);
        } else if (lfactor_cmd->parsed()) {
            result = run_lfactor(satake_path, s_opt->count() > 0, s_value, cutoff);
        } else if (gamma_cmd->parsed()) {
            result = run_gamma(hodge_path, at);
        } else {
            result = run_bm_verify(bm_n, bm_grid, bm_levels, bm_tol);
        }

        if (as_json) {
            out << result.payload.dump(2) << "\n";
        } else {
            for (const std::string& line : result.table) out << line << "\n";
            const auto elapsed =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0);
            out << "elapsed: " << std::fixed << std::setprecision(1) << elapsed.count()
                << " ms\n";
        }
        return 0;
    } catch (const std::exception& e) {
        const json error = {{"error", {{"type", error_type(e)}, {"message", e.what()}}}};
        out << error.dump(2) << "\n";
        return 1;
    }
}

}  // namespace sp6
