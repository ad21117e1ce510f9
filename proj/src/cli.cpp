#include "holevo/cli.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "holevo/bounds.hpp"
#include "holevo/channel.hpp"
#include "holevo/divergence_opt.hpp"
#include "holevo/ensemble.hpp"
#include "holevo/entropy.hpp"
#include "holevo/errors.hpp"
#include "holevo/golden.hpp"
#include "holevo/hermitian.hpp"
#include "holevo/oscillator.hpp"
#include "holevo/problem_io.hpp"

namespace holevo {
namespace {

using nlohmann::ordered_json;

struct GlobalOpts {
    std::string format = "table";
    std::string log_base;  // empty means per-format default: table 2, json e
    SolverConfig solver;

    bool json() const { return format == "json"; }
    std::string base() const { return log_base.empty() ? (json() ? "e" : "2") : log_base; }
    // Conversion applied to logarithmic quantities (entropies, bounds,
    // capacities).  Distances and divergences are never scaled.
    double scale() const { return base() == "2" ? 1.0 / std::log(2.0) : 1.0; }
    const char* unit() const { return base() == "2" ? "bits" : "nats"; }
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::vector<double> spectrum_of(const DensityMatrix& rho) {
    return eig_hermitian(rho.mat()).values;
}

ordered_json matrix_json(const HermitianMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < m.dim(); ++r) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < m.dim(); ++c)
            row.push_back({m(r, c).real(), m(r, c).imag()});
        rows.push_back(std::move(row));
    }
    return rows;
}

void print_warnings(const ProblemFile& pf) {
    for (const auto& w : pf.warnings) std::cerr << "warning: " << w << "\n";
}

void emit_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_chi(const GlobalOpts& g, const std::string& path) {
    const auto pf = parse_problem(path);
    print_warnings(pf);
    const auto& e = pf.ensemble().ensemble;
    const double chi = holevo_chi(e) * g.scale();
    const auto spec = spectrum_of(average_state(e));
    if (g.json()) {
        ordered_json j;
        j["command"] = "chi";
        j["log_base"] = g.base();
        j["chi"] = chi;
        j["average_spectrum"] = spec;
        j["warnings"] = pf.warnings;
        emit_json(j);
    } else {
        std::cout << "exact quantity: " << fmt(chi) << " " << g.unit() << "\n";
        std::cout << "average-state spectrum:";
        for (double v : spec) std::cout << " " << fmt(v);
        std::cout << "\n";
    }
    return 0;
}

int cmd_bounds(const GlobalOpts& g, const std::string& path) {
    const auto pf = parse_problem(path);
    print_warnings(pf);
    const auto rep = full_report(pf.ensemble().ensemble, g.solver);
    if (g.json()) {
        ordered_json j;
        j["command"] = "bounds";
        j["log_base"] = g.base();
        j["chi"] = rep.chi_exact * g.scale();
        ordered_json entries = ordered_json::array();
        for (const auto& b : rep.entries) {
            ordered_json be;
            be["name"] = b.name;
            be["reference"] = b.reference;
            be["value"] = b.value * g.scale();
            entries.push_back(std::move(be));
        }
        j["entries"] = std::move(entries);
        j["warnings"] = pf.warnings;
        emit_json(j);
    } else {
        std::cout << "exact quantity: " << fmt(rep.chi_exact * g.scale()) << " "
                  << g.unit() << "\n";
        std::printf("%-14s %-10s %s\n", "bound", "reference", "value");
        for (const auto& b : rep.entries)
            std::printf("%-14s %-10s %s\n", b.name.c_str(), b.reference.c_str(),
                        fmt(b.value * g.scale()).c_str());
    }
    return 0;
}

void divergence_report(const GlobalOpts& g, const char* command,
                       const DivergenceSolution& sol, bool converged,
                       const std::string& message) {
    if (g.json()) {
        ordered_json j;
        j["command"] = command;
        j["converged"] = converged;
        if (!converged) j["message"] = message;
        j["value"] = sol.value;
        j["certified_gap"] = sol.certified_gap;
        j["iterations"] = sol.iterations;
        j["optimal_spectrum"] = spectrum_of(sol.optimal_state);
        j["optimal_state"] = matrix_json(sol.optimal_state.mat());
        emit_json(j);
    } else {
        if (!converged) std::cout << "not converged: " << message << "\n";
        std::cout << "value: " << fmt(sol.value) << "\n";
        std::cout << "certified gap: " << fmt(sol.certified_gap) << "\n";
        std::cout << "iterations: " << sol.iterations << "\n";
        std::cout << "optimal-state spectrum:";
        for (double v : spectrum_of(sol.optimal_state)) std::cout << " " << fmt(v);
        std::cout << "\n";
    }
}

int cmd_divergence(const GlobalOpts& g, const std::string& path, bool maximal) {
    const auto pf = parse_problem(path);
    print_warnings(pf);
    const auto& e = pf.ensemble().ensemble;
    const char* name = maximal ? "mmd" : "amd";
    try {
        const auto sol = maximal ? mmd_optimal(e.states, g.solver) : amd_optimal(e, g.solver);
        divergence_report(g, name, sol, true, "");
        return 0;
    } catch (const SolverError& err) {
        divergence_report(g, name, err.best(), false, err.what());
        return 2;
    }
}

struct CapacityFlags {
    std::string path;
    std::string family;
    std::size_t d = 0;
    double p = 0.0;
    std::size_t r = 0;
    std::size_t probes = 200;
    std::uint64_t probe_seed = 7777;
};

QuantumChannel channel_from_flags(const CapacityFlags& f) {
    if (f.family == "depolarizing" || f.family == "erasure") {
        if (f.d == 0) throw ValidationError("--family " + f.family + " needs --d");
        return f.family == "depolarizing" ? make_depolarizing(f.d, f.p)
                                          : make_erasure(f.d, f.p);
    }
    if (f.family == "cq-shifted-uniform" || f.family == "cq-projector") {
        if (f.d == 0 || f.r == 0)
            throw ValidationError("--family " + f.family + " needs --d and --r");
        CqSpectrumCase c;
        c.shape = f.family == "cq-projector" ? CqSpectrumCase::Shape::projector
                                             : CqSpectrumCase::Shape::shifted_uniform;
        c.d = f.d;
        c.r = f.r;
        return make_example_cq(c);
    }
    throw ValidationError("unknown --family '" + f.family +
                          "' (use depolarizing, erasure, cq-shifted-uniform, "
                          "cq-projector, or a problem file)");
}

int cmd_capacity(const GlobalOpts& g, const CapacityFlags& f) {
    if (f.path.empty() == f.family.empty())
        throw ValidationError("capacity needs a problem file or --family flags, not both");
    QuantumChannel phi = [&] {
        if (!f.family.empty()) return channel_from_flags(f);
        const auto pf = parse_problem(f.path);
        print_warnings(pf);
        return pf.channel().channel;
    }();

    const auto rep = capacity_report(phi, g.solver, f.probes, f.probe_seed);
    if (g.json()) {
        ordered_json j;
        j["command"] = "capacity";
        j["log_base"] = g.base();
        j["family"] = rep.family;
        j["r_phi"] = rep.r_phi;
        j["bound"] = rep.bound * g.scale();
        j["exact"] = rep.exact ? ordered_json(*rep.exact * g.scale()) : ordered_json();
        j["probe_count"] = rep.probe_count;
        emit_json(j);
    } else {
        std::cout << "family: " << (rep.family.empty() ? "(untagged)" : rep.family) << "\n";
        std::cout << "output radius: " << fmt(rep.r_phi)
                  << (rep.probe_count ? " (probe estimate, " + std::to_string(rep.probe_count) +
                          " probes)" : " (closed form)")
                  << "\n";
        std::cout << "capacity bound: " << fmt(rep.bound * g.scale()) << " " << g.unit()
                  << "\n";
        if (rep.exact)
            std::cout << "exact capacity: " << fmt(*rep.exact * g.scale()) << " "
                      << g.unit() << "\n";
    }
    return 0;
}

int cmd_energy_bound(const GlobalOpts& g, const std::string& path) {
    const auto pf = parse_problem(path);
    print_warnings(pf);
    const auto& ep = pf.energy();
    EnergyBoundInput in;
    in.epsilon = ep.epsilon;
    in.avg_energy = ep.avg_energy;
    in.sigma_energy = ep.sigma_energy;
    const auto& spec = ep.spec;
    const double ensemble_bound =
        prop3_bound(in, [&](double x) { return hat_F(spec, x); }) * g.scale();
    const double relaxed = corollary6_bound(spec, in) * g.scale();
    const double capacity =
        prop4_capacity_bound(spec, ep.epsilon, ep.avg_energy, ep.sigma_energy) * g.scale();
    if (g.json()) {
        ordered_json j;
        j["command"] = "energy-bound";
        j["log_base"] = g.base();
        j["ensemble_bound"] = ensemble_bound;
        j["ensemble_bound_relaxed"] = relaxed;
        j["capacity_bound"] = capacity;
        emit_json(j);
    } else {
        std::cout << "ensemble bound (entropy majorant): " << fmt(ensemble_bound) << " "
                  << g.unit() << "\n";
        std::cout << "ensemble bound (log-relaxed):      " << fmt(relaxed) << " "
                  << g.unit() << "\n";
        std::cout << "capacity bound:                    " << fmt(capacity) << " "
                  << g.unit() << "\n";
    }
    return 0;
}

int cmd_reproduce(const GlobalOpts& g) {
    const auto checks = run_golden_suite();
    std::size_t passed = 0;
    for (const auto& c : checks)
        if (c.pass) ++passed;
    if (g.json()) {
        ordered_json j;
        j["command"] = "reproduce-examples";
        ordered_json arr = ordered_json::array();
        for (const auto& c : checks) {
            ordered_json cj;
            cj["group"] = c.group;
            cj["name"] = c.name;
            cj["relation"] = c.relation;
            cj["expected"] = c.expected;
            cj["computed"] = c.computed;
            cj["tolerance"] = c.tolerance;
            cj["pass"] = c.pass;
            arr.push_back(std::move(cj));
        }
        j["checks"] = std::move(arr);
        j["passed"] = passed;
        j["total"] = checks.size();
        emit_json(j);
    } else {
        for (const auto& c : checks)
            std::printf("[%s] %-24s %-58s %s %s %s (tol %s)\n", c.pass ? "PASS" : "FAIL",
                        c.group.c_str(), c.name.c_str(), fmt(c.computed).c_str(),
                        c.relation.c_str(), fmt(c.expected).c_str(),
                        fmt(c.tolerance).c_str());
        std::printf("%zu/%zu checks passed\n", passed, checks.size());
    }
    return passed == checks.size() ? 0 : 1;
}

}  // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"Holevo quantity of discrete ensembles and its upper bounds"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"table", "json"}));
    app.add_option("--log-base", g.log_base, "logarithm base for reported values")
        ->check(CLI::IsMember({"e", "2"}));
    app.add_option("--tolerance", g.solver.tolerance, "solver convergence tolerance");
    app.add_option("--max-iters", g.solver.max_iters, "solver iteration budget per start");
    app.add_option("--restarts", g.solver.restarts, "extra random solver starts");
    app.add_option("--seed", g.solver.seed, "random seed for solver starts");

    std::string path;
    auto add_file = [&](CLI::App* sub) {
        sub->add_option("file", path, "problem file (JSON)")->required();
        sub->fallthrough();
    };

    auto* sub_chi = app.add_subcommand("chi", "exact quantity of an ensemble");
    add_file(sub_chi);
    auto* sub_bounds = app.add_subcommand("bounds", "full upper-bound report");
    add_file(sub_bounds);
    auto* sub_amd = app.add_subcommand("amd", "minimal average divergence");
    add_file(sub_amd);
    auto* sub_mmd = app.add_subcommand("mmd", "minimal worst-case divergence");
    add_file(sub_mmd);

    CapacityFlags cf;
    auto* sub_cap = app.add_subcommand("capacity", "channel capacity bound");
    sub_cap->add_option("file", cf.path, "channel problem file (JSON)");
    sub_cap->add_option("--family", cf.family, "closed-form channel family");
    sub_cap->add_option("--d", cf.d, "channel dimension");
    sub_cap->add_option("--p", cf.p, "noise parameter");
    sub_cap->add_option("--r", cf.r, "spectrum parameter");
    sub_cap->add_option("--probes", cf.probes, "random probe count for radius estimates");
    sub_cap->add_option("--probe-seed", cf.probe_seed, "probe sampling seed");
    sub_cap->fallthrough();

    auto* sub_energy = app.add_subcommand("energy-bound", "energy-constrained bounds");
    add_file(sub_energy);
    auto* sub_rep =
        app.add_subcommand("reproduce-examples", "run the reference suite of worked cases");
    sub_rep->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*sub_chi) return cmd_chi(g, path);
        if (*sub_bounds) return cmd_bounds(g, path);
        if (*sub_amd) return cmd_divergence(g, path, false);
        if (*sub_mmd) return cmd_divergence(g, path, true);
        if (*sub_cap) return cmd_capacity(g, cf);
        if (*sub_energy) return cmd_energy_bound(g, path);
        if (*sub_rep) return cmd_reproduce(g);
    } catch (const SolverError& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const NumericError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace holevo
