#include "renorm/cli/dispatch.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "renorm/cli/config.hpp"
#include "renorm/errors.hpp"
#include "renorm/topology/table.hpp"

namespace renorm::cli {

namespace {

const double kPi = std::acos(-1.0);

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return std::string(buf);
}

std::string fmtPi(double x) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.7g (%.7g π)", x, x / kPi);
    return std::string(buf);
}

// Atomic write: temp file in the target directory, then rename.
void writeOutput(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw ConfigInvalid("cannot open output file: " + path);
        os << content;
    }
    fs::rename(tmp, target);
}

std::string readFile(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw ConfigInvalid("cannot read config file: " + path);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

int runTable(const std::string& manifold, double bound, const std::string& format,
             const std::string& out) {
    const auto man = topo::ManifoldDescriptor::byName(manifold);
    const auto rows = topo::tableReport(man, bound);
    std::string rendered;
    if (format == "csv") rendered = topo::renderTableCsv(rows);
    else if (format == "json") rendered = topo::renderTableJson(man, rows);
    else if (format == "text") rendered = topo::renderTableText(man, rows);
    else throw ConfigInvalid("format must be text, csv or json");
    writeOutput(out, rendered);
    return 0;
}

int runResolve(const std::string& manifold, const std::string& outer,
               const std::vector<std::string>& sing, const std::vector<std::string>& inner,
               const std::string& out) {
    const auto man = topo::ManifoldDescriptor::byName(manifold);
    topo::BoundaryTopology boundary{topo::classByName(man, outer), {}};
    for (const auto& name : inner)
        boundary.innerBoundaryClasses.push_back(topo::classByName(man, name));
    std::vector<topo::HomotopyClass> singularities;
    for (const auto& name : sing) singularities.push_back(topo::classByName(man, name));

    std::ostringstream os;
    const bool ok = topo::isTopologicalResolution(boundary, singularities);
    os << (ok ? "compatible" : "incompatible") << '\n';
    const double esg = topo::singularEnergyOfBoundary(boundary);
    os << "E_sg(boundary) = " << fmtPi(esg) << '\n';
    writeOutput(out, os.str());
    return 0;
}

int runEnergy(const std::string& configPath, const std::string& out, int threadsOverride) {
    EnergyConfig cfg = parseEnergyConfig(readFile(configPath));
    if (const char* seed = std::getenv("RENORM_SEED"))
        cfg.solve.seed = static_cast<unsigned>(std::strtoul(seed, nullptr, 10));
    if (threadsOverride > 0) cfg.solve.relax.threads = threadsOverride;

    std::ostringstream csv;
    std::ostringstream text;

    if (cfg.sweep.enabled) {
        csv << "a_x,a_y,W\n";
        const auto base = cfg.problem.positions[0];
        for (int s = 0; s < cfg.sweep.steps; ++s) {
            const double t = cfg.sweep.range[0] +
                             (cfg.sweep.range[1] - cfg.sweep.range[0]) * s /
                                 (cfg.sweep.steps - 1);
            solver::ProblemSpec moved = cfg.problem;
            moved.positions[0] = {base[0] + t * cfg.sweep.axis[0],
                                  base[1] + t * cfg.sweep.axis[1]};
            const auto report =
                solver::renormalisedEnergy(moved, cfg.rhoSchedule, cfg.mode, cfg.solve);
            csv << fmt(moved.positions[0][0]) << ',' << fmt(moved.positions[0][1]) << ','
                << fmt(report.renormalised) << '\n';
            text << "a = (" << fmt(moved.positions[0][0]) << ", "
                 << fmt(moved.positions[0][1]) << ")  W = " << fmtPi(report.renormalised)
                 << '\n';
        }
    } else {
        const auto report =
            solver::renormalisedEnergy(cfg.problem, cfg.rhoSchedule, cfg.mode, cfg.solve);
        csv << "rho,energy\n";
        for (const auto& s : report.samples)
            csv << fmt(s.rho) << ',' << fmt(s.energy) << '\n';
        csv << "\nA,W,residual,expected_slope,slope_warning\n";
        csv << fmt(report.fittedSlope) << ',' << fmt(report.renormalised) << ','
            << fmt(report.fitResidual) << ',' << fmt(report.expectedSlope) << ','
            << (report.slopeWarning ? 1 : 0) << '\n';
        if (!report.fluxes.empty()) {
            csv << "\nsingularity,flux_x,flux_y\n";
            for (size_t i = 0; i < report.fluxes.size(); ++i)
                csv << i << ',' << fmt(report.fluxes[i][0]) << ',' << fmt(report.fluxes[i][1])
                    << '\n';
        }
        text << "fitted slope A = " << fmtPi(report.fittedSlope) << '\n'
             << "renormalised W = " << fmtPi(report.renormalised) << '\n'
             << "fit residual   = " << fmt(report.fitResidual) << '\n';
        if (report.slopeWarning)
            text << "warning: fitted slope deviates more than 5% from sum lambda^2/4pi = "
                 << fmtPi(report.expectedSlope) << '\n';
    }

    writeOutput(out, csv.str());
    if (!out.empty()) std::cout << text.str();
    return 0;
}

int runBalls(const std::string& configPath, const std::string& out) {
    const BallsConfig cfg = parseBallsConfig(readFile(configPath));
    const balls::GrowthTrace trace = balls::growthProcess(cfg.family, cfg.tMax);

    std::ostringstream csv;
    csv << "t,ball_index,cx,cy,r\n";
    auto emit = [&](double t) {
        const balls::BallFamily at = trace.familyAt(t);
        for (size_t b = 0; b < at.balls.size(); ++b)
            csv << fmt(t) << ',' << b << ',' << fmt(at.balls[b].cx) << ','
                << fmt(at.balls[b].cy) << ',' << fmt(at.balls[b].r) << '\n';
    };
    for (const auto& iv : trace.intervals) {
        for (int s = 0; s < cfg.samplesPerInterval; ++s) {
            const double t = iv.tStart + (iv.tEnd - iv.tStart) * s / cfg.samplesPerInterval;
            if (t < cfg.tMax) emit(t);
        }
    }
    emit(cfg.tMax);
    writeOutput(out, csv.str());
    if (!out.empty())
        std::cout << "merges: " << trace.mergeTimes.size()
                  << "  content upper bound: " << fmt(balls::contentUpperBound(cfg.family))
                  << '\n';
    return 0;
}

int runSynharmony(const std::string& configPath, const std::string& out) {
    const SynharmonyConfig cfg = parseSynharmonyConfig(readFile(configPath));
    const auto result =
        solver::synharmonyEstimate(cfg.target, cfg.gamma, cfg.beta, cfg.tList, cfg.nTheta,
                                   cfg.relax);
    std::ostringstream csv;
    csv << "T,excess\n";
    for (const auto& [t, excess] : result.perT) csv << fmt(t) << ',' << fmt(excess) << '\n';
    writeOutput(out, csv.str());
    std::ostringstream text;
    text << "synharmony estimate = " << fmtPi(result.estimate) << '\n';
    if (!out.empty()) std::cout << text.str();
    return 0;
}

} // namespace

int dispatch(const std::vector<std::string>& args) {
    CLI::App app{"renormalised energies of singular harmonic maps: class tables, "
                 "compatibility checks, ball growth and Dirichlet solvers"};
    app.require_subcommand(1);

    std::string manifold, outer, configPath, out, format = "text";
    double bound = 3.0;
    int threads = 0;
    std::vector<std::string> sing, inner;

    auto* table = app.add_subcommand("table", "class table of a catalog manifold");
    table->add_option("--manifold", manifold, "manifold name")->required();
    table->add_option("--bound", bound, "lattice norm bound (lattice models)");
    table->add_option("--format", format, "text or csv");
    table->add_option("--out", out, "output file (atomic)");

    auto* resolve = app.add_subcommand("resolve", "topological compatibility of boundary data");
    resolve->add_option("--manifold", manifold, "manifold name")->required();
    resolve->add_option("--outer", outer, "outer boundary class")->required();
    resolve->add_option("--sing", sing, "singularity class (repeatable)");
    resolve->add_option("--inner", inner, "inner boundary class (repeatable)");
    resolve->add_option("--out", out, "output file");

    auto* energy = app.add_subcommand("energy", "renormalised energy of a configuration");
    energy->add_option("--config", configPath, "JSON problem description")->required();
    energy->add_option("--out", out, "output CSV (atomic)");
    energy->add_option("--threads", threads, "relaxation threads (1 = deterministic)");

    auto* ballsCmd = app.add_subcommand("balls", "exponential ball growth trace");
    ballsCmd->add_option("--config", configPath, "JSON ball list")->required();
    ballsCmd->add_option("--out", out, "output CSV (atomic)");

    auto* syn = app.add_subcommand("synharmony", "cylinder estimate between two loops");
    syn->add_option("--config", configPath, "JSON loop pair")->required();
    syn->add_option("--out", out, "output CSV (atomic)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {   // --help
            std::cout << app.help();
            return 0;
        }
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }

    try {
        if (table->parsed()) return runTable(manifold, bound, format, out);
        if (resolve->parsed()) return runResolve(manifold, outer, sing, inner, out);
        if (energy->parsed()) return runEnergy(configPath, out, threads);
        if (ballsCmd->parsed()) return runBalls(configPath, out);
        if (syn->parsed()) return runSynharmony(configPath, out);
    } catch (const IncompatibleTopology& e) {
        std::cerr << "error: incompatible topology: " << e.what() << '\n';
        return 2;
    } catch (const NonConvergence& e) {
        std::cerr << "error: solver did not converge: " << e.what() << '\n';
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

} // namespace renorm::cli
