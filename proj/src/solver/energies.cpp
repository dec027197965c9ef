#include "renorm/solver/energies.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "renorm/errors.hpp"
#include "renorm/topology/resolution.hpp"

namespace renorm::solver {

namespace {

const double kPi = std::acos(-1.0);

void copySharedLattice(const GridField& from, GridField& to) {
    const Grid& src = from.grid();
    const Grid& dst = to.grid();
    for (int v = 0; v < dst.vertexCount(); ++v) {
        const GridVertex& gv = dst.vertices[static_cast<size_t>(v)];
        if (!gv.free()) continue;
        const int i = static_cast<int>(std::lround(gv.x / dst.spec.h));
        const int j = static_cast<int>(std::lround(gv.y / dst.spec.h));
        const int other = src.latticeAt(i, j);
        if (other < 0 || !src.vertices[static_cast<size_t>(other)].free()) continue;
        const double* s = from.state().value(other);
        double* d = to.state().value(v);
        for (int c = 0; c < to.state().target().dim(); ++c) d[c] = s[c];
    }
    to.state().refreshGauges();
}

bool quotientCompatible(const TargetModel& target, const LoopSpec& outer,
                        const std::vector<LoopSpec>& charges) {
    const auto* group = target.deckGroup();
    const auto* classes = target.deckClasses();
    const int trivial = algebra::classIndexOfElement(*classes, group->identity());
    std::set<int> reachable{trivial};
    for (const LoopSpec& c : charges) {
        std::set<int> next;
        const int cc = target.deckClassOf(c.deckElement);
        for (int r : reachable) {
            const auto prod = algebra::classProduct(*group, *classes, r, cc);
            next.insert(prod.begin(), prod.end());
        }
        reachable = std::move(next);
    }
    return reachable.count(target.deckClassOf(outer.deckElement)) > 0;
}

// Distance budget around singularity i: to the outer boundary and to the
// other singularities.
double singularityClearance(const ProblemSpec& spec, size_t i) {
    double bar = spec.domain.distToBoundary(spec.positions[i][0], spec.positions[i][1]);
    for (size_t j = 0; j < spec.positions.size(); ++j)
        if (j != i)
            bar = std::min(bar, 0.5 * std::hypot(spec.positions[i][0] - spec.positions[j][0],
                                                 spec.positions[i][1] - spec.positions[j][1]));
    return bar;
}

double holonomyRadius(const ProblemSpec& spec, double rho, size_t i) {
    return std::min(0.5 * (rho + singularityClearance(spec, i)), rho + 6 * spec.h);
}

void alignEmbedded(const TargetModel& target, const double* ref, double* other) {
    if (!target.hasGauges()) return;
    int g = 0;
    target.edgeDist2(ref, other, &g);
    double tmp[9];
    target.alignedValue(other, g, tmp);
    for (int d = 0; d < target.dim(); ++d) other[d] = tmp[d];
}

bool holonomiesMatch(const ProblemSpec& spec, double rho, const GridField& field) {
    for (size_t i = 0; i < spec.positions.size(); ++i) {
        const int observed = field.holonomyAround(spec.positions[i][0], spec.positions[i][1],
                                                  holonomyRadius(spec, rho, i));
        if (observed != loopClassId(spec.target, spec.charges[i])) return false;
    }
    return true;
}

} // namespace

void checkCompatibility(const ProblemSpec& spec) {
    if (spec.positions.size() != spec.charges.size())
        throw ConfigInvalid("one charge per singularity position required");
    for (const LoopSpec& c : spec.charges)
        if (loopIsTrivial(spec.target, c))
            throw TrivialClass("singularities with trivial charge are rejected");

    bool ok = true;
    const auto outerClass = loopCatalogClass(spec.target, spec.outerLoop);
    if (outerClass.has_value()) {
        topo::BoundaryTopology boundary{*outerClass, {}};
        std::vector<topo::HomotopyClass> sings;
        for (const LoopSpec& c : spec.charges) sings.push_back(*loopCatalogClass(spec.target, c));
        ok = topo::isTopologicalResolution(boundary, sings);
    } else {
        ok = quotientCompatible(spec.target, spec.outerLoop, spec.charges);
    }
    if (!ok)
        throw IncompatibleTopology(
            "charges are not a topological resolution of the boundary trace");
}

SolveOutcome solveGeometric(const ProblemSpec& spec, double rho, const SolveConfig& cfg,
                            const GridField* warmStart) {
    checkCompatibility(spec);
    SolveOutcome out;
    out.grid = std::make_shared<Grid>(buildGrid({spec.domain, spec.positions, rho, spec.h}));

    double best = 0.0;
    int bestSweeps = 0;
    std::shared_ptr<GridField> bestField;
    const int restarts = std::max(1, cfg.restarts);
    for (int attempt = 0; attempt < restarts; ++attempt) {
        auto field =
            std::make_shared<GridField>(out.grid, spec.target, spec.outerLoop, spec.charges);
        if (attempt == 0 && warmStart)
            copySharedLattice(*warmStart, *field);
        else if (attempt > 0)
            field->perturb(cfg.seed + static_cast<unsigned>(attempt), cfg.perturbAmplitude);
        int sweeps = 0;
        try {
            sweeps = field->state().relax(cfg.relax);
        } catch (const NonConvergence&) {
            if (attempt + 1 == restarts && !bestField) throw;
            continue;
        }
        if (!holonomiesMatch(spec, rho, *field)) continue;
        const double e = field->state().energy();
        if (!bestField || e < best) {
            best = e;
            bestField = field;
            bestSweeps = sweeps;
        }
    }
    if (!bestField)
        throw NonConvergence("solveGeometric: no initialisation kept the prescribed holonomy");
    out.energy = best;
    out.sweeps = bestSweeps;
    out.field = bestField;
    return out;
}

double geometricEnergyAt(const ProblemSpec& spec, double rho, const SolveConfig& cfg) {
    return solveGeometric(spec, rho, cfg).energy;
}

namespace {

// Candidate charge loops homotopic to `loop`: conjugated deck directions for
// quotient targets, rotation offsets for every target.
std::vector<LoopSpec> homotopicFamily(const TargetModel& target, const LoopSpec& loop,
                                      const std::vector<double>& offsets) {
    std::vector<LoopSpec> base;
    if (target.kind() == TargetModel::Kind::Quotient) {
        const auto* classes = target.deckClasses();
        const auto& cls = (*classes)[static_cast<size_t>(target.deckClassOf(loop.deckElement))];
        for (int member : cls.memberIndices) {
            LoopSpec m = loop;
            m.deckElement = member;
            base.push_back(m);
        }
    } else {
        base.push_back(loop);
    }
    std::vector<LoopSpec> family;
    for (const LoopSpec& b : base)
        for (double offset : offsets) family.push_back(b.rotated(offset));
    return family;
}

double phasePeriod(const TargetModel& target) {
    return target.kind() == TargetModel::Kind::RP2 ? kPi : 2 * kPi;
}

} // namespace

double topologicalEnergyAt(const ProblemSpec& spec, double rho, const SolveConfig& cfg,
                           int phases) {
    checkCompatibility(spec);
    const SolveOutcome geometric = solveGeometric(spec, rho, cfg);
    double best = geometric.energy;
    if (spec.charges.empty()) return best;

    // Free traces on the excised circles, descending from the converged
    // geometric field so the homotopy classes are inherited; accepted only
    // when the holonomy check confirms they survived the descent.  Keeping
    // the geometric value as a candidate makes E^top <= E^geom structural.
    auto freeSolve = [&](const SolveOutcome& seed) {
        auto field = std::make_shared<GridField>(seed.grid, spec.target, spec.outerLoop,
                                                 spec.charges, true);
        copySharedLattice(*seed.field, *field);
        for (int v = 0; v < seed.grid->vertexCount(); ++v) {
            const GridVertex& gv = seed.grid->vertices[static_cast<size_t>(v)];
            if (gv.curve <= 0) continue;
            const double* s = seed.field->state().value(v);
            double* d = field->state().value(v);
            for (int c = 0; c < spec.target.dim(); ++c) d[c] = s[c];
        }
        field->state().refreshGauges();
        // Edges next to the excised circles relax with intrinsic distances so
        // the free trace cannot hide winding in single cheap chordal jumps.
        std::vector<char> mask(seed.grid->edges.size(), 0);
        for (size_t e = 0; e < seed.grid->edges.size(); ++e) {
            const GridVertex& a =
                seed.grid->vertices[static_cast<size_t>(seed.grid->edges[e].p)];
            const GridVertex& b =
                seed.grid->vertices[static_cast<size_t>(seed.grid->edges[e].q)];
            const double mx = 0.5 * (a.x + b.x), my = 0.5 * (a.y + b.y);
            for (const auto& pos : spec.positions)
                if (std::hypot(mx - pos[0], my - pos[1]) < rho + 1.5 * spec.h) mask[e] = 1;
        }
        field->state().setIntrinsicEdges(std::move(mask));
        field->state().relax(cfg.relax);
        if (!holonomiesMatch(spec, rho, *field)) return;
        best = std::min(best, field->state().chordalEnergy());
    };
    freeSolve(geometric);

    // Conjugated geodesic directions are extra seeds for quotient targets;
    // rotation offsets are reached by the free descent itself, so the phase
    // grid only seeds a few distinct starting loops.
    if (spec.target.kind() == TargetModel::Kind::Quotient) {
        const double period = phasePeriod(spec.target);
        const int seeds = std::max(1, phases / 8);
        std::vector<double> offsets;
        for (int p = 0; p < seeds; ++p) offsets.push_back(period * p / seeds);
        ProblemSpec work = spec;
        const GridField* warm = geometric.field.get();
        std::vector<SolveOutcome> keepAlive;
        for (size_t i = 0; i < spec.charges.size(); ++i) {
            for (const LoopSpec& candidate :
                 homotopicFamily(spec.target, spec.charges[i], offsets)) {
                ProblemSpec trial = work;
                trial.charges[i] = candidate;
                keepAlive.push_back(solveGeometric(trial, rho, cfg, warm));
                warm = keepAlive.back().field.get();
                best = std::min(best, keepAlive.back().energy);
                freeSolve(keepAlive.back());
            }
        }
    }
    return best;
}

std::vector<double> defaultRhoSchedule() {
    std::vector<double> out;
    for (int j = 0; j <= 4; ++j) out.push_back(0.2 * std::pow(2.0, -j));
    return out;
}

EnergyReport renormalisedEnergy(const ProblemSpec& spec, std::vector<double> rhoSchedule,
                                EnergyMode mode, const SolveConfig& cfg) {
    checkCompatibility(spec);
    const double bar = rhoBar(spec.domain, spec.positions);
    std::vector<double> schedule;
    for (double rho : rhoSchedule)
        if (rho >= 3 * spec.h && rho < bar) schedule.push_back(rho);
    std::sort(schedule.begin(), schedule.end(), std::greater<double>());
    if (schedule.size() < 2)
        throw ConfigInvalid("renormalisedEnergy: need at least two usable rho samples");

    EnergyReport report;
    report.expectedSlope = 0.0;
    for (const LoopSpec& c : spec.charges) {
        const double lambda = loopClassLambda(spec.target, c);
        report.expectedSlope += lambda * lambda / (4 * kPi);
    }

    std::shared_ptr<GridField> prevField;
    std::shared_ptr<Grid> prevGrid;
    for (double rho : schedule) {
        double energy = 0.0;
        if (mode == EnergyMode::Geometric) {
            const SolveOutcome outcome = solveGeometric(spec, rho, cfg, prevField.get());
            energy = outcome.energy;
            prevField = outcome.field;
            prevGrid = outcome.grid;
        } else {
            energy = topologicalEnergyAt(spec, rho, cfg);
        }
        report.samples.push_back({rho, energy});
    }

    // Least-squares fit of E against log(1/rho).
    const size_t n = report.samples.size();
    double mx = 0.0, my = 0.0;
    for (const auto& s : report.samples) {
        mx += std::log(1.0 / s.rho);
        my += s.energy;
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0;
    for (const auto& s : report.samples) {
        const double dx = std::log(1.0 / s.rho) - mx;
        sxx += dx * dx;
        sxy += dx * (s.energy - my);
    }
    report.fittedSlope = sxy / sxx;
    report.renormalised = my - report.fittedSlope * mx;
    double res2 = 0.0;
    for (const auto& s : report.samples) {
        const double r =
            s.energy - report.fittedSlope * std::log(1.0 / s.rho) - report.renormalised;
        res2 += r * r;
    }
    report.fitResidual = std::sqrt(res2 / static_cast<double>(n));
    report.slopeWarning =
        std::abs(report.fittedSlope - report.expectedSlope) > 0.05 * report.expectedSlope;

    if (mode == EnergyMode::Geometric && prevField) {
        report.finestField = prevField;
        report.finestGrid = prevGrid;
        const double rhoMin = schedule.back();
        for (size_t i = 0; i < spec.positions.size(); ++i) {
            const double radius = std::min(0.75 * singularityClearance(spec, i),
                                           std::max(5 * spec.h, 2 * rhoMin));
            report.fluxes.push_back(
                stressFlux(*prevField, spec.positions[i][0], spec.positions[i][1], radius));
        }
    }
    return report;
}

std::array<double, 2> stressFlux(const GridField& field, double cx, double cy, double radius) {
    const Grid& grid = field.grid();
    const TargetModel& target = field.state().target();
    const double h = grid.spec.h;
    if (radius < 5 * h)
        throw CircleOutOfDomain("stressFlux: radius below 5h");

    const int quad = 256;
    const int ed = target.embedDim();
    const double delta = 0.5 * h;
    std::vector<double> embedded(4 * static_cast<size_t>(ed));

    // Bilinear interpolation of the embedded field; for quotients the four
    // cell corners are deck-aligned to the first corner before embedding.
    auto interpolate = [&](double x, double y, double* out) {
        const int i = static_cast<int>(std::floor(x / h));
        const int j = static_cast<int>(std::floor(y / h));
        const int corners[4] = {grid.latticeAt(i, j), grid.latticeAt(i + 1, j),
                                grid.latticeAt(i, j + 1), grid.latticeAt(i + 1, j + 1)};
        for (int c = 0; c < 4; ++c)
            if (corners[c] < 0)
                throw CircleOutOfDomain("stressFlux: interpolation cell leaves the grid");
        const double fx = x / h - i;
        const double fy = y / h - j;
        const double wts[4] = {(1 - fx) * (1 - fy), fx * (1 - fy), (1 - fx) * fy, fx * fy};
        double aligned[9];
        for (int c = 0; c < 4; ++c) {
            const double* raw = field.state().value(corners[c]);
            if (target.hasGauges() && c > 0) {
                int g = 0;
                target.edgeDist2(field.state().value(corners[0]), raw, &g);
                target.alignedValue(raw, g, aligned);
            } else {
                for (int d = 0; d < target.dim(); ++d) aligned[d] = raw[d];
            }
            target.embed(aligned, embedded.data() + static_cast<size_t>(c) * ed);
        }
        for (int d = 0; d < ed; ++d) {
            out[d] = 0.0;
            for (int c = 0; c < 4; ++c)
                out[d] += wts[c] * embedded[static_cast<size_t>(c) * ed + d];
        }
    };

    const double scale = target.metricScale();
    std::array<double, 2> flux{0.0, 0.0};
    std::vector<double> plus(ed), minus(ed);
    std::vector<double> du1(ed), du2(ed);
    for (int m = 0; m < quad; ++m) {
        const double th = 2 * kPi * m / quad;
        const double x = cx + radius * std::cos(th);
        const double y = cy + radius * std::sin(th);

        interpolate(x + delta, y, plus.data());
        interpolate(x - delta, y, minus.data());
        alignEmbedded(target, plus.data(), minus.data());
        for (int d = 0; d < ed; ++d) du1[d] = (plus[d] - minus[d]) / (2 * delta);

        interpolate(x, y + delta, plus.data());
        interpolate(x, y - delta, minus.data());
        alignEmbedded(target, plus.data(), minus.data());
        for (int d = 0; d < ed; ++d) du2[d] = (plus[d] - minus[d]) / (2 * delta);

        double g11 = 0.0, g22 = 0.0, g12 = 0.0;
        for (int d = 0; d < ed; ++d) {
            g11 += du1[d] * du1[d];
            g22 += du2[d] * du2[d];
            g12 += du1[d] * du2[d];
        }
        g11 *= scale; g22 *= scale; g12 *= scale;
        const double half = 0.5 * (g11 + g22);
        const double t11 = half - g11, t12 = -g12, t22 = half - g22;
        const double nx = std::cos(th), ny = std::sin(th);
        const double ds = 2 * kPi * radius / quad;
        flux[0] += (t11 * nx + t12 * ny) * ds;
        flux[1] += (t12 * nx + t22 * ny) * ds;
    }
    return flux;
}

} // namespace renorm::solver
