#include "renorm/topology/resolution.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "renorm/errors.hpp"

namespace renorm::topo {

namespace {

const double kPi = std::acos(-1.0);
const double kEnergyTol = 1e-9;   // all table energies are exact multiples of pi

double lambdaSqOver4Pi(double lambda) { return lambda * lambda / (4 * kPi); }

bool abelianModel(const ManifoldDescriptor& man) {
    return man.model() != ClassModel::FiniteGroupClasses;
}

void requireSameManifold(const BoundaryTopology& boundary,
                         const std::vector<HomotopyClass>& singularities) {
    const ManifoldDescriptor& man = boundary.outerClass.manifold;
    for (const auto& c : boundary.innerBoundaryClasses)
        if (c.manifold != man) throw MixedManifolds("inner boundary class from another manifold");
    for (const auto& c : singularities)
        if (c.manifold != man) throw MixedManifolds("singularity class from another manifold");
}

// Finite product universe: classes indexed by catalog position, with the
// polygroup product translated from the algebra classes.
struct Universe {
    ManifoldDescriptor man;
    std::vector<HomotopyClass> classes;
    int trivialIdx = -1;
    std::map<std::pair<int, int>, int> latticeIndex;

    int size() const { return static_cast<int>(classes.size()); }

    std::vector<int> product(int i, int j) const {
        switch (man.model()) {
        case ClassModel::FiniteGroupClasses: {
            const FiniteModelData* data = man.finiteData();
            const auto set = algebra::classProduct(
                data->group, data->algClasses,
                data->catalogToAlg[static_cast<size_t>(classes[size_t(i)].id)],
                data->catalogToAlg[static_cast<size_t>(classes[size_t(j)].id)]);
            std::vector<int> out;
            for (int alg : set) out.push_back(data->algToCatalog[static_cast<size_t>(alg)]);
            std::sort(out.begin(), out.end());
            return out;
        }
        case ClassModel::CyclicWithLengths: {
            const int n = static_cast<int>(man.cyclicLengths().size());
            return {(classes[size_t(i)].id + classes[size_t(j)].id) % n};
        }
        default: {
            const auto key = std::make_pair(classes[size_t(i)].n + classes[size_t(j)].n,
                                            classes[size_t(i)].m + classes[size_t(j)].m);
            const auto it = latticeIndex.find(key);
            if (it == latticeIndex.end()) return {};
            return {it->second};
        }
        }
    }
};

Universe buildUniverse(const ManifoldDescriptor& man, double latticeBound) {
    Universe u{man, {}, -1, {}};
    switch (man.model()) {
    case ClassModel::FiniteGroupClasses:
    case ClassModel::CyclicWithLengths:
        u.classes = classCatalog(man);
        break;
    default:
        u.classes = classCatalog(man, latticeBound);
        break;
    }
    for (int i = 0; i < u.size(); ++i) {
        if (u.classes[size_t(i)].trivial()) u.trivialIdx = i;
        if (man.model() == ClassModel::LatticeZ || man.model() == ClassModel::LatticeZ2 ||
            man.model() == ClassModel::LatticeEisenstein)
            u.latticeIndex[{u.classes[size_t(i)].n, u.classes[size_t(i)].m}] = i;
    }
    return u;
}

// Bellman fix-point: E(c) = min over multisets of nontrivial classes whose
// polygroup product contains c.  Initialised with singletons; each relaxation
// combines two already-reachable values, which covers all multisets by
// associativity of the polygroup product.
std::vector<double> computeEnergies(const Universe& u) {
    std::vector<double> energy(static_cast<size_t>(u.size()), 0.0);
    for (int i = 0; i < u.size(); ++i)
        energy[size_t(i)] =
            u.classes[size_t(i)].trivial() ? 0.0 : lambdaSqOver4Pi(u.classes[size_t(i)].lambda);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < u.size(); ++i) {
            if (u.classes[size_t(i)].trivial()) continue;
            for (int j = i; j < u.size(); ++j) {
                if (u.classes[size_t(j)].trivial()) continue;
                const double sum = energy[size_t(i)] + energy[size_t(j)];
                for (int t : u.product(i, j)) {
                    if (sum < energy[size_t(t)] - 1e-13) {
                        energy[size_t(t)] = sum;
                        changed = true;
                    }
                }
            }
        }
    }
    return energy;
}

using Multiset = std::vector<int>;   // sorted universe indices

// All minimal multisets for class t, memoised; recursion terminates because
// both summands carry strictly smaller energy (each at least sys^2 / 4 pi).
const std::set<Multiset>& minimalMultisets(const Universe& u, const std::vector<double>& energy,
                                           int t, std::map<int, std::set<Multiset>>& memo) {
    auto found = memo.find(t);
    if (found != memo.end()) return found->second;
    std::set<Multiset> result;
    if (std::abs(lambdaSqOver4Pi(u.classes[size_t(t)].lambda) - energy[size_t(t)]) <= kEnergyTol)
        result.insert({t});
    for (int i = 0; i < u.size(); ++i) {
        if (u.classes[size_t(i)].trivial()) continue;
        if (energy[size_t(i)] >= energy[size_t(t)] - 1e-13) continue;
        for (int j = i; j < u.size(); ++j) {
            if (u.classes[size_t(j)].trivial()) continue;
            if (std::abs(energy[size_t(i)] + energy[size_t(j)] - energy[size_t(t)]) > kEnergyTol)
                continue;
            const auto prod = u.product(i, j);
            if (!std::binary_search(prod.begin(), prod.end(), t)) continue;
            const auto& lhs = minimalMultisets(u, energy, i, memo);
            const auto& rhs = minimalMultisets(u, energy, j, memo);
            for (const Multiset& a : lhs) {
                for (const Multiset& b : rhs) {
                    Multiset merged = a;
                    merged.insert(merged.end(), b.begin(), b.end());
                    std::sort(merged.begin(), merged.end());
                    result.insert(std::move(merged));
                }
            }
        }
    }
    return memo.emplace(t, std::move(result)).first->second;
}

int locate(const Universe& u, const HomotopyClass& c) {
    for (int i = 0; i < u.size(); ++i)
        if (u.classes[size_t(i)] == c) return i;
    throw NormBoundTooSmall("class escapes the enumeration window");
}

double defaultBound(const HomotopyClass& c) { return 4.0 * latticeNorm(c); }

bool latticeModel(const ManifoldDescriptor& man) {
    return man.model() == ClassModel::LatticeZ || man.model() == ClassModel::LatticeZ2 ||
           man.model() == ClassModel::LatticeEisenstein;
}

} // namespace

bool isTopologicalResolution(const BoundaryTopology& boundary,
                             const std::vector<HomotopyClass>& singularities) {
    requireSameManifold(boundary, singularities);
    const ManifoldDescriptor& man = boundary.outerClass.manifold;

    if (abelianModel(man)) {
        long long n = 0, m = 0;
        for (const auto& c : singularities) { n += c.n; m += c.m; }
        for (const auto& c : boundary.innerBoundaryClasses) { n += c.n; m += c.m; }
        switch (man.model()) {
        case ClassModel::LatticeZ:
            return n == boundary.outerClass.n;
        case ClassModel::LatticeZ2:
        case ClassModel::LatticeEisenstein:
            return n == boundary.outerClass.n && m == boundary.outerClass.m;
        case ClassModel::CyclicWithLengths: {
            const int order = static_cast<int>(man.cyclicLengths().size());
            long long v = 0;
            for (const auto& c : singularities) v += c.id;
            for (const auto& c : boundary.innerBoundaryClasses) v += c.id;
            return ((v - boundary.outerClass.id) % order + order) % order == 0;
        }
        default:
            break;
        }
    }

    // Nonabelian case: propagate the reachable set of classes left to right;
    // the order is immaterial because the polygroup is commutative.
    const FiniteModelData* data = man.finiteData();
    const int trivialAlg = algebra::classIndexOfElement(data->algClasses, data->group.identity());
    std::set<int> reachable{trivialAlg};
    auto fold = [&](const HomotopyClass& c) {
        std::set<int> next;
        const int algC = data->catalogToAlg[static_cast<size_t>(c.id)];
        for (int r : reachable) {
            const auto prod = algebra::classProduct(data->group, data->algClasses, r, algC);
            next.insert(prod.begin(), prod.end());
        }
        reachable = std::move(next);
    };
    for (const auto& c : singularities) fold(c);
    for (const auto& c : boundary.innerBoundaryClasses) fold(c);
    const int outerAlg = data->catalogToAlg[static_cast<size_t>(boundary.outerClass.id)];
    return reachable.count(outerAlg) > 0;
}

SingularEnergyResult singularEnergy(const HomotopyClass& c, double normBound) {
    if (c.trivial()) return {0.0, {}};
    const ManifoldDescriptor& man = c.manifold;
    double bound = normBound;
    if (latticeModel(man)) {
        if (bound < 0) bound = defaultBound(c);
        if (bound < 2.0 * latticeNorm(c) - 1e-12)
            throw NormBoundTooSmall("singularEnergy: lattice norm bound below 2|c|");
    }
    const Universe u = buildUniverse(man, bound);
    const int target = locate(u, c);
    const std::vector<double> energy = computeEnergies(u);

    std::map<int, std::set<Multiset>> memo;
    const auto& multisets = minimalMultisets(u, energy, target, memo);
    SingularEnergyResult result;
    result.energy = energy[size_t(target)];
    for (const Multiset& ms : multisets) {
        Decomposition d;
        for (int idx : ms) d.parts.push_back(u.classes[size_t(idx)]);
        std::sort(d.parts.begin(), d.parts.end());
        d.energy = 0.0;
        for (const auto& part : d.parts) d.energy += lambdaSqOver4Pi(part.lambda);
        result.minimalDecompositions.push_back(std::move(d));
    }
    std::sort(result.minimalDecompositions.begin(), result.minimalDecompositions.end(),
              [](const Decomposition& a, const Decomposition& b) {
                  if (a.parts.size() != b.parts.size()) return a.parts.size() < b.parts.size();
                  return std::lexicographical_compare(a.parts.begin(), a.parts.end(),
                                                      b.parts.begin(), b.parts.end());
              });
    return result;
}

double singularEnergyOfBoundary(const BoundaryTopology& boundary, double normBound) {
    requireSameManifold(boundary, {});
    const ManifoldDescriptor& man = boundary.outerClass.manifold;

    if (abelianModel(man)) {
        long long n = boundary.outerClass.n, m = boundary.outerClass.m;
        long long v = boundary.outerClass.id;
        for (const auto& c : boundary.innerBoundaryClasses) { n -= c.n; m -= c.m; v -= c.id; }
        HomotopyClass needed = boundary.outerClass;
        switch (man.model()) {
        case ClassModel::LatticeZ:
            needed = latticeClass(man, static_cast<int>(n));
            break;
        case ClassModel::LatticeZ2:
        case ClassModel::LatticeEisenstein:
            needed = latticeClass(man, static_cast<int>(n), static_cast<int>(m));
            break;
        case ClassModel::CyclicWithLengths: {
            const int order = static_cast<int>(man.cyclicLengths().size());
            needed = cyclicClass(man, static_cast<int>(((v % order) + order) % order));
            break;
        }
        default:
            break;
        }
        return singularEnergy(needed, normBound).energy;
    }

    const FiniteModelData* data = man.finiteData();
    const int trivialAlg = algebra::classIndexOfElement(data->algClasses, data->group.identity());
    std::set<int> reachable{trivialAlg};
    for (const auto& c : boundary.innerBoundaryClasses) {
        std::set<int> next;
        const int algC = data->catalogToAlg[static_cast<size_t>(c.id)];
        for (int r : reachable) {
            const auto prod = algebra::classProduct(data->group, data->algClasses, r, algC);
            next.insert(prod.begin(), prod.end());
        }
        reachable = std::move(next);
    }

    const Universe u = buildUniverse(man, 0.0);
    const std::vector<double> energy = computeEnergies(u);
    const int outerAlg = data->catalogToAlg[static_cast<size_t>(boundary.outerClass.id)];
    double best = -1.0;
    for (int i = 0; i < u.size(); ++i) {
        const int algC = data->catalogToAlg[static_cast<size_t>(u.classes[size_t(i)].id)];
        bool compatible = false;
        for (int s : reachable) {
            const auto prod = algebra::classProduct(data->group, data->algClasses, algC, s);
            if (prod.count(outerAlg)) { compatible = true; break; }
        }
        if (compatible && (best < 0 || energy[size_t(i)] < best)) best = energy[size_t(i)];
    }
    if (best < 0)
        throw IncompatibleTopology("boundary data admits no topological resolution");
    return best;
}

bool isAtomic(const HomotopyClass& c) {
    if (c.trivial()) throw TrivialClass("isAtomic: class is trivial");
    const SingularEnergyResult r = singularEnergy(c);
    if (std::abs(r.energy - lambdaSqOver4Pi(c.lambda)) > 1e-12) return false;
    for (const auto& d : r.minimalDecompositions)
        if (d.parts.size() == 1 && d.parts[0] == c) return true;
    return false;
}

} // namespace renorm::topo
