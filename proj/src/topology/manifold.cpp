#include "renorm/topology/manifold.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "renorm/algebra/helium3.hpp"
#include "renorm/errors.hpp"

namespace renorm::topo {

namespace {

const double kPi = std::acos(-1.0);

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

} // namespace

struct ManifoldDescriptor::Impl {
    ManifoldKind kind = ManifoldKind::Circle;
    ClassModel model = ClassModel::LatticeZ;
    int projectiveDim = 2;
    std::string name;
    double systole = 0.0;
    std::shared_ptr<FiniteModelData> finite;
    std::vector<double> cyclicLengths;
};

ManifoldDescriptor::ManifoldDescriptor(std::shared_ptr<const Impl> impl)
    : impl_(std::move(impl)) {}

ManifoldKind ManifoldDescriptor::kind() const { return impl_->kind; }
ClassModel ManifoldDescriptor::model() const { return impl_->model; }
int ManifoldDescriptor::projectiveDim() const { return impl_->projectiveDim; }
std::string ManifoldDescriptor::name() const { return impl_->name; }
double ManifoldDescriptor::systole() const { return impl_->systole; }
const FiniteModelData* ManifoldDescriptor::finiteData() const { return impl_->finite.get(); }
const std::vector<double>& ManifoldDescriptor::cyclicLengths() const {
    return impl_->cyclicLengths;
}

bool ManifoldDescriptor::operator==(const ManifoldDescriptor& o) const {
    return impl_->kind == o.impl_->kind && impl_->projectiveDim == o.impl_->projectiveDim;
}

namespace {

struct Anchor {
    algebra::Quaternion element;
    std::string name;
    std::string alias;
    std::string description;
};

std::shared_ptr<FiniteModelData> buildFiniteModel(const std::vector<algebra::Quaternion>& gens,
                                                  const std::vector<Anchor>& anchors,
                                                  const std::string& edgeName,
                                                  const std::string& edgeDescription,
                                                  int edgePosition) {
    auto data = std::make_shared<FiniteModelData>(FiniteModelData{
        algebra::generateGroup(gens), {}, {}, {}, {}, {}, {}});
    data->algClasses = algebra::conjugacyClasses(data->group);
    const int nClasses = static_cast<int>(data->algClasses.size());

    std::vector<int> order;
    std::vector<std::string> names, aliases, descriptions;
    std::vector<bool> used(static_cast<size_t>(nClasses), false);
    for (const Anchor& a : anchors) {
        const int ei = data->group.indexOf(a.element);
        if (ei < 0) throw InvalidClassIndex("catalog anchor element missing from group");
        const int ci = algebra::classIndexOfElement(data->algClasses, ei);
        order.push_back(ci);
        used[static_cast<size_t>(ci)] = true;
        names.push_back(a.name);
        aliases.push_back(a.alias);
        descriptions.push_back(a.description);
    }
    if (!edgeName.empty()) {
        // The edge class is the remaining length-pi class not hit by an anchor.
        int edge = -1;
        for (int c = 0; c < nClasses; ++c) {
            if (used[static_cast<size_t>(c)]) continue;
            if (std::abs(data->algClasses[static_cast<size_t>(c)].length - kPi) < 1e-12) {
                edge = c;
                break;
            }
        }
        if (edge < 0) throw InvalidClassIndex("catalog edge class not found");
        order.insert(order.begin() + edgePosition, edge);
        names.insert(names.begin() + edgePosition, edgeName);
        aliases.insert(aliases.begin() + edgePosition, "e");
        descriptions.insert(descriptions.begin() + edgePosition, edgeDescription);
    }
    if (static_cast<int>(order.size()) != nClasses)
        throw InvalidClassIndex("catalog anchors do not cover all conjugacy classes");

    data->catalogToAlg = order;
    data->algToCatalog.assign(static_cast<size_t>(nClasses), -1);
    for (int pos = 0; pos < nClasses; ++pos)
        data->algToCatalog[static_cast<size_t>(order[static_cast<size_t>(pos)])] = pos;
    data->names = std::move(names);
    data->aliases = std::move(aliases);
    data->descriptions = std::move(descriptions);
    return data;
}

using algebra::Quaternion;

std::shared_ptr<FiniteModelData> orthorhombicModel() {
    const Quaternion one = Quaternion::one();
    std::vector<Anchor> anchors{
        {one, "γ_c", "c", "constant"},
        {Quaternion::i(), "γ_x", "x", "180° rotation around the x-axis"},
        {Quaternion::j(), "γ_y", "y", "180° rotation around the y-axis"},
        {Quaternion::k(), "γ_z", "z", "180° rotation around the z-axis"},
        {Quaternion::minusOne(), "γ_w", "w", "360° rotation"},
    };
    return buildFiniteModel(algebra::generatorsQ8(), anchors, "", "", 0);
}

std::shared_ptr<FiniteModelData> tetrahedralModel() {
    const auto gens = algebra::generators2T();
    const Quaternion a = gens[0];
    std::vector<Anchor> anchors{
        {Quaternion::one(), "γ_c", "c", "constant"},
        {a, "γ_+", "+", "120° rotation of a face"},
        {a.inverse(), "γ_-", "-", "-120° rotation of a face"},
        {a * a, "γ_+^2", "+^2", "240° rotation of a face"},
        {a.inverse() * a.inverse(), "γ_-^2", "-^2", "-240° rotation of a face"},
        {Quaternion::minusOne(), "γ_w", "w", "360° rotation"},
    };
    return buildFiniteModel(gens, anchors, "γ_e", "180° rotation of an edge", 5);
}

std::shared_ptr<FiniteModelData> octahedralModel() {
    const auto gens = algebra::generators2O();
    const Quaternion f = gens[0];
    const Quaternion v = gens[1];
    std::vector<Anchor> anchors{
        {Quaternion::one(), "γ_c", "c", "constant"},
        {v, "γ_v", "v", "90° rotation of a vertex"},
        {f, "γ_f", "f", "120° rotation of a face"},
        {v * v, "γ_v^2", "v^2", "180° rotation of a vertex"},
        {v * v * v, "γ_v^3", "v^3", "270° rotation of a vertex"},
        {f * f, "γ_f^2", "f^2", "240° rotation of a face"},
        {Quaternion::minusOne(), "γ_w", "w", "360° rotation"},
    };
    return buildFiniteModel(gens, anchors, "γ_e", "180° rotation of an edge", 4);
}

std::shared_ptr<FiniteModelData> icosahedralModel() {
    const auto gens = algebra::generators2I();
    const Quaternion f = gens[0];
    const Quaternion v = gens[1];
    std::vector<Anchor> anchors{
        {Quaternion::one(), "γ_c", "c", "constant"},
        {v, "γ_v", "v", "72° rotation of a vertex"},
        {f, "γ_f", "f", "120° rotation of a face"},
        {v * v, "γ_v^2", "v^2", "144° rotation of a vertex"},
        {v * v * v, "γ_v^3", "v^3", "216° rotation of a vertex"},
        {f * f, "γ_f^2", "f^2", "240° rotation of a face"},
        {v * v * v * v, "γ_v^4", "v^4", "288° rotation of a vertex"},
        {Quaternion::minusOne(), "γ_w", "w", "360° rotation"},
    };
    return buildFiniteModel(gens, anchors, "γ_e", "180° rotation of an edge", 4);
}

std::shared_ptr<const ManifoldDescriptor::Impl> makeImpl(ManifoldKind kind, int projDim = 2) {
    auto impl = std::make_shared<ManifoldDescriptor::Impl>();
    impl->kind = kind;
    impl->projectiveDim = projDim;
    switch (kind) {
    case ManifoldKind::Circle:
        impl->model = ClassModel::LatticeZ;
        impl->name = "circle";
        impl->systole = 2 * kPi;
        break;
    case ManifoldKind::FlatTorus:
        impl->model = ClassModel::LatticeZ2;
        impl->name = "flat_torus";
        impl->systole = 2 * kPi;
        break;
    case ManifoldKind::EquilateralTorus:
        impl->model = ClassModel::LatticeEisenstein;
        impl->name = "equilateral_torus";
        impl->systole = 1.0;
        break;
    case ManifoldKind::ProjectiveSpace: {
        impl->model = ClassModel::CyclicWithLengths;
        std::ostringstream os;
        os << "rp" << projDim;
        impl->name = os.str();
        impl->cyclicLengths = {0.0, kPi};
        impl->systole = kPi;
        break;
    }
    case ManifoldKind::Orthorhombic:
        impl->model = ClassModel::FiniteGroupClasses;
        impl->name = "orthorhombic";
        impl->finite = orthorhombicModel();
        break;
    case ManifoldKind::Tetrahedral:
        impl->model = ClassModel::FiniteGroupClasses;
        impl->name = "tetrahedral";
        impl->finite = tetrahedralModel();
        break;
    case ManifoldKind::Octahedral:
        impl->model = ClassModel::FiniteGroupClasses;
        impl->name = "octahedral";
        impl->finite = octahedralModel();
        break;
    case ManifoldKind::Icosahedral:
        impl->model = ClassModel::FiniteGroupClasses;
        impl->name = "icosahedral";
        impl->finite = icosahedralModel();
        break;
    case ManifoldKind::Helium3: {
        impl->model = ClassModel::CyclicWithLengths;
        impl->name = "helium3";
        impl->cyclicLengths.resize(4);
        for (int m = 0; m < 4; ++m)
            impl->cyclicLengths[static_cast<size_t>(m)] = algebra::componentDistanceHelium3(m);
        break;
    }
    }
    if (impl->finite) {
        double sys = 0.0;
        for (const auto& c : impl->finite->algClasses)
            if (c.length > 1e-12 && (sys == 0.0 || c.length < sys)) sys = c.length;
        impl->systole = sys;
    } else if (!impl->cyclicLengths.empty()) {
        double sys = 0.0;
        for (double len : impl->cyclicLengths)
            if (len > 1e-12 && (sys == 0.0 || len < sys)) sys = len;
        impl->systole = sys;
    }
    return impl;
}

std::shared_ptr<const ManifoldDescriptor::Impl> cached(ManifoldKind kind, int projDim = 2) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const ManifoldDescriptor::Impl>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(static_cast<int>(kind), projDim);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, makeImpl(kind, projDim)).first;
    return it->second;
}

} // namespace

ManifoldDescriptor ManifoldDescriptor::circle() {
    return ManifoldDescriptor(cached(ManifoldKind::Circle));
}
ManifoldDescriptor ManifoldDescriptor::flatTorus() {
    return ManifoldDescriptor(cached(ManifoldKind::FlatTorus));
}
ManifoldDescriptor ManifoldDescriptor::equilateralTorus() {
    return ManifoldDescriptor(cached(ManifoldKind::EquilateralTorus));
}
ManifoldDescriptor ManifoldDescriptor::projectiveSpace(int n) {
    if (n < 2) throw ConfigInvalid("projectiveSpace: dimension must be >= 2");
    return ManifoldDescriptor(cached(ManifoldKind::ProjectiveSpace, n));
}
ManifoldDescriptor ManifoldDescriptor::orthorhombic() {
    return ManifoldDescriptor(cached(ManifoldKind::Orthorhombic));
}
ManifoldDescriptor ManifoldDescriptor::tetrahedral() {
    return ManifoldDescriptor(cached(ManifoldKind::Tetrahedral));
}
ManifoldDescriptor ManifoldDescriptor::octahedral() {
    return ManifoldDescriptor(cached(ManifoldKind::Octahedral));
}
ManifoldDescriptor ManifoldDescriptor::icosahedral() {
    return ManifoldDescriptor(cached(ManifoldKind::Icosahedral));
}
ManifoldDescriptor ManifoldDescriptor::helium3() {
    return ManifoldDescriptor(cached(ManifoldKind::Helium3));
}

ManifoldDescriptor ManifoldDescriptor::byName(const std::string& raw) {
    const std::string name = lower(raw);
    if (name == "circle" || name == "s1") return circle();
    if (name == "flat_torus" || name == "torus") return flatTorus();
    if (name == "equilateral_torus" || name == "eisenstein") return equilateralTorus();
    if (name.rfind("rp", 0) == 0 && name.size() > 2)
        return projectiveSpace(std::stoi(name.substr(2)));
    if (name == "projective") return projectiveSpace(2);
    if (name == "orthorhombic" || name == "q8") return orthorhombic();
    if (name == "tetrahedral" || name == "2t") return tetrahedral();
    if (name == "octahedral" || name == "2o") return octahedral();
    if (name == "icosahedral" || name == "2i") return icosahedral();
    if (name == "helium3" || name == "he3") return helium3();
    throw ConfigInvalid("unknown manifold name: " + raw);
}

bool HomotopyClass::trivial() const { return lambda <= 1e-12; }

bool HomotopyClass::operator<(const HomotopyClass& o) const {
    if (lambda != o.lambda) return lambda < o.lambda;
    if (id != o.id) return id < o.id;
    if (n != o.n) return n < o.n;
    return m < o.m;
}

bool HomotopyClass::operator==(const HomotopyClass& o) const {
    return manifold == o.manifold && id == o.id && n == o.n && m == o.m;
}

namespace {

double latticeLambda(const ManifoldDescriptor& man, int n, int m) {
    switch (man.model()) {
    case ClassModel::LatticeZ:
        return 2 * kPi * std::abs(n);
    case ClassModel::LatticeZ2:
        return 2 * kPi * std::sqrt(double(n) * n + double(m) * m);
    case ClassModel::LatticeEisenstein:
        return std::sqrt(double(n) * n - double(n) * m + double(m) * m);
    default:
        throw InvalidClassIndex("latticeLambda: not a lattice model");
    }
}

std::string latticeName(const ManifoldDescriptor& man, int n, int m) {
    std::ostringstream os;
    if (man.model() == ClassModel::LatticeZ) os << n;
    else os << '(' << n << ',' << m << ')';
    return os.str();
}

} // namespace

HomotopyClass finiteClass(const ManifoldDescriptor& man, int catalogIndex) {
    const FiniteModelData* data = man.finiteData();
    if (!data) throw InvalidClassIndex("finiteClass: manifold has no finite class model");
    if (catalogIndex < 0 || catalogIndex >= static_cast<int>(data->names.size()))
        throw InvalidClassIndex("finiteClass: catalog index out of range");
    HomotopyClass c{man, catalogIndex, 0, 0,
                    data->names[static_cast<size_t>(catalogIndex)],
                    data->algClasses[static_cast<size_t>(
                        data->catalogToAlg[static_cast<size_t>(catalogIndex)])].length};
    return c;
}

HomotopyClass latticeClass(const ManifoldDescriptor& man, int n, int mm) {
    HomotopyClass c{man, n, n, mm, latticeName(man, n, mm), latticeLambda(man, n, mm)};
    return c;
}

HomotopyClass cyclicClass(const ManifoldDescriptor& man, int value) {
    const auto& lengths = man.cyclicLengths();
    const int n = static_cast<int>(lengths.size());
    if (n == 0) throw InvalidClassIndex("cyclicClass: manifold has no cyclic model");
    const int v = ((value % n) + n) % n;
    std::string name;
    if (man.kind() == ManifoldKind::Helium3) {
        name = v == 0 ? "γ_0" : (v == 1 ? "γ_+1" : (v == 2 ? "γ_2" : "γ_-1"));
    } else {
        name = v == 0 ? "γ_c" : "γ_a";
    }
    HomotopyClass c{man, v, 0, 0, name, lengths[static_cast<size_t>(v)]};
    return c;
}

std::vector<HomotopyClass> classCatalog(const ManifoldDescriptor& man, double normBound) {
    std::vector<HomotopyClass> out;
    switch (man.model()) {
    case ClassModel::FiniteGroupClasses: {
        const FiniteModelData* data = man.finiteData();
        for (int pos = 0; pos < static_cast<int>(data->names.size()); ++pos)
            out.push_back(finiteClass(man, pos));
        break;
    }
    case ClassModel::CyclicWithLengths:
        for (int v = 0; v < static_cast<int>(man.cyclicLengths().size()); ++v)
            out.push_back(cyclicClass(man, v));
        break;
    case ClassModel::LatticeZ: {
        const int b = static_cast<int>(std::floor(normBound + 1e-12));
        for (int n = -b; n <= b; ++n) out.push_back(latticeClass(man, n));
        break;
    }
    case ClassModel::LatticeZ2:
    case ClassModel::LatticeEisenstein: {
        const int b = static_cast<int>(std::ceil(normBound)) + 1;
        for (int n = -b; n <= b; ++n)
            for (int m = -b; m <= b; ++m) {
                HomotopyClass c = latticeClass(man, n, m);
                if (latticeNorm(c) <= normBound + 1e-12) out.push_back(c);
            }
        std::sort(out.begin(), out.end());
        break;
    }
    }
    return out;
}

HomotopyClass classByName(const ManifoldDescriptor& man, const std::string& raw) {
    std::string s = raw;
    for (const char* prefix : {"γ_", "gamma_", "gamma "}) {
        const std::string p(prefix);
        if (s.rfind(p, 0) == 0) s = s.substr(p.size());
    }
    switch (man.model()) {
    case ClassModel::FiniteGroupClasses: {
        const FiniteModelData* data = man.finiteData();
        for (int pos = 0; pos < static_cast<int>(data->names.size()); ++pos) {
            if (s == data->aliases[static_cast<size_t>(pos)] ||
                raw == data->names[static_cast<size_t>(pos)])
                return finiteClass(man, pos);
        }
        throw InvalidClassIndex("unknown class name '" + raw + "' for " + man.name());
    }
    case ClassModel::CyclicWithLengths: {
        if (man.kind() == ManifoldKind::Helium3) {
            if (s == "0") return cyclicClass(man, 0);
            if (s == "+1" || s == "1") return cyclicClass(man, 1);
            if (s == "2") return cyclicClass(man, 2);
            if (s == "-1" || s == "3") return cyclicClass(man, 3);
        } else {
            if (s == "c" || s == "0") return cyclicClass(man, 0);
            if (s == "a" || s == "1") return cyclicClass(man, 1);
        }
        throw InvalidClassIndex("unknown class name '" + raw + "' for " + man.name());
    }
    case ClassModel::LatticeZ:
        return latticeClass(man, std::stoi(s));
    case ClassModel::LatticeZ2:
    case ClassModel::LatticeEisenstein: {
        std::string t = s;
        t.erase(std::remove(t.begin(), t.end(), '('), t.end());
        t.erase(std::remove(t.begin(), t.end(), ')'), t.end());
        const auto comma = t.find(',');
        if (comma == std::string::npos)
            throw InvalidClassIndex("lattice class needs 'n,m': " + raw);
        return latticeClass(man, std::stoi(t.substr(0, comma)), std::stoi(t.substr(comma + 1)));
    }
    }
    throw InvalidClassIndex("unknown class name: " + raw);
}

HomotopyClass classInverse(const HomotopyClass& c) {
    const ManifoldDescriptor& man = c.manifold;
    switch (man.model()) {
    case ClassModel::FiniteGroupClasses: {
        const FiniteModelData* data = man.finiteData();
        const int alg = data->catalogToAlg[static_cast<size_t>(c.id)];
        const int inv = algebra::inverseClass(data->group, data->algClasses, alg);
        return finiteClass(man, data->algToCatalog[static_cast<size_t>(inv)]);
    }
    case ClassModel::CyclicWithLengths: {
        const int n = static_cast<int>(man.cyclicLengths().size());
        return cyclicClass(man, (n - c.id) % n);
    }
    case ClassModel::LatticeZ:
        return latticeClass(man, -c.n);
    case ClassModel::LatticeZ2:
    case ClassModel::LatticeEisenstein:
        return latticeClass(man, -c.n, -c.m);
    }
    throw InvalidClassIndex("classInverse: unsupported model");
}

double latticeNorm(const HomotopyClass& c) {
    switch (c.manifold.model()) {
    case ClassModel::LatticeZ:
        return std::abs(double(c.n));
    case ClassModel::LatticeZ2:
        return std::sqrt(double(c.n) * c.n + double(c.m) * c.m);
    case ClassModel::LatticeEisenstein:
        return std::sqrt(double(c.n) * c.n - double(c.n) * c.m + double(c.m) * c.m);
    default:
        throw InvalidClassIndex("latticeNorm: not a lattice model");
    }
}

bool lambdaAsPiFraction(double lambda, int& p, int& q) {
    const double x = lambda / kPi;
    for (int den = 1; den <= 12; ++den) {
        const double scaled = x * den;
        const double rounded = std::round(scaled);
        if (std::abs(scaled - rounded) < 1e-12 * den) {
            int num = static_cast<int>(rounded);
            const int g = std::gcd(num < 0 ? -num : num, den);
            p = g ? num / g : num;
            q = g ? den / g : den;
            return true;
        }
    }
    return false;
}

} // namespace renorm::topo
