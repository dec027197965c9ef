#include "renorm/topology/table.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

namespace renorm::topo {

namespace {

const double kPi = std::acos(-1.0);

std::string formatNumber(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return std::string(buf);
}

std::string piMultipleDisplay(double value, int maxDen) {
    const double x = value / kPi;
    for (int den = 1; den <= maxDen; ++den) {
        const double scaled = x * den;
        const double rounded = std::round(scaled);
        if (std::abs(scaled - rounded) < 1e-12 * den) {
            const int p = static_cast<int>(rounded);
            if (p == 0) return "0";
            const int g = std::gcd(p < 0 ? -p : p, den);
            std::ostringstream os;
            if (p / g != 1) os << p / g;
            os << "π";
            if (den / g != 1) os << '/' << den / g;
            return os.str();
        }
    }
    if (std::abs(x - std::sqrt(2.0)) < 1e-12) return "√2π";
    return formatNumber(x) + "π";
}

std::string lambdaDisplay(double lambda) { return piMultipleDisplay(lambda, 12); }

int conjugateCount(const ManifoldDescriptor& man, const HomotopyClass& c) {
    if (const FiniteModelData* data = man.finiteData()) {
        const int alg = data->catalogToAlg[static_cast<size_t>(c.id)];
        return data->algClasses[static_cast<size_t>(alg)].size();
    }
    return 1;
}

std::string descriptionOf(const ManifoldDescriptor& man, const HomotopyClass& c) {
    if (const FiniteModelData* data = man.finiteData())
        return data->descriptions[static_cast<size_t>(c.id)];
    switch (man.kind()) {
    case ManifoldKind::ProjectiveSpace:
        return c.trivial() ? "constant" : "geodesic between antipodal points";
    case ManifoldKind::Helium3:
        if (c.trivial()) return "constant";
        return c.id == 2 ? "360° rotation" : "180° rotation";
    case ManifoldKind::Circle:
        return c.trivial() ? "constant" : ("degree " + c.name + " map");
    default:
        return c.trivial() ? "constant" : ("lattice class " + c.name);
    }
}

TableRow rowFor(const ManifoldDescriptor& man, const HomotopyClass& c,
                const std::string& displayName, double normBound) {
    TableRow row;
    row.name = displayName;
    row.description = descriptionOf(man, c);
    row.conjugates = conjugateCount(man, c);
    row.lambda = c.lambda;
    row.lambdaDisplay = lambdaDisplay(c.lambda);
    if (!c.trivial()) {
        const auto r = man.model() == ClassModel::FiniteGroupClasses ||
                           man.model() == ClassModel::CyclicWithLengths
                       ? singularEnergy(c)
                       : singularEnergy(c, std::max(normBound, 4.0 * latticeNorm(c)));
        row.singularEnergy = r.energy;
        for (const auto& d : r.minimalDecompositions) {
            std::vector<std::string> names;
            for (const auto& part : d.parts) names.push_back(part.name);
            row.decompositions.push_back(std::move(names));
        }
    }
    return row;
}

} // namespace

std::vector<TableRow> tableReport(const ManifoldDescriptor& man, double normBound) {
    std::vector<TableRow> rows;
    if (man.kind() == ManifoldKind::Helium3) {
        // Published layout: γ_0, γ_±1 (one row for the two inverse classes), γ_2.
        rows.push_back(rowFor(man, cyclicClass(man, 0), "γ_0", normBound));
        TableRow pm = rowFor(man, cyclicClass(man, 1), "γ_±1", normBound);
        for (auto& alt : pm.decompositions)
            for (auto& part : alt)
                if (part == "γ_+1") part = "γ_±1";
        rows.push_back(std::move(pm));
        rows.push_back(rowFor(man, cyclicClass(man, 2), "γ_2", normBound));
        return rows;
    }
    for (const HomotopyClass& c : classCatalog(man, normBound))
        rows.push_back(rowFor(man, c, c.name, normBound));
    return rows;
}

std::string renderTableText(const ManifoldDescriptor& man, const std::vector<TableRow>& rows) {
    std::vector<std::array<std::string, 6>> cells;
    cells.push_back({"class", "description", "conjugates", "λ", "decompositions", "E^sg"});
    for (const TableRow& row : rows) {
        std::string decomp;
        for (size_t a = 0; a < row.decompositions.size(); ++a) {
            if (a) decomp += " / ";
            for (size_t p = 0; p < row.decompositions[a].size(); ++p) {
                if (p) decomp += ' ';
                decomp += row.decompositions[a][p];
            }
        }
        cells.push_back({row.name, row.description, std::to_string(row.conjugates),
                         row.lambdaDisplay, decomp, piMultipleDisplay(row.singularEnergy, 150)});
    }

    std::array<size_t, 6> width{};
    auto displayWidth = [](const std::string& s) {
        size_t w = 0;
        for (unsigned char ch : s)
            if ((ch & 0xC0) != 0x80) ++w;   // count UTF-8 code points
        return w;
    };
    for (const auto& row : cells)
        for (size_t col = 0; col < 6; ++col)
            width[col] = std::max(width[col], displayWidth(row[col]));

    std::ostringstream os;
    os << man.name() << " classes\n";
    for (size_t r = 0; r < cells.size(); ++r) {
        for (size_t col = 0; col < 6; ++col) {
            os << cells[r][col];
            if (col + 1 < 6)
                os << std::string(width[col] - displayWidth(cells[r][col]) + 2, ' ');
        }
        os << '\n';
        if (r == 0) {
            size_t total = 10;
            for (size_t col = 0; col < 6; ++col) total += width[col];
            os << std::string(total, '-') << '\n';
        }
    }
    return os.str();
}

std::string renderTableJson(const ManifoldDescriptor& man, const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << "{\n  \"manifold\": \"" << man.name() << "\",\n  \"classes\": [\n";
    for (size_t r = 0; r < rows.size(); ++r) {
        const TableRow& row = rows[r];
        os << "    {\"name\": \"" << row.name << "\", \"description\": \"" << row.description
           << "\", \"conjugates\": " << row.conjugates
           << ", \"lambda_over_pi\": " << formatNumber(row.lambda / kPi)
           << ", \"esg_over_pi\": " << formatNumber(row.singularEnergy / kPi)
           << ", \"decompositions\": [";
        for (size_t a = 0; a < row.decompositions.size(); ++a) {
            if (a) os << ", ";
            os << '[';
            for (size_t p = 0; p < row.decompositions[a].size(); ++p) {
                if (p) os << ", ";
                os << '"' << row.decompositions[a][p] << '"';
            }
            os << ']';
        }
        os << "]}" << (r + 1 < rows.size() ? "," : "") << '\n';
    }
    os << "  ]\n}\n";
    return os.str();
}

std::string renderTableCsv(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << "name,description,conjugates,lambda_over_pi,decompositions,esg_over_pi\n";
    for (const TableRow& row : rows) {
        std::string decomp;
        for (size_t a = 0; a < row.decompositions.size(); ++a) {
            if (a) decomp += " / ";
            for (size_t p = 0; p < row.decompositions[a].size(); ++p) {
                if (p) decomp += ' ';
                decomp += row.decompositions[a][p];
            }
        }
        os << row.name << ',' << row.description << ',' << row.conjugates << ','
           << formatNumber(row.lambda / kPi) << ',' << decomp << ','
           << formatNumber(row.singularEnergy / kPi) << '\n';
    }
    return os.str();
}

} // namespace renorm::topo
