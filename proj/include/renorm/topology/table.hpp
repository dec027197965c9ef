#ifndef RENORM_TOPOLOGY_TABLE_HPP
#define RENORM_TOPOLOGY_TABLE_HPP

#include <string>
#include <vector>

#include "renorm/topology/resolution.hpp"

namespace renorm::topo {

struct TableRow {
    std::string name;
    std::string description;
    int conjugates = 1;
    double lambda = 0.0;
    std::string lambdaDisplay;                         // "2π/3", "√2π", ...
    std::vector<std::vector<std::string>> decompositions;  // alternatives of part names
    double singularEnergy = 0.0;
};

// One row per class of the manifold, in catalog order, except that Helium-3
// merges the mutually inverse classes +1/-1 into a single γ_±1 row as the
// published table does.  Lattice models take a norm bound for enumeration.
std::vector<TableRow> tableReport(const ManifoldDescriptor& m, double normBound = 3.0);

std::string renderTableText(const ManifoldDescriptor& m, const std::vector<TableRow>& rows);
// Columns: name, description, conjugates, lambda_over_pi, decompositions,
// esg_over_pi.
std::string renderTableCsv(const std::vector<TableRow>& rows);
std::string renderTableJson(const ManifoldDescriptor& m, const std::vector<TableRow>& rows);

} // namespace renorm::topo

#endif
