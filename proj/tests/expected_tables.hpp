// Frozen reference data for the six published class tables, used by the
// table regression tests and the acceptance suite.  lambda and esg are given
// as exact multiples of pi except the Helium-3 sqrt(2) entries.
#ifndef RENORM_TESTS_EXPECTED_TABLES_HPP
#define RENORM_TESTS_EXPECTED_TABLES_HPP

#include <cmath>
#include <string>
#include <vector>

namespace expected {

struct Row {
    std::string name;
    std::string description;
    int conjugates;
    double lambdaOverPi;
    std::vector<std::vector<std::string>> decompositions;
    double esgOverPi;
};

struct Table {
    std::string manifold;
    std::vector<Row> rows;
};

inline const double kSqrt2 = std::sqrt(2.0);

inline std::vector<Table> paperTables() {
    std::vector<Table> tables;

    tables.push_back({"rp2", {
        {"γ_c", "constant", 1, 0.0, {}, 0.0},
        {"γ_a", "geodesic between antipodal points", 1, 1.0, {{"γ_a"}}, 0.25},
    }});

    tables.push_back({"helium3", {
        {"γ_0", "constant", 1, 0.0, {}, 0.0},
        {"γ_±1", "180° rotation", 1, kSqrt2, {{"γ_±1"}}, 0.5},
        {"γ_2", "360° rotation", 1, 2.0,
         {{"γ_2"}, {"γ_+1", "γ_+1"}, {"γ_-1", "γ_-1"}}, 1.0},
    }});

    tables.push_back({"orthorhombic", {
        {"γ_c", "constant", 1, 0.0, {}, 0.0},
        {"γ_x", "180° rotation around the x-axis", 2, 1.0, {{"γ_x"}}, 0.25},
        {"γ_y", "180° rotation around the y-axis", 2, 1.0, {{"γ_y"}}, 0.25},
        {"γ_z", "180° rotation around the z-axis", 2, 1.0, {{"γ_z"}}, 0.25},
        {"γ_w", "360° rotation", 1, 2.0,
         {{"γ_x", "γ_x"}, {"γ_y", "γ_y"}, {"γ_z", "γ_z"}}, 0.5},
    }});

    tables.push_back({"tetrahedral", {
        {"γ_c", "constant", 1, 0.0, {}, 0.0},
        {"γ_+", "120° rotation of a face", 4, 2.0 / 3.0, {{"γ_+"}}, 1.0 / 9.0},
        {"γ_-", "-120° rotation of a face", 4, 2.0 / 3.0, {{"γ_-"}}, 1.0 / 9.0},
        {"γ_+^2", "240° rotation of a face", 4, 4.0 / 3.0, {{"γ_+", "γ_+"}}, 2.0 / 9.0},
        {"γ_-^2", "-240° rotation of a face", 4, 4.0 / 3.0, {{"γ_-", "γ_-"}}, 2.0 / 9.0},
        {"γ_e", "180° rotation of an edge", 6, 1.0, {{"γ_+", "γ_-"}}, 2.0 / 9.0},
        {"γ_w", "360° rotation", 1, 2.0,
         {{"γ_+", "γ_+", "γ_+"}, {"γ_-", "γ_-", "γ_-"}}, 1.0 / 3.0},
    }});

    tables.push_back({"octahedral", {
        {"γ_c", "constant", 1, 0.0, {}, 0.0},
        {"γ_v", "90° rotation of a vertex", 6, 0.5, {{"γ_v"}}, 1.0 / 16.0},
        {"γ_f", "120° rotation of a face", 8, 2.0 / 3.0, {{"γ_f"}}, 1.0 / 9.0},
        {"γ_v^2", "180° rotation of a vertex", 6, 1.0, {{"γ_v", "γ_v"}}, 1.0 / 8.0},
        {"γ_e", "180° rotation of an edge", 12, 1.0, {{"γ_v", "γ_f"}}, 25.0 / 144.0},
        {"γ_v^3", "270° rotation of a vertex", 6, 1.5, {{"γ_v", "γ_v", "γ_v"}}, 3.0 / 16.0},
        {"γ_f^2", "240° rotation of a face", 8, 4.0 / 3.0, {{"γ_f", "γ_f"}}, 2.0 / 9.0},
        {"γ_w", "360° rotation", 1, 2.0, {{"γ_v", "γ_v", "γ_v", "γ_v"}}, 0.25},
    }});

    tables.push_back({"icosahedral", {
        {"γ_c", "constant", 1, 0.0, {}, 0.0},
        {"γ_v", "72° rotation of a vertex", 12, 0.4, {{"γ_v"}}, 1.0 / 25.0},
        {"γ_f", "120° rotation of a face", 20, 2.0 / 3.0, {{"γ_v", "γ_v"}}, 2.0 / 25.0},
        {"γ_v^2", "144° rotation of a vertex", 12, 0.8, {{"γ_v", "γ_v"}}, 2.0 / 25.0},
        {"γ_e", "180° rotation of an edge", 30, 1.0, {{"γ_v", "γ_v", "γ_v"}}, 3.0 / 25.0},
        {"γ_v^3", "216° rotation of a vertex", 12, 1.2, {{"γ_v", "γ_v", "γ_v"}}, 3.0 / 25.0},
        {"γ_f^2", "240° rotation of a face", 20, 4.0 / 3.0,
         {{"γ_v", "γ_v", "γ_v", "γ_v"}}, 4.0 / 25.0},
        {"γ_v^4", "288° rotation of a vertex", 12, 1.6,
         {{"γ_v", "γ_v", "γ_v", "γ_v"}}, 4.0 / 25.0},
        {"γ_w", "360° rotation", 1, 2.0, {{"γ_v", "γ_v", "γ_v", "γ_v", "γ_v"}}, 0.2},
    }});

    return tables;
}

} // namespace expected

#endif
