#ifndef RENORM_CLI_CONFIG_HPP
#define RENORM_CLI_CONFIG_HPP

#include <string>
#include <vector>

#include "renorm/balls/balls.hpp"
#include "renorm/solver/energies.hpp"
#include "renorm/solver/synharmony.hpp"

namespace renorm::cli {

struct SweepSpec {
    bool enabled = false;
    std::array<double, 2> axis{1.0, 0.0};
    std::array<double, 2> range{0.0, 0.0};
    int steps = 0;
};

struct EnergyConfig {
    solver::ProblemSpec problem;
    std::vector<double> rhoSchedule;
    solver::EnergyMode mode = solver::EnergyMode::Geometric;
    solver::SolveConfig solve;
    SweepSpec sweep;
};

struct BallsConfig {
    balls::BallFamily family;
    double tMax = 2.0;
    int samplesPerInterval = 8;
};

struct SynharmonyConfig {
    solver::TargetModel target = solver::TargetModel::circle();
    solver::LoopSpec gamma;
    solver::LoopSpec beta;
    std::vector<double> tList{0.5, 1, 2, 4, 8};
    int nTheta = 128;
    solver::RelaxConfig relax;
};

// Strict parsers: unknown JSON keys are rejected with ConfigInvalid.
EnergyConfig parseEnergyConfig(const std::string& jsonText);
BallsConfig parseBallsConfig(const std::string& jsonText);
SynharmonyConfig parseSynharmonyConfig(const std::string& jsonText);

} // namespace renorm::cli

#endif
