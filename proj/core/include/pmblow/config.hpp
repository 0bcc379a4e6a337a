#pragma once

#include <string>
#include <vector>

#include "pmblow/errors.hpp"

namespace pmb {

enum class Scenario { Regimes, Params, Residual, Simulate, Dichotomy, Chain };

std::string to_string(Scenario scenario);
Scenario scenario_from_string(const std::string& name);

enum class InitialDataKind { BarrierSub, BarrierSuperFraction, Bump, Plateau };

std::string to_string(InitialDataKind kind);
InitialDataKind u0_kind_from_string(const std::string& name);

/// Flat key-value experiment description; serialization round-trips exactly.
struct ExperimentConfig {
    Scenario scenario = Scenario::Simulate;
    double m = 2.0;
    double p = 3.0;
    std::vector<double> p_values; // dichotomy sweeps
    int N = 3;
    std::string density_kind = "power_tail";
    double density_q = 0.0;
    double grid_R = 0.0; // 0 = derive from the barrier support
    int grid_n = 400;
    InitialDataKind u0_kind = InitialDataKind::BarrierSub;
    double u0_fraction = 0.5;
    double u0_height = 1.0;
    double u0_radius = 5.5;
    double horizon = 0.0; // 0 = scenario policy
    double M_blow = 0.0;  // 0 = solver default
    double r0 = 1.0;      // support reach parameter of the global system
    double chain_beta_bar = 0.0; // 0 = construction default
    double chain_eps0 = 0.0;     // 0 = construction default
    unsigned long seed = 42;

    std::string serialize() const;
    static ExperimentConfig parse(const std::string& text);
    static ExperimentConfig load(const std::string& path);
    void save(const std::string& path) const;
};

} // namespace pmb
