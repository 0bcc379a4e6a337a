#pragma once

#include <optional>

#include "pmblow/barriers.hpp"
#include "pmblow/exponents.hpp"
#include "pmblow/report.hpp"

namespace pmb {

struct Beta0Set {
    double beta0 = 0.0;       // admissible time-power ceiling, outer region
    double alpha0 = 0.0;      // (1 - beta0)/(m-1)
    double beta0_tilde = 0.0; // inner-region ceiling at margin eps0
    double alpha0_tilde = 0.0;
    bool betabound = false;   // 0 < beta0 < 1
    bool betabound2 = false;  // beta0 < beta0_tilde
};

Beta0Set beta0_alpha0(double m, int N, double b, double k1, double k2, double eps0);

/// Checks the precise global-existence parameter hypotheses for a Super
/// barrier: the alpha window, eq3/eq4 and the T-dependent eq54/eq54b/eq55b.
ConditionReport check_global_conditions(const BarrierParams& params,
                                        const ProblemSpec& spec, double r0);

/// Constructs Super parameters in the proof's order: alpha midpoint of its
/// admissible window, omega between the eq3 cap and the eq4 positivity floor,
/// C small enough, T large enough.  Throws Infeasible when p <= p_bar or eq2
/// fails.
BarrierParams find_global_params(const ProblemSpec& spec, double r0);

/// Checks the blow-up parameter system for a Sub barrier; which system
/// applies (p > m, p < m, p = m) is decided by the spec.
ConditionReport check_blowup_conditions(const BarrierParams& params,
                                        const ProblemSpec& spec);

/// Always-feasible construction of Sub parameters: smallest admissible C at
/// omega = 1 for p > m, doubled eq148/eq9 bounds for p < m, doubled eq9c
/// bounds for p = m.
BarrierParams find_blowup_params(const ProblemSpec& spec);

/// Parameters of the reaction-free chaining subsolution together with the
/// handoff times linking it to a Sub barrier.
struct ChainParams {
    double C1 = 0.0;
    double a1 = 0.0;
    double T1 = 0.0;
    double t1 = 0.0;
    double T = 0.0;
    double beta_bar = 0.0;
    double alpha_bar = 0.0;
    double eps0 = 0.0;
    double eps = 0.0;   // admissible ceiling for q implied by eps0, a1, T1
    double eps_u = 0.0; // positivity floor of the initial datum
    double r0 = 0.0;    // radius of the positivity ball
    BarrierParams sub;  // Sub barrier the chain hands off to

    double omega1() const;
    BarrierParams chain_barrier() const;
};

struct ChainOverrides {
    std::optional<double> beta_bar;
    std::optional<double> eps0;
};

/// Builds the chain construction: beta_bar below min(beta0, beta0_tilde),
/// omega1 from the open interval, (a1, T1) from the initial-datum system,
/// (t1, T) from the handoff equalities.  Throws Infeasible and names the
/// failing inequality when a window is empty.
ChainParams find_chain_params(const ProblemSpec& spec, double eps_u, double r0,
                              const BarrierParams& sub_params,
                              const ChainOverrides& overrides = {});

ConditionReport check_chain_conditions(const ChainParams& chain, const ProblemSpec& spec);

} // namespace pmb
