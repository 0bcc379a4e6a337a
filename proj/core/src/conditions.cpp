#include "pmblow/conditions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pmb {

namespace {
constexpr double kEqualitySlack = 1e-9; // p == m detection for the blow-up cases
}

Beta0Set beta0_alpha0(double m, int N, double b, double k1, double k2, double eps0) {
    Beta0Set out;
    const double ratio = k1 / k2;
    out.beta0 = b * ratio / ((m - 1.0) * (N - 2.0) + b * m);
    out.alpha0 = (1.0 - out.beta0) / (m - 1.0);
    out.beta0_tilde = (2.0 * ratio - eps0) / (N * (m - 1.0) + 2.0);
    out.alpha0_tilde = (1.0 - out.beta0_tilde) / (m - 1.0);
    out.betabound = out.beta0 > 0.0 && out.beta0 < 1.0;
    out.betabound2 = out.beta0 < out.beta0_tilde;
    return out;
}

ConditionReport check_global_conditions(const BarrierParams& params,
                                        const ProblemSpec& spec, double r0) {
    if (params.family != BarrierFamily::Super) {
        throw OutOfRange("check_global_conditions expects a Super barrier");
    }
    const double m = params.m;
    const double p = params.p;
    const double b = params.b;
    const double k1 = spec.density.k1;
    const double k2 = spec.density.k2;
    const double omega = params.omega();
    const double alpha = params.alpha;
    const double beta = params.beta;
    const double mm1 = m / (m - 1.0);
    const double A = k1 * (spec.N - 2.0 + b * m / (m - 1.0)) - k2 * b / (m - 1.0);
    const double Cp1 = std::pow(params.C, p - 1.0);

    ConditionReport report;
    report.system = ConditionSystem::GlobalRmk;
    report.entries.push_back(entry_gt("hpalpha_lower(alpha>1/(p-1))", alpha, 1.0 / (p - 1.0)));
    report.entries.push_back(entry_lt("hpalpha_upper(alpha<1/(m-1))", alpha, 1.0 / (m - 1.0)));
    report.entries.push_back(entry_ge("eq3(beta>=b^2*omega*k2*m/(m-1))",
                                      beta, b * b * omega * k2 * mm1));
    report.entries.push_back(entry_ge("eq4(drift-alpha>=C^(p-1))",
                                      -alpha + b * omega * mm1 * A, Cp1));
    report.entries.push_back(entry_ge("eq54(beta*T^beta>=b^2*omega*k2*m/((m-1)a))",
                                      beta * std::pow(params.T, beta),
                                      b * b * (omega / params.a) * k2 * mm1));
    report.entries.push_back(entry_gt("eq54b(T^beta>r0/a)",
                                      std::pow(params.T, beta), r0 / params.a));
    const double tail55 = k1 * spec.N -
                          b * std::pow(params.T, -beta) / ((m - 1.0) * params.a) * k2;
    report.entries.push_back(entry_ge("eq55b(inner drift-alpha>=C^(p-1))",
                                      -alpha + b * omega * mm1 * tail55, Cp1));
    return report;
}

BarrierParams find_global_params(const ProblemSpec& spec, double r0) {
    spec.validate();
    const double m = spec.m;
    const double p = spec.p;
    const double b = b_of_q(spec.density.q);
    const double k1 = spec.density.k1;
    const double k2 = spec.density.k2;
    const int N = spec.N;

    const auto eq2 = check_eq2(m, N, b, k1, k2);
    if (!eq2.ok) {
        std::ostringstream msg;
        msg << "eq2 fails: k2/k1 = " << k2 / k1 << " >= " << m + (m - 1.0) * (N - 2.0) / b;
        throw Infeasible(msg.str());
    }
    const double upper = p_bar(m, N, b, k1, k2);
    if (!(p > upper)) {
        std::ostringstream msg;
        msg << "global construction requires p > p_bar = " << upper << ", got p = " << p;
        throw Infeasible(msg.str());
    }

    const double A = k1 * (N - 2.0 + b * m / (m - 1.0)) - k2 * b / (m - 1.0); // > 0 by eq2
    const double alpha_lo = 1.0 / (p - 1.0);
    const double alpha_hi = std::min({A / (k1 * ((m - 1.0) * (N - 2.0) + b * m)),
                                      k1 * N / (b * k2 + (m - 1.0) * k1 * N),
                                      1.0 / (m - 1.0)});
    const double alpha = 0.5 * (alpha_lo + alpha_hi);
    const double beta = 1.0 - alpha * (m - 1.0);
    const double mm1 = m / (m - 1.0);

    const double omega_cap = beta * (m - 1.0) / (b * b * k2 * m);
    const double omega_lo = std::max(alpha * (m - 1.0) / (b * m * A),
                                     alpha * (m - 1.0) / (b * m * k1 * N));
    const double omega = 0.5 * (omega_lo + omega_cap);

    // Half the slack left in the inner drift once omega is fixed.
    const double eps = 0.5 * (k1 * N - alpha * (m - 1.0) / (b * omega * m));
    const double g4 = -alpha + b * omega * mm1 * A;
    const double g221 = -alpha + b * omega * mm1 * (k1 * N - eps);
    const double C = std::pow(0.5 * std::min(g4, g221), 1.0 / (p - 1.0));
    const double a = std::pow(C, m - 1.0) / omega;

    const double T54 = std::pow(b * b * omega * k2 * mm1 / (a * beta), 1.0 / beta);
    const double T54b = std::pow(r0 / a, 1.0 / beta);
    const double T222 = std::pow(b * k2 / ((m - 1.0) * a * eps), 1.0 / beta);
    const double T = 2.0 * std::max({T54, T54b, T222, 1.0});

    return BarrierParams::super(m, p, b, C, a, T, alpha);
}

namespace {

// Endpoint-system scalar constants shared by the blow-up cases: the
// time-independent parts of sigma and sigma0 for the Sub time profile.
struct SubSystemConstants {
    double s;  // (m-1)*sigma coefficient / (m-1): 1/(m-1) + omega k2 m b (...)/(m-1)
    double s0; // inner analogue
};

SubSystemConstants sub_system_constants(double m, int N, double b, double k2, double omega) {
    SubSystemConstants out;
    out.s = 1.0 / (m - 1.0) +
            omega * k2 * (m / (m - 1.0)) * b * (N - 2.0 + b * m / (m - 1.0));
    out.s0 = 1.0 / (m - 1.0) +
             2.0 * omega * k2 * (m / (m - 1.0)) * (N + 2.0 / (m - 1.0));
    return out;
}

} // namespace

ConditionReport check_blowup_conditions(const BarrierParams& params, const ProblemSpec& spec) {
    if (params.family != BarrierFamily::Sub) {
        throw OutOfRange("check_blowup_conditions expects a Sub barrier");
    }
    const double m = params.m;
    const double p = params.p;
    const double b = params.b;
    const double k1 = spec.density.k1;
    const double k2 = spec.density.k2;
    const int N = spec.N;
    const double omega = params.omega();
    const double a = params.a;
    const double C = params.C;
    const double K = reaction_constant(m, p);
    const double exponent = (p + m - 2.0) / (p - 1.0);
    const auto sc = sub_system_constants(m, N, b, k2, omega);
    const double Cp1 = std::pow(C, p - 1.0);
    const double Cm1 = std::pow(C, m - 1.0);

    ConditionReport report;
    if (p > m + kEqualitySlack) {
        report.system = ConditionSystem::BlowupA;
        report.entries.push_back(entry_le(
            "eq7(K*sigma^((p+m-2)/(p-1))<=delta*C^(m-1))",
            K * std::pow(sc.s, exponent),
            Cm1 / (m - 1.0) * (b * b * k1 * omega * m / (m - 1.0) + (p - m) / (p - 1.0))));
        report.entries.push_back(entry_le("eq8((m-1)sigma<=(p+m-2)gamma)",
                                          1.0 + omega * m * b * k2 * (N - 2.0 + b * m / (m - 1.0)),
                                          (p + m - 2.0) * Cp1));
        report.entries.push_back(entry_le(
            "eq8bis(K*sigma0^((p+m-2)/(p-1))<=delta0*C^(m-1))",
            K * std::pow(sc.s0, exponent),
            Cm1 / (m - 1.0) * (4.0 * k1 * omega * m / (m - 1.0) + (p - m) / (p - 1.0))));
        report.entries.push_back(entry_le("eq8tris(inner growth cap)",
                                          1.0 + k2 * omega * (N + 2.0 / (m - 1.0)),
                                          (p + m - 2.0) * Cp1));
    } else if (p < m - kEqualitySlack) {
        report.system = ConditionSystem::BlowupB;
        report.entries.push_back(entry_gt("eq148(omega floor)", omega,
                                          (m - p) * (m - 1.0) / (b * b * (p - 1.0) * m * k1)));
        const double d_outer = omega / (m - 1.0) *
                               (omega * (m / (m - 1.0)) * k1 * b * b - (m - p) / (p - 1.0));
        const double d_inner = omega / (m - 1.0) *
                               (4.0 * k1 * omega * (m / (m - 1.0)) - (m - p) / (p - 1.0));
        report.entries.push_back(entry_ge("eq9_outer(a floor)", a,
                                          K * std::pow(sc.s, exponent) / d_outer));
        report.entries.push_back(entry_ge("eq9_inner(a floor)", a,
                                          K * std::pow(sc.s0, exponent) / d_inner));
        const double growth = (p + m - 2.0) * std::pow(a * omega, (p - 1.0) / (m - 1.0));
        report.entries.push_back(entry_ge("eq10_outer(growth cap)", growth,
                                          1.0 + omega * m * b * k2 *
                                              (b * m / (m - 1.0) + N - 2.0)));
        report.entries.push_back(entry_ge("eq10_inner(growth cap)", growth,
                                          1.0 + omega * k2 * (N + 2.0 / (m - 1.0))));
    } else {
        report.system = ConditionSystem::BlowupC;
        const double msq = (m - 1.0) * (m - 1.0);
        report.entries.push_back(entry_ge("eq9c_outer_phi(a floor)", a,
                                          K * sc.s * sc.s / (b * b * k1 * omega * omega * m / msq)));
        report.entries.push_back(entry_ge("eq9c_inner_phi(a floor)", a,
                                          K * sc.s0 * sc.s0 / (4.0 * k1 * omega * omega * m / msq)));
        report.entries.push_back(entry_ge(
            "eq9c_outer_growth(a floor)", a,
            (1.0 + omega * m * b * k2 * (b * m / (m - 1.0) + N - 2.0)) / (2.0 * (m - 1.0) * omega)));
        report.entries.push_back(entry_ge(
            "eq9c_inner_growth(a floor)", a,
            (1.0 + omega * k2 * (N + 2.0 / (m - 1.0))) / (2.0 * (m - 1.0) * omega)));
    }
    return report;
}

namespace {

// Inner-region endpoint maxima need (m-1)sigma0 <= (p+m-2)gamma with the
// exact factor, which is stronger than the reported growth-cap entries; the
// finders enforce it so the phi endpoint checks hold as well.
double strong_inner_growth(double m, int N, double k2, double omega) {
    return 1.0 + 2.0 * m * omega * k2 * (N + 2.0 / (m - 1.0));
}

} // namespace

BarrierParams find_blowup_params(const ProblemSpec& spec) {
    spec.validate();
    const double m = spec.m;
    const double p = spec.p;
    const double b = b_of_q(spec.density.q);
    const double k1 = spec.density.k1;
    const double k2 = spec.density.k2;
    const int N = spec.N;

    if (p > m + kEqualitySlack) {
        const double omega = 1.0;
        auto admissible = [&](double C) {
            const auto params = BarrierParams::sub(m, p, b, C, std::pow(C, m - 1.0) / omega, 1.0);
            if (!check_blowup_conditions(params, spec).all_satisfied()) return false;
            return (m - 1.0) * sub_system_constants(m, N, b, k2, omega).s0 <=
                   (p + m - 2.0) * std::pow(C, p - 1.0);
        };
        double hi = 1.0;
        while (!admissible(hi)) hi *= 2.0;
        double lo = hi;
        while (admissible(lo) && lo > 1e-12) lo *= 0.5;
        for (int i = 0; i < 100; ++i) {
            const double mid = 0.5 * (lo + hi);
            (admissible(mid) ? hi : lo) = mid;
        }
        const double C = hi * (1.0 + 1e-6);
        return BarrierParams::sub(m, p, b, C, std::pow(C, m - 1.0) / omega, 1.0);
    }

    if (p < m - kEqualitySlack) {
        const double omega = 2.0 * (m - p) * (m - 1.0) / (b * b * (p - 1.0) * m * k1);
        const auto sc = sub_system_constants(m, N, b, k2, omega);
        const double K = reaction_constant(m, p);
        const double exponent = (p + m - 2.0) / (p - 1.0);
        const double d_outer = omega / (m - 1.0) *
                               (omega * (m / (m - 1.0)) * k1 * b * b - (m - p) / (p - 1.0));
        const double d_inner = omega / (m - 1.0) *
                               (4.0 * k1 * omega * (m / (m - 1.0)) - (m - p) / (p - 1.0));
        const double growth_target = std::max(
            1.0 + omega * m * b * k2 * (b * m / (m - 1.0) + N - 2.0),
            strong_inner_growth(m, N, k2, omega));
        const double a_growth =
            std::pow(growth_target / (p + m - 2.0), (m - 1.0) / (p - 1.0)) / omega;
        const double a = 2.0 * std::max({K * std::pow(sc.s, exponent) / d_outer,
                                         K * std::pow(sc.s0, exponent) / d_inner, a_growth});
        return BarrierParams::sub(m, p, b, std::pow(a * omega, 1.0 / (m - 1.0)), a, 1.0);
    }

    const double omega = 1.0;
    const auto sc = sub_system_constants(m, N, b, k2, omega);
    const double K = reaction_constant(m, m);
    const double msq = (m - 1.0) * (m - 1.0);
    const double a = 2.0 * std::max({K * sc.s * sc.s / (b * b * k1 * omega * omega * m / msq),
                                     K * sc.s0 * sc.s0 / (4.0 * k1 * omega * omega * m / msq),
                                     (1.0 + omega * m * b * k2 * (b * m / (m - 1.0) + N - 2.0)) /
                                         (2.0 * (m - 1.0) * omega),
                                     strong_inner_growth(m, N, k2, omega) /
                                         (2.0 * (m - 1.0) * omega)});
    return BarrierParams::sub(m, p, b, std::pow(a * omega, 1.0 / (m - 1.0)), a, 1.0);
}

double ChainParams::omega1() const {
    return std::pow(C1, sub.m - 1.0) / a1;
}

BarrierParams ChainParams::chain_barrier() const {
    return BarrierParams::chain(sub.m, sub.p, sub.b, C1, a1, T1, beta_bar);
}

namespace {

struct ChainWindows {
    double lo = 0.0, hi = 0.0;
    std::string binding; // names the empty pair when lo >= hi
};

ChainWindows omega1_window(double m, int N, double b, double k1, double k2,
                           double beta_bar, double eps0) {
    const double lo_outer_a = 1.0 / (b * m * k2 * (N - 2.0 + b * m / (m - 1.0)));
    const double lo_outer_b = beta_bar * (m - 1.0) / (b * b * m * k1);
    const double lo_inner_a = 1.0 / (b * m * k2 * (N + 2.0 / (m - 1.0)));
    const double lo_inner_b =
        beta_bar * (m - 1.0) / (b * m * k2 * (2.0 * k1 / k2 - eps0));
    const double hi_outer =
        (1.0 - beta_bar) /
        (b * m * (k2 * (N - 2.0 + b * m / (m - 1.0)) - k1 * b / (m - 1.0)));
    const double hi_inner =
        (1.0 - beta_bar) /
        (b * m * k2 * (N + 2.0 / (m - 1.0) * (1.0 - k1 / k2) + eps0 / (m - 1.0)));

    ChainWindows window;
    window.lo = std::max({lo_outer_a, lo_outer_b, lo_inner_a, lo_inner_b});
    window.hi = std::min(hi_outer, hi_inner);
    if (window.lo >= window.hi) {
        const bool outer_binds = std::max(lo_outer_a, lo_outer_b) >= hi_outer;
        window.binding = outer_binds ? "eq2000/eq2001 (outer omega1 window empty)"
                                     : "eq2000c/eq2001c (inner omega1 window empty)";
    }
    return window;
}

} // namespace

ChainParams find_chain_params(const ProblemSpec& spec, double eps_u, double r0,
                              const BarrierParams& sub_params, const ChainOverrides& overrides) {
    spec.validate();
    if (!(eps_u > 0.0) || !(r0 > 0.0)) {
        throw OutOfRange("chain construction needs a positive datum floor (u_0 not== 0)");
    }
    const double m = spec.m;
    const double p = spec.p;
    const double b = b_of_q(spec.density.q);
    const double q = spec.density.q;
    const double k1 = spec.density.k1;
    const double k2 = spec.density.k2;
    const int N = spec.N;
    if (p < m - kEqualitySlack) {
        throw Infeasible("chain construction targets m <= p; use the direct large-T argument below m");
    }

    const auto base = beta0_alpha0(m, N, b, k1, k2, 0.0);
    const double beta_lo = std::max(0.0, (p - m) / (p - 1.0)); // eq138 floor
    if (!(beta_lo < base.beta0)) {
        std::ostringstream msg;
        msg << "beta window empty: (p-m)/(p-1) = " << beta_lo << " >= beta0 = " << base.beta0
            << " (p too close to or above p_under)";
        throw Infeasible(msg.str());
    }
    const double beta_bar = overrides.beta_bar.value_or(0.5 * (beta_lo + base.beta0));
    if (!(beta_bar > beta_lo) || !(beta_bar < base.beta0)) {
        std::ostringstream msg;
        msg << "beta_bar = " << beta_bar << " outside the open window (" << beta_lo << ", "
            << base.beta0 << "); eq2000/eq2001 require beta_bar < beta0 strictly";
        throw Infeasible(msg.str());
    }
    const double alpha_bar = (1.0 - beta_bar) / (m - 1.0);

    // Half the budget keeping beta_bar < beta0_tilde(eps0).
    const double eps0_budget = 2.0 * k1 / k2 - beta_bar * (N * (m - 1.0) + 2.0);
    const double eps0 = overrides.eps0.value_or(0.5 * eps0_budget);
    if (!(eps0 > 0.0) || beta_bar >= beta0_alpha0(m, N, b, k1, k2, eps0).beta0_tilde) {
        throw Infeasible("eq2002b fails: beta_bar >= beta0_tilde at the chosen eps0");
    }

    const auto window = omega1_window(m, N, b, k1, k2, beta_bar, eps0);
    if (!window.binding.empty()) {
        throw Infeasible("omega1 window empty: " + window.binding);
    }
    const double omega1 = 0.5 * (window.lo + window.hi);

    // T1 where the initial-datum caps on a1 meet, so the support cap binds.
    const double T1 = omega1 * r0 * r0 / (2.0 * std::pow(eps_u, m - 1.0));
    const double a1_hi = 0.5 * r0 * r0 * std::pow(T1, -beta_bar);
    const double a1_lo = q > 0.0 ? q * std::pow(T1, -beta_bar) / eps0 : 0.0;
    if (a1_lo >= a1_hi) {
        std::ostringstream msg;
        msg << "eq20f/sistemadatiiniziali window empty: q = " << q
            << " exceeds eps0*r0^2/2 = " << eps0 * r0 * r0 / 2.0;
        throw Infeasible(msg.str());
    }
    const double a1 = 0.5 * (a1_lo + a1_hi);
    const double C1 = std::pow(a1 * omega1, 1.0 / (m - 1.0));

    ChainParams chain;
    chain.C1 = C1;
    chain.a1 = a1;
    chain.T1 = T1;
    chain.beta_bar = beta_bar;
    chain.alpha_bar = alpha_bar;
    chain.eps0 = eps0;
    chain.eps = eps0 * a1 * std::pow(T1, beta_bar);
    chain.eps_u = eps_u;
    chain.r0 = r0;
    chain.sub = sub_params;

    // Handoff: T from condsuT with slack, then t1 just below the eq136b
    // equality so z(., t1) dominates the Sub barrier strictly.
    const double handoff_exp = (p - m - beta_bar / alpha_bar) / (p - 1.0); // < 0 by eq138
    const double X = std::pow(C1 / sub_params.C, beta_bar / alpha_bar) * a1 / sub_params.a;
    double T = 2.0 * std::max(1.0, std::pow(X, 1.0 / handoff_exp));
    for (int i = 0; i < 400; ++i) {
        const double crossing = std::pow(C1 / sub_params.C, 1.0 / alpha_bar) *
                                std::pow(T, 1.0 / ((p - 1.0) * alpha_bar));
        const double t1 = 0.99 * crossing - T1;
        const bool support_ok =
            a1 * std::pow(T1 + t1, beta_bar) >=
            sub_params.a * std::pow(T, (p - m) / (p - 1.0));
        if (t1 > 0.0 && support_ok) {
            chain.t1 = t1;
            chain.T = T;
            return chain;
        }
        T *= 2.0;
    }
    throw Infeasible("could not satisfy eq136/eq136b within the T doubling budget");
}

ConditionReport check_chain_conditions(const ChainParams& chain, const ProblemSpec& spec) {
    const double m = spec.m;
    const double p = spec.p;
    const double b = b_of_q(spec.density.q);
    const double q = spec.density.q;
    const double k1 = spec.density.k1;
    const double k2 = spec.density.k2;
    const int N = spec.N;
    const double omega1 = chain.omega1();
    const auto bounds = beta0_alpha0(m, N, b, k1, k2, chain.eps0);

    ConditionReport report;
    report.system = ConditionSystem::ChainProp;
    report.entries.push_back(entry_lt("eq102b(beta_bar<beta0)", chain.beta_bar, bounds.beta0));
    report.entries.push_back(
        entry_lt("eq2002b(beta_bar<beta0_tilde)", chain.beta_bar, bounds.beta0_tilde));
    report.entries.push_back(
        entry_lt("eq138(p<m+beta/alpha)", p, m + chain.beta_bar / chain.alpha_bar));
    report.entries.push_back(entry_ge("eq114_outer_sigma(omega1 floor)", omega1,
                                      1.0 / (b * m * k2 * (N - 2.0 + b * m / (m - 1.0)))));
    report.entries.push_back(entry_ge("eq114_outer_delta(omega1 floor)", omega1,
                                      chain.beta_bar * (m - 1.0) / (b * b * m * k1)));
    report.entries.push_back(entry_le(
        "eq117_outer(omega1 cap)", omega1,
        (1.0 - chain.beta_bar) /
            (b * m * (k2 * (N - 2.0 + b * m / (m - 1.0)) - k1 * b / (m - 1.0)))));
    report.entries.push_back(entry_gt("eq115_inner_sigma(omega1 floor)", omega1,
                                      1.0 / (b * m * k2 * (N + 2.0 / (m - 1.0)))));
    report.entries.push_back(
        entry_gt("eq115_inner_delta(omega1 floor)", omega1,
                 chain.beta_bar * (m - 1.0) / (b * m * k2 * (2.0 * k1 / k2 - chain.eps0))));
    report.entries.push_back(entry_le(
        "eq116_inner(omega1 cap)", omega1,
        (1.0 - chain.beta_bar) /
            (b * m * k2 *
             (N + 2.0 / (m - 1.0) * (1.0 - k1 / k2) + chain.eps0 / (m - 1.0)))));
    report.entries.push_back(entry_le("eq20f(q margin within eps0)",
                                      (2.0 - b) * std::pow(chain.T1, -chain.beta_bar) / chain.a1,
                                      chain.eps0));
    report.entries.push_back(entry_le("sistemadatiiniziali(a1*T1^beta<=r0^2/2)",
                                      chain.a1 * std::pow(chain.T1, chain.beta_bar),
                                      0.5 * chain.r0 * chain.r0));
    report.entries.push_back(entry_le("eq204(C1<=eps_u*T1^alpha)",
                                      std::pow(chain.a1 * omega1, 1.0 / (m - 1.0)),
                                      chain.eps_u * std::pow(chain.T1, chain.alpha_bar)));
    report.entries.push_back(entry_gt("t1_positive", chain.t1, 0.0));
    report.entries.push_back(entry_ge(
        "eq136(support handoff)", chain.a1 * std::pow(chain.T1 + chain.t1, chain.beta_bar),
        chain.sub.a * std::pow(chain.T, (p - m) / (p - 1.0))));
    report.entries.push_back(entry_ge(
        "eq136b(value handoff)",
        chain.C1 * std::pow(chain.T1 + chain.t1, -chain.alpha_bar),
        chain.sub.C * std::pow(chain.T, -1.0 / (p - 1.0))));
    report.entries.push_back(entry_le(
        "condsuT(T large enough)",
        std::pow(chain.T, (p - m - chain.beta_bar / chain.alpha_bar) / (p - 1.0)),
        std::pow(chain.sub.C / chain.C1, -chain.beta_bar / chain.alpha_bar) * chain.a1 /
            chain.sub.a));
    // eq132 wants 0 < q < eps; q = 0 degenerates harmlessly (the 2-b terms vanish).
    report.entries.push_back(entry_le("eq132(q<eps)", q, chain.eps));
    return report;
}

} // namespace pmb
