#include "pmblow/barriers.hpp"

#include <cmath>

namespace pmb {

std::string to_string(BarrierFamily family) {
    switch (family) {
        case BarrierFamily::Super: return "super";
        case BarrierFamily::Sub: return "sub";
        case BarrierFamily::Chain: return "chain";
    }
    return "super";
}

BarrierFamily barrier_family_from_string(const std::string& name) {
    if (name == "super") return BarrierFamily::Super;
    if (name == "sub") return BarrierFamily::Sub;
    if (name == "chain") return BarrierFamily::Chain;
    throw OutOfRange("unknown barrier family: " + name);
}

double BarrierParams::omega() const {
    return std::pow(C, m - 1.0) / a;
}

BarrierParams BarrierParams::super(double m, double p, double b, double C, double a,
                                   double T, double alpha) {
    BarrierParams params;
    params.family = BarrierFamily::Super;
    params.m = m;
    params.p = p;
    params.b = b;
    params.C = C;
    params.a = a;
    params.T = T;
    params.alpha = alpha;
    params.beta = 1.0 - alpha * (m - 1.0);
    return params;
}

BarrierParams BarrierParams::sub(double m, double p, double b, double C, double a, double T) {
    BarrierParams params;
    params.family = BarrierFamily::Sub;
    params.m = m;
    params.p = p;
    params.b = b;
    params.C = C;
    params.a = a;
    params.T = T;
    params.alpha = 1.0 / (p - 1.0);
    params.beta = (m - p) / (p - 1.0);
    return params;
}

BarrierParams BarrierParams::chain(double m, double p, double b, double C1, double a1,
                                   double T1, double beta_bar) {
    BarrierParams params;
    params.family = BarrierFamily::Chain;
    params.m = m;
    params.p = p;
    params.b = b;
    params.C = C1;
    params.a = a1;
    params.T = T1;
    params.beta = beta_bar;
    params.alpha = (1.0 - beta_bar) / (m - 1.0);
    return params;
}

double shape_r(double r, double b) {
    return r >= 1.0 ? std::pow(r, b) : 0.5 * (b * r * r + 2.0 - b);
}

double shape_s(double r, double b) {
    return r > 1.0 ? std::pow(r, b) : r * r;
}

namespace {

struct ShapeDerivs {
    double S, S1, S2; // value, d/dr, d2/dr2
};

ShapeDerivs shape_derivs(const BarrierParams& params, double r) {
    const double b = params.b;
    if (r >= 1.0) {
        return {std::pow(r, b), b * std::pow(r, b - 1.0), b * (b - 1.0) * std::pow(r, b - 2.0)};
    }
    if (params.family == BarrierFamily::Sub) {
        return {r * r, 2.0 * r, 2.0};
    }
    return {0.5 * (b * r * r + 2.0 - b), b * r, b};
}

void require_time_domain(const BarrierParams& params, double t) {
    if (params.family == BarrierFamily::Sub && t >= params.T) {
        throw DomainError("Sub barrier undefined at t >= T");
    }
    if (t < 0.0) throw DomainError("barrier evaluated at negative time");
}

} // namespace

double barrier_shape(const BarrierParams& params, double r) {
    return shape_derivs(params, r).S;
}

TimeProfile time_profile(const BarrierParams& params, double t) {
    require_time_domain(params, t);
    TimeProfile out;
    if (params.family == BarrierFamily::Sub) {
        const double tau = params.T - t;
        out.zeta = std::pow(tau, -params.alpha);
        out.zeta_prime = params.alpha * std::pow(tau, -params.alpha - 1.0);
        out.eta = std::pow(tau, params.beta);
        out.eta_prime = -params.beta * std::pow(tau, params.beta - 1.0);
    } else {
        const double tau = params.T + t;
        out.zeta = std::pow(tau, -params.alpha);
        out.zeta_prime = -params.alpha * std::pow(tau, -params.alpha - 1.0);
        out.eta = std::pow(tau, -params.beta);
        out.eta_prime = -params.beta * std::pow(tau, -params.beta - 1.0);
    }
    return out;
}

double eval_barrier(const BarrierParams& params, double r, double t) {
    const TimeProfile tp = time_profile(params, t);
    const double F = 1.0 - shape_derivs(params, r).S * tp.eta / params.a;
    if (F <= 0.0) return 0.0;
    return params.C * tp.zeta * std::pow(F, 1.0 / (params.m - 1.0));
}

double eval_flux(const BarrierParams& params, FluxSide side, double t) {
    const TimeProfile tp = time_profile(params, t);
    const double m = params.m;
    const double F = 1.0 - tp.eta / params.a; // shape(1) = 1 on both sides
    if (F <= 0.0) return 0.0;
    double slope = params.b;
    if (side == FluxSide::Inner && params.family == BarrierFamily::Sub) slope = 2.0;
    return -std::pow(params.C, m) * std::pow(tp.zeta, m) * (m / (m - 1.0)) *
           std::pow(F, 1.0 / (m - 1.0)) * slope * tp.eta / params.a;
}

double reaction_constant(double m, double p) {
    const double base = (m - 1.0) / (p + m - 2.0);
    return std::pow(base, (m - 1.0) / (p - 1.0)) - std::pow(base, (p + m - 2.0) / (p - 1.0));
}

CoefficientSet coefficients(const BarrierParams& params, int N, double k1, double k2) {
    return CoefficientSet{params, N, k1, k2, reaction_constant(params.m, params.p)};
}

namespace {

struct CoeffCommon {
    double zeta_prime;
    double zeta_ratio;  // zeta/(m-1) * eta'/eta
    double omega_zm_eta; // C^{m-1} zeta^m eta
    double eta;
};

CoeffCommon coeff_common(const BarrierParams& params, double t) {
    const TimeProfile tp = time_profile(params, t);
    const double cm1 = std::pow(params.C, params.m - 1.0);
    return {tp.zeta_prime,
            tp.zeta / (params.m - 1.0) * (tp.eta_prime / tp.eta),
            cm1 * std::pow(tp.zeta, params.m) * tp.eta,
            tp.eta};
}

} // namespace

double CoefficientSet::sigma(double t) const {
    const auto c = coeff_common(params, t);
    const double m = params.m;
    const double b = params.b;
    // Super places k1 on the tail drift term; Sub and Chain place k2 there.
    const double k_tail = params.family == BarrierFamily::Super ? k1 : k2;
    return c.zeta_prime + c.zeta_ratio +
           c.omega_zm_eta / params.a * (m / (m - 1.0)) * b * k_tail *
               (N - 2.0 + b * m / (m - 1.0));
}

double CoefficientSet::delta(double t) const {
    const auto c = coeff_common(params, t);
    const double m = params.m;
    const double b = params.b;
    const double k_tail = params.family == BarrierFamily::Super ? k2 : k1;
    return c.zeta_ratio + c.omega_zm_eta / params.a * (m / ((m - 1.0) * (m - 1.0))) * b * b * k_tail;
}

double CoefficientSet::gamma(double t) const {
    if (params.family == BarrierFamily::Chain) return 0.0;
    const TimeProfile tp = time_profile(params, t);
    return std::pow(params.C, params.p - 1.0) * std::pow(tp.zeta, params.p);
}

double CoefficientSet::sigma0(double t) const {
    const auto c = coeff_common(params, t);
    const double m = params.m;
    const double b = params.b;
    double drift = 0.0;
    switch (params.family) {
        case BarrierFamily::Super:
            drift = c.omega_zm_eta / params.a * (m / (m - 1.0)) * N * b * k1;
            break;
        case BarrierFamily::Sub:
            drift = 2.0 * c.omega_zm_eta / params.a * (m / (m - 1.0)) * (N + 2.0 / (m - 1.0)) * k2;
            break;
        case BarrierFamily::Chain:
            drift = b * k2 * c.omega_zm_eta / params.a * (m / (m - 1.0)) * (N + 2.0 / (m - 1.0));
            break;
    }
    return c.zeta_prime + c.zeta_ratio + drift;
}

double CoefficientSet::delta0(double t) const {
    const auto c = coeff_common(params, t);
    const double m = params.m;
    const double b = params.b;
    const double msq = (m - 1.0) * (m - 1.0);
    switch (params.family) {
        case BarrierFamily::Super:
            return c.zeta_ratio +
                   c.omega_zm_eta * c.eta / (params.a * params.a) * (m / msq) * b * b * k2;
        case BarrierFamily::Sub:
            return c.zeta_ratio + 4.0 * c.omega_zm_eta / params.a * (m / msq) * k1;
        case BarrierFamily::Chain:
            // Extra (2-b) correction from the inner profile of the heat-part
            // subsolution; vanishes at b = 2.
            return c.zeta_ratio + 2.0 * k1 * b * c.omega_zm_eta / params.a * (m / msq) -
                   (2.0 - b) * k2 * b * c.omega_zm_eta * c.eta / (params.a * params.a) * (m / msq);
    }
    return 0.0;
}

BarrierDerivs barrier_derivatives(const BarrierParams& params, double r, double t) {
    const TimeProfile tp = time_profile(params, t);
    const ShapeDerivs sd = shape_derivs(params, r);
    const double m = params.m;
    const double a = params.a;

    BarrierDerivs out;
    out.F = 1.0 - sd.S * tp.eta / a;
    if (out.F <= 0.0) return out;
    out.inside_support = true;

    const double e = 1.0 / (m - 1.0);
    const double Fe = std::pow(out.F, e);
    const double Fe1 = std::pow(out.F, e - 1.0);
    out.value = params.C * tp.zeta * Fe;
    out.u_t = params.C * tp.zeta_prime * Fe -
              params.C * tp.zeta * e * Fe1 * sd.S * tp.eta_prime / a;

    const double cm = std::pow(params.C, m);
    const double zm = std::pow(tp.zeta, m);
    const double mm1 = m / (m - 1.0);
    out.um_r = -cm * zm * mm1 * Fe * sd.S1 * tp.eta / a;
    out.um_rr = cm * zm * mm1 *
                (e * Fe1 * (sd.S1 * tp.eta / a) * (sd.S1 * tp.eta / a) - Fe * sd.S2 * tp.eta / a);
    return out;
}

} // namespace pmb
