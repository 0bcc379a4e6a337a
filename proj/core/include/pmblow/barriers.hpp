#pragma once

#include <string>

#include "pmblow/errors.hpp"

namespace pmb {

enum class BarrierFamily { Super, Sub, Chain };

std::string to_string(BarrierFamily family);
BarrierFamily barrier_family_from_string(const std::string& name);

/// One closed-form barrier  C zeta(t) [1 - shape(r) eta(t)/a]_+^{1/(m-1)}.
///
/// Time profiles per family:
///   Super: zeta = (T+t)^{-alpha},  eta = (T+t)^{-beta}
///   Sub:   zeta = (T-t)^{-alpha},  eta = (T-t)^{+beta}   (valid for t < T)
///   Chain: zeta = (T+t)^{-alpha},  eta = (T+t)^{-beta}, no reaction term
/// The radial shape is r^b outside the unit ball; inside it is
/// (b r^2 + 2 - b)/2 for Super/Chain and r^2 for Sub.
struct BarrierParams {
    BarrierFamily family = BarrierFamily::Super;
    double C = 1.0;
    double a = 1.0;
    double T = 1.0;
    double alpha = 1.0;
    double beta = 0.0;
    double m = 2.0;
    double p = 2.0;
    double b = 2.0;

    double omega() const; // C^{m-1}/a

    static BarrierParams super(double m, double p, double b, double C, double a,
                               double T, double alpha);
    static BarrierParams sub(double m, double p, double b, double C, double a, double T);
    static BarrierParams chain(double m, double p, double b, double C1, double a1,
                               double T1, double beta_bar);
};

/// Outer/inner shape used by the Super and Chain families: r^b outside,
/// (b r^2 + 2 - b)/2 inside; C^1 across r = 1.
double shape_r(double r, double b);
/// Shape used by the Sub family: r^b outside, r^2 inside; continuous at r = 1.
double shape_s(double r, double b);

/// Family shape with one-sided selection at r = 1 resolved by the stored side
/// of the radius value itself (pass nextafter(1, 0) or nextafter(1, 2)).
double barrier_shape(const BarrierParams& params, double r);

double eval_barrier(const BarrierParams& params, double r, double t);

enum class FluxSide { Inner, Outer };

/// One-sided radial derivative of (barrier)^m at r = 1, in closed form.
double eval_flux(const BarrierParams& params, FluxSide side, double t);

/// zeta, eta and their derivatives for the family's time profile.
struct TimeProfile {
    double zeta = 0.0;
    double zeta_prime = 0.0;
    double eta = 0.0;
    double eta_prime = 0.0;
};

TimeProfile time_profile(const BarrierParams& params, double t);

/// K(m,p) = ((m-1)/(p+m-2))^{(m-1)/(p-1)} - ((m-1)/(p+m-2))^{(p+m-2)/(p-1)}.
double reaction_constant(double m, double p);

/// The scalar coefficient functions entering the endpoint systems.  The k1/k2
/// placements and constant factors are family-specific; gamma vanishes for
/// the Chain family.
struct CoefficientSet {
    BarrierParams params;
    int N = 3;
    double k1 = 1.0;
    double k2 = 1.0;
    double K = 0.0;

    double sigma(double t) const;
    double delta(double t) const;
    double gamma(double t) const;
    double sigma0(double t) const;
    double delta0(double t) const;
};

CoefficientSet coefficients(const BarrierParams& params, int N, double k1, double k2);

/// Exact derivatives of the barrier at one node, for residual assembly.
struct BarrierDerivs {
    double F = 0.0;       // 1 - shape(r) eta/a
    double value = 0.0;   // barrier u
    double u_t = 0.0;
    double um_r = 0.0;    // (u^m)_r
    double um_rr = 0.0;   // (u^m)_rr
    bool inside_support = false;
};

BarrierDerivs barrier_derivatives(const BarrierParams& params, double r, double t);

} // namespace pmb
