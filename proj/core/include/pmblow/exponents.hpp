#pragma once

#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "pmblow/density.hpp"

namespace pmb {

using Rational = boost::multiprecision::cpp_rational;

/// One Cauchy problem: rho(x) u_t = Lap(u^m) + rho(x) u^p on R^N.
struct ProblemSpec {
    double m = 2.0; // > 1
    double p = 2.0; // > 1
    int N = 3;      // >= 3
    DensityModel density;

    void validate() const; // throws OutOfRange on violated preconditions
};

enum class Regime {
    GlobalSmallData,
    BlowUpAllData_SubM,
    BlowUpAllData_Intermediate,
    Gap,
    Eq2Violated,
};

std::string to_string(Regime regime);

struct RegimeClassification {
    double b = 2.0;
    std::optional<double> p_bar;
    std::optional<double> p_under;
    Regime regime = Regime::Gap;
    std::optional<double> eps_required; // admissible q ceiling, intermediate regime only
    bool large_data_blowup = true;      // holds for every p > 1
    double eq2_margin = 0.0;
};

/// b = 2 - q for q in [0, 2).
double b_of_q(double q);

struct Eq2Check {
    bool ok = false;
    double margin = 0.0; // rhs - lhs
};

/// k2/k1 < m + (m-1)(N-2)/b, with the signed margin.
Eq2Check check_eq2(double m, int N, double b, double k1, double k2);

/// Threshold above which small compactly supported data yield global solutions.
double p_bar(double m, int N, double b, double k1, double k2);
/// Threshold below which every nontrivial datum blows up (small q).
double p_under(double m, int N, double b, double k1, double k2);

/// Exact-rational evaluations of the same formulas, for boundary-sharp checks.
Rational p_bar_exact(const Rational& m, int N, const Rational& b,
                     const Rational& k1, const Rational& k2);
Rational p_under_exact(const Rational& m, int N, const Rational& b,
                       const Rational& k1, const Rational& k2);

RegimeClassification classify_regime(const ProblemSpec& spec);

/// Comparison slack for floating-point regime boundaries.
inline constexpr double regime_slack = 1e-12;

} // namespace pmb
