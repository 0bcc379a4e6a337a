#include "pmblow/exponents.hpp"

#include <cmath>

namespace pmb {

void ProblemSpec::validate() const {
    if (!(m > 1.0)) throw OutOfRange("m must be > 1");
    if (!(p > 1.0)) throw OutOfRange("p must be > 1");
    if (N < 3) throw OutOfRange("N must be >= 3");
    if (!(density.q >= 0.0 && density.q < 2.0)) throw OutOfRange("q must lie in [0,2)");
}

std::string to_string(Regime regime) {
    switch (regime) {
        case Regime::GlobalSmallData: return "global_small_data";
        case Regime::BlowUpAllData_SubM: return "blowup_all_data_sub_m";
        case Regime::BlowUpAllData_Intermediate: return "blowup_all_data_intermediate";
        case Regime::Gap: return "gap";
        case Regime::Eq2Violated: return "eq2_violated";
    }
    return "gap";
}

double b_of_q(double q) {
    if (!(q >= 0.0 && q < 2.0)) throw OutOfRange("q must lie in [0,2)");
    return 2.0 - q;
}

Eq2Check check_eq2(double m, int N, double b, double k1, double k2) {
    const double lhs = k2 / k1;
    const double rhs = m + (m - 1.0) * (N - 2.0) / b;
    return Eq2Check{lhs < rhs, rhs - lhs};
}

namespace {

// Shared form of both thresholds: the ratio argument is k2/k1 for the upper
// exponent and k1/k2 for the lower one.
double threshold(double m, int N, double b, double ratio) {
    const double y = b / (m - 1.0) * (m - ratio);
    const double den = (N - 2.0) + y;
    return (m * (N - 2.0 + b) + y) / den;
}

Rational threshold_exact(const Rational& m, int N, const Rational& b, const Rational& ratio) {
    const Rational y = b / (m - 1) * (m - ratio);
    const Rational den = Rational(N - 2) + y;
    return (m * (Rational(N - 2) + b) + y) / den;
}

} // namespace

double p_bar(double m, int N, double b, double k1, double k2) {
    if (!check_eq2(m, N, b, k1, k2).ok) {
        throw pmb::Eq2Violated("p_bar undefined: k2/k1 >= m + (m-1)(N-2)/b");
    }
    return threshold(m, N, b, k2 / k1);
}

double p_under(double m, int N, double b, double k1, double k2) {
    if (!check_eq2(m, N, b, k1, k2).ok) {
        throw pmb::Eq2Violated("p_under undefined: k2/k1 >= m + (m-1)(N-2)/b");
    }
    return threshold(m, N, b, k1 / k2);
}

Rational p_bar_exact(const Rational& m, int N, const Rational& b,
                     const Rational& k1, const Rational& k2) {
    return threshold_exact(m, N, b, k2 / k1);
}

Rational p_under_exact(const Rational& m, int N, const Rational& b,
                       const Rational& k1, const Rational& k2) {
    return threshold_exact(m, N, b, k1 / k2);
}

namespace {

// Radius where the admissible beta window for the chain construction closes:
// (p-m)/(p-1) = beta0(b*).  Any q below 2 - b* keeps the window open.
std::optional<double> intermediate_q_ceiling(double m, double p, int N, double k1, double k2) {
    const double w = (p - m) / (p - 1.0);
    const double ratio = k1 / k2;
    if (w <= 0.0) return 2.0;
    const double den = ratio - w * m;
    if (den <= 0.0) return std::nullopt;
    const double b_star = w * (m - 1.0) * (N - 2.0) / den;
    if (b_star >= 2.0) return std::nullopt;
    return 2.0 - b_star;
}

} // namespace

RegimeClassification classify_regime(const ProblemSpec& spec) {
    spec.validate();
    RegimeClassification out;
    out.b = b_of_q(spec.density.q);

    const auto eq2 = check_eq2(spec.m, spec.N, out.b, spec.density.k1, spec.density.k2);
    out.eq2_margin = eq2.margin;
    if (!eq2.ok) {
        out.regime = Regime::Eq2Violated;
        return out;
    }

    const double upper = p_bar(spec.m, spec.N, out.b, spec.density.k1, spec.density.k2);
    const double lower = p_under(spec.m, spec.N, out.b, spec.density.k1, spec.density.k2);
    out.p_bar = upper;
    out.p_under = lower;

    if (spec.p > upper + regime_slack) {
        out.regime = Regime::GlobalSmallData;
    } else if (spec.p < spec.m - regime_slack) {
        out.regime = Regime::BlowUpAllData_SubM;
    } else if (spec.p < lower - regime_slack) {
        out.regime = Regime::BlowUpAllData_Intermediate;
        out.eps_required = intermediate_q_ceiling(spec.m, spec.p, spec.N,
                                                  spec.density.k1, spec.density.k2);
    } else {
        out.regime = Regime::Gap;
    }
    return out;
}

} // namespace pmb
