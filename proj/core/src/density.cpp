#include "pmblow/density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace pmb {

std::string to_string(DensityKind kind) {
    switch (kind) {
        case DensityKind::PowerTail: return "power_tail";
        case DensityKind::ShiftedPower: return "shifted_power";
        case DensityKind::Constant: return "constant";
        case DensityKind::Custom: return "custom";
    }
    return "constant";
}

DensityKind density_kind_from_string(const std::string& name) {
    if (name == "power_tail") return DensityKind::PowerTail;
    if (name == "shifted_power") return DensityKind::ShiftedPower;
    if (name == "constant") return DensityKind::Constant;
    if (name == "custom") return DensityKind::Custom;
    throw OutOfRange("unknown density kind: " + name);
}

static void check_q(double q) {
    if (!(q >= 0.0 && q < 2.0)) {
        throw OutOfRange("density exponent q must lie in [0,2)");
    }
}

DensityModel DensityModel::power_tail(double q) {
    check_q(q);
    DensityModel model;
    model.kind = DensityKind::PowerTail;
    model.q = q;
    model.k1 = model.k2 = model.rho1 = model.rho2 = 1.0;
    return model;
}

DensityModel DensityModel::shifted_power(double q) {
    check_q(q);
    DensityModel model;
    model.kind = DensityKind::ShiftedPower;
    model.q = q;
    model.k1 = 1.0;
    model.k2 = std::pow(2.0, q);
    model.rho1 = 1.0;
    model.rho2 = model.k2;
    return model;
}

DensityModel DensityModel::constant() {
    DensityModel model;
    model.kind = DensityKind::Constant;
    return model;
}

DensityModel DensityModel::custom_model(std::function<double(double)> rho, double q,
                                        double k1, double k2, double rho1, double rho2) {
    check_q(q);
    if (!(k1 > 0.0 && k2 >= k1 && rho1 > 0.0 && rho2 >= rho1)) {
        throw OutOfRange("custom density constants must satisfy 0 < k1 <= k2, 0 < rho1 <= rho2");
    }
    DensityModel model;
    model.kind = DensityKind::Custom;
    model.q = q;
    model.k1 = k1;
    model.k2 = k2;
    model.rho1 = rho1;
    model.rho2 = rho2;
    model.custom = std::move(rho);
    return model;
}

double DensityModel::operator()(double r) const {
    return eval_density(*this, r);
}

double eval_density(const DensityModel& model, double r) {
    switch (model.kind) {
        case DensityKind::PowerTail:
            return r <= 1.0 ? 1.0 : std::pow(r, -model.q);
        case DensityKind::ShiftedPower:
            return std::pow(1.0 + r, -model.q);
        case DensityKind::Constant:
            return 1.0;
        case DensityKind::Custom:
            return model.custom(r);
    }
    return 1.0;
}

ProbeSet ProbeSet::log_spaced(double r_min, double r_max, int count) {
    ProbeSet probes;
    probes.radii.reserve(static_cast<std::size_t>(count) + 2);
    const double l0 = std::log(r_min);
    const double l1 = std::log(r_max);
    for (int i = 0; i < count; ++i) {
        const double s = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
        probes.radii.push_back(std::exp(l0 + s * (l1 - l0)));
    }
    probes.radii.push_back(std::nextafter(1.0, 0.0));
    probes.radii.push_back(std::nextafter(1.0, 2.0));
    std::sort(probes.radii.begin(), probes.radii.end());
    return probes;
}

ProbeSet ProbeSet::defaults() {
    return log_spaced(1e-3, 1e3, 512);
}

ConditionReport certify_bounds(const DensityModel& model, const ProbeSet& probes) {
    if (probes.radii.empty()) throw EmptyProbe{};

    double tail_min = std::numeric_limits<double>::infinity();
    double tail_max = -std::numeric_limits<double>::infinity();
    double tail_min_r = 0.0, tail_max_r = 0.0;
    double ball_min = std::numeric_limits<double>::infinity();
    double ball_max = -std::numeric_limits<double>::infinity();
    double ball_min_r = 0.0, ball_max_r = 0.0;

    for (double r : probes.radii) {
        const double rho = eval_density(model, r);
        if (r >= 1.0) {
            const double value = rho * std::pow(r, model.q); // rho r^q in [1/k2, 1/k1]
            if (value < tail_min) { tail_min = value; tail_min_r = r; }
            if (value > tail_max) { tail_max = value; tail_max_r = r; }
        }
        if (r <= 1.0) {
            const double value = 1.0 / rho;
            if (value < ball_min) { ball_min = value; ball_min_r = r; }
            if (value > ball_max) { ball_max = value; ball_max_r = r; }
        }
    }

    ConditionReport report;
    report.system = ConditionSystem::DensityBounds;
    auto with_radius = [](ConditionEntry entry, double r) {
        std::ostringstream label;
        label << entry.label << "@r=" << r;
        entry.label = label.str();
        return entry;
    };
    if (std::isfinite(tail_min)) {
        report.entries.push_back(with_radius(entry_ge("tail_lower(rho*r^q>=1/k2)", tail_min, 1.0 / model.k2), tail_min_r));
        report.entries.push_back(with_radius(entry_le("tail_upper(rho*r^q<=1/k1)", tail_max, 1.0 / model.k1), tail_max_r));
    }
    if (std::isfinite(ball_min)) {
        report.entries.push_back(with_radius(entry_ge("ball_lower(1/rho>=rho1)", ball_min, model.rho1), ball_min_r));
        report.entries.push_back(with_radius(entry_le("ball_upper(1/rho<=rho2)", ball_max, model.rho2), ball_max_r));
    }
    return report;
}

} // namespace pmb
