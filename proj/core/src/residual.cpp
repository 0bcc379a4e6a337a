#include "pmblow/residual.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pmb {

std::string to_string(RegionTag tag) {
    switch (tag) {
        case RegionTag::D1: return "D1";
        case RegionTag::D2: return "D2";
        case RegionTag::OutsideSupport: return "outside";
    }
    return "outside";
}

namespace {

double support_radius(const BarrierParams& params, double t) {
    const TimeProfile tp = time_profile(params, t);
    const double cap = params.a / tp.eta; // shape(r) < cap inside the support
    if (cap >= 1.0) return std::pow(cap, 1.0 / params.b);
    if (params.family == BarrierFamily::Sub) return std::sqrt(cap);
    const double num = 2.0 * cap - (2.0 - params.b);
    return num > 0.0 ? std::sqrt(num / params.b) : 0.0;
}

double default_t_end(const BarrierParams& params) {
    return params.family == BarrierFamily::Sub ? 0.5 * params.T : 10.0 * params.T;
}

} // namespace

ResidualGrid make_residual_grid(const BarrierParams& params, int nr, int nt,
                                std::optional<double> t_end_opt) {
    ResidualGrid grid;
    const double t_end = t_end_opt.value_or(default_t_end(params));
    const double r_max =
        1.2 * std::max({support_radius(params, 0.0), support_radius(params, t_end), 1.0});

    grid.radii.reserve(static_cast<std::size_t>(nr) + 2);
    const double l0 = std::log(1e-3);
    const double l1 = std::log(r_max);
    for (int i = 0; i < nr; ++i) {
        const double s = nr == 1 ? 0.0 : static_cast<double>(i) / (nr - 1);
        grid.radii.push_back(std::exp(l0 + s * (l1 - l0)));
    }
    grid.radii.push_back(std::nextafter(1.0, 0.0));
    grid.radii.push_back(std::nextafter(1.0, 2.0));
    std::sort(grid.radii.begin(), grid.radii.end());
    grid.radii.erase(std::remove(grid.radii.begin(), grid.radii.end(), 1.0),
                     grid.radii.end());

    grid.times.reserve(nt);
    for (int j = 0; j < nt; ++j) {
        const double s = nt == 1 ? 0.0 : static_cast<double>(j) / (nt - 1);
        grid.times.push_back(s * t_end);
    }
    return grid;
}

namespace {

ResidualField assemble_field(const BarrierParams& params, const ProblemSpec& spec,
                             const ResidualGrid& grid, bool with_reaction) {
    ResidualField field;
    field.radii = grid.radii;
    field.times = grid.times;
    field.nodes.reserve(grid.radii.size() * grid.times.size());
    field.min_relative = std::numeric_limits<double>::infinity();
    field.max_relative = -std::numeric_limits<double>::infinity();

    for (double t : grid.times) {
        for (double r : grid.radii) {
            ResidualNode node;
            node.r = r;
            node.t = t;
            const BarrierDerivs d = barrier_derivatives(params, r, t);
            if (!d.inside_support) {
                node.region = RegionTag::OutsideSupport;
                node.residual = 0.0;
                node.scale = 1.0;
            } else {
                node.region = r > 1.0 ? RegionTag::D1 : RegionTag::D2;
                const double rho = eval_density(spec.density, r);
                const double curv = d.um_rr;
                const double drift = (spec.N - 1.0) / r * d.um_r;
                const double reaction = with_reaction ? std::pow(d.value, params.p) : 0.0;
                node.residual = d.u_t - (curv + drift) / rho - reaction;
                node.scale = std::abs(d.u_t) + (std::abs(curv) + std::abs(drift)) / rho +
                             reaction + std::numeric_limits<double>::min();
                const double rel = node.relative();
                if (rel < field.min_relative) {
                    field.min_relative = rel;
                    field.worst_min = node;
                }
                if (rel > field.max_relative) {
                    field.max_relative = rel;
                    field.worst_max = node;
                }
            }
            field.nodes.push_back(node);
        }
    }
    if (!std::isfinite(field.min_relative)) {
        field.min_relative = 0.0;
        field.max_relative = 0.0;
    }
    return field;
}

} // namespace

ResidualField residual_super(const BarrierParams& params, const ProblemSpec& spec,
                             const ResidualGrid& grid, double r0) {
    const auto report = check_global_conditions(params, spec, r0);
    if (!report.all_satisfied()) {
        throw ConditionNotVerified("refusing to certify: Super parameters fail their checker");
    }
    return assemble_field(params, spec, grid, true);
}

ResidualField residual_sub(const BarrierParams& params, const ProblemSpec& spec,
                           const ResidualGrid& grid) {
    const auto report = check_blowup_conditions(params, spec);
    if (!report.all_satisfied()) {
        throw ConditionNotVerified("refusing to certify: Sub parameters fail their checker");
    }
    for (double t : grid.times) {
        if (t >= params.T) throw DomainError("Sub residual grid reaches t >= T");
    }
    return assemble_field(params, spec, grid, true);
}

ResidualField residual_chain(const ChainParams& chain, const ProblemSpec& spec,
                             const ResidualGrid& grid) {
    const auto report = check_chain_conditions(chain, spec);
    if (!report.all_satisfied()) {
        throw ConditionNotVerified("refusing to certify: chain parameters fail their checker");
    }
    return assemble_field(chain.chain_barrier(), spec, grid, false);
}

std::vector<double> default_time_probes(const BarrierParams& params, int count) {
    const double t_end = default_t_end(params);
    std::vector<double> probes;
    probes.reserve(count);
    for (int i = 0; i < count; ++i) {
        const double s = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
        probes.push_back(s * t_end);
    }
    return probes;
}

GluingReport verify_gluing(const BarrierParams& params, int nt) {
    GluingReport report;
    report.equality_family = params.family != BarrierFamily::Sub;
    report.min_flux_excess = std::numeric_limits<double>::infinity();

    const double r_in = std::nextafter(1.0, 0.0);
    const double r_out = std::nextafter(1.0, 2.0);
    for (double t : default_time_probes(params, nt)) {
        const double v_in = eval_barrier(params, r_in, t);
        const double v_out = eval_barrier(params, r_out, t);
        const double v_scale = std::abs(v_in) + std::abs(v_out) +
                               std::numeric_limits<double>::min();
        report.max_value_gap_rel =
            std::max(report.max_value_gap_rel, std::abs(v_in - v_out) / v_scale);

        const double f_in = eval_flux(params, FluxSide::Inner, t);
        const double f_out = eval_flux(params, FluxSide::Outer, t);
        const double f_scale = std::abs(f_in) + std::abs(f_out) +
                               std::numeric_limits<double>::min();
        if (report.equality_family) {
            report.max_flux_gap_rel =
                std::max(report.max_flux_gap_rel, std::abs(f_in - f_out) / f_scale);
        } else {
            report.min_flux_excess = std::min(report.min_flux_excess, f_out - f_in);
        }
    }
    const double tol = 1e-12;
    report.pass = report.max_value_gap_rel <= tol &&
                  (report.equality_family ? report.max_flux_gap_rel <= tol
                                          : report.min_flux_excess >= -tol);
    return report;
}

namespace {

struct Phi {
    double sigma, delta, gamma, exponent;
    double operator()(double F) const {
        return sigma * F - delta - gamma * std::pow(F, exponent);
    }
    double scale() const { return std::abs(sigma) + std::abs(delta) + std::abs(gamma); }
};

// Concave in F, so ternary search pins the maximum to machine precision.
double phi_grid_max(const Phi& phi) {
    double best = -std::numeric_limits<double>::infinity();
    double best_F = 0.5;
    const int n = 10000;
    for (int i = 1; i < n; ++i) {
        const double F = static_cast<double>(i) / n;
        const double value = phi(F);
        if (value > best) {
            best = value;
            best_F = F;
        }
    }
    double lo = std::max(0.0, best_F - 2.0 / n);
    double hi = std::min(1.0, best_F + 2.0 / n);
    for (int i = 0; i < 200; ++i) {
        const double m1 = lo + (hi - lo) / 3.0;
        const double m2 = hi - (hi - lo) / 3.0;
        if (phi(m1) < phi(m2)) {
            lo = m1;
        } else {
            hi = m2;
        }
    }
    return std::max(best, phi(0.5 * (lo + hi)));
}

double phi_grid_min(const Phi& phi) {
    double worst = std::numeric_limits<double>::infinity();
    const int n = 10000;
    for (int i = 1; i < n; ++i) {
        worst = std::min(worst, phi(static_cast<double>(i) / n));
    }
    return worst;
}

void merge_entry(std::vector<ConditionEntry>& entries, const ConditionEntry& entry) {
    for (auto& existing : entries) {
        if (existing.label == entry.label) {
            if (entry.margin < existing.margin) existing = entry;
            return;
        }
    }
    entries.push_back(entry);
}

} // namespace

ConditionReport phi_endpoint_check(const BarrierParams& params, const ProblemSpec& spec,
                                   const std::vector<double>& time_probes) {
    const auto coeff = coefficients(params, spec.N, spec.density.k1, spec.density.k2);
    const double m = params.m;
    const double p = params.p;
    const double exponent = (p + m - 2.0) / (m - 1.0);

    ConditionReport report;
    report.system = params.family == BarrierFamily::Super ? ConditionSystem::GlobalRmk
                   : params.family == BarrierFamily::Sub  ? ConditionSystem::BlowupA
                                                          : ConditionSystem::ChainProp;

    for (double t : time_probes) {
        const Phi outer{coeff.sigma(t), coeff.delta(t), coeff.gamma(t), exponent};
        const Phi inner{coeff.sigma0(t), coeff.delta0(t), coeff.gamma(t), exponent};
        const double tol = residual_tol_rel;

        switch (params.family) {
            case BarrierFamily::Super: {
                merge_entry(report.entries, entry_ge("phi(0)>=0", -outer.delta, 0.0));
                merge_entry(report.entries,
                            entry_ge("phi(1)>=0", outer.sigma - outer.delta - outer.gamma, 0.0));
                merge_entry(report.entries, entry_ge("psi(0)>=0", -inner.delta, 0.0));
                merge_entry(report.entries,
                            entry_ge("psi(1)>=0", inner.sigma - inner.delta - inner.gamma, 0.0));
                merge_entry(report.entries, entry_gt("concavity(gamma>0)", outer.gamma, 0.0));
                merge_entry(report.entries,
                            entry_ge("grid_min_phi", phi_grid_min(outer), -tol * outer.scale()));
                merge_entry(report.entries,
                            entry_ge("grid_min_psi", phi_grid_min(inner), -tol * inner.scale()));
                break;
            }
            case BarrierFamily::Sub: {
                const double K = coeff.K;
                auto max_check = [&](const Phi& phi, const std::string& which) {
                    const double F0 = std::pow(
                        (m - 1.0) / (p + m - 2.0) * phi.sigma / phi.gamma, (m - 1.0) / (p - 1.0));
                    const double phi_max = K * std::pow(phi.sigma, (p + m - 2.0) / (p - 1.0)) /
                                               std::pow(phi.gamma, (m - 1.0) / (p - 1.0)) -
                                           phi.delta;
                    merge_entry(report.entries, entry_le("phi(F0)<=0_" + which, phi_max, 0.0));
                    merge_entry(report.entries, entry_le("F0<=1_" + which, F0, 1.0));
                    merge_entry(report.entries,
                                entry_le("grid_max_matches_phi(F0)_" + which,
                                         std::abs(phi_grid_max(phi) - phi_max),
                                         tol * phi.scale()));
                };
                max_check(outer, "outer");
                max_check(inner, "inner");
                break;
            }
            case BarrierFamily::Chain: {
                merge_entry(report.entries, entry_gt("sigma>0", outer.sigma, 0.0));
                merge_entry(report.entries, entry_gt("delta>0", outer.delta, 0.0));
                merge_entry(report.entries,
                            entry_le("sigma-delta<=0", outer.sigma - outer.delta, 0.0));
                merge_entry(report.entries, entry_gt("sigma0>0", inner.sigma, 0.0));
                merge_entry(report.entries, entry_gt("delta0>0", inner.delta, 0.0));
                merge_entry(report.entries,
                            entry_le("sigma0-delta0<=0", inner.sigma - inner.delta, 0.0));
                break;
            }
        }
    }
    return report;
}

} // namespace pmb
