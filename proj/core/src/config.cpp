#include "pmblow/config.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "pmblow/table.hpp"

namespace pmb {

std::string to_string(Scenario scenario) {
    switch (scenario) {
        case Scenario::Regimes: return "regimes";
        case Scenario::Params: return "params";
        case Scenario::Residual: return "residual";
        case Scenario::Simulate: return "simulate";
        case Scenario::Dichotomy: return "dichotomy";
        case Scenario::Chain: return "chain";
    }
    return "simulate";
}

Scenario scenario_from_string(const std::string& name) {
    if (name == "regimes") return Scenario::Regimes;
    if (name == "params") return Scenario::Params;
    if (name == "residual") return Scenario::Residual;
    if (name == "simulate") return Scenario::Simulate;
    if (name == "dichotomy") return Scenario::Dichotomy;
    if (name == "chain") return Scenario::Chain;
    throw OutOfRange("unknown scenario: " + name);
}

std::string to_string(InitialDataKind kind) {
    switch (kind) {
        case InitialDataKind::BarrierSub: return "barrier-sub";
        case InitialDataKind::BarrierSuperFraction: return "barrier-super-fraction";
        case InitialDataKind::Bump: return "bump";
        case InitialDataKind::Plateau: return "plateau";
    }
    return "bump";
}

InitialDataKind u0_kind_from_string(const std::string& name) {
    if (name == "barrier-sub") return InitialDataKind::BarrierSub;
    if (name == "barrier-super-fraction") return InitialDataKind::BarrierSuperFraction;
    if (name == "bump") return InitialDataKind::Bump;
    if (name == "plateau") return InitialDataKind::Plateau;
    throw OutOfRange("unknown u0 kind: " + name);
}

namespace {

std::string trim(const std::string& text) {
    const auto begin = text.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = text.find_last_not_of(" \t\r");
    return text.substr(begin, end - begin + 1);
}

std::string join_doubles(const std::vector<double>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += format_double(values[i]);
    }
    return out;
}

std::vector<double> split_doubles(const std::string& text) {
    std::vector<double> out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(std::stod(item));
    }
    return out;
}

} // namespace

std::string ExperimentConfig::serialize() const {
    std::ostringstream out;
    out << "scenario = " << to_string(scenario) << "\n";
    out << "m = " << format_double(m) << "\n";
    out << "p = " << format_double(p) << "\n";
    out << "p_values = " << join_doubles(p_values) << "\n";
    out << "N = " << N << "\n";
    out << "density.kind = " << density_kind << "\n";
    out << "density.q = " << format_double(density_q) << "\n";
    out << "grid.R = " << format_double(grid_R) << "\n";
    out << "grid.n = " << grid_n << "\n";
    out << "u0.kind = " << to_string(u0_kind) << "\n";
    out << "u0.fraction = " << format_double(u0_fraction) << "\n";
    out << "u0.height = " << format_double(u0_height) << "\n";
    out << "u0.radius = " << format_double(u0_radius) << "\n";
    out << "horizon = " << format_double(horizon) << "\n";
    out << "M_blow = " << format_double(M_blow) << "\n";
    out << "r0 = " << format_double(r0) << "\n";
    out << "chain.beta_bar = " << format_double(chain_beta_bar) << "\n";
    out << "chain.eps0 = " << format_double(chain_eps0) << "\n";
    out << "seed = " << seed << "\n";
    return out.str();
}

ExperimentConfig ExperimentConfig::parse(const std::string& text) {
    ExperimentConfig config;
    std::istringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw Error("config line missing '=': " + line);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        if (key == "scenario") config.scenario = scenario_from_string(value);
        else if (key == "m") config.m = std::stod(value);
        else if (key == "p") config.p = std::stod(value);
        else if (key == "p_values") config.p_values = split_doubles(value);
        else if (key == "N") config.N = std::stoi(value);
        else if (key == "density.kind") config.density_kind = value;
        else if (key == "density.q") config.density_q = std::stod(value);
        else if (key == "grid.R") config.grid_R = std::stod(value);
        else if (key == "grid.n") config.grid_n = std::stoi(value);
        else if (key == "u0.kind") config.u0_kind = u0_kind_from_string(value);
        else if (key == "u0.fraction") config.u0_fraction = std::stod(value);
        else if (key == "u0.height") config.u0_height = std::stod(value);
        else if (key == "u0.radius") config.u0_radius = std::stod(value);
        else if (key == "horizon") config.horizon = std::stod(value);
        else if (key == "M_blow") config.M_blow = std::stod(value);
        else if (key == "r0") config.r0 = std::stod(value);
        else if (key == "chain.beta_bar") config.chain_beta_bar = std::stod(value);
        else if (key == "chain.eps0") config.chain_eps0 = std::stod(value);
        else if (key == "seed") config.seed = std::stoul(value);
        else throw Error("unknown config key: " + key);
    }
    return config;
}

ExperimentConfig ExperimentConfig::load(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw Error("cannot open config file: " + path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return parse(buffer.str());
}

void ExperimentConfig::save(const std::string& path) const {
    std::ofstream file(path);
    if (!file) throw Error("cannot write config file: " + path);
    file << serialize();
}

} // namespace pmb
