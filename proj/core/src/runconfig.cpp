#include "ddg2d/runconfig.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ddg2d {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return {};
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<int> parse_levels(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(std::stoi(item));
    }
    if (out.empty()) throw std::invalid_argument("levels: empty list");
    return out;
}

} // namespace

RunConfig RunConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    return from_stream(in);
}

RunConfig RunConfig::from_stream(std::istream& in) {
    RunConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key = value");
        cfg.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return cfg;
}

void RunConfig::set(const std::string& key, const std::string& value) {
    if (key == "model") model = value;
    else if (key == "mu") mu = std::stod(value);
    else if (key == "gamma_exp") gamma_exp = std::stod(value);
    else if (key == "variant") variant = value;
    else if (key == "k") k = std::stoi(value);
    else if (key == "levels") levels = parse_levels(value);
    else if (key == "lambda") lambda = std::stod(value);
    else if (key == "T") T = std::stod(value);
    else if (key == "quadrature_exactness") quadrature_exactness = std::stoi(value);
    else if (key == "beta0") beta0 = std::stod(value);
    else if (key == "beta0v") beta0v = std::stod(value);
    else if (key == "beta1") beta1 = std::stod(value);
    else if (key == "limiter") limiter = value == "on" ? 1 : value == "off" ? 0 : std::stoi(value);
    else if (key == "restart") restart = value == "on" || value == "true" || value == "1";
    else if (key == "cfl_mode") cfl_mode = value;
    else if (key == "dt_floor") dt_floor = std::stod(value);
    else if (key == "safety") safety = std::stod(value);
    else if (key == "log_every") log_every = std::stol(value);
    else if (key == "output_dir") output_dir = value;
    else if (key == "seed") seed = std::stoull(value);
    else throw std::invalid_argument("unknown config key: " + key);
}

std::string RunConfig::echo() const {
    std::ostringstream os;
    os.precision(17);
    os << "model = " << model << '\n';
    os << "mu = " << mu << '\n';
    os << "gamma_exp = " << gamma_exp << '\n';
    os << "variant = " << variant << '\n';
    os << "k = " << k << '\n';
    os << "levels = ";
    for (std::size_t i = 0; i < levels.size(); ++i) os << (i ? "," : "") << levels[i];
    os << '\n';
    os << "lambda = " << lambda << '\n';
    os << "T = " << T << '\n';
    os << "quadrature_exactness = " << quadrature_exactness << '\n';
    os << "beta0 = " << beta0 << '\n';
    os << "beta0v = " << beta0v << '\n';
    os << "beta1 = " << beta1 << '\n';
    os << "limiter = " << limiter << '\n';
    os << "restart = " << (restart ? "on" : "off") << '\n';
    os << "cfl_mode = " << cfl_mode << '\n';
    os << "dt_floor = " << dt_floor << '\n';
    os << "safety = " << safety << '\n';
    os << "log_every = " << log_every << '\n';
    os << "output_dir = " << output_dir << '\n';
    os << "seed = " << seed << '\n';
    return os.str();
}

DiffusionModel RunConfig::make_model() const { return model_by_name(model, mu, gamma_exp); }

SchemeConfig RunConfig::make_scheme() const {
    SchemeConfig cfg = SchemeConfig::defaults(variant_by_name(variant), k);
    if (beta0 >= 0.0) cfg.beta0 = beta0;
    if (beta0v >= 0.0) cfg.beta0v = beta0v;
    if (beta1 >= 0.0) cfg.beta1 = beta1;
    return cfg;
}

int RunConfig::resolved_quadrature_exactness(const DiffusionModel& m) const {
    if (quadrature_exactness > 0) return quadrature_exactness;
    return m.strongly_nonlinear ? 4 * k + 1 : 2 * k + 1;
}

double RunConfig::resolved_lambda(const DiffusionModel& m) const {
    return lambda > 0.0 ? lambda : m.default_lambda;
}

double RunConfig::resolved_T(const DiffusionModel& m) const {
    return T > 0.0 ? T : m.default_T;
}

bool RunConfig::limiter_enabled(const DiffusionModel& m) const {
    if (limiter == 0) return false;
    if (limiter == 1) return true;
    return m.solution_bounds.has_value();
}

TimeConfig RunConfig::make_time_config(const DiffusionModel& m) const {
    TimeConfig tc;
    tc.lambda = resolved_lambda(m);
    tc.T = resolved_T(m);
    tc.cfl_mode = cfl_mode == "blowup" ? CflMode::blowup : CflMode::standard;
    if (cfl_mode != "blowup" && cfl_mode != "standard")
        throw std::invalid_argument("cfl_mode must be standard or blowup");
    tc.restart_enabled = restart;
    tc.dt_floor = dt_floor;
    tc.safety = safety;
    tc.log_every = log_every;
    return tc;
}

} // namespace ddg2d
