#include "goose/engineering.hpp"

#include <cmath>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include "json.hpp"

namespace goose::engineering {

namespace {

// Welded beam constants: applied load (lb), beam length (in), Young's and
// shear moduli (psi) and the stress/deflection limits.
constexpr double kLoad = 600.0;
constexpr double kBeamLength = 14.0;
constexpr double kYoungs = 30.0e6;
constexpr double kShearModulus = 12.0e6;
constexpr double kTauMax = 13600.0;
constexpr double kSigmaMax = 30000.0;
constexpr double kDeltaMax = 0.25;

double weld_shear_stress(const std::vector<double>& v) {
    const double x1 = v[0], x2 = v[1], x3 = v[2];
    const double tau_p = kLoad / std::sqrt(2.0 * x1 * x2);
    const double moment = kLoad * (kBeamLength + x2 / 2.0);
    const double half_diag = x2 * x2 / 4.0 + ((x1 + x3) / 2.0) * ((x1 + x3) / 2.0);
    const double r = std::sqrt(half_diag);
    const double j = 2.0 * (std::sqrt(2.0 * x1 * x2) * half_diag);
    const double tau_pp = moment * r / j;
    return std::sqrt(tau_p * tau_p + 2.0 * tau_p * tau_pp * x2 / (2.0 * r) + tau_pp * tau_pp);
}

double beam_bending_stress(const std::vector<double>& v) {
    return 6.0 * kLoad * kBeamLength / (v[3] * v[2] * v[2]);
}

double beam_deflection(const std::vector<double>& v) {
    return 6.0 * kLoad * kBeamLength * kBeamLength * kBeamLength /
           (kYoungs * v[2] * v[2] * v[3]);
}

double buckling_load(const std::vector<double>& v) {
    const double x2 = v[1], x3 = v[2], x4 = v[3];
    return 4.013 * kYoungs / (kBeamLength * kBeamLength) *
           std::sqrt(x2 * x2 * std::pow(x4, 6) / 36.0) *
           (1.0 - x3 / (2.0 * kBeamLength) * std::sqrt(kYoungs / (4.0 * kShearModulus)));
}

double weld_cost(const std::vector<double>& v, bool printed) {
    const double first = printed ? 1.10471 * v[0] * v[0] : 1.10471 * v[0] * v[0] * v[1];
    return first + 0.04811 * v[2] * v[3] * (14.0 + v[1]);
}

constexpr double kThicknessStep = 0.0625;

} // namespace

double ConstrainedProblem::max_violation(const std::vector<double>& x) const {
    double worst = 0.0;
    bool first = true;
    for (const auto& g : constraints) {
        const double v = g(x);
        worst = first ? v : std::max(worst, v);
        first = false;
    }
    return first ? 0.0 : worst;
}

Problem penalize(const ConstrainedProblem& cp) {
    Problem p;
    p.id = cp.id;
    p.dim = cp.dim;
    p.bounds = cp.bounds;
    p.objective = [cp](const std::vector<double>& x, RandomSource*) {
        double value = cp.raw_objective(x);
        double penalty = 0.0;
        for (const auto& g : cp.constraints) {
            const double v = g(x);
            if (v > 0.0) penalty += v * v;
        }
        return value + cp.penalty_coefficient * penalty;
    };
    return p;
}

ConstrainedProblem welded_beam(const WeldedBeamOptions& options) {
    ConstrainedProblem cp;
    cp.id = "welded_beam";
    cp.dim = 4;
    cp.bounds = Bounds({0.1, 0.1, 0.1, 0.1}, {2.0, 10.0, 10.0, 2.0});
    const bool printed = options.printed_objective;
    cp.raw_objective = [printed](const std::vector<double>& v) { return weld_cost(v, printed); };
    cp.constraints = {
        [](const std::vector<double>& v) { return weld_shear_stress(v) - kTauMax; },
        [](const std::vector<double>& v) { return beam_bending_stress(v) - kSigmaMax; },
        [](const std::vector<double>& v) { return beam_deflection(v) - kDeltaMax; },
        [](const std::vector<double>& v) { return v[0] - v[3]; },
        [](const std::vector<double>& v) { return kLoad - buckling_load(v); },
        [](const std::vector<double>& v) { return 0.125 - v[0]; },
        [](const std::vector<double>& v) {
            return 1.10471 * v[0] * v[0] + 0.04811 * v[2] * v[3] * (14.0 + v[1]) - 5.0;
        },
    };
    return cp;
}

ConstrainedProblem pressure_vessel() {
    ConstrainedProblem cp;
    cp.id = "pressure_vessel";
    cp.dim = 4;
    cp.bounds = Bounds({kThicknessStep, kThicknessStep, 10.0, 10.0},
                       {99.0 * kThicknessStep, 99.0 * kThicknessStep, 200.0, 200.0});
    cp.raw_objective = [](const std::vector<double>& v) {
        const double ts = v[0], th = v[1], r = v[2], l = v[3];
        return 0.6224 * ts * r * l + 1.7781 * th * r * r + 3.1661 * ts * ts * l +
               19.84 * ts * ts * r;
    };
    cp.constraints = {
        [](const std::vector<double>& v) { return -v[0] + 0.0193 * v[2]; },
        [](const std::vector<double>& v) { return -v[1] + 0.0095 * v[2]; },
        [](const std::vector<double>& v) {
            const double r = v[2], l = v[3];
            return -M_PI * r * r * l - 4.0 / 3.0 * M_PI * r * r * r + 1296000.0;
        },
        [](const std::vector<double>& v) { return v[3] - 240.0; },
    };
    return cp;
}

std::optional<std::vector<double>> snap_vessel_thickness(const ConstrainedProblem& vessel,
                                                         const std::vector<double>& x) {
    std::vector<double> snapped = x;
    // thickness floors imposed by the radius
    const double need_ts = 0.0193 * x[2];
    const double need_th = 0.0095 * x[2];
    const auto snap_up_if_needed = [](double value, double need) {
        double k = std::round(value / kThicknessStep);
        if (k * kThicknessStep < need) k = std::ceil(need / kThicknessStep - 1e-12);
        return k * kThicknessStep;
    };
    snapped[0] = snap_up_if_needed(x[0], need_ts);
    snapped[1] = snap_up_if_needed(x[1], need_th);
    for (int j : {0, 1}) {
        if (snapped[j] < vessel.bounds.lower[j] || snapped[j] > vessel.bounds.upper[j])
            return std::nullopt;
    }
    if (!vessel.feasible(snapped)) return std::nullopt;
    return snapped;
}

void EldConfig::validate() const {
    if (units.empty()) throw std::invalid_argument("eld config: at least one unit required");
    if (!(demand > 0.0) || !std::isfinite(demand))
        throw std::invalid_argument("eld config: demand must be positive and finite");
    if (balance_tolerance < 0.0 || !std::isfinite(balance_tolerance))
        throw std::invalid_argument("eld config: balance_tolerance must be >= 0");
    double min_sum = 0.0, max_sum = 0.0;
    for (std::size_t i = 0; i < units.size(); ++i) {
        const EldUnit& u = units[i];
        if (!std::isfinite(u.a) || !std::isfinite(u.b) || !std::isfinite(u.c))
            throw std::invalid_argument("eld config: non-finite cost coefficient in unit " +
                                        std::to_string(i));
        if (!(u.p_min < u.p_max))
            throw std::invalid_argument("eld config: p_min >= p_max in unit " + std::to_string(i));
        min_sum += u.p_min;
        max_sum += u.p_max;
    }
    if (demand < min_sum || demand > max_sum)
        throw std::invalid_argument("eld config: demand " + std::to_string(demand) +
                                    " MW outside the reachable range [" + std::to_string(min_sum) +
                                    ", " + std::to_string(max_sum) + "] MW");
}

EldConfig default_eld_config() {
    EldConfig cfg;
    cfg.units = {
        {0.05, 8.0, 146.81, 10.0, 85.0},
        {0.08, 9.0, 336.0, 10.0, 80.0},
        {0.06, 8.5, 222.765, 10.0, 70.0},
    };
    cfg.demand = 150.0;
    cfg.balance_tolerance = 0.0;
    return cfg;
}

EldConfig load_eld_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open ELD config: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(path + ": invalid JSON: " + e.what());
    }
    EldConfig cfg;
    try {
        cfg.demand = doc.at("demand").get<double>();
        cfg.balance_tolerance = doc.value("balance_tolerance", 0.0);
        for (const auto& item : doc.at("units")) {
            EldUnit u;
            u.a = item.at("a").get<double>();
            u.b = item.at("b").get<double>();
            u.c = item.at("c").get<double>();
            u.p_min = item.at("p_min").get<double>();
            u.p_max = item.at("p_max").get<double>();
            cfg.units.push_back(u);
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(path + ": bad ELD config schema: " + e.what());
    }
    cfg.validate();
    return cfg;
}

void save_eld_config(const EldConfig& config, const std::string& path) {
    nlohmann::ordered_json doc;
    doc["demand"] = config.demand;
    doc["balance_tolerance"] = config.balance_tolerance;
    doc["units"] = nlohmann::ordered_json::array();
    for (const EldUnit& u : config.units) {
        doc["units"].push_back({{"a", u.a}, {"b", u.b}, {"c", u.c}, {"p_min", u.p_min},
                                {"p_max", u.p_max}});
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write ELD config: " + path);
    out << doc.dump(2) << '\n';
}

ConstrainedProblem economic_load_dispatch(const EldConfig& config) {
    config.validate();
    ConstrainedProblem cp;
    cp.id = "eld";
    cp.dim = static_cast<int>(config.units.size());
    std::vector<double> lo, hi;
    for (const EldUnit& u : config.units) {
        lo.push_back(u.p_min);
        hi.push_back(u.p_max);
    }
    cp.bounds = Bounds(std::move(lo), std::move(hi));
    const auto units = config.units;
    cp.raw_objective = [units](const std::vector<double>& p) {
        double cost = 0.0;
        for (std::size_t i = 0; i < units.size(); ++i)
            cost += units[i].a * p[i] * p[i] + units[i].b * p[i] + units[i].c;
        return cost;
    };
    const double demand = config.demand;
    const double tol = config.balance_tolerance;
    // equality sum(P) = demand as a pair of inequalities
    cp.constraints = {
        [demand, tol](const std::vector<double>& p) {
            return std::accumulate(p.begin(), p.end(), 0.0) - demand - tol;
        },
        [demand, tol](const std::vector<double>& p) {
            return demand - std::accumulate(p.begin(), p.end(), 0.0) - tol;
        },
    };
    return cp;
}

ConstrainedProblem igg_fraction(const IggOptions& options) {
    if (options.dim < 1) throw std::invalid_argument("igg_fraction: dim must be >= 1");
    if (!(options.bound > 0.0)) throw std::invalid_argument("igg_fraction: bound must be > 0");
    ConstrainedProblem cp;
    cp.id = "igg";
    cp.dim = options.dim;
    cp.bounds = Bounds::uniform(options.dim, -options.bound, options.bound);
    cp.raw_objective = [](const std::vector<double>& x) {
        double y = 0.0;
        for (double v : x) y += 0.41 + 0.0014 * v;
        return std::fabs(y);
    };
    return cp;
}

double igg_p(double igg_csf, double alb_serum, double alb_csf, double igg_serum) {
    return igg_csf - (0.43 * alb_serum - alb_csf + 0.001) * igg_serum;
}

} // namespace goose::engineering
