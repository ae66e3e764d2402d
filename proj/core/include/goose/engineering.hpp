#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "goose/bounds.hpp"
#include "goose/problem.hpp"

namespace goose::engineering {

/// A constrained minimization problem: raw objective plus inequality
/// constraints g_i(x) <= 0. Solved through the static penalty transform.
struct ConstrainedProblem {
    std::string id;
    int dim = 0;
    Bounds bounds;
    std::function<double(const std::vector<double>&)> raw_objective;
    std::vector<std::function<double(const std::vector<double>&)>> constraints;
    double penalty_coefficient = 1e6;
    double feasibility_tolerance = 1e-6;

    /// max_i g_i(x); 0 for unconstrained problems.
    double max_violation(const std::vector<double>& x) const;
    bool feasible(const std::vector<double>& x) const {
        return max_violation(x) <= feasibility_tolerance;
    }
};

/// Unconstrained view: raw_objective(x) + coefficient * sum max(0, g_i)^2.
/// Coincides with the raw objective on the feasible set.
Problem penalize(const ConstrainedProblem& cp);

struct WeldedBeamOptions {
    /// Use the literal cost expression whose first term omits the weld
    /// length factor; default is the standard cost with it.
    bool printed_objective = false;
};

/// Welded beam design: weld thickness, weld length, bar height, bar width.
/// Seven constraints: shear stress, bending stress, deflection, geometry,
/// buckling, minimum weld size and the cost budget.
ConstrainedProblem welded_beam(const WeldedBeamOptions& options = {});

/// Pressure vessel design: shell/head thickness (continuous relaxation of
/// the 0.0625 in stock multiples), inner radius and cylinder length.
ConstrainedProblem pressure_vessel();

/// Rounds the two thickness variables to stock multiples of 0.0625 in
/// (upward when the nearest multiple breaks a thickness constraint) and
/// rechecks feasibility. Empty when no feasible rounding exists.
std::optional<std::vector<double>> snap_vessel_thickness(const ConstrainedProblem& vessel,
                                                         const std::vector<double>& x);

/// One generating unit: fuel cost a*P^2 + b*P + c over output P in
/// [p_min, p_max] MW.
struct EldUnit {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double p_min = 0.0;
    double p_max = 0.0;
};

struct EldConfig {
    std::vector<EldUnit> units;
    double demand = 150.0;           ///< MW
    double balance_tolerance = 0.0;  ///< MW slack granted to the power balance

    void validate() const; ///< throws std::invalid_argument
};

/// Three-unit dataset whose costs at the dispatch (45, 57.5, 47.5) MW equal
/// (608.06, 1118, 761.89) $/h. Cost figures from this configuration are
/// configuration-dependent, not a property of the algorithm.
EldConfig default_eld_config();

/// JSON file: {"demand": MW, "balance_tolerance": MW, "units": [{"a":..,
/// "b":.., "c":.., "p_min":.., "p_max":..}, ...]}. Validated on load.
EldConfig load_eld_config(const std::string& path);
void save_eld_config(const EldConfig& config, const std::string& path);

/// Economic load dispatch: minimize total quadratic fuel cost subject to
/// unit limits (the box) and the power balance (paired inequalities).
ConstrainedProblem economic_load_dispatch(const EldConfig& config = default_eld_config());

struct IggOptions {
    int dim = 1;
    double bound = 400.0;
};

/// Pathological IgG fraction: minimize |sum_i (0.41 + 0.0014 x_i)| over a
/// symmetric box. Shape choices (dimension, bound, absolute value) are
/// configurable because the reference formulation leaves them open.
ConstrainedProblem igg_fraction(const IggOptions& options = {});

/// Locally produced pathological IgG concentration in CSF from the serum
/// and CSF measurements.
double igg_p(double igg_csf, double alb_serum, double alb_csf, double igg_serum);

} // namespace goose::engineering
