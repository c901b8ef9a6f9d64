#pragma once

#include "hopfkit/averaging.hpp"
#include "hopfkit/system.hpp"

#include <Eigen/Dense>

#include <functional>
#include <vector>

namespace hopfkit::numerics {

using Vec = Eigen::VectorXd;

/// A polynomial field evaluated in doubles, parameters fixed to their values.
class NumericField {
public:
    NumericField() = default;
    NumericField(const PolyVectorField &f, const VariableSet &vars, const std::map<std::string, Rational> &params);

    Vec operator()(const Vec &x) const;
    std::size_t dimension() const { return comps_.size(); }

private:
    struct Term {
        double c;
        std::vector<std::pair<int, int>> powers;
    };
    std::vector<std::vector<Term>> comps_;
};

struct DopriOptions {
    double rtol = 1e-12;
    double atol = 1e-14;
    double initial_step = 1e-4;
    /// Per interval between consecutive sample times.
    long max_steps = 20'000'000;
};

/// Dormand-Prince 5(4) with step control (Boost.Odeint), sampled at
/// increasing times. Throws std::runtime_error when the state stops being
/// finite, the step size cannot be adjusted or the step budget runs out.
std::vector<Vec> dopri(const std::function<Vec(double, const Vec &)> &f, Vec x0, double t0,
                       const std::vector<double> &times, const DopriOptions &opt = {});

/// Least-squares slope of log y against log x.
double loglog_slope(const std::vector<double> &x, const std::vector<double> &y);

struct ValidationPoint {
    double omega;
    double max_error;
};

struct ValidationReport {
    int order;
    AveragingMode mode;
    double horizon;
    std::vector<ValidationPoint> points;
    double slope;
};

/// Integrates the full forced system and the truncated averaged system,
/// maps back with the truncated change of variables and reports the largest
/// deviation over a uniform grid of sample times in (0, horizon].
ValidationReport validate_averaging(const SystemSpec &spec, int order, AveragingMode mode,
                                    const std::vector<double> &omegas, double horizon, int samples = 1000);

struct StrangCheck {
    std::vector<double> taus;
    std::vector<double> errors;
    double slope;
};

/// x' = (w J + B) x split into the rotation and B. One Strang step is compared
/// with the flow of the modified field truncated at degree N, built from the
/// exact modified generator over eigen-letters of the rotation action.
StrangCheck strang_local_error(const Eigen::Matrix2d &b, double omega, int order, const std::vector<double> &taus);

} // namespace hopfkit::numerics
