#pragma once

#include "hopfkit/osc.hpp"
#include "hopfkit/series.hpp"
#include "hopfkit/vector_fields.hpp"

#include <map>
#include <string>
#include <vector>

namespace hopfkit {

enum class AveragingMode { stroboscopic, zero_mean };

std::string to_string(AveragingMode m);
AveragingMode parse_mode(const std::string &text);

/// beta(t) supported on the basis with periodic, t-free coefficients.
using OscSeries = Series<OscCoef>;
using LaurentSeries = Series<Laurent>;

struct AveragingResult {
    AveragingMode mode;
    int order;
    LaurentSeries beta_bar;
    OscSeries kappa;
};

/// Rejects secular coefficients and nonzero unit coefficients.
void check_curve(const OscSeries &beta);

/// Solution of d alpha/dt = alpha * beta(t), alpha(0) = 1.
OscSeries chen_series(const OscSeries &beta, const MuTable &mu, int order);

/// Degree-by-degree solution of d kappa/dt = kappa * beta - beta_bar * kappa.
AveragingResult average(const OscSeries &beta, const MuTable &mu, AveragingMode mode, int order);

OscSeries lift(const LaurentSeries &s);
/// kappa(0)^-1 * exp(t beta_bar) * kappa(t); the left factor is 1 in
/// stroboscopic mode.
OscSeries recompose(const AveragingResult &r, const MuTable &mu);
/// d kappa/dt - kappa * beta + beta_bar * kappa, truncated at the order.
OscSeries averaging_residual(const OscSeries &beta, const AveragingResult &r, const MuTable &mu);
/// kappa(0) = 1 or mean(log kappa) = 0, according to the mode.
bool mode_condition_holds(const AveragingResult &r, const MuTable &mu);

/// A series of vector fields sum_k w^k F_k.
using LaurentField = std::map<int, PolyVectorField>;
/// A time-dependent map sum_j c_j(t) g_j(x); the unit contributes the identity.
struct OscMap {
    std::vector<std::pair<OscCoef, PolyVectorField>> terms;
};

std::string to_string(const LaurentField &f, const VariableSet &vars);

/// sum <beta_bar, j> image(j), collected by powers of w.
template <class Image> LaurentField transfer_field(const LaurentSeries &s, Image &&image)
{
    LaurentField out;
    for (const auto &[id, c] : s.terms()) {
        if (id == GradedBasis::unit)
            throw std::invalid_argument("a vector field series has no unit term");
        PolyVectorField f = image(id);
        for (const auto &[k, q] : c.terms()) {
            auto it = out.find(k);
            if (it == out.end())
                out.emplace(k, f * q);
            else
                it->second += f * q;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

/// U(x,t) = sum <kappa(t), j> image(j), with the unit mapped to x.
template <class Image> OscMap transfer_map(const OscSeries &s, const VariableSet &vars, Image &&image)
{
    OscMap out;
    for (const auto &[id, c] : s.terms()) {
        if (id == GradedBasis::unit) {
            PolyVectorField x(vars.dimension(), vars.nvars());
            for (std::size_t i = 0; i < vars.dimension(); ++i)
                x[i] = coordinate(vars, i);
            out.terms.emplace_back(c, std::move(x));
        } else {
            out.terms.emplace_back(c, image(id));
        }
    }
    return out;
}

} // namespace hopfkit
