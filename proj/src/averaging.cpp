#include "hopfkit/averaging.hpp"

#include <stdexcept>

namespace hopfkit {

std::string to_string(AveragingMode m) { return m == AveragingMode::stroboscopic ? "strobo" : "zeromean"; }

AveragingMode parse_mode(const std::string &text)
{
    if (text == "strobo" || text == "stroboscopic")
        return AveragingMode::stroboscopic;
    if (text == "zeromean" || text == "zero-mean")
        return AveragingMode::zero_mean;
    throw std::invalid_argument("unknown averaging mode: " + text);
}

void check_curve(const OscSeries &beta)
{
    if (beta.find(GradedBasis::unit))
        throw std::invalid_argument("beta(t) must vanish at the unit");
    for (const auto &[id, c] : beta.terms())
        if (!c.is_periodic())
            throw std::invalid_argument("beta(t) has a secular coefficient at " + beta.basis()->name(id));
}

OscSeries chen_series(const OscSeries &beta, const MuTable &mu, int order)
{
    if (beta.find(GradedBasis::unit))
        throw std::invalid_argument("beta(t) must vanish at the unit");
    OscSeries alpha = OscSeries::unit(beta.basis(), order);
    OscSeries b = beta.truncated(order);
    for (int n = 1; n <= order; ++n) {
        OscSeries rhs = star_range(alpha, b, mu, n, n);
        for (const auto &[id, c] : rhs.terms())
            alpha.add(id, c.integral_from_zero());
    }
    return alpha;
}

OscSeries lift(const LaurentSeries &s) { return s.map([](const Laurent &l) { return OscCoef(l); }); }

AveragingResult average(const OscSeries &beta, const MuTable &mu, AveragingMode mode, int order)
{
    check_curve(beta);
    const auto &basis = beta.basis();
    OscSeries b = beta.truncated(order);
    OscSeries kappa = OscSeries::unit(basis, order);
    OscSeries k1(basis, order); // kappa - 1
    LaurentSeries bbar(basis, order);
    OscSeries bbar_osc(basis, order);
    // powers (kappa - 1)^k, k >= 2, for the zero-mean constants
    std::vector<OscSeries> powers;
    for (int n = 1; n <= order; ++n) {
        OscSeries r = star_range(kappa, b, mu, n, n) - star_range(bbar_osc, kappa, mu, n, n);
        LaurentSeries lower(basis, order);
        if (mode == AveragingMode::zero_mean) {
            for (int k = 2; k <= n; ++k) {
                if (static_cast<int>(powers.size()) < k - 1)
                    powers.emplace_back(basis, order);
                const OscSeries &prev = k == 2 ? k1 : powers[k - 3];
                OscSeries part = star_range(prev, k1, mu, n, n);
                for (const auto &[id, c] : part.terms()) {
                    OscCoef t = c * Rational(k % 2 ? 1 : -1, k);
                    lower.add(id, t.mean());
                }
                powers[k - 2] += part;
            }
        }
        for (const auto &[id, c] : r.terms()) {
            Laurent m = c.mean();
            OscCoef osc = c - OscCoef(m);
            OscCoef kn = osc.periodic_primitive();
            if (mode == AveragingMode::stroboscopic)
                kn -= OscCoef(kn.value_at_zero());
            else
                kn -= OscCoef(lower.coefficient(id));
            bbar.add(id, m);
            bbar_osc.add(id, OscCoef(m));
            kappa.add(id, kn);
            k1.add(id, kn);
        }
        if (mode == AveragingMode::zero_mean)
            for (const auto &[id, c] : lower.terms())
                if (!r.find(id)) {
                    kappa.add(id, OscCoef(-c));
                    k1.add(id, OscCoef(-c));
                }
    }
    return {mode, order, std::move(bbar), std::move(kappa)};
}

OscSeries recompose(const AveragingResult &r, const MuTable &mu)
{
    OscSeries tb = lift(r.beta_bar).map([](const OscCoef &c) { return c * OscCoef::t_power(1); });
    OscSeries out = star(exp_series(tb, mu), r.kappa, mu);
    if (r.mode == AveragingMode::stroboscopic)
        return out;
    // exp(t beta_bar) * kappa(t) starts at kappa(0); divide it out on the left
    OscSeries k0 = r.kappa.map([](const OscCoef &c) { return OscCoef(c.value_at_zero()); });
    return star(inverse_series(k0, mu), out, mu);
}

OscSeries averaging_residual(const OscSeries &beta, const AveragingResult &r, const MuTable &mu)
{
    OscSeries dk = r.kappa.map([](const OscCoef &c) { return c.derivative(); });
    OscSeries b = beta.truncated(r.order);
    return dk - star(r.kappa, b, mu) + star(lift(r.beta_bar), r.kappa, mu);
}

bool mode_condition_holds(const AveragingResult &r, const MuTable &mu)
{
    if (r.mode == AveragingMode::stroboscopic) {
        LaurentSeries at0 = r.kappa.map([](const OscCoef &c) { return c.value_at_zero(); });
        return at0 == LaurentSeries::unit(r.kappa.basis(), r.order);
    }
    OscSeries lg = log_series(r.kappa, mu);
    for (const auto &[id, c] : lg.terms())
        if (!c.is_periodic() || !c.mean().is_zero())
            return false;
    return true;
}

std::string to_string(const LaurentField &f, const VariableSet &vars)
{
    std::string out;
    for (auto it = f.rbegin(); it != f.rend(); ++it) {
        if (!out.empty())
            out += "\n";
        out += "w^" + std::to_string(it->first) + ": " + to_string(it->second, vars);
    }
    return out.empty() ? "0" : out;
}

} // namespace hopfkit
