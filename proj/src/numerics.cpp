#include "hopfkit/numerics.hpp"

#include "hopfkit/pipelines.hpp"
#include "hopfkit/splitting.hpp"

#include <boost/numeric/odeint.hpp>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <stdexcept>

namespace hopfkit::numerics {

NumericField::NumericField(const PolyVectorField &f, const VariableSet &vars,
                           const std::map<std::string, Rational> &params)
{
    std::vector<double> pv(vars.params.size());
    for (std::size_t i = 0; i < vars.params.size(); ++i) {
        auto it = params.find(vars.params[i]);
        if (it == params.end())
            throw std::invalid_argument("no value for parameter " + vars.params[i]);
        pv[i] = it->second.get_d();
    }
    std::size_t dim = vars.dimension();
    comps_.resize(f.dimension());
    for (std::size_t i = 0; i < f.dimension(); ++i)
        for (const auto &[e, c] : f[i].terms()) {
            Term t{c.get_d(), {}};
            for (std::size_t v = 0; v < e.size(); ++v) {
                if (e[v] == 0)
                    continue;
                if (v < dim)
                    t.powers.emplace_back(static_cast<int>(v), e[v]);
                else
                    t.c *= std::pow(pv[v - dim], e[v]);
            }
            comps_[i].push_back(std::move(t));
        }
}

Vec NumericField::operator()(const Vec &x) const
{
    Vec out = Vec::Zero(static_cast<Eigen::Index>(comps_.size()));
    for (std::size_t i = 0; i < comps_.size(); ++i)
        for (const auto &t : comps_[i]) {
            double m = t.c;
            for (auto [v, p] : t.powers)
                m *= p == 1 ? x[v] : std::pow(x[v], p);
            out[static_cast<Eigen::Index>(i)] += m;
        }
    return out;
}

std::vector<Vec> dopri(const std::function<Vec(double, const Vec &)> &f, Vec x, double t,
                       const std::vector<double> &times, const DopriOptions &opt)
{
    namespace odeint = boost::numeric::odeint;
    using State = std::vector<double>;
    for (std::size_t i = 0; i < times.size(); ++i)
        if (times[i] < (i ? times[i - 1] : t))
            throw std::invalid_argument("dopri: sample times must increase");
    std::vector<Vec> out;
    if (times.empty())
        return out;
    out.reserve(times.size());
    const Eigen::Index n = x.size();
    State y(x.data(), x.data() + n);
    auto rhs = [&](const State &s, State &d, double tt) {
        Vec v = f(tt, Eigen::Map<const Vec>(s.data(), n));
        d.assign(v.data(), v.data() + n);
    };
    // integrate_times also reports the start time; only sample times are kept
    std::vector<double> grid{t};
    grid.insert(grid.end(), times.begin(), times.end());
    bool first = true;
    auto observe = [&](const State &s, double) {
        if (first) {
            first = false;
            return;
        }
        for (double v : s)
            if (!std::isfinite(v))
                throw std::runtime_error("dopri: non-finite state");
        out.push_back(Eigen::Map<const Vec>(s.data(), n));
    };
    auto stepper = odeint::make_controlled(opt.atol, opt.rtol, odeint::runge_kutta_dopri5<State>());
    try {
        odeint::integrate_times(stepper, rhs, y, grid.begin(), grid.end(), opt.initial_step, observe,
                                odeint::max_step_checker(static_cast<int>(opt.max_steps)));
    } catch (const odeint::odeint_error &e) {
        throw std::runtime_error(std::string("dopri: ") + e.what());
    }
    return out;
}

double loglog_slope(const std::vector<double> &x, const std::vector<double> &y)
{
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("slope fit needs at least two points");
    double n = static_cast<double>(x.size()), sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

namespace {

Vec initial_state(const SystemSpec &spec)
{
    Vec x(static_cast<Eigen::Index>(spec.vars.dimension()));
    for (std::size_t i = 0; i < spec.vars.dimension(); ++i)
        x[static_cast<Eigen::Index>(i)] = spec.initial[i].get_d();
    return x;
}

struct NumericMap {
    std::vector<std::pair<OscCoef, NumericField>> terms;

    Vec operator()(const Vec &x, double t, double w) const
    {
        Vec out = Vec::Zero(x.size());
        for (const auto &[c, f] : terms)
            out += c.evaluate(t, w) * f(x);
        return out;
    }
};

} // namespace

ValidationReport validate_averaging(const SystemSpec &spec, int order, AveragingMode mode,
                                    const std::vector<double> &omegas, double horizon, int samples)
{
    if (omegas.size() < 2)
        throw std::invalid_argument("validation needs at least two frequencies");
    if (horizon <= 0 || samples < 1)
        throw std::invalid_argument("validation needs a positive horizon and sample count");
    const auto &vars = spec.vars;
    const auto &pv = spec.parameter_values;
    auto w = average_words(spec, mode, order);

    std::vector<std::pair<int, NumericField>> forcing;
    for (const auto &g : spec.generators)
        forcing.emplace_back(g.harmonic, NumericField(g.field, vars, pv));
    std::vector<std::pair<int, NumericField>> averaged;
    for (const auto &[k, f] : transferred_field(w))
        averaged.emplace_back(k, NumericField(f, vars, pv));
    NumericMap u;
    for (const auto &[c, f] : change_of_variables(w).terms)
        u.terms.emplace_back(c, NumericField(f, vars, pv));

    std::vector<double> times;
    for (int i = 1; i <= samples; ++i)
        times.push_back(horizon * i / samples);
    Vec x0 = initial_state(spec);

    ValidationReport rep{order, mode, horizon, {}, 0};
    for (double omega : omegas) {
        auto full = dopri(
            [&](double t, const Vec &x) {
                Vec d = Vec::Zero(x.size());
                for (const auto &[k, f] : forcing)
                    d += std::cos(k * omega * t) * f(x);
                return d;
            },
            x0, 0, times);
        // x(0) = U(xbar(0), 0); U(., 0) is a near-identity map
        Vec xb = x0;
        for (int it = 0; it < 100; ++it) {
            Vec r = u(xb, 0, omega) - x0;
            xb -= r;
            if (r.lpNorm<Eigen::Infinity>() < 1e-15)
                break;
        }
        auto avg = dopri(
            [&](double, const Vec &x) {
                Vec d = Vec::Zero(x.size());
                for (const auto &[k, f] : averaged)
                    d += std::pow(omega, k) * f(x);
                return d;
            },
            xb, 0, times);
        double err = 0;
        for (std::size_t i = 0; i < times.size(); ++i)
            err = std::max(err, (full[i] - u(avg[i], times[i], omega)).lpNorm<Eigen::Infinity>());
        rep.points.push_back({omega, err});
    }
    std::vector<double> xs, ys;
    for (const auto &p : rep.points) {
        xs.push_back(p.omega);
        ys.push_back(p.max_error);
    }
    rep.slope = loglog_slope(xs, ys);
    return rep;
}

StrangCheck strang_local_error(const Eigen::Matrix2d &b, double omega, int order, const std::vector<double> &taus)
{
    using CMat = Eigen::Matrix2cd;
    Eigen::Matrix2d j;
    j << 0, -1, 1, 0;
    // eigen-components of B under B -> exp(-theta J) B exp(theta J)
    std::map<char, int> freq = {{'a', 0}, {'p', 2}, {'m', -2}};
    std::map<char, CMat> comp;
    const int m = 8;
    for (auto [letter, k] : freq) {
        CMat s = CMat::Zero();
        for (int i = 0; i < m; ++i) {
            double th = 2 * M_PI * i / m;
            Eigen::Matrix2d r = (th * j).exp();
            CMat conj = (r.transpose() * b * r).cast<std::complex<double>>();
            s += std::exp(std::complex<double>(0, -k * th)) * conj;
        }
        comp[letter] = s / static_cast<double>(m);
    }

    auto wa = make_word_algebra(Alphabet("apm"), order);
    auto action = word_action(*wa.basis, freq);
    SplitSeries bt(wa.basis, order);
    for (const char *l : {"a", "p", "m"})
        bt.add(l, SplitCoef(1));
    auto g = modified_generator(strang_character(bt, action, wa.mu), action, wa.mu);

    StrangCheck out{taus, {}, 0};
    Eigen::Vector2d x0(1.0, 0.5);
    for (double tau : taus) {
        Eigen::Matrix2d a = omega * j;
        Eigen::Matrix2d half = (0.5 * tau * a).exp();
        Eigen::Vector2d strang = half * (tau * b).exp() * half * x0;
        CMat mod = a.cast<std::complex<double>>();
        for (const auto &[id, c] : g.beta.terms()) {
            // f_w(x) = B_am ... B_a1 x for w = a1 ... am
            CMat p = CMat::Identity();
            for (char l : wa.basis->name(id))
                p = comp[l] * p;
            mod += c.evaluate(tau, omega) * p;
        }
        Eigen::Vector2cd flow = (tau * mod).exp() * x0.cast<std::complex<double>>();
        out.errors.push_back((flow - strang.cast<std::complex<double>>()).norm());
    }
    out.slope = loglog_slope(out.taus, out.errors);
    return out;
}

} // namespace hopfkit::numerics
