#include "hopfkit/lie_averaging.hpp"

#include <stdexcept>

namespace hopfkit {

namespace {

using Vec = LieVec<OscCoef>;

void add_to(Vec &v, int i, const OscCoef &c)
{
    if (c.is_zero())
        return;
    auto [it, ins] = v.try_emplace(i, c);
    if (!ins) {
        it->second += c;
        if (it->second.is_zero())
            v.erase(it);
    }
}

void axpy(Vec &y, const Rational &a, const Vec &x)
{
    for (const auto &[i, c] : x)
        add_to(y, i, c * a);
}

Vec degree_part(const GradedVFAlgebra &alg, const Vec &v, int n)
{
    Vec out;
    for (const auto &[i, c] : v)
        if (alg.degree(i) == n)
            out.emplace(i, c);
    return out;
}

Rational factorial(int k)
{
    Rational r(1);
    for (int i = 2; i <= k; ++i)
        r *= i;
    return r;
}

} // namespace

LieVec<OscCoef> lie_bracket(const GradedVFAlgebra &alg, const LieVec<OscCoef> &x, const LieVec<OscCoef> &y,
                            int max_degree)
{
    // sum_t B_t sum_i x_i (sum_j c_ij^t y_j): scalar combinations first
    Vec out;
    for (const auto &[i, xi] : x) {
        if (alg.degree(i) >= max_degree)
            continue;
        Vec inner;
        for (const auto &[j, yj] : y) {
            if (alg.degree(i) + alg.degree(j) > max_degree)
                continue;
            for (const auto &[t, c] : alg.bracket(i, j))
                add_to(inner, t, yj * c);
        }
        for (const auto &[t, z] : inner)
            add_to(out, t, xi * z);
    }
    return out;
}

LieAveragingResult lie_average(const GradedVFAlgebra &alg, const LieVec<OscCoef> &beta, AveragingMode mode,
                               int order)
{
    if (order > alg.order())
        throw std::invalid_argument("averaging order exceeds the closure order");
    for (const auto &[i, c] : beta)
        if (!c.is_periodic())
            throw std::invalid_argument("beta(t) has a secular coefficient");
    // per degree d: W_d, W'_d, and the ad-powers [ad_W^k X]_d for X = beta_bar, W'
    std::vector<Vec> w(order + 1), wp(order + 1);
    std::vector<std::vector<Vec>> adb(order + 1, std::vector<Vec>(order + 1));
    std::vector<std::vector<Vec>> adw(order + 1, std::vector<Vec>(order + 1));
    LieAveragingResult result{mode, order, {}, {}};
    for (int n = 1; n <= order; ++n) {
        Vec q = degree_part(alg, beta, n);
        for (int k = 1; k < n; ++k) {
            Vec &a = adb[k][n];
            Vec &b = adw[k][n];
            for (int m = 1; m + k <= n; ++m) {
                if (w[m].empty())
                    continue;
                Vec x = lie_bracket(alg, w[m], adb[k - 1][n - m], n);
                for (auto &[i, c] : x)
                    add_to(a, i, c);
                Vec y = lie_bracket(alg, w[m], adw[k - 1][n - m], n);
                for (auto &[i, c] : y)
                    add_to(b, i, c);
            }
            Rational s = k % 2 ? Rational(1) : Rational(-1);
            axpy(q, s / factorial(k), a);
            axpy(q, s / factorial(k + 1), b);
        }
        for (const auto &[i, c] : q) {
            Laurent m = c.mean();
            if (!m.is_zero()) {
                result.beta_bar[i] = m;
                adb[0][n][i] = OscCoef(m);
            }
            OscCoef d = c - OscCoef(m);
            if (d.is_zero())
                continue;
            OscCoef p = d.periodic_primitive();
            if (mode == AveragingMode::stroboscopic)
                p -= OscCoef(p.value_at_zero());
            adw[0][n][i] = d;
            wp[n][i] = d;
            if (!p.is_zero()) {
                w[n][i] = p;
                result.w[i] = p;
            }
        }
    }
    return result;
}

LieVec<OscCoef> lie_residual(const GradedVFAlgebra &alg, const LieVec<OscCoef> &beta, const LieAveragingResult &r)
{
    int n = r.order;
    Vec deriv, bbar;
    for (const auto &[i, c] : r.w)
        add_to(deriv, i, c.derivative());
    for (const auto &[i, c] : r.beta_bar)
        add_to(bbar, i, OscCoef(c));
    Vec out = deriv;
    // phi(ad_W) W'
    Vec power = deriv;
    for (int k = 1; k < n; ++k) {
        power = lie_bracket(alg, r.w, power, n);
        axpy(out, (k % 2 ? Rational(-1) : Rational(1)) / factorial(k + 1), power);
    }
    for (const auto &[i, c] : beta)
        if (alg.degree(i) <= n)
            add_to(out, i, -c);
    // exp(-ad_W) beta_bar
    power = bbar;
    axpy(out, Rational(1), bbar);
    for (int k = 1; k < n; ++k) {
        power = lie_bracket(alg, r.w, power, n);
        axpy(out, (k % 2 ? Rational(-1) : Rational(1)) / factorial(k), power);
    }
    return out;
}

LaurentField lie_transfer(const GradedVFAlgebra &alg, const LieVec<Laurent> &v)
{
    LaurentField out;
    for (const auto &[i, c] : v)
        for (const auto &[k, q] : c.terms()) {
            auto it = out.find(k);
            if (it == out.end())
                out.emplace(k, alg.field(i) * q);
            else
                it->second += alg.field(i) * q;
        }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

} // namespace hopfkit
