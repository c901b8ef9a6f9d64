#include "hopfkit/osc.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hopfkit {

OscCoef OscCoef::cosine(int harmonic, const Laurent &amplitude)
{
    OscCoef c;
    c.add_term({0, harmonic, false}, amplitude);
    return c;
}

OscCoef OscCoef::sine(int harmonic, const Laurent &amplitude)
{
    OscCoef c;
    c.add_term({0, harmonic, true}, amplitude);
    return c;
}

OscCoef OscCoef::t_power(int m, const Laurent &amplitude)
{
    OscCoef c;
    c.add_term({m, 0, false}, amplitude);
    return c;
}

bool OscCoef::is_periodic() const
{
    for (const auto &[k, v] : terms_)
        if (k.t_power != 0)
            return false;
    return true;
}

int OscCoef::max_harmonic() const
{
    int h = 0;
    for (const auto &[k, v] : terms_)
        h = std::max(h, k.harmonic);
    return h;
}

void OscCoef::add_term(TrigKey key, const Laurent &c)
{
    if (c.is_zero())
        return;
    if (key.t_power < 0)
        throw std::invalid_argument("negative power of t");
    Laurent value = c;
    if (key.harmonic < 0) {
        key.harmonic = -key.harmonic;
        if (key.sine)
            value = -value;
    }
    if (key.sine && key.harmonic == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(key, value);
    if (!inserted) {
        it->second += value;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

OscCoef &OscCoef::operator+=(const OscCoef &o)
{
    for (const auto &[k, v] : o.terms_)
        add_term(k, v);
    return *this;
}

OscCoef &OscCoef::operator-=(const OscCoef &o)
{
    for (const auto &[k, v] : o.terms_)
        add_term(k, -v);
    return *this;
}

OscCoef &OscCoef::operator*=(const Laurent &c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto &[k, v] : terms_)
        v *= c;
    return *this;
}

OscCoef &OscCoef::operator*=(const Rational &c)
{
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[k, v] : terms_)
        v *= c;
    return *this;
}

OscCoef OscCoef::operator-() const
{
    OscCoef r = *this;
    for (auto &[k, v] : r.terms_)
        v = -v;
    return r;
}

void OscCoef::add_product(const OscCoef &a, const OscCoef &b)
{
    static const Rational half(1, 2);
    for (const auto &[ka, ca] : a.terms_) {
        for (const auto &[kb, cb] : b.terms_) {
            int m = ka.t_power + kb.t_power;
            Laurent c = ca * cb;
            int p = ka.harmonic, q = kb.harmonic;
            if (p == 0 && !ka.sine) {
                add_term({m, q, kb.sine}, c);
                continue;
            }
            if (q == 0 && !kb.sine) {
                add_term({m, p, ka.sine}, c);
                continue;
            }
            c *= half;
            if (!ka.sine && !kb.sine) {
                add_term({m, p - q, false}, c);
                add_term({m, p + q, false}, c);
            } else if (ka.sine && kb.sine) {
                add_term({m, p - q, false}, c);
                add_term({m, p + q, false}, -c);
            } else if (ka.sine) {
                add_term({m, p + q, true}, c);
                add_term({m, p - q, true}, c);
            } else {
                add_term({m, p + q, true}, c);
                add_term({m, q - p, true}, c);
            }
        }
    }
}

OscCoef operator*(const OscCoef &a, const OscCoef &b)
{
    OscCoef r;
    r.add_product(a, b);
    return r;
}

OscCoef OscCoef::derivative() const
{
    OscCoef r;
    for (const auto &[key, c] : terms_) {
        if (key.t_power > 0)
            r.add_term({key.t_power - 1, key.harmonic, key.sine}, c * Rational(key.t_power));
        if (key.harmonic > 0) {
            Laurent f = c.shifted(1) * Rational(key.harmonic);
            if (key.sine)
                r.add_term({key.t_power, key.harmonic, false}, f);
            else
                r.add_term({key.t_power, key.harmonic, true}, -f);
        }
    }
    return r;
}

namespace {

// Definite integral from 0 to t of s^m cos(k w s) (or sin) for k > 0,
// by repeated integration by parts.
OscCoef integrate_basis(int m, int k, bool sine)
{
    Laurent inv = Laurent::monomial(-1, Rational(1, k)); // 1/(k w)
    OscCoef r;
    if (!sine) {
        r.add_term({m, k, true}, inv);
        if (m > 0) {
            OscCoef rest = integrate_basis(m - 1, k, true);
            rest *= inv * Rational(-m);
            r += rest;
        }
    } else {
        r.add_term({m, k, false}, -inv);
        if (m > 0) {
            OscCoef rest = integrate_basis(m - 1, k, false);
            rest *= inv * Rational(m);
            r += rest;
        } else {
            r.add_term({0, 0, false}, inv);
        }
    }
    return r;
}

} // namespace

OscCoef OscCoef::integral_from_zero() const
{
    OscCoef r;
    for (const auto &[key, c] : terms_) {
        if (key.harmonic == 0) {
            r.add_term({key.t_power + 1, 0, false}, c * Rational(1, key.t_power + 1));
        } else {
            OscCoef part = integrate_basis(key.t_power, key.harmonic, key.sine);
            part *= c;
            r += part;
        }
    }
    return r;
}

Laurent OscCoef::mean() const
{
    if (!is_periodic())
        throw std::domain_error("mean of a secular coefficient");
    auto it = terms_.find({0, 0, false});
    return it == terms_.end() ? Laurent() : it->second;
}

OscCoef OscCoef::periodic_primitive() const
{
    if (!is_periodic())
        throw std::domain_error("primitive of a secular coefficient");
    OscCoef r;
    for (const auto &[key, c] : terms_) {
        if (key.harmonic == 0)
            throw std::domain_error("primitive of a coefficient with nonzero mean");
        Laurent f = c.shifted(-1) * Rational(1, key.harmonic);
        if (key.sine)
            r.add_term({0, key.harmonic, false}, -f);
        else
            r.add_term({0, key.harmonic, true}, f);
    }
    return r;
}

Laurent OscCoef::value_at_zero() const
{
    auto it = terms_.find({0, 0, false});
    Laurent r = it == terms_.end() ? Laurent() : it->second;
    for (const auto &[key, c] : terms_)
        if (key.t_power == 0 && key.harmonic > 0 && !key.sine)
            r += c;
    return r;
}

std::map<int, Laurent> OscCoef::value_at_period() const
{
    // t = 2 pi / w: cos(2 pi k) = 1, sin = 0, t^m = 2^m pi^m w^-m.
    std::map<int, Laurent> out;
    for (const auto &[key, c] : terms_) {
        if (key.sine)
            continue;
        mpz_class two_m;
        mpz_ui_pow_ui(two_m.get_mpz_t(), 2, static_cast<unsigned long>(key.t_power));
        out[key.t_power] += c.shifted(-key.t_power) * Rational(two_m);
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

double OscCoef::evaluate(double t, double w) const
{
    double s = 0.0;
    for (const auto &[key, c] : terms_) {
        double trig = key.sine ? std::sin(key.harmonic * w * t) : std::cos(key.harmonic * w * t);
        s += c.evaluate(w) * std::pow(t, key.t_power) * trig;
    }
    return s;
}

std::string to_string(const OscCoef &c)
{
    if (c.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto &[key, coef] : c.terms()) {
        std::string factor;
        if (key.t_power > 0)
            factor += key.t_power == 1 ? "t" : "t^" + std::to_string(key.t_power);
        if (key.harmonic > 0) {
            if (!factor.empty())
                factor += "*";
            factor += key.sine ? "sin(" : "cos(";
            if (key.harmonic != 1)
                factor += std::to_string(key.harmonic) + "*";
            factor += "w*t)";
        }
        std::string cs = to_string(coef);
        bool single = coef.terms().size() == 1;
        std::string term;
        if (factor.empty())
            term = single ? cs : "(" + cs + ")";
        else if (coef == Laurent(1))
            term = factor;
        else if (coef == Laurent(-1))
            term = "-" + factor;
        else
            term = (single ? cs : "(" + cs + ")") + "*" + factor;
        if (!first) {
            if (term[0] == '-')
                out += " - " + term.substr(1);
            else
                out += " + " + term;
        } else {
            out += term;
        }
        first = false;
    }
    return out;
}

} // namespace hopfkit
