#include "hopfkit/laurent.hpp"

#include <cmath>

namespace hopfkit {

Rational Laurent::coefficient(int exponent) const
{
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Laurent::add_term(int exponent, const Rational &c)
{
    if (sgn(c) == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0)
            terms_.erase(it);
    }
}

Laurent &Laurent::operator+=(const Laurent &o)
{
    for (const auto &[e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

Laurent &Laurent::operator-=(const Laurent &o)
{
    for (const auto &[e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

Laurent operator*(const Laurent &a, const Laurent &b)
{
    Laurent r;
    for (const auto &[ea, ca] : a.terms_)
        for (const auto &[eb, cb] : b.terms_)
            r.add_term(ea + eb, ca * cb);
    return r;
}

Laurent &Laurent::operator*=(const Laurent &o)
{
    *this = *this * o;
    return *this;
}

Laurent &Laurent::operator*=(const Rational &c)
{
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[e, v] : terms_)
        v *= c;
    return *this;
}

Laurent Laurent::operator-() const
{
    Laurent r = *this;
    for (auto &[e, v] : r.terms_)
        v = -v;
    return r;
}

Laurent Laurent::shifted(int shift) const
{
    Laurent r;
    for (const auto &[e, c] : terms_)
        r.terms_.emplace(e + shift, c);
    return r;
}

double Laurent::evaluate(double w) const
{
    double s = 0.0;
    for (const auto &[e, c] : terms_)
        s += c.get_d() * std::pow(w, e);
    return s;
}

namespace {

std::string term_text(int e, const Rational &c, bool leading)
{
    std::string out;
    Rational mag = abs(c);
    if (!leading)
        out += sgn(c) < 0 ? " - " : " + ";
    else if (sgn(c) < 0)
        out += "-";
    if (e == 0)
        return out + mag.get_str();
    if (mag != 1)
        out += mag.get_str() + "*";
    out += "w";
    if (e != 1)
        out += "^" + std::to_string(e);
    return out;
}

} // namespace

std::string to_string(const Laurent &l)
{
    if (l.is_zero())
        return "0";
    std::string out;
    bool leading = true;
    for (auto it = l.terms().rbegin(); it != l.terms().rend(); ++it) {
        out += term_text(it->first, it->second, leading);
        leading = false;
    }
    return out;
}

} // namespace hopfkit
