#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace hopfkit {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational &r) { return r.get_str(); }

inline bool is_zero(const Rational &r) { return sgn(r) == 0; }

/// Parses "p", "-p" or "p/q".
inline Rational parse_rational(std::string_view text)
{
    std::string s(text);
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational: " + s);
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

/// Gaussian rationals, used where rotation blocks are diagonalized.
struct ComplexRational {
    Rational re;
    Rational im;

    ComplexRational() = default;
    ComplexRational(Rational r) : re(std::move(r)) {}
    ComplexRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    ComplexRational(long r) : re(r) {}

    static ComplexRational i() { return {Rational(0), Rational(1)}; }

    ComplexRational conj() const { return {re, -im}; }

    ComplexRational &operator+=(const ComplexRational &o)
    {
        re += o.re;
        im += o.im;
        return *this;
    }
    ComplexRational &operator-=(const ComplexRational &o)
    {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    ComplexRational &operator*=(const ComplexRational &o)
    {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    ComplexRational &operator/=(const ComplexRational &o)
    {
        Rational n = o.re * o.re + o.im * o.im;
        if (sgn(n) == 0)
            throw std::domain_error("division by zero");
        *this *= o.conj();
        re /= n;
        im /= n;
        return *this;
    }
    friend ComplexRational operator+(ComplexRational a, const ComplexRational &b) { return a += b; }
    friend ComplexRational operator-(ComplexRational a, const ComplexRational &b) { return a -= b; }
    friend ComplexRational operator*(ComplexRational a, const ComplexRational &b) { return a *= b; }
    friend ComplexRational operator/(ComplexRational a, const ComplexRational &b) { return a /= b; }
    ComplexRational operator-() const { return {-re, -im}; }
    friend bool operator==(const ComplexRational &a, const ComplexRational &b)
    {
        return a.re == b.re && a.im == b.im;
    }
};

inline bool is_zero(const ComplexRational &c) { return sgn(c.re) == 0 && sgn(c.im) == 0; }

inline std::string to_string(const ComplexRational &c)
{
    if (sgn(c.im) == 0)
        return c.re.get_str();
    if (sgn(c.re) == 0)
        return c.im.get_str() + "*i";
    return "(" + c.re.get_str() + (sgn(c.im) > 0 ? "+" : "") + c.im.get_str() + "*i)";
}

} // namespace hopfkit
