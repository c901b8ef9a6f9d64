#pragma once

#include "hopfkit/rational.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopfkit {

using Exponents = std::vector<int>;

/// Sparse multivariate polynomial over an exact scalar, in a fixed number of
/// variables. Negative exponents are admitted (Laurent), which is used for the
/// frequency variable w. Variable names live with the owner (see VarNames).
template <class S> class Poly {
public:
    using Terms = std::map<Exponents, S>;

    Poly() = default;
    explicit Poly(std::size_t nvars) : nvars_(nvars) {}
    Poly(std::size_t nvars, const S &c) : nvars_(nvars)
    {
        add_term(Exponents(nvars, 0), c);
    }

    static Poly variable(std::size_t nvars, std::size_t index, int power = 1)
    {
        Poly p(nvars);
        Exponents e(nvars, 0);
        e.at(index) = power;
        p.add_term(e, S(1));
        return p;
    }
    static Poly monomial(const Exponents &e, const S &c)
    {
        Poly p(e.size());
        p.add_term(e, c);
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    const Terms &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Exponents &e, const S &c)
    {
        if (hopfkit::is_zero(c))
            return;
        check(e.size());
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (hopfkit::is_zero(it->second))
                terms_.erase(it);
        }
    }

    S coefficient(const Exponents &e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? S(0) : it->second;
    }

    Poly &operator+=(const Poly &o)
    {
        adopt(o);
        for (const auto &[e, c] : o.terms_)
            add_term(e, c);
        return *this;
    }
    Poly &operator-=(const Poly &o)
    {
        adopt(o);
        for (const auto &[e, c] : o.terms_)
            add_term(e, -c);
        return *this;
    }
    Poly &operator*=(const S &c)
    {
        if (hopfkit::is_zero(c)) {
            terms_.clear();
            return *this;
        }
        for (auto &[e, v] : terms_)
            v *= c;
        return *this;
    }
    Poly operator-() const
    {
        Poly r = *this;
        for (auto &[e, v] : r.terms_)
            v = -v;
        return r;
    }
    friend Poly operator+(Poly a, const Poly &b) { return a += b; }
    friend Poly operator-(Poly a, const Poly &b) { return a -= b; }
    friend Poly operator*(Poly a, const S &c) { return a *= c; }
    friend Poly operator*(const S &c, Poly a) { return a *= c; }
    friend Poly operator*(const Poly &a, const Poly &b)
    {
        Poly r(std::max(a.nvars_, b.nvars_));
        if (a.is_zero() || b.is_zero())
            return r;
        a.check(b.nvars_);
        Exponents e(r.nvars_);
        for (const auto &[ea, ca] : a.terms_)
            for (const auto &[eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i)
                    e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    Poly &operator*=(const Poly &o) { return *this = *this * o; }
    friend bool operator==(const Poly &a, const Poly &b) { return a.terms_ == b.terms_; }

    Poly derivative(std::size_t var) const
    {
        Poly r(nvars_);
        for (const auto &[e, c] : terms_) {
            if (e[var] == 0)
                continue;
            Exponents d = e;
            S k = c;
            k *= S(e[var]);
            d[var] -= 1;
            r.add_term(d, k);
        }
        return r;
    }

    Poly pow(int n) const
    {
        Poly r(nvars_, S(1));
        for (int i = 0; i < n; ++i)
            r *= *this;
        return r;
    }

    /// Replace variable var by the polynomial value (nonnegative powers only).
    Poly substitute(std::size_t var, const Poly &value) const
    {
        Poly r(nvars_);
        std::map<int, Poly> powers;
        for (const auto &[e, c] : terms_) {
            if (e[var] < 0)
                throw std::domain_error("substitution into a negative power");
            Exponents rest = e;
            rest[var] = 0;
            auto it = powers.find(e[var]);
            if (it == powers.end())
                it = powers.emplace(e[var], value.pow(e[var])).first;
            r += monomial(rest, c) * it->second;
        }
        return r;
    }

    /// Coefficient extraction: group terms by the exponent of one variable.
    std::map<int, Poly> split_by(std::size_t var) const
    {
        std::map<int, Poly> out;
        for (const auto &[e, c] : terms_) {
            Exponents rest = e;
            rest[var] = 0;
            auto [it, ins] = out.try_emplace(e[var], Poly(nvars_));
            it->second.add_term(rest, c);
        }
        return out;
    }

    int degree_in(std::size_t var) const
    {
        int d = 0;
        for (const auto &[e, c] : terms_)
            d = std::max(d, e[var]);
        return d;
    }

private:
    void check(std::size_t n) const
    {
        if (nvars_ != n)
            throw std::invalid_argument("polynomial variable count mismatch");
    }
    void adopt(const Poly &o)
    {
        if (terms_.empty() && nvars_ == 0)
            nvars_ = o.nvars_;
        if (!o.terms_.empty() || o.nvars_ != 0)
            check(o.nvars_);
    }

    std::size_t nvars_ = 0;
    Terms terms_;
};

template <class S> bool is_zero(const Poly<S> &p) { return p.is_zero(); }

using RationalPoly = Poly<Rational>;

inline double to_double(const Rational &r) { return r.get_d(); }
inline std::complex<double> to_complex(const ComplexRational &c) { return {c.re.get_d(), c.im.get_d()}; }

inline double evaluate(const RationalPoly &p, const std::vector<double> &x)
{
    double s = 0.0;
    for (const auto &[e, c] : p.terms()) {
        double m = c.get_d();
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0)
                m *= std::pow(x[i], e[i]);
        s += m;
    }
    return s;
}

/// Text form with the given variable names; monomials in descending order of
/// exponent vectors, e.g. "-1/2*X^3 - 1/4*X + A*C".
template <class S> std::string to_string(const Poly<S> &p, const std::vector<std::string> &names)
{
    if (p.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto &[e, c] = *it;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += names.at(i);
            if (e[i] != 1)
                mono += "^" + std::to_string(e[i]);
        }
        std::string cs = to_string(c);
        bool negative = !cs.empty() && cs[0] == '-';
        if (negative)
            cs = cs.substr(1);
        std::string term;
        if (mono.empty())
            term = cs;
        else if (cs == "1")
            term = mono;
        else
            term = cs + "*" + mono;
        if (first)
            out += negative ? "-" + term : term;
        else
            out += (negative ? " - " : " + ") + term;
        first = false;
    }
    return out;
}

} // namespace hopfkit
