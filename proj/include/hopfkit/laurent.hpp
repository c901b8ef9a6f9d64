#pragma once

#include "hopfkit/rational.hpp"

#include <map>
#include <string>

namespace hopfkit {

/// Laurent polynomial in the forcing frequency w (omega) with rational
/// coefficients. Zero coefficients are never stored.
class Laurent {
public:
    using Terms = std::map<int, Rational>;

    Laurent() = default;
    Laurent(const Rational &c) { add_term(0, c); }
    Laurent(long c) { add_term(0, Rational(c)); }

    static Laurent monomial(int exponent, const Rational &c = Rational(1))
    {
        Laurent l;
        l.add_term(exponent, c);
        return l;
    }

    const Terms &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
    Rational coefficient(int exponent) const;
    int min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
    int max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    void add_term(int exponent, const Rational &c);

    Laurent &operator+=(const Laurent &o);
    Laurent &operator-=(const Laurent &o);
    Laurent &operator*=(const Laurent &o);
    Laurent &operator*=(const Rational &c);
    Laurent operator-() const;

    friend Laurent operator+(Laurent a, const Laurent &b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent &b) { return a -= b; }
    friend Laurent operator*(const Laurent &a, const Laurent &b);
    friend Laurent operator*(Laurent a, const Rational &c) { return a *= c; }
    friend Laurent operator*(const Rational &c, Laurent a) { return a *= c; }
    friend bool operator==(const Laurent &a, const Laurent &b) { return a.terms_ == b.terms_; }

    /// Multiply by w^shift.
    Laurent shifted(int shift) const;
    double evaluate(double w) const;

private:
    Terms terms_;
};

inline bool is_zero(const Laurent &l) { return l.is_zero(); }

/// Canonical exact text, e.g. "-1/2*w^-2" or "3/4 + w^-1".
std::string to_string(const Laurent &l);

} // namespace hopfkit
