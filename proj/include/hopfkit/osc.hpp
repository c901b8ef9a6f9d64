#pragma once

#include "hopfkit/laurent.hpp"

#include <map>
#include <string>
#include <tuple>

namespace hopfkit {

/// Basis function t^m * cos(k w t) or t^m * sin(k w t), k >= 0.
struct TrigKey {
    int t_power = 0;
    int harmonic = 0;
    bool sine = false;

    friend auto operator<=>(const TrigKey &, const TrigKey &) = default;
};

/// Time-dependent coefficient: finite sum of q(w) t^m trig(k w t) with
/// q a Laurent polynomial in w. Always stored in the linear cos/sin basis
/// (products are rewritten with product-to-sum identities).
class OscCoef {
public:
    using Terms = std::map<TrigKey, Laurent>;

    OscCoef() = default;
    OscCoef(const Laurent &constant) { add_term({0, 0, false}, constant); }
    OscCoef(const Rational &constant) : OscCoef(Laurent(constant)) {}
    OscCoef(long constant) : OscCoef(Laurent(constant)) {}

    static OscCoef cosine(int harmonic, const Laurent &amplitude = Laurent(1));
    static OscCoef sine(int harmonic, const Laurent &amplitude = Laurent(1));
    /// t^m with the given amplitude.
    static OscCoef t_power(int m, const Laurent &amplitude = Laurent(1));

    const Terms &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// True when no secular (t^m, m > 0) factor is present.
    bool is_periodic() const;
    int max_harmonic() const;

    void add_term(TrigKey key, const Laurent &c);

    OscCoef &operator+=(const OscCoef &o);
    OscCoef &operator-=(const OscCoef &o);
    OscCoef &operator*=(const Laurent &c);
    OscCoef &operator*=(const Rational &c);
    OscCoef operator-() const;

    friend OscCoef operator+(OscCoef a, const OscCoef &b) { return a += b; }
    friend OscCoef operator-(OscCoef a, const OscCoef &b) { return a -= b; }
    friend OscCoef operator*(const OscCoef &a, const OscCoef &b);
    friend OscCoef operator*(OscCoef a, const Rational &c) { return a *= c; }
    friend OscCoef operator*(const Rational &c, OscCoef a) { return a *= c; }
    friend OscCoef operator*(OscCoef a, const Laurent &c) { return a *= c; }
    friend bool operator==(const OscCoef &a, const OscCoef &b) { return a.terms_ == b.terms_; }

    /// Accumulates a * b into *this without building the temporary.
    void add_product(const OscCoef &a, const OscCoef &b);

    OscCoef derivative() const;
    /// Exact antiderivative vanishing at t = 0 (secular terms allowed).
    OscCoef integral_from_zero() const;
    /// Period mean; throws std::domain_error on secular input.
    Laurent mean() const;
    /// Unique zero-mean antiderivative; requires periodic, zero-mean input.
    OscCoef periodic_primitive() const;
    Laurent value_at_zero() const;
    /// Value at t = 2 pi / w as a polynomial in pi: map pi-power -> Laurent.
    std::map<int, Laurent> value_at_period() const;
    double evaluate(double t, double w) const;

private:
    Terms terms_;
};

inline bool is_zero(const OscCoef &c) { return c.is_zero(); }

std::string to_string(const OscCoef &c);

} // namespace hopfkit
