#pragma once

#include "hopfkit/poly.hpp"
#include "hopfkit/series.hpp"
#include "hopfkit/vector_fields.hpp"

#include <complex>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopfkit {

using ComplexPoly = Poly<ComplexRational>;

/// Exact coefficients of the splitting analysis: p(tau, w, z) / prod_K
/// (z^(2K) - 1)^e_K with z = exp(i w tau / 2), K > 0. Denominators are kept
/// as formal products and never reduced; equality cross-multiplies.
class SplitCoef {
public:
    static constexpr std::size_t tau_var = 0, w_var = 1, z_var = 2, nvars = 3;

    SplitCoef() : num_(nvars) {}
    SplitCoef(long c) : num_(nvars, ComplexRational(c)) {}
    SplitCoef(const ComplexRational &c) : num_(nvars, c) {}
    explicit SplitCoef(ComplexPoly num, std::map<int, int> den = {});

    /// c tau^a w^b z^c.
    static SplitCoef monomial(const ComplexRational &c, int tau, int w, int z);
    /// 1 / (z^(2K) - 1) for K != 0.
    static SplitCoef resonant_factor(int k);

    const ComplexPoly &numerator() const { return num_; }
    const std::map<int, int> &denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    SplitCoef &operator+=(const SplitCoef &o);
    SplitCoef &operator-=(const SplitCoef &o);
    SplitCoef &operator*=(const SplitCoef &o);
    SplitCoef &operator*=(const Rational &c);
    SplitCoef operator-() const;
    friend SplitCoef operator+(SplitCoef a, const SplitCoef &b) { return a += b; }
    friend SplitCoef operator-(SplitCoef a, const SplitCoef &b) { return a -= b; }
    friend SplitCoef operator*(SplitCoef a, const SplitCoef &b) { return a *= b; }
    friend bool operator==(const SplitCoef &a, const SplitCoef &b);

    std::complex<double> evaluate(double tau, double w) const;

private:
    void normalize();

    ComplexPoly num_;
    std::map<int, int> den_;
};

inline bool is_zero(const SplitCoef &c) { return c.is_zero(); }
/// Numerator and denominator in tau, w and z.
std::string to_string(const SplitCoef &c);

/// Functions sum c sigma^m exp(i K w sigma) of an auxiliary time sigma.
class ExpPoly {
public:
    using Key = std::pair<int, int>;
    using Terms = std::map<Key, SplitCoef>;

    ExpPoly() = default;
    ExpPoly(long c) { add({0, 0}, SplitCoef(c)); }
    ExpPoly(const SplitCoef &c) { add({0, 0}, c); }
    static ExpPoly term(int m, int k, const SplitCoef &c = SplitCoef(1));

    const Terms &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(const Key &key, const SplitCoef &c);

    ExpPoly &operator+=(const ExpPoly &o);
    ExpPoly &operator-=(const ExpPoly &o);
    ExpPoly &operator*=(const Rational &c);
    ExpPoly &operator*=(const ExpPoly &o) { return *this = *this * o; }
    friend ExpPoly operator*(const ExpPoly &a, const ExpPoly &b);
    friend ExpPoly operator+(ExpPoly a, const ExpPoly &b) { return a += b; }
    friend bool operator==(const ExpPoly &a, const ExpPoly &b);

    /// Antiderivative vanishing at sigma = 0.
    ExpPoly integral() const;
    /// Value at sigma = n tau / 2.
    SplitCoef at_half_steps(int n) const;

private:
    Terms terms_;
};

inline bool is_zero(const ExpPoly &p) { return p.is_zero(); }
std::string to_string(const ExpPoly &p);

using SplitSeries = Series<SplitCoef>;

/// exp(t beta_0) acts on basis element j by exp(i k_j w t).
struct FrequencyAction {
    std::vector<int> k;
    int frequency(int id) const { return k.at(id); }
};
/// Frequencies of words: sums of letter frequencies.
FrequencyAction word_action(const GradedBasis &words, const std::map<char, int> &letter_frequency);

/// The action at tau_0 = n tau / 2.
SplitSeries act(const SplitSeries &s, const FrequencyAction &action, int half_steps);
/// The action at tau_0 = sigma.
Series<ExpPoly> act_curve(const SplitSeries &s, const FrequencyAction &action);

/// Element (alpha, tau_0) of the extended group, exp(tau_0 beta_0) followed
/// by alpha; tau_0 = half_steps * tau / 2.
struct ExtendedCharacter {
    SplitSeries alpha;
    int half_steps;
};
/// (a, s) (b, t) = (a * act(s) b, s + t).
ExtendedCharacter compose(const ExtendedCharacter &x, const ExtendedCharacter &y, const FrequencyAction &action,
                          const MuTable &mu);
/// exp(tau_0 (beta_0 + b)) for tau_0 = half_steps * tau / 2, through the Chen
/// series of sigma -> act(sigma) b on [0, tau_0].
ExtendedCharacter extended_exp(const SplitSeries &b, const FrequencyAction &action, const MuTable &mu,
                               int half_steps);
/// exp(tau/2 beta_0) exp(tau beta_tilde) exp(tau/2 beta_0) as
/// (exp(tau act(tau/2) beta_tilde), tau).
ExtendedCharacter strang_character(const SplitSeries &beta_tilde, const FrequencyAction &action,
                                   const MuTable &mu);

/// A block with k != 0 divides by z^(2k) - 1, which vanishes when
/// k w tau lies in 2 pi Z.
struct ResonantBlock {
    int degree;
    int k;
};

class ResonanceError : public std::runtime_error {
public:
    ResonanceError(std::vector<ResonantBlock> blocks, const std::string &what)
        : std::runtime_error(what), blocks_(std::move(blocks))
    {
    }
    const std::vector<ResonantBlock> &blocks() const { return blocks_; }

private:
    std::vector<ResonantBlock> blocks_;
};

/// True when k w tau = 2 pi r k lies in 2 pi Z \ {0}.
bool is_resonant(int k, const Rational &omega_tau_over_2pi);

struct ModifiedGenerator {
    SplitSeries beta;
    /// The blocks that divide by z^(2k) - 1, i.e. the resonance zero set.
    std::vector<ResonantBlock> blocks;
};

/// beta^tau with exp(tau (beta_0 + beta^tau)) = target, degree by degree up to
/// the series order. The target must have tau_0 = tau. With a value of
/// w tau / (2 pi), throws ResonanceError if an active block is resonant.
ModifiedGenerator modified_generator(const ExtendedCharacter &target, const FrequencyAction &action,
                                     const MuTable &mu, std::optional<Rational> omega_tau_over_2pi = std::nullopt);

/// (k w tau / 2) / sin(k w tau / 2), which is i k w tau z^k / (z^(2k) - 1).
SplitCoef degree_one_factor(int k);
/// "(2*w*tau/2)/sin(2*w*tau/2)" style text, "1" for k = 0.
std::string degree_one_factor_text(int k);

/// sum <beta, w> f_w over words with letter fields, one term per word.
std::vector<std::pair<SplitCoef, PolyVectorField>> modified_field(const SplitSeries &beta, const WordMorphism &psi);

} // namespace hopfkit
