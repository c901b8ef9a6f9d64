#include "hopfkit/splitting.hpp"

#include <cmath>
#include <cstdlib>

namespace hopfkit {

namespace {

ComplexPoly resonant_poly(int k)
{
    ComplexPoly p = ComplexPoly::variable(SplitCoef::nvars, SplitCoef::z_var, 2 * k);
    p -= ComplexPoly(SplitCoef::nvars, ComplexRational(1));
    return p;
}

ComplexPoly expand_den(const std::map<int, int> &den)
{
    ComplexPoly p(SplitCoef::nvars, ComplexRational(1));
    for (const auto &[k, e] : den)
        p *= resonant_poly(k).pow(e);
    return p;
}

/// Multiplies num by the factors of target missing from den.
ComplexPoly lift_to(const ComplexPoly &num, const std::map<int, int> &den, const std::map<int, int> &target)
{
    std::map<int, int> missing;
    for (const auto &[k, e] : target) {
        auto it = den.find(k);
        int have = it == den.end() ? 0 : it->second;
        if (e > have)
            missing[k] = e - have;
    }
    return missing.empty() ? num : num * expand_den(missing);
}

std::map<int, int> lcm(const std::map<int, int> &a, const std::map<int, int> &b)
{
    std::map<int, int> out = a;
    for (const auto &[k, e] : b)
        out[k] = std::max(out[k], e);
    return out;
}

const std::vector<std::string> &coef_names()
{
    static const std::vector<std::string> names = {"tau", "w", "z"};
    return names;
}

} // namespace

SplitCoef::SplitCoef(ComplexPoly num, std::map<int, int> den) : num_(std::move(num)), den_(std::move(den))
{
    if (num_.nvars() != nvars)
        throw std::invalid_argument("splitting coefficients use the variables tau, w, z");
    normalize();
}

SplitCoef SplitCoef::monomial(const ComplexRational &c, int tau, int w, int z)
{
    return SplitCoef(ComplexPoly::monomial({tau, w, z}, c));
}

SplitCoef SplitCoef::resonant_factor(int k)
{
    if (k == 0)
        throw std::invalid_argument("no resonant factor for k = 0");
    if (k > 0)
        return SplitCoef(ComplexPoly(nvars, ComplexRational(1)), {{k, 1}});
    // 1/(z^(2k) - 1) = -z^(2|k|) / (z^(2|k|) - 1)
    return SplitCoef(ComplexPoly::monomial({0, 0, -2 * k}, ComplexRational(-1)), {{-k, 1}});
}

void SplitCoef::normalize()
{
    if (num_.is_zero())
        den_.clear();
    for (auto it = den_.begin(); it != den_.end();)
        it = it->second == 0 ? den_.erase(it) : std::next(it);
}

SplitCoef &SplitCoef::operator+=(const SplitCoef &o)
{
    if (o.is_zero())
        return *this;
    if (is_zero()) {
        *this = o;
        return *this;
    }
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        auto l = lcm(den_, o.den_);
        num_ = lift_to(num_, den_, l) + lift_to(o.num_, o.den_, l);
        den_ = std::move(l);
    }
    normalize();
    return *this;
}

SplitCoef &SplitCoef::operator-=(const SplitCoef &o) { return *this += -o; }

SplitCoef &SplitCoef::operator*=(const SplitCoef &o)
{
    num_ *= o.num_;
    for (const auto &[k, e] : o.den_)
        den_[k] += e;
    normalize();
    return *this;
}

SplitCoef &SplitCoef::operator*=(const Rational &c)
{
    num_ *= ComplexRational(c);
    normalize();
    return *this;
}

SplitCoef SplitCoef::operator-() const
{
    SplitCoef r = *this;
    r.num_ = -r.num_;
    return r;
}

bool operator==(const SplitCoef &a, const SplitCoef &b)
{
    if (a.den_ == b.den_)
        return a.num_ == b.num_;
    auto l = lcm(a.den_, b.den_);
    return lift_to(a.num_, a.den_, l) == lift_to(b.num_, b.den_, l);
}

std::complex<double> SplitCoef::evaluate(double tau, double w) const
{
    const std::complex<double> z = std::exp(std::complex<double>(0.0, w * tau / 2));
    auto eval = [&](const ComplexPoly &p) {
        std::complex<double> s = 0.0;
        for (const auto &[e, c] : p.terms())
            s += to_complex(c) * std::pow(tau, e[tau_var]) * std::pow(w, e[w_var]) * std::pow(z, e[z_var]);
        return s;
    };
    std::complex<double> d = 1.0;
    for (const auto &[k, e] : den_)
        d *= std::pow(std::pow(z, 2 * k) - 1.0, e);
    return eval(num_) / d;
}

std::string to_string(const SplitCoef &c)
{
    std::string num = to_string(c.numerator(), coef_names());
    if (c.denominator().empty())
        return num;
    std::string den;
    for (const auto &[k, e] : c.denominator()) {
        if (!den.empty())
            den += "*";
        den += "(z^" + std::to_string(2 * k) + " - 1)";
        if (e != 1)
            den += "^" + std::to_string(e);
    }
    return "(" + num + ")/(" + den + ")";
}

ExpPoly ExpPoly::term(int m, int k, const SplitCoef &c)
{
    ExpPoly p;
    p.add({m, k}, c);
    return p;
}

void ExpPoly::add(const Key &key, const SplitCoef &c)
{
    if (c.is_zero())
        return;
    auto [it, ins] = terms_.try_emplace(key, c);
    if (!ins) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

ExpPoly &ExpPoly::operator+=(const ExpPoly &o)
{
    for (const auto &[key, c] : o.terms_)
        add(key, c);
    return *this;
}

ExpPoly &ExpPoly::operator-=(const ExpPoly &o)
{
    for (const auto &[key, c] : o.terms_)
        add(key, -c);
    return *this;
}

ExpPoly &ExpPoly::operator*=(const Rational &c)
{
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[key, v] : terms_)
        v *= c;
    return *this;
}

ExpPoly operator*(const ExpPoly &a, const ExpPoly &b)
{
    ExpPoly r;
    for (const auto &[ka, ca] : a.terms_)
        for (const auto &[kb, cb] : b.terms_)
            r.add({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    return r;
}

bool operator==(const ExpPoly &a, const ExpPoly &b) { return a.terms_ == b.terms_; }

ExpPoly ExpPoly::integral() const
{
    ExpPoly r;
    for (const auto &[key, c] : terms_) {
        auto [m, k] = key;
        if (k == 0) {
            SplitCoef q = c;
            q *= Rational(1, m + 1);
            r.add({m + 1, 0}, q);
            continue;
        }
        // int_0^s x^m e^(ax) dx = e^(as) sum_j (-1)^j m!/(m-j)! s^(m-j) / a^(j+1)
        //                         - (-1)^m m! / a^(m+1),  a = i k w
        auto inv_a_power = [&](int p) {
            // (1/a)^p = (-i)^p / (k^p w^p)
            ComplexRational f(1);
            for (int i = 0; i < p; ++i)
                f *= ComplexRational(Rational(0), make_rational(-1, k));
            return SplitCoef::monomial(f, 0, -p, 0);
        };
        Rational falling(1);
        for (int j = 0; j <= m; ++j) {
            SplitCoef q = c * inv_a_power(j + 1);
            q *= (j % 2 ? -falling : falling);
            r.add({m - j, k}, q);
            if (j < m)
                falling *= m - j;
        }
        SplitCoef q = c * inv_a_power(m + 1);
        q *= (m % 2 ? falling : -falling);
        r.add({0, 0}, q);
    }
    return r;
}

SplitCoef ExpPoly::at_half_steps(int n) const
{
    SplitCoef s;
    for (const auto &[key, c] : terms_) {
        auto [m, k] = key;
        // (n tau / 2)^m exp(i k w n tau / 2) = (n/2)^m tau^m z^(k n)
        Rational f(1);
        for (int i = 0; i < m; ++i)
            f *= make_rational(n, 2);
        SplitCoef t = c * SplitCoef::monomial(ComplexRational(f), m, 0, k * n);
        s += t;
    }
    return s;
}

std::string to_string(const ExpPoly &p)
{
    if (p.is_zero())
        return "0";
    std::string out;
    for (const auto &[key, c] : p.terms()) {
        if (!out.empty())
            out += " + ";
        out += "[" + to_string(c) + "]";
        if (key.first)
            out += "*s^" + std::to_string(key.first);
        if (key.second)
            out += "*exp(" + std::to_string(key.second) + "*i*w*s)";
    }
    return out;
}

FrequencyAction word_action(const GradedBasis &words, const std::map<char, int> &letter_frequency)
{
    FrequencyAction a;
    a.k.resize(words.size());
    for (int id = 0; id < words.size(); ++id) {
        if (id == GradedBasis::unit)
            continue;
        int k = 0;
        for (char c : words.name(id)) {
            auto it = letter_frequency.find(c);
            if (it == letter_frequency.end())
                throw std::invalid_argument(std::string("no frequency for letter ") + c);
            k += it->second;
        }
        a.k[id] = k;
    }
    return a;
}

SplitSeries act(const SplitSeries &s, const FrequencyAction &action, int half_steps)
{
    SplitSeries r(s.basis(), s.order());
    for (const auto &[id, c] : s.terms())
        r.add(id, c * SplitCoef::monomial(ComplexRational(1), 0, 0, action.frequency(id) * half_steps));
    return r;
}

Series<ExpPoly> act_curve(const SplitSeries &s, const FrequencyAction &action)
{
    Series<ExpPoly> r(s.basis(), s.order());
    for (const auto &[id, c] : s.terms())
        r.add(id, ExpPoly::term(0, action.frequency(id), c));
    return r;
}

ExtendedCharacter compose(const ExtendedCharacter &x, const ExtendedCharacter &y, const FrequencyAction &action,
                          const MuTable &mu)
{
    return {star(x.alpha, act(y.alpha, action, x.half_steps), mu), x.half_steps + y.half_steps};
}

namespace {

SplitSeries evaluate_at(const Series<ExpPoly> &s, int half_steps)
{
    SplitSeries r(s.basis(), s.order());
    for (const auto &[id, c] : s.terms())
        r.add(id, c.at_half_steps(half_steps));
    return r;
}

} // namespace

ExtendedCharacter extended_exp(const SplitSeries &b, const FrequencyAction &action, const MuTable &mu,
                               int half_steps)
{
    if (b.find(GradedBasis::unit))
        throw std::invalid_argument("extended_exp: generator has a unit coefficient");
    auto curve = act_curve(b, action);
    auto alpha = Series<ExpPoly>::unit(b.basis(), b.order());
    for (int n = 1; n <= b.order(); ++n) {
        auto integrand = star_range(alpha, curve, mu, n, n);
        for (const auto &[id, c] : integrand.terms())
            alpha.add(id, c.integral());
    }
    return {evaluate_at(alpha, half_steps), half_steps};
}

ExtendedCharacter strang_character(const SplitSeries &beta_tilde, const FrequencyAction &action,
                                   const MuTable &mu)
{
    SplitSeries scaled = act(beta_tilde, action, 1).scaled(SplitCoef::monomial(ComplexRational(1), 1, 0, 0));
    return {exp_series(scaled, mu), 2};
}

bool is_resonant(int k, const Rational &omega_tau_over_2pi)
{
    if (k == 0)
        return false;
    Rational x = omega_tau_over_2pi * k;
    return x.get_den() == 1 && sgn(x) != 0;
}

ModifiedGenerator modified_generator(const ExtendedCharacter &target, const FrequencyAction &action,
                                     const MuTable &mu, std::optional<Rational> omega_tau_over_2pi)
{
    if (target.half_steps != 2)
        throw std::invalid_argument("modified_generator: the target must advance beta_0 by tau");
    if (!(target.alpha.coefficient(GradedBasis::unit) == SplitCoef(1)))
        throw std::invalid_argument("modified_generator: the target is not a character");
    const auto &basis = target.alpha.basis();
    int order = target.alpha.order();
    ModifiedGenerator out{SplitSeries(basis, order), {}};
    auto alpha = Series<ExpPoly>::unit(basis, order);
    std::vector<ResonantBlock> hits;
    for (int n = 1; n <= order; ++n) {
        auto lower = star_range(alpha, act_curve(out.beta, action), mu, n, n);
        Series<ExpPoly> lower_int(basis, order);
        for (const auto &[id, c] : lower.terms())
            lower_int.add(id, c.integral());
        std::map<int, SplitCoef> rhs;
        for (const auto &[id, c] : target.alpha.terms())
            if (basis->degree(id) == n)
                rhs[id] += c;
        for (const auto &[id, c] : lower_int.terms())
            rhs[id] -= c.at_half_steps(2);
        for (auto &[id, r] : rhs) {
            if (r.is_zero())
                continue;
            int k = action.frequency(id);
            SplitCoef b;
            ExpPoly window;
            if (k == 0) {
                b = r * SplitCoef::monomial(ComplexRational(1), -1, 0, 0);
                window = ExpPoly::term(1, 0);
            } else {
                // window int_0^tau exp(i k w s) ds = (z^(2k) - 1) / (i k w)
                b = r * SplitCoef::monomial(ComplexRational(Rational(0), Rational(k)), 0, 1, 0) *
                    SplitCoef::resonant_factor(k);
                SplitCoef inv = SplitCoef::monomial(ComplexRational(Rational(0), make_rational(-1, k)), 0, -1, 0);
                window = ExpPoly::term(0, k, inv);
                window.add({0, 0}, -inv);
                bool seen = false;
                for (const auto &blk : out.blocks)
                    seen = seen || (blk.degree == n && blk.k == k);
                if (!seen)
                    out.blocks.push_back({n, k});
                if (omega_tau_over_2pi && is_resonant(k, *omega_tau_over_2pi)) {
                    bool dup = false;
                    for (const auto &h : hits)
                        dup = dup || (h.degree == n && h.k == k);
                    if (!dup)
                        hits.push_back({n, k});
                }
            }
            out.beta.add(id, b);
            lower_int.add(id, window * ExpPoly(b));
        }
        for (const auto &[id, c] : lower_int.terms())
            alpha.add(id, c);
        if (!hits.empty()) {
            std::string what = "resonance: ";
            for (const auto &h : hits)
                what += "degree " + std::to_string(h.degree) + " frequency " + std::to_string(h.k) + "; ";
            throw ResonanceError(hits, what + "k w tau lies in 2 pi Z");
        }
    }
    return out;
}

SplitCoef degree_one_factor(int k)
{
    if (k == 0)
        return SplitCoef(1);
    return SplitCoef::monomial(ComplexRational(Rational(0), Rational(k)), 1, 1, k) * SplitCoef::resonant_factor(k);
}

std::string degree_one_factor_text(int k)
{
    if (k == 0)
        return "1";
    std::string kw = std::to_string(k) + "*w*tau/2";
    return "(" + kw + ")/sin(" + kw + ")";
}

std::vector<std::pair<SplitCoef, PolyVectorField>> modified_field(const SplitSeries &beta, const WordMorphism &psi)
{
    std::vector<std::pair<SplitCoef, PolyVectorField>> out;
    for (const auto &[id, c] : beta.terms())
        out.emplace_back(c, psi.basis_function(beta.basis()->name(id)));
    return out;
}

} // namespace hopfkit
