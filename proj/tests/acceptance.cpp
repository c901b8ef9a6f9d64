// One line per acceptance criterion. Exit status 1 when any criterion fails.

#include "commands.hpp"
#include "crosschecks.hpp"

#include "hopfkit/averaging.hpp"
#include "hopfkit/hopf.hpp"
#include "hopfkit/numerics.hpp"
#include "hopfkit/pipelines.hpp"
#include "hopfkit/splitting.hpp"
#include "hopfkit/system.hpp"

#include <sys/resource.h>

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace hopfkit;

namespace {

struct Verdict {
    bool pass;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char *f, double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

SystemSpec ode5() { return load_system(std::string(HOPFKIT_DATA_DIR) + "/ode5.json"); }

OscSeries letter_curve(const WordAlgebra &wa, const SystemSpec &spec)
{
    OscSeries b(wa.basis, wa.order);
    for (const auto &g : spec.generators)
        b.add(std::string(1, g.letter), OscCoef::cosine(g.harmonic));
    return b;
}

Verdict criterion1()
{
    auto t0 = std::chrono::steady_clock::now();
    auto spec = ode5();
    auto wa = make_word_algebra(spec.alphabet(), 3);
    auto r = average(letter_curve(wa, spec), wa.mu, AveragingMode::zero_mean, 3);
    double secs = seconds_since(t0);
    LaurentSeries published(wa.basis, 3);
    published.add("a", Laurent(1));
    const std::vector<std::tuple<const char *, long, long>> display{
        {"abb", 1, 4},   {"bab", -1, 2},  {"bba", 1, 4},   {"acc", 1, 16},  {"cac", -1, 8},
        {"cca", 1, 16},  {"add", 1, 36},  {"dad", -1, 18}, {"dda", 1, 36},  {"bbc", -1, 8},
        {"bcb", 1, 4},   {"cbb", -1, 8},  {"bcd", -1, 12}, {"bdc", 1, 8},   {"cbd", -1, 24},
        {"cdb", 1, 8},   {"dbc", -1, 24}, {"dcb", -1, 12}};
    for (const auto &[w, p, q] : display)
        published.add(w, Laurent::monomial(-2, make_rational(p, q)));
    bool ok = r.beta_bar == published && r.beta_bar.size() == 19 && secs < 10;
    return {ok, std::to_string(r.beta_bar.size()) + " terms, equal to the display: " +
                    (r.beta_bar == published ? "yes" : "no") + ", " + fmt("%.2f s", secs)};
}

Verdict criterion2()
{
    auto spec = ode5();
    auto wa = make_word_algebra(spec.alphabet(), 3);
    auto r = average(letter_curve(wa, spec), wa.mu, AveragingMode::stroboscopic, 3);
    return {r.beta_bar.size() == 40, std::to_string(r.beta_bar.size()) + " nonzero coefficients"};
}

Verdict criterion3()
{
    auto spec = ode5();
    auto rep = run_average(spec, Backend::words, AveragingMode::zero_mean, 3);
    auto names = spec.vars.names();
    auto P = [&](const std::string &s) { return parse_poly(s, names); };
    auto idx = [&](const char *v) { return spec.vars.index(v); };
    if (rep.field.size() != 2 || !rep.field.count(0) || !rep.field.count(-2))
        return {false, "unexpected powers of w"};
    const auto &f0 = rep.field.at(0), &f2 = rep.field.at(-2);
    // C, S solve the oscillator from (1, 0), so C stands for cos(t/10)
    bool cs = f0[idx("C")] == P("-S/10") && f0[idx("S")] == P("C/10") && spec.initial[idx("C")] == 1 &&
              spec.initial[idx("S")] == 0 && f2[idx("C")].is_zero() && f2[idx("S")].is_zero();
    bool lead = f0[idx("X")] == P("Y") && f0[idx("Y")] == P("-X/4 - X^3/2 - Y + V/20 + A*C") &&
                f0[idx("V")] == P("-V/100 - Y/2");
    bool corr = f2[idx("X")] == P("3*X/4") && f2[idx("Y")] == P("-9*X^3/4 + 51*X/640 - 3*Y/4") &&
                f2[idx("V")] == P("-3*X/8");
    return {cs && lead && corr, std::string("leading part ") + (lead ? "equal" : "differs") + ", w^-2 part " +
                                    (corr ? "equal" : "differs") + ", C,S elimination " + (cs ? "valid" : "invalid")};
}

std::map<int, WordPoly> expanded(const std::vector<CompressedTerm> &terms)
{
    std::map<int, WordPoly> out;
    for (const auto &t : terms)
        axpy(out[t.w_power], t.coefficient, expand(t.expr));
    for (auto &[k, p] : out)
        for (auto it = p.begin(); it != p.end();)
            it = it->second == 0 ? p.erase(it) : std::next(it);
    return out;
}

void criterion4(const std::function<void(const std::string &, const Verdict &)> &report)
{
    auto spec = ode5();
    auto trees = run_average(spec, Backend::trees, AveragingMode::zero_mean, 3);
    auto words = run_average(spec, Backend::words, AveragingMode::zero_mean, 3);

    std::vector<std::string> underlined{"a[b[b]]", "b[ab]", "a[bb]", "b[a[b]]", "c[a[c]]"};
    std::vector<std::string> degree3;
    for (const auto &s : trees.survivors)
        if (parse_tree(s).degree() == 3)
            degree3.push_back(s);
    std::sort(underlined.begin(), underlined.end());
    std::sort(degree3.begin(), degree3.end());
    std::string list;
    for (const auto &s : degree3)
        list += " " + s;
    report("4a", {degree3 == underlined, "degree-3 trees with nonzero image:" + list});

    Alphabet abcd("abcd");
    std::map<int, WordPoly> published;
    axpy(published[0], Rational(1), expand(parse_lie("a", abcd)));
    axpy(published[-2], make_rational(1, 4), expand(parse_lie("[b,[b,a]]", abcd)));
    axpy(published[-2], make_rational(-1, 8), expand(parse_lie("[c,[a,c]]", abcd)));
    bool same = expanded(trees.compressed) == published;
    report("4b", {same, "computed " + to_string(trees.compressed) +
                            "; expected a + w^-2*(1/4*[b,[b,a]] - 1/8*[c,[a,c]])" +
                            (same ? "" : " (the word-level result abb, cac, acc, cca of the same computation "
                                         "gives 1/16 for the c-term)")});

    report("4c", {trees.field == words.field, trees.field == words.field ? "tree and word fields equal"
                                                                         : "tree and word fields differ"});
}

Verdict criterion5()
{
    Alphabet ab("ab");
    std::vector<std::pair<std::string, GradedLieAlgebra>> algebras{{"abelian", abelian_algebra()},
                                                                   {"witt", witt_algebra(4)},
                                                                   {"free-lie", free_lie_algebra(ab, 4)},
                                                                   {"grossman-larson", grossman_larson_algebra(ab, 4)}};
    bool ok = true;
    std::string detail;
    for (const auto &[name, lie] : algebras) {
        auto h = coproduct_from_lie(lie, 4);
        auto a = audit(h, &lie, 4);
        ok = ok && a.all();
        detail += name + (a.all() ? " pass" : " FAIL") + "; ";
        for (const auto &f : a.failures)
            detail += f + "; ";
    }
    return {ok, detail + "coassociativity, counit, multiplicativity, antipode, duality, rho = D*id"};
}

Verdict criterion6()
{
    auto gl = crosscheck::grossman_larson_vs_admissible_cuts(Alphabet("ab"), 4);
    auto fl = crosscheck::free_lie_vs_shuffle(Alphabet("ab"), 4);
    return {gl.ok && fl.ok, "admissible cuts: " + std::to_string(gl.checked) + " forests " +
                                (gl.ok ? "agree" : "differ (" + gl.detail + ")") + "; shuffle: " +
                                std::to_string(fl.checked) + " checks " + (fl.ok ? "agree" : "differ (" + fl.detail + ")")};
}

Verdict criterion7()
{
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937 rng(2024);
    int good = 0, total = 0;
    for (int trial = 0; trial < 20; ++trial) {
        std::string letters = trial % 2 ? "abc" : "ab";
        auto wa = make_word_algebra(Alphabet(letters), 4);
        OscSeries beta(wa.basis, 4);
        for (char c : letters) {
            for (int k = 0; k <= 3; ++k) {
                if (rng() % 2)
                    continue;
                Rational amp = make_rational(static_cast<long>(rng() % 7) - 3, 1 + rng() % 4);
                OscCoef piece = (k == 0 || rng() % 2) ? OscCoef::cosine(k) : OscCoef::sine(k);
                piece *= amp;
                beta.add(std::string(1, c), piece);
            }
        }
        auto chen = chen_series(beta, wa.mu, 4);
        for (auto mode : {AveragingMode::stroboscopic, AveragingMode::zero_mean}) {
            auto r = average(beta, wa.mu, mode, 4);
            ++total;
            if (averaging_residual(beta, r, wa.mu).is_zero() && mode_condition_holds(r, wa.mu) &&
                recompose(r, wa.mu) == chen)
                ++good;
        }
    }
    double secs = seconds_since(t0);
    return {good == total && secs < 60,
            std::to_string(good) + "/" + std::to_string(total) + " runs exact, " + fmt("%.1f s", secs)};
}

Verdict criterion8()
{
    auto spec = ode5();
    auto t0 = std::chrono::steady_clock::now();
    auto big = run_average(spec, Backend::monomial, AveragingMode::zero_mean, 10);
    double secs = seconds_since(t0);
    rusage ru{};
    getrusage(RUSAGE_SELF, &ru);
    double gib = static_cast<double>(ru.ru_maxrss) / (1024.0 * 1024.0);
    bool agree = true;
    int upto = 0;
    for (int n = 1; n <= 6; ++n) {
        auto m = run_average(spec, Backend::monomial, AveragingMode::zero_mean, n);
        auto w = run_average(spec, Backend::words, AveragingMode::zero_mean, n);
        if (m.field != w.field)
            agree = false;
        else
            upto = n;
    }
    bool ok = agree && secs < 900 && gib < 8 && !big.field.empty();
    return {ok, "N = 10 in " + fmt("%.1f s", secs) + ", peak RSS " + fmt("%.2f GiB", gib) +
                    ", fields equal to words for N = 1.." + std::to_string(upto)};
}

void criterion9(const std::function<void(const std::string &, const Verdict &)> &report)
{
    // (a) c * sin(x) = x with x = k w tau / 2 and sin(x) = (z^k - z^-k) / (2i)
    bool sym = true, num = true, text = true;
    for (int k : {1, 2, 3, -1, -2}) {
        auto wa = make_word_algebra(Alphabet("a"), 1);
        auto action = word_action(*wa.basis, {{'a', k}});
        SplitSeries bt(wa.basis, 1);
        bt.add("a", SplitCoef(1));
        auto g = modified_generator(strang_character(bt, action, wa.mu), action, wa.mu);
        SplitCoef c = g.beta.coefficient(wa.basis->id("a"));
        SplitCoef sine = SplitCoef::monomial(ComplexRational(Rational(0), make_rational(-1, 2)), 0, 0, k) +
                         SplitCoef::monomial(ComplexRational(Rational(0), make_rational(1, 2)), 0, 0, -k);
        SplitCoef x = SplitCoef::monomial(ComplexRational(make_rational(k, 2)), 1, 1, 0);
        sym = sym && c * sine == x;
        for (double tau : {0.3, 0.05})
            for (double w : {1.0, 7.0}) {
                double xv = k * w * tau / 2;
                num = num && std::abs(c.evaluate(tau, w) - std::complex<double>(xv / std::sin(xv))) < 1e-10;
            }
        text = text && (c == degree_one_factor(k));
    }
    report("9a", {sym && num && text, std::string("symbolic identity ") + (sym ? "holds" : "fails") +
                                          ", numeric values " + (num ? "match" : "differ")});

    // (b) fires exactly on k w tau in 2 pi Z \ {0}, oracle |exp(i k w tau) - 1|
    auto wa = make_word_algebra(Alphabet("apq"), 3);
    auto action = word_action(*wa.basis, {{'a', 0}, {'p', 2}, {'q', 1}});
    SplitSeries bt(wa.basis, 3);
    for (const char *l : {"a", "p", "q"})
        bt.add(l, SplitCoef(1));
    auto target = strang_character(bt, action, wa.mu);
    auto blocks = modified_generator(target, action, wa.mu).blocks;
    int cases = 0, right = 0;
    for (long q = 1; q <= 8; ++q)
        for (long p = 1; p <= 2 * q; ++p) {
            Rational r = make_rational(p, q);
            std::vector<ResonantBlock> expect;
            for (const auto &b : blocks) {
                double phase = 2 * M_PI * b.k * r.get_d();
                if (std::abs(std::exp(std::complex<double>(0, phase)) - 1.0) < 1e-9)
                    expect.push_back(b);
            }
            int first = 1 << 20;
            for (const auto &b : expect)
                first = std::min(first, b.degree);
            bool thrown = false, blocks_ok = true;
            try {
                modified_generator(target, action, wa.mu, r);
            } catch (const ResonanceError &e) {
                thrown = true;
                std::size_t at_first = 0;
                for (const auto &b : expect)
                    at_first += b.degree == first;
                blocks_ok = e.blocks().size() == at_first;
                for (const auto &b : e.blocks())
                    blocks_ok = blocks_ok && b.degree == first && std::abs(std::exp(std::complex<double>(
                                                                      0, 2 * M_PI * b.k * r.get_d())) - 1.0) < 1e-9;
            }
            ++cases;
            if (thrown == !expect.empty() && blocks_ok)
                ++right;
        }
    cli::Options o;
    o.command = "split";
    o.input = std::string(HOPFKIT_DATA_DIR) + "/split_single.json";
    o.omega_tau_over_2pi = "1";
    int exit_code = cli::run(o).exit_code;
    report("9b", {right == cases && exit_code == cli::resonance,
                  std::to_string(right) + "/" + std::to_string(cases) +
                      " values of w*tau/(2*pi) classified correctly; w*tau = 2*pi, k = 1 exits with " +
                      std::to_string(exit_code)});

    // (c)
    Eigen::Matrix2d b;
    b << 0.6, 1.4, -0.4, 0.2;
    auto s = numerics::strang_local_error(b, 10.0, 2, {1e-2, 5e-3, 2e-3, 1e-3});
    report("9c", {std::abs(s.slope - 4.0) <= 0.3, "local-order slope " + fmt("%.3f", s.slope) +
                                                      ", expected 4 +- 0.3 (symmetric splitting gives 5)"});
}

void criterion10(const std::function<void(const std::string &, const Verdict &)> &report)
{
    auto spec = ode5();
    for (int n : {1, 2}) {
        auto v = numerics::validate_averaging(spec, n, AveragingMode::zero_mean, {50, 100, 200, 400}, 10);
        double expected = -(n + 1);
        std::string pts;
        for (const auto &p : v.points)
            pts += " " + fmt("%.3e", p.max_error);
        report("10 (N=" + std::to_string(n) + ")",
               {std::abs(v.slope - expected) <= 0.35,
                "slope " + fmt("%.3f", v.slope) + ", expected " + fmt("%.0f", expected) + " +- 0.35; errors" + pts});
    }
}

} // namespace

int main()
{
    int failures = 0;
    auto report = [&](const std::string &id, const Verdict &v) {
        failures += !v.pass;
        std::cout << "criterion " << id << ": " << (v.pass ? "PASS" : "FAIL") << "  " << v.detail << std::endl;
    };
    auto guarded = [&](const std::string &id, const std::function<Verdict()> &f) {
        try {
            report(id, f());
        } catch (const std::exception &e) {
            report(id, {false, std::string("exception: ") + e.what()});
        }
    };
    auto guarded_multi = [&](const std::string &id,
                             const std::function<void(const std::function<void(const std::string &, const Verdict &)> &)> &f) {
        try {
            f(report);
        } catch (const std::exception &e) {
            report(id, {false, std::string("exception: ") + e.what()});
        }
    };
    guarded("1", criterion1);
    guarded("2", criterion2);
    guarded("3", criterion3);
    guarded_multi("4", criterion4);
    guarded("5", criterion5);
    guarded("6", criterion6);
    guarded("7", criterion7);
    guarded("8", criterion8);
    guarded_multi("9", criterion9);
    guarded_multi("10", criterion10);
    std::cout << (failures ? std::to_string(failures) + " criteria failed" : std::string("all criteria pass"))
              << std::endl;
    return failures ? 1 : 0;
}
