#include "hopfkit/pipelines.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace hopfkit {

std::string to_string(Backend b)
{
    switch (b) {
    case Backend::words:
        return "words";
    case Backend::trees:
        return "trees";
    case Backend::monomial:
        return "monomial";
    }
    return "?";
}

Backend parse_backend(const std::string &text)
{
    if (text == "words")
        return Backend::words;
    if (text == "trees")
        return Backend::trees;
    if (text == "monomial")
        return Backend::monomial;
    throw std::invalid_argument("unknown backend '" + text + "' (words, trees, monomial)");
}

int default_cap(Backend b)
{
    switch (b) {
    case Backend::words:
        return 8;
    case Backend::trees:
        return 6;
    case Backend::monomial:
        return 12;
    }
    return 0;
}

OscSeries word_curve(const SystemSpec &spec, const WordAlgebra &wa)
{
    OscSeries b(wa.basis, wa.order);
    for (const auto &g : spec.generators)
        b.add(std::string(1, g.letter), OscCoef::cosine(g.harmonic));
    return b;
}

OscSeries tree_curve(const SystemSpec &spec, const TreeAlgebra &ta)
{
    OscSeries b(ta.basis, ta.order);
    for (const auto &g : spec.generators)
        b.add(std::string(1, g.letter), OscCoef::cosine(g.harmonic));
    return b;
}

MonomialCurve monomial_curve(const SystemSpec &spec)
{
    MonomialCurve out;
    for (const auto &g : spec.generators)
        for (const auto &[f, c] : monomial_pieces(g.field)) {
            auto it = std::find(out.generators.begin(), out.generators.end(), f);
            int id = static_cast<int>(it - out.generators.begin());
            if (it == out.generators.end())
                out.generators.push_back(f);
            out.beta[id] += OscCoef::cosine(g.harmonic) * c;
        }
    for (auto it = out.beta.begin(); it != out.beta.end();)
        it = it->second.is_zero() ? out.beta.erase(it) : std::next(it);
    return out;
}

std::string to_string(const std::vector<CompressedTerm> &terms)
{
    std::map<int, std::vector<const CompressedTerm *>> by_power;
    for (const auto &t : terms)
        by_power[t.w_power].push_back(&t);
    std::string out;
    auto power_rank = [](int k) { return k == 0 ? 0 : (k < 0 ? -k : k); };
    std::vector<int> powers;
    for (const auto &[k, v] : by_power)
        powers.push_back(k);
    std::stable_sort(powers.begin(), powers.end(), [&](int a, int b) { return power_rank(a) < power_rank(b); });
    for (int k : powers) {
        std::string inner;
        for (const auto *t : by_power[k]) {
            Rational c = t->coefficient;
            bool neg = sgn(c) < 0;
            if (neg)
                c = -c;
            std::string piece = (c == 1 ? "" : c.get_str() + "*") + to_string(t->expr);
            if (inner.empty())
                inner = (neg ? "-" : "") + piece;
            else
                inner += (neg ? " - " : " + ") + piece;
        }
        std::string block = k == 0 ? inner : "w^" + std::to_string(k) + "*(" + inner + ")";
        if (out.empty())
            out = block;
        else
            out += " + " + block;
    }
    return out.empty() ? "0" : out;
}

namespace {

template <class R> std::vector<TableEntry> table(const Series<R> &s)
{
    std::vector<TableEntry> out;
    for (const auto &[id, c] : s.terms())
        out.push_back({s.basis()->name(id), s.basis()->degree(id), to_string(c)});
    return out;
}

template <class R> std::vector<TableEntry> table(const GradedVFAlgebra &alg, const LieVec<R> &v)
{
    std::vector<TableEntry> out;
    for (const auto &[id, c] : v)
        out.push_back({"B" + std::to_string(id), alg.degree(id), to_string(c)});
    return out;
}

void check_order(Backend backend, int order, int cap)
{
    if (order < 1)
        throw std::invalid_argument("order must be positive");
    int limit = cap > 0 ? cap : default_cap(backend);
    if (order > limit)
        throw std::length_error("order " + std::to_string(order) + " exceeds the " + to_string(backend) +
                                " cap " + std::to_string(limit));
}

LaurentSeries degree_part(const LaurentSeries &s, int n)
{
    LaurentSeries out(s.basis(), s.order());
    for (const auto &[id, c] : s.terms())
        if (s.basis()->degree(id) == n)
            out.add(id, c);
    return out;
}

template <class Image> std::vector<std::pair<int, LaurentField>> split_by_degree(const LaurentSeries &s, Image &&image)
{
    std::vector<std::pair<int, LaurentField>> out;
    for (int n = 1; n <= s.order(); ++n) {
        auto f = transfer_field(degree_part(s, n), image);
        if (!f.empty())
            out.emplace_back(n, std::move(f));
    }
    return out;
}

constexpr int compression_terms = 4;
constexpr int compression_order = 3;

} // namespace

std::vector<std::pair<int, int>> predicate_pairs(const GradedBasis &basis, int order, std::optional<unsigned> seed,
                                                 std::string &scope)
{
    order = std::min(order, basis.max_degree());
    std::size_t count = 0;
    for (int a = 1; a < order; ++a)
        for (int b = 1; a + b <= order; ++b)
            count += basis.of_degree(a).size() * basis.of_degree(b).size();
    if (!seed && count <= exhaustive_limit) {
        scope = "all " + std::to_string(count) + " pairs";
        return product_pairs(basis, order);
    }
    unsigned s = seed.value_or(0);
    std::mt19937 gen(s);
    std::vector<std::pair<int, int>> out;
    if (order >= 2)
        for (int i = 0; i < sampled_pairs; ++i) {
            int a = std::uniform_int_distribution<int>(1, order - 1)(gen);
            int b = std::uniform_int_distribution<int>(1, order - a)(gen);
            const auto &la = basis.of_degree(a), &lb = basis.of_degree(b);
            if (la.empty() || lb.empty())
                continue;
            out.emplace_back(la[std::uniform_int_distribution<std::size_t>(0, la.size() - 1)(gen)],
                             lb[std::uniform_int_distribution<std::size_t>(0, lb.size() - 1)(gen)]);
        }
    scope = std::to_string(out.size()) + " pairs, seed " + std::to_string(s);
    return out;
}

std::vector<MuEntry> shuffle_entries(const GradedBasis &words, int l, int r)
{
    std::vector<MuEntry> out;
    for (const auto &[w, c] : shuffle_words(words.name(l), words.name(r)))
        out.push_back({words.id(w), c});
    return out;
}

std::vector<MuEntry> forest_entries(const GradedBasis &forests, int l, int r)
{
    auto f = forest_product(parse_forest(forests.name(l)), parse_forest(forests.name(r)));
    return {{forests.id(to_string(f)), Rational(1)}};
}

WordAveraging average_words(const SystemSpec &spec, AveragingMode mode, int order)
{
    auto wa = make_word_algebra(spec.alphabet(), order);
    auto result = average(word_curve(spec, wa), wa.mu, mode, order);
    return {std::move(wa), std::move(result), WordMorphism(spec.alphabet(), spec.vars, spec.letter_fields())};
}

LaurentField transferred_field(const WordAveraging &w)
{
    return transfer_field(w.result.beta_bar, [&](int id) { return w.psi.basis_function(w.algebra.basis->name(id)); });
}

OscMap change_of_variables(const WordAveraging &w)
{
    return transfer_map(w.result.kappa, w.psi.variables(),
                        [&](int id) { return w.psi.basis_function(w.algebra.basis->name(id)); });
}

TreeSurvivors tree_survivors(const LaurentSeries &s, const TreeMorphism &psi)
{
    std::vector<PolyVectorField> images;
    std::vector<int> degrees;
    std::vector<std::string> names;
    for (const auto &[id, c] : s.terms()) {
        names.push_back(s.basis()->name(id));
        images.push_back(psi.generator_image(parse_tree(names.back())));
        degrees.push_back(s.basis()->degree(id));
    }
    auto q = kernel_quotient(images, degrees);
    TreeSurvivors out;
    for (std::size_t k = 0; k < names.size(); ++k) {
        int i = static_cast<int>(k);
        bool nonzero = q.is_survivor(i);
        if (nonzero)
            out.independent.push_back(names[k]);
        for (const auto &d : q.degrees)
            if (auto it = d.relations.find(i); it != d.relations.end() && !it->second.empty())
                nonzero = true;
        if (nonzero)
            out.nonzero.push_back(names[k]);
    }
    return out;
}

std::vector<CompressedTerm> compress_series(const std::vector<std::pair<int, LaurentField>> &by_degree,
                                            const WordMorphism &psi, int max_terms)
{
    std::vector<CompressedTerm> out;
    for (const auto &[n, field] : by_degree)
        for (const auto &[k, f] : field) {
            auto c = compress_commutators(f, psi, n, max_terms);
            if (!c)
                return {};
            for (const auto &[q, e] : c->terms)
                out.push_back({n, k, q, e});
        }
    return out;
}

AverageReport run_average(const SystemSpec &spec, Backend backend, AveragingMode mode, int order, int cap,
                          std::optional<unsigned> seed)
{
    check_order(backend, order, cap);
    AverageReport rep{backend, mode, order, {}, {}, {}, {}, {}, {}, {}, {}};
    WordMorphism words_psi(spec.alphabet(), spec.vars, spec.letter_fields());
    switch (backend) {
    case Backend::words: {
        auto w = average_words(spec, mode, order);
        rep.beta_bar = table(w.result.beta_bar);
        rep.kappa = table(w.result.kappa);
        rep.field = transferred_field(w);
        auto pairs = predicate_pairs(*w.algebra.basis, order, seed, rep.predicates.scope);
        auto product = [&](int l, int r) { return shuffle_entries(*w.algebra.basis, l, r); };
        rep.predicates.holds = product_rule_on(w.result.beta_bar, pairs, product, true) &&
                               product_rule_on(w.result.kappa, pairs, product, false);
        auto image = [&](int id) { return w.psi.basis_function(w.algebra.basis->name(id)); };
        if (order <= compression_order)
            rep.compressed =
                compress_series(split_by_degree(w.result.beta_bar, image), words_psi, compression_terms);
        break;
    }
    case Backend::trees: {
        auto ta = make_tree_algebra(spec.alphabet(), order);
        auto r = average(tree_curve(spec, ta), ta.mu, mode, order);
        TreeMorphism psi(spec.alphabet(), spec.vars, spec.letter_fields());
        auto image = [&](int id) { return psi.generator_image(parse_tree(ta.basis->name(id))); };
        rep.beta_bar = table(r.beta_bar);
        rep.kappa = table(r.kappa);
        rep.field = transfer_field(r.beta_bar, image);
        auto pairs = predicate_pairs(*ta.basis, order, seed, rep.predicates.scope);
        auto product = [&](int l, int r) { return forest_entries(*ta.basis, l, r); };
        rep.predicates.holds =
            product_rule_on(r.beta_bar, pairs, product, true) && product_rule_on(r.kappa, pairs, product, false);
        auto surv = tree_survivors(r.beta_bar, psi);
        rep.survivors = std::move(surv.nonzero);
        rep.independent = std::move(surv.independent);
        if (order <= compression_order)
            rep.compressed = compress_series(split_by_degree(r.beta_bar, image), words_psi, compression_terms);
        break;
    }
    case Backend::monomial: {
        auto curve = monomial_curve(spec);
        GradedVFAlgebra alg(spec.vars, curve.generators, order, 200000);
        auto r = lie_average(alg, curve.beta, mode, order);
        rep.beta_bar = table(alg, r.beta_bar);
        rep.kappa = table(alg, r.w);
        rep.field = lie_transfer(alg, r.beta_bar);
        rep.dimensions = alg.dimensions();
        rep.predicates.scope = "Lie coordinates";
        break;
    }
    }
    return rep;
}

} // namespace hopfkit
