#include "hopfkit/hopf.hpp"

#include "hopfkit/linalg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace hopfkit {

namespace {

template <class K> void add_to(std::map<K, Rational> &m, const K &k, const Rational &v)
{
    if (sgn(v) == 0)
        return;
    auto [it, ins] = m.try_emplace(k, v);
    if (!ins) {
        it->second += v;
        if (sgn(it->second) == 0)
            m.erase(it);
    }
}

Monomial merge(const Monomial &a, const Monomial &b)
{
    Monomial m;
    m.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(m));
    return m;
}

SPoly poly_product(const SPoly &x, const SPoly &y)
{
    SPoly out;
    for (const auto &[a, c] : x)
        for (const auto &[b, d] : y)
            add_to(out, merge(a, b), c * d);
    return out;
}

STensor tensor_product(const STensor &x, const STensor &y)
{
    STensor out;
    for (const auto &[a, c] : x)
        for (const auto &[b, d] : y)
            add_to(out, {merge(a.first, b.first), merge(a.second, b.second)}, c * d);
    return out;
}

const SPoly &unit_poly()
{
    static const SPoly one{{Monomial{}, Rational(1)}};
    return one;
}

} // namespace

GradedLieAlgebra::GradedLieAlgebra(std::vector<Index> indices) : indices_(std::move(indices))
{
    std::stable_sort(indices_.begin(), indices_.end(),
                     [](const Index &a, const Index &b) { return a.degree < b.degree; });
    for (std::size_t i = 0; i < indices_.size(); ++i) {
        if (indices_[i].degree < 1)
            throw std::invalid_argument("Lie algebra indices need positive degree");
        for (std::size_t j = 0; j < i; ++j)
            if (indices_[j].name == indices_[i].name)
                throw std::invalid_argument("duplicate index " + indices_[i].name);
    }
}

int GradedLieAlgebra::find(const std::string &name) const
{
    for (int i = 0; i < size(); ++i)
        if (indices_[i].name == name)
            return i;
    return -1;
}

int GradedLieAlgebra::max_degree() const
{
    return indices_.empty() ? 0 : indices_.back().degree;
}

void GradedLieAlgebra::add_raw(int l, int r, int t, const Rational &value)
{
    add_to(lambda_[{l, r}], t, value);
    if (lambda_[{l, r}].empty())
        lambda_.erase({l, r});
}

void GradedLieAlgebra::add_bracket(int l, int r, int t, const Rational &value)
{
    if (l == r) {
        if (sgn(value) != 0)
            throw std::invalid_argument("[G, G] must vanish");
        return;
    }
    add_raw(l, r, t, value);
    add_raw(r, l, t, -value);
}

IndexVector GradedLieAlgebra::bracket(int l, int r) const
{
    auto it = lambda_.find({l, r});
    return it == lambda_.end() ? IndexVector{} : it->second;
}

IndexVector GradedLieAlgebra::bracket(const IndexVector &x, const IndexVector &y) const
{
    IndexVector out;
    for (const auto &[i, a] : x)
        for (const auto &[j, b] : y) {
            auto it = lambda_.find({i, j});
            if (it == lambda_.end())
                continue;
            for (const auto &[k, c] : it->second)
                add_to(out, k, a * b * c);
        }
    return out;
}

bool GradedLieAlgebra::antisymmetric() const
{
    for (const auto &[k, v] : lambda_) {
        IndexVector w = bracket(k.second, k.first);
        for (const auto &[t, c] : v)
            add_to(w, t, c);
        if (!w.empty())
            return false;
    }
    return true;
}

bool GradedLieAlgebra::graded() const
{
    for (const auto &[k, v] : lambda_)
        for (const auto &[t, c] : v)
            if (degree(t) != degree(k.first) + degree(k.second))
                return false;
    return true;
}

bool GradedLieAlgebra::jacobi(int n) const
{
    for (int i = 0; i < size(); ++i)
        for (int j = i; j < size(); ++j)
            for (int k = j; k < size(); ++k) {
                if (degree(i) + degree(j) + degree(k) > n)
                    continue;
                IndexVector gi{{i, 1}}, gj{{j, 1}}, gk{{k, 1}};
                IndexVector s = bracket(bracket(gi, gj), gk);
                for (const auto &[t, c] : bracket(bracket(gj, gk), gi))
                    add_to(s, t, c);
                for (const auto &[t, c] : bracket(bracket(gk, gi), gj))
                    add_to(s, t, c);
                if (!s.empty())
                    return false;
            }
    return true;
}

PreLieCoproduct prelie_from_lie(const GradedLieAlgebra &lie)
{
    PreLieCoproduct hd;
    for (int i = 0; i < lie.size(); ++i)
        hd.degrees.push_back(lie.degree(i));
    hd.values.resize(lie.size());
    for (const auto &[k, v] : lie.constants())
        for (const auto &[t, c] : v)
            add_to(hd.values[t], k, Rational(lie.degree(k.second), lie.degree(t)) * c);
    return hd;
}

bool satisfies_cobracket(const PreLieCoproduct &hd, const GradedLieAlgebra &lie)
{
    std::vector<VTensor> delta(lie.size());
    for (const auto &[k, v] : lie.constants())
        for (const auto &[t, c] : v)
            add_to(delta[t], k, c);
    for (int i = 0; i < lie.size(); ++i) {
        VTensor d = hd.values[i];
        for (const auto &[k, c] : hd.values[i])
            add_to(d, {k.second, k.first}, -c);
        for (const auto &[k, c] : delta[i])
            add_to(d, k, -c);
        if (!d.empty())
            return false;
    }
    return true;
}

bool is_prelie(const PreLieCoproduct &hd, int n)
{
    using Triple = std::tuple<int, int, int>;
    for (std::size_t v = 0; v < hd.values.size(); ++v) {
        if (hd.degrees[v] > n)
            continue;
        std::map<Triple, Rational> assoc;
        for (const auto &[k, c] : hd.values[v]) {
            for (const auto &[k2, c2] : hd.values[k.first])
                add_to(assoc, Triple{k2.first, k2.second, k.second}, c * c2);
            for (const auto &[k2, c2] : hd.values[k.second])
                add_to(assoc, Triple{k.first, k2.first, k2.second}, -c * c2);
        }
        for (const auto &[t, c] : assoc) {
            auto it = assoc.find({std::get<1>(t), std::get<0>(t), std::get<2>(t)});
            if (it == assoc.end() || it->second != c)
                return false;
        }
    }
    return true;
}

std::vector<SPoly> dynkin_map(const PreLieCoproduct &hd, int n)
{
    std::vector<SPoly> d(hd.values.size());
    // values[v] only involves generators of lower degree
    std::vector<int> order(hd.values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return hd.degrees[a] < hd.degrees[b]; });
    for (int v : order) {
        if (hd.degrees[v] > n)
            continue;
        SPoly out{{Monomial{v}, Rational(hd.degrees[v])}};
        for (const auto &[k, c] : hd.values[v])
            for (const auto &[m, e] : d[k.first])
                add_to(out, merge(m, Monomial{k.second}), -c * e);
        d[v] = std::move(out);
    }
    return d;
}

int HopfData::degree(const Monomial &m) const
{
    int s = 0;
    for (int i : m)
        s += degrees[i];
    return s;
}

std::string HopfData::name(const Monomial &m) const
{
    if (m.empty())
        return "1";
    std::string s;
    for (std::size_t k = 0; k < m.size(); ++k) {
        if (k)
            s += "\xC2\xB7";
        s += names[m[k]];
    }
    return s;
}

STensor HopfData::coproduct(const Monomial &m) const
{
    STensor out{{{Monomial{}, Monomial{}}, Rational(1)}};
    for (int i : m) {
        STensor g = delta_bar.at(i);
        add_to(g, {Monomial{}, Monomial{i}}, Rational(1));
        add_to(g, {Monomial{i}, Monomial{}}, Rational(1));
        out = tensor_product(out, g);
    }
    return out;
}

STensor HopfData::coproduct(const SPoly &p) const
{
    STensor out;
    for (const auto &[m, c] : p)
        for (const auto &[k, d] : coproduct(m))
            add_to(out, k, c * d);
    return out;
}

SPoly HopfData::antipode(const Monomial &m) const
{
    SPoly out = unit_poly();
    for (int i : m)
        out = poly_product(out, antipode_generators.at(i));
    return out;
}

namespace {

void enumerate_monomials(const std::vector<int> &degrees, int n, std::size_t from, Monomial &cur,
                         std::vector<Monomial> &out)
{
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = from; i < degrees.size(); ++i) {
        if (degrees[i] > n)
            continue;
        cur.push_back(static_cast<int>(i));
        enumerate_monomials(degrees, n - degrees[i], i, cur, out);
        cur.pop_back();
    }
}

HopfData build(const PreLieCoproduct &hd, std::vector<std::string> names, int order)
{
    HopfData h;
    h.names = std::move(names);
    h.degrees = hd.degrees;
    h.order = order;
    h.hdelta = hd;
    for (std::size_t i = 1; i < h.degrees.size(); ++i)
        if (h.degrees[i] < h.degrees[i - 1])
            throw std::invalid_argument("generators must be sorted by degree");
    h.dynkin = dynkin_map(hd, order);
    int ng = static_cast<int>(h.degrees.size());
    h.delta_bar.resize(ng);
    h.antipode_generators.resize(ng);
    for (int v = 0; v < ng; ++v) {
        if (h.degrees[v] > order)
            continue;
        STensor raw;
        for (const auto &[k, c] : hd.values[v]) {
            for (const auto &[m, e] : h.dynkin[k.first]) {
                add_to(raw, {m, Monomial{k.second}}, c * e);
                for (const auto &[t, f] : h.delta_bar[k.second])
                    add_to(raw, {merge(m, t.first), t.second}, c * e * f);
            }
        }
        for (const auto &[k, c] : raw)
            add_to(h.delta_bar[v], k, c / Rational(h.degree(k.first)));
        SPoly s{{Monomial{v}, Rational(-1)}};
        for (const auto &[k, c] : h.delta_bar[v])
            for (const auto &[m, e] : poly_product(h.antipode(k.first), SPoly{{k.second, Rational(1)}}))
                add_to(s, m, -c * e);
        h.antipode_generators[v] = std::move(s);
    }
    auto basis = std::make_shared<GradedBasis>("1");
    h.monomials.push_back({});
    h.monomial_ids[{}] = 0;
    for (int n = 1; n <= order; ++n) {
        std::vector<Monomial> ms;
        Monomial cur;
        enumerate_monomials(h.degrees, n, 0, cur, ms);
        std::sort(ms.begin(), ms.end());
        for (auto &m : ms) {
            int id = basis->add(h.name(m), n);
            h.monomial_ids[m] = id;
            h.monomials.push_back(std::move(m));
        }
    }
    h.basis = basis;
    h.mu = MuTable(basis);
    h.eta = EtaTable(basis);
    for (int id = 1; id < basis->size(); ++id) {
        const Monomial &m = h.monomials[id];
        for (const auto &[k, c] : h.coproduct(m))
            if (!k.first.empty() && !k.second.empty())
                h.mu.add(h.monomial_ids.at(k.first), h.monomial_ids.at(k.second), id, c);
    }
    for (int a = 1; a < basis->size(); ++a)
        for (int b = a; b < basis->size(); ++b)
            if (basis->degree(a) + basis->degree(b) <= order)
                h.eta.add(a, b, h.monomial_ids.at(merge(h.monomials[a], h.monomials[b])), Rational(1));
    return h;
}

} // namespace

HopfData coproduct_from_prelie(const PreLieCoproduct &hd, std::vector<std::string> names, int order)
{
    if (!is_prelie(hd, order))
        throw std::invalid_argument("coproduct_from_prelie: input is not a pre-Lie coproduct");
    return build(hd, std::move(names), order);
}

HopfData coproduct_from_lie(const GradedLieAlgebra &lie, int order)
{
    if (!lie.antisymmetric() || !lie.graded())
        throw std::invalid_argument("structure constants are not antisymmetric and graded");
    if (!lie.jacobi(order))
        throw std::invalid_argument("structure constants fail the Jacobi identity");
    std::vector<std::string> names;
    for (int i = 0; i < lie.size(); ++i)
        names.push_back(lie.name(i));
    return build(prelie_from_lie(lie), std::move(names), order);
}

namespace {

/// PBW straightening with a private memo table.
class Straightener {
public:
    explicit Straightener(const GradedLieAlgebra &lie) : lie_(lie) {}

    const UElement &order(const std::vector<int> &word)
    {
        if (auto it = memo_.find(word); it != memo_.end())
            return it->second;
        UElement out;
        std::size_t k = 0;
        while (k + 1 < word.size() && word[k] <= word[k + 1])
            ++k;
        if (k + 1 >= word.size()) {
            out[word] = 1;
        } else {
            std::vector<int> swapped = word;
            std::swap(swapped[k], swapped[k + 1]);
            for (const auto &[m, c] : order(swapped))
                add_to(out, m, c);
            for (const auto &[t, c] : lie_.bracket(word[k], word[k + 1])) {
                std::vector<int> shorter(word.begin(), word.begin() + static_cast<long>(k));
                shorter.push_back(t);
                shorter.insert(shorter.end(), word.begin() + static_cast<long>(k) + 2, word.end());
                for (const auto &[m, d] : order(shorter))
                    add_to(out, m, c * d);
            }
        }
        return memo_.emplace(word, std::move(out)).first->second;
    }

    UElement product(const UElement &x, const UElement &y)
    {
        UElement out;
        for (const auto &[a, c] : x)
            for (const auto &[b, d] : y) {
                std::vector<int> w = a;
                w.insert(w.end(), b.begin(), b.end());
                for (const auto &[m, e] : order(w))
                    add_to(out, m, c * d * e);
            }
        return out;
    }

private:
    const GradedLieAlgebra &lie_;
    std::map<std::vector<int>, UElement> memo_;
};

std::map<Monomial, UElement> dual_basis_with(Straightener &st, const HopfData &h);

} // namespace

UElement normal_order(const GradedLieAlgebra &lie, const std::vector<int> &word)
{
    Straightener st(lie);
    return st.order(word);
}

UElement u_product(const GradedLieAlgebra &lie, const UElement &x, const UElement &y)
{
    Straightener st(lie);
    return st.product(x, y);
}

std::map<Monomial, UElement> dual_basis(const GradedLieAlgebra &lie, const HopfData &h)
{
    Straightener st(lie);
    return dual_basis_with(st, h);
}

namespace {

std::map<Monomial, UElement> dual_basis_with(Straightener &st, const HopfData &h)
{
    std::map<Monomial, UElement> z;
    z[{}] = UElement{{Monomial{}, Rational(1)}};
    std::vector<int> ids(h.monomials.size());
    std::iota(ids.begin(), ids.end(), 0);
    std::stable_sort(ids.begin(), ids.end(),
                     [&](int a, int b) { return h.monomials[a].size() < h.monomials[b].size(); });
    for (int id : ids) {
        const Monomial &j = h.monomials[id];
        if (j.empty())
            continue;
        UElement acc;
        for (std::size_t k = 0; k < j.size(); ++k) {
            if (k > 0 && j[k] == j[k - 1])
                continue;
            Monomial rest = j;
            rest.erase(rest.begin() + static_cast<long>(k));
            UElement g{{Monomial{j[k]}, Rational(1)}};
            for (const auto &[m, c] : st.product(g, z.at(rest)))
                add_to(acc, m, c * h.degrees[j[k]]);
        }
        Rational scale(1, h.degree(j));
        for (auto &[m, c] : acc)
            c *= scale;
        z[j] = std::move(acc);
    }
    return z;
}

} // namespace

MuTable mu_table(const GradedLieAlgebra &lie, const HopfData &h)
{
    Straightener st(lie);
    auto z = dual_basis_with(st, h);
    const auto &basis = *h.basis;
    std::vector<EchelonBasis<Monomial>> by_degree(h.order + 1);
    for (int n = 1; n <= h.order; ++n)
        for (int id : basis.of_degree(n))
            if (by_degree[n].insert(z.at(h.monomials[id]), id))
                throw std::logic_error("dual basis elements are linearly dependent");
    MuTable mu(h.basis);
    for (int a = 1; a < basis.size(); ++a)
        for (int b = 1; b < basis.size(); ++b) {
            int n = basis.degree(a) + basis.degree(b);
            if (n > h.order)
                continue;
            UElement p = st.product(z.at(h.monomials[a]), z.at(h.monomials[b]));
            auto sol = by_degree[n].express(p);
            if (!sol)
                throw std::logic_error("product outside the span of the dual basis");
            for (const auto &[id, c] : *sol)
                mu.add(a, b, id, c);
        }
    return mu;
}

Rational pairing(const HopfData &h, const std::vector<int> &word, const Monomial &u)
{
    if (word.empty())
        return Rational(u.empty() ? 1 : 0);
    if (h.degree(u) == 0)
        return Rational(0);
    Rational s;
    std::vector<int> rest(word.begin() + 1, word.end());
    for (const auto &[k, c] : h.coproduct(u))
        if (k.first.size() == 1 && k.first[0] == word[0])
            s += c * pairing(h, rest, k.second);
    return s;
}

HopfAudit audit(const HopfData &h, const GradedLieAlgebra *lie, int n)
{
    HopfAudit a;
    using Triple = std::tuple<Monomial, Monomial, Monomial>;
    auto fail = [&](bool &flag, const std::string &what, const Monomial &m) {
        flag = false;
        a.failures.push_back(what + " at " + h.name(m));
    };
    std::vector<int> ids;
    for (int id = 0; id < h.basis->size(); ++id)
        if (h.basis->degree(id) <= n)
            ids.push_back(id);
    for (int id : ids) {
        const Monomial &m = h.monomials[id];
        STensor d = h.coproduct(m);
        // coassociativity
        std::map<Triple, Rational> left, right;
        for (const auto &[k, c] : d) {
            for (const auto &[k2, c2] : h.coproduct(k.first))
                add_to(left, Triple{k2.first, k2.second, k.second}, c * c2);
            for (const auto &[k2, c2] : h.coproduct(k.second))
                add_to(right, Triple{k.first, k2.first, k2.second}, c * c2);
        }
        if (left != right)
            fail(a.coassociative, "coassociativity", m);
        // counit
        SPoly l, r;
        for (const auto &[k, c] : d) {
            if (k.first.empty())
                add_to(l, k.second, c);
            if (k.second.empty())
                add_to(r, k.first, c);
        }
        SPoly self{{m, Rational(1)}};
        if (l != self || r != self)
            fail(a.counit, "counit", m);
        // multiplicativity over every split of the monomial
        for (std::size_t cut = 1; cut < m.size(); ++cut) {
            Monomial x(m.begin(), m.begin() + static_cast<long>(cut)), y(m.begin() + static_cast<long>(cut), m.end());
            if (tensor_product(h.coproduct(x), h.coproduct(y)) != d)
                fail(a.multiplicative, "multiplicativity", m);
        }
        // antipode
        SPoly sl, sr;
        for (const auto &[k, c] : d) {
            for (const auto &[t, e] : poly_product(h.antipode(k.first), SPoly{{k.second, Rational(1)}}))
                add_to(sl, t, c * e);
            for (const auto &[t, e] : poly_product(SPoly{{k.first, Rational(1)}}, h.antipode(k.second)))
                add_to(sr, t, c * e);
        }
        SPoly expect = m.empty() ? unit_poly() : SPoly{};
        if (sl != expect || sr != expect)
            fail(a.antipode, "antipode", m);
        // rho = D * id
        SPoly rho;
        for (const auto &[k, c] : d) {
            if (k.first.size() != 1)
                continue;
            for (const auto &[t, e] : poly_product(h.dynkin[k.first[0]], SPoly{{k.second, Rational(1)}}))
                add_to(rho, t, c * e);
        }
        SPoly expect_rho;
        add_to(expect_rho, m, Rational(h.degree(m)));
        if (rho != expect_rho)
            fail(a.rho_identity, "rho = D * id", m);
    }
    if (lie) {
        auto z = dual_basis(*lie, h);
        for (int i : ids)
            for (int j : ids) {
                if (h.basis->degree(i) != h.basis->degree(j))
                    continue;
                Rational s;
                for (const auto &[w, c] : z.at(h.monomials[i]))
                    s += c * pairing(h, w, h.monomials[j]);
                if (s != Rational(i == j ? 1 : 0))
                    fail(a.duality, "duality", h.monomials[i]);
            }
    }
    return a;
}

GradedLieAlgebra abelian_algebra()
{
    return GradedLieAlgebra({{"x", 1}, {"y", 1}, {"z", 2}});
}

GradedLieAlgebra witt_algebra(int order)
{
    std::vector<GradedLieAlgebra::Index> idx;
    for (int n = 1; n <= order; ++n)
        idx.push_back({"G" + std::to_string(n), n});
    GradedLieAlgebra lie(idx);
    for (int m = 1; m <= order; ++m)
        for (int n = m + 1; m + n <= order; ++n)
            lie.add_bracket(m - 1, n - 1, m + n - 1, Rational(n - m));
    return lie;
}

GradedLieAlgebra free_lie_algebra(const Alphabet &alphabet, int order)
{
    std::vector<GradedLieAlgebra::Index> idx;
    std::vector<std::string> words;
    for (int n = 1; n <= order; ++n)
        for (const auto &w : lyndon_words(alphabet, n)) {
            idx.push_back({w, n});
            words.push_back(w);
        }
    GradedLieAlgebra lie(idx);
    std::vector<WordPoly> expansions;
    std::vector<EchelonBasis<std::string>> spans(order + 1);
    for (std::size_t i = 0; i < words.size(); ++i) {
        expansions.push_back(expand(lyndon_bracket(words[i], alphabet)));
        spans[words[i].size()].insert(expansions.back(), static_cast<int>(i));
    }
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            std::size_t n = words[i].size() + words[j].size();
            if (static_cast<int>(n) > order)
                continue;
            WordPoly b = word_product(expansions[i], expansions[j]);
            axpy(b, Rational(-1), word_product(expansions[j], expansions[i]));
            auto sol = spans[n].express(b);
            if (!sol)
                throw std::logic_error("bracket outside the Lyndon span");
            for (const auto &[t, c] : *sol)
                lie.add_bracket(static_cast<int>(i), static_cast<int>(j), t, c);
        }
    return lie;
}

PreLieCoproduct grossman_larson_prelie(const Alphabet &alphabet, int order, std::vector<std::string> &names)
{
    std::vector<Tree> trees;
    for (int n = 1; n <= order; ++n)
        for (const auto &t : trees_of_degree(alphabet, n))
            trees.push_back(t);
    std::map<Tree, int> id;
    PreLieCoproduct hd;
    names.clear();
    for (std::size_t i = 0; i < trees.size(); ++i) {
        id[trees[i]] = static_cast<int>(i);
        names.push_back(to_string(trees[i]));
        hd.degrees.push_back(trees[i].degree());
    }
    hd.values.resize(trees.size());
    for (std::size_t i = 0; i < trees.size(); ++i)
        for (const auto &[k, c] : single_cuts(trees[i]))
            add_to(hd.values[i], {id.at(k.first), id.at(k.second)}, Rational(c));
    return hd;
}

GradedLieAlgebra grossman_larson_algebra(const Alphabet &alphabet, int order)
{
    std::vector<std::string> names;
    PreLieCoproduct hd = grossman_larson_prelie(alphabet, order, names);
    std::vector<GradedLieAlgebra::Index> idx;
    for (std::size_t i = 0; i < names.size(); ++i)
        idx.push_back({names[i], hd.degrees[i]});
    GradedLieAlgebra lie(idx);
    for (std::size_t t = 0; t < hd.values.size(); ++t)
        for (const auto &[k, c] : hd.values[t]) {
            lie.add_raw(k.first, k.second, static_cast<int>(t), c);
            lie.add_raw(k.second, k.first, static_cast<int>(t), -c);
        }
    return lie;
}

std::string to_string(const SPoly &p, const std::vector<std::string> &names)
{
    if (p.empty())
        return "0";
    std::string s;
    for (const auto &[m, c] : p) {
        std::string mono = m.empty() ? "1" : "";
        for (std::size_t k = 0; k < m.size(); ++k)
            mono += (k ? "\xC2\xB7" : "") + names.at(m[k]);
        if (!s.empty())
            s += " + ";
        s += "(" + c.get_str() + ")" + mono;
    }
    return s;
}

std::string to_string(const STensor &t, const std::vector<std::string> &names)
{
    if (t.empty())
        return "0";
    std::string s;
    auto mono = [&](const Monomial &m) {
        if (m.empty())
            return std::string("1");
        std::string r;
        for (std::size_t k = 0; k < m.size(); ++k)
            r += (k ? "\xC2\xB7" : "") + names.at(m[k]);
        return r;
    };
    for (const auto &[k, c] : t) {
        if (!s.empty())
            s += " + ";
        s += "(" + c.get_str() + ")" + mono(k.first) + "\xE2\x8A\x97" + mono(k.second);
    }
    return s;
}

} // namespace hopfkit
