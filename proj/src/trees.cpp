#include "hopfkit/trees.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

namespace hopfkit {

Tree::Tree(char root, std::vector<Tree> children) : root_(root), children_(std::move(children))
{
    std::sort(children_.begin(), children_.end());
    degree_ = 1;
    for (const auto &c : children_)
        degree_ += c.degree_;
}

int Tree::compare(const Tree &a, const Tree &b)
{
    if (a.degree_ != b.degree_)
        return a.degree_ < b.degree_ ? -1 : 1;
    if (a.root_ != b.root_)
        return a.root_ < b.root_ ? -1 : 1;
    if (a.children_.size() != b.children_.size())
        return a.children_.size() < b.children_.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.children_.size(); ++i)
        if (int c = compare(a.children_[i], b.children_[i]))
            return c;
    return 0;
}

long Tree::symmetry() const
{
    long s = 1;
    std::size_t i = 0;
    while (i < children_.size()) {
        std::size_t j = i;
        while (j < children_.size() && children_[j] == children_[i])
            ++j;
        for (std::size_t k = 1; k <= j - i; ++k)
            s *= static_cast<long>(k);
        for (std::size_t k = i; k < j; ++k)
            s *= children_[k].symmetry();
        i = j;
    }
    return s;
}

Forest make_forest(std::vector<Tree> trees)
{
    std::sort(trees.begin(), trees.end());
    return trees;
}

Forest forest_product(const Forest &a, const Forest &b)
{
    Forest f = a;
    f.insert(f.end(), b.begin(), b.end());
    std::sort(f.begin(), f.end());
    return f;
}

int degree(const Forest &f)
{
    int d = 0;
    for (const auto &t : f)
        d += t.degree();
    return d;
}

std::string to_string(const Tree &t)
{
    std::string s(1, t.root());
    if (t.children().empty())
        return s;
    s += "[";
    for (const auto &c : t.children())
        s += to_string(c);
    return s + "]";
}

static const std::string kDot = "\xC2\xB7";

std::string to_string(const Forest &f)
{
    if (f.empty())
        return "1";
    std::string s;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i)
            s += kDot;
        s += to_string(f[i]);
    }
    return s;
}

namespace {

Tree parse_tree_at(const std::string &s, std::size_t &pos)
{
    while (pos < s.size() && s[pos] == ' ')
        ++pos;
    if (pos >= s.size() || !std::isalpha(static_cast<unsigned char>(s[pos])))
        throw std::invalid_argument("malformed tree: " + s);
    char root = s[pos++];
    std::vector<Tree> children;
    if (pos < s.size() && s[pos] == '[') {
        ++pos;
        while (true) {
            while (pos < s.size() && s[pos] == ' ')
                ++pos;
            if (pos >= s.size())
                throw std::invalid_argument("malformed tree: " + s);
            if (s[pos] == ']') {
                ++pos;
                break;
            }
            children.push_back(parse_tree_at(s, pos));
        }
        if (children.empty())
            throw std::invalid_argument("malformed tree (empty brackets): " + s);
    }
    return Tree(root, std::move(children));
}

} // namespace

Tree parse_tree(const std::string &text)
{
    std::size_t pos = 0;
    Tree t = parse_tree_at(text, pos);
    if (pos != text.size())
        throw std::invalid_argument("malformed tree: " + text);
    return t;
}

Forest parse_forest(const std::string &text)
{
    if (text == "1")
        return {};
    std::vector<Tree> trees;
    std::size_t start = 0;
    while (true) {
        std::size_t p = text.find(kDot, start);
        trees.push_back(parse_tree(text.substr(start, p == std::string::npos ? std::string::npos : p - start)));
        if (p == std::string::npos)
            break;
        start = p + kDot.size();
    }
    return make_forest(std::move(trees));
}

TreePoly &axpy(TreePoly &y, const Rational &a, const TreePoly &x)
{
    for (const auto &[t, c] : x) {
        Rational &slot = y[t];
        slot += a * c;
        if (sgn(slot) == 0)
            y.erase(t);
    }
    return y;
}

TreePoly graft(const Tree &guest, const Tree &host)
{
    TreePoly out;
    // hang guest under the root
    std::vector<Tree> kids = host.children();
    kids.push_back(guest);
    out[Tree(host.root(), kids)] += 1;
    // or under a vertex of one child
    const auto &ch = host.children();
    for (std::size_t i = 0; i < ch.size(); ++i) {
        if (i > 0 && ch[i] == ch[i - 1])
            continue; // same child shape, collected via multiplicity below
        long mult = 0;
        for (std::size_t k = i; k < ch.size() && ch[k] == ch[i]; ++k)
            ++mult;
        for (const auto &[sub, c] : graft(guest, ch[i])) {
            std::vector<Tree> rest = ch;
            rest.erase(rest.begin() + static_cast<long>(i));
            rest.push_back(sub);
            out[Tree(host.root(), rest)] += c * mult;
        }
    }
    return out;
}

TreePoly graft(const TreePoly &guest, const TreePoly &host)
{
    TreePoly out;
    for (const auto &[g, a] : guest)
        for (const auto &[h, b] : host)
            axpy(out, a * b, graft(g, h));
    return out;
}

TreePoly gl_bracket(const TreePoly &x, const TreePoly &y)
{
    TreePoly out = graft(x, y);
    return axpy(out, Rational(-1), graft(y, x));
}

namespace {

/// Nondecreasing sequences drawn from pool (sorted) with degrees summing to n.
void multisets(const std::vector<Tree> &pool, std::size_t from, int n, std::vector<Tree> &cur,
               std::vector<Forest> &out)
{
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
        if (pool[i].degree() > n)
            continue;
        cur.push_back(pool[i]);
        multisets(pool, i, n - pool[i].degree(), cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Forest> forests_of_degree(const Alphabet &alphabet, int n)
{
    std::vector<Tree> pool;
    for (int d = 1; d <= n; ++d) {
        auto t = trees_of_degree(alphabet, d);
        pool.insert(pool.end(), t.begin(), t.end());
    }
    std::vector<Forest> out;
    std::vector<Tree> cur;
    multisets(pool, 0, n, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Tree> trees_of_degree(const Alphabet &alphabet, int n)
{
    std::vector<Tree> out;
    if (n < 1)
        return out;
    auto below = n == 1 ? std::vector<Forest>{Forest{}} : forests_of_degree(alphabet, n - 1);
    for (char c : alphabet.letters())
        for (const auto &f : below)
            out.emplace_back(c, f);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

ForestTensor tensor_product(const ForestTensor &x, const ForestTensor &y)
{
    ForestTensor out;
    for (const auto &[k1, a] : x)
        for (const auto &[k2, b] : y) {
            auto key = std::make_pair(forest_product(k1.first, k2.first), forest_product(k1.second, k2.second));
            Rational &slot = out[key];
            slot += a * b;
            if (sgn(slot) == 0)
                out.erase(key);
        }
    return out;
}

} // namespace

ForestTensor ck_coproduct(const Tree &t)
{
    ForestTensor below = ck_coproduct(Forest(t.children()));
    ForestTensor out;
    out[{Forest{t}, Forest{}}] += 1;
    for (const auto &[k, c] : below)
        out[{k.first, Forest{Tree(t.root(), k.second)}}] += c;
    return out;
}

ForestTensor ck_coproduct(const Forest &f)
{
    ForestTensor out;
    out[{Forest{}, Forest{}}] = 1;
    for (const auto &t : f)
        out = tensor_product(out, ck_coproduct(t));
    return out;
}

TreeAlgebra make_tree_algebra(const Alphabet &alphabet, int order)
{
    auto basis = std::make_shared<GradedBasis>("1");
    TreeAlgebra alg{alphabet, basis, MuTable(basis), order, {}};
    for (int n = 1; n <= order; ++n)
        for (const auto &f : forests_of_degree(alphabet, n)) {
            int id = basis->add(to_string(f), n);
            if (f.size() == 1)
                alg.tree_ids[f[0]] = id;
        }
    for (int n = 2; n <= order; ++n)
        for (int id : basis->of_degree(n)) {
            Forest f = parse_forest(basis->name(id));
            for (const auto &[k, c] : ck_coproduct(f)) {
                if (k.first.empty() || k.second.empty())
                    continue;
                alg.mu.add(basis->id(to_string(k.first)), basis->id(to_string(k.second)), id, c);
            }
        }
    return alg;
}

EtaTable forest_eta(const TreeAlgebra &algebra)
{
    const auto &basis = algebra.basis;
    EtaTable eta(basis);
    int order = basis->max_degree();
    std::vector<Forest> forests(basis->size());
    for (int i = 1; i < basis->size(); ++i)
        forests[i] = parse_forest(basis->name(i));
    for (int i = 1; i < basis->size(); ++i)
        for (int j = i; j < basis->size(); ++j) {
            if (basis->degree(i) + basis->degree(j) > order)
                continue;
            eta.add(i, j, basis->id(to_string(forest_product(forests[i], forests[j]))), Rational(1));
        }
    return eta;
}

std::map<std::pair<Tree, Tree>, long> single_cuts(const Tree &t)
{
    std::map<std::pair<Tree, Tree>, long> out;
    const auto &ch = t.children();
    for (std::size_t i = 0; i < ch.size(); ++i) {
        std::vector<Tree> rest = ch;
        rest.erase(rest.begin() + static_cast<long>(i));
        out[{ch[i], Tree(t.root(), rest)}] += 1;
        for (const auto &[k, c] : single_cuts(ch[i])) {
            std::vector<Tree> others = ch;
            others[i] = k.second;
            out[{k.first, Tree(t.root(), others)}] += c;
        }
    }
    return out;
}

} // namespace hopfkit
