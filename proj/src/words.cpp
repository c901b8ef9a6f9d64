#include "hopfkit/words.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

namespace hopfkit {

Alphabet::Alphabet(std::string letters) : letters_(std::move(letters))
{
    if (letters_.empty())
        throw std::invalid_argument("empty alphabet");
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (!std::isalpha(static_cast<unsigned char>(letters_[i])))
            throw std::invalid_argument("letters must be alphabetic characters");
        if (letters_.find(letters_[i], i + 1) != std::string::npos)
            throw std::invalid_argument(std::string("duplicate letter ") + letters_[i]);
    }
}

int Alphabet::index(char c) const
{
    auto p = letters_.find(c);
    if (p == std::string::npos)
        throw std::invalid_argument(std::string("letter not in alphabet: ") + c);
    return static_cast<int>(p);
}

bool Alphabet::valid_word(const std::string &w) const
{
    return std::all_of(w.begin(), w.end(), [&](char c) { return contains(c); });
}

BasisPtr word_basis(const Alphabet &alphabet, int order)
{
    auto b = std::make_shared<GradedBasis>("1");
    std::vector<std::string> level{""};
    for (int n = 1; n <= order; ++n) {
        std::vector<std::string> next;
        next.reserve(level.size() * alphabet.size());
        for (const auto &w : level)
            for (char c : alphabet.letters())
                next.push_back(w + c);
        for (const auto &w : next)
            b->add(w, n);
        level = std::move(next);
    }
    return b;
}

int word_id(const GradedBasis &basis, const std::string &word)
{
    return word.empty() ? GradedBasis::unit : basis.id(word);
}

WordPoly shuffle_words(const std::string &u, const std::string &v)
{
    WordPoly out;
    std::string buf;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t j) {
        if (i == u.size() && j == v.size()) {
            out[buf] += 1;
            return;
        }
        if (i < u.size()) {
            buf.push_back(u[i]);
            rec(i + 1, j);
            buf.pop_back();
        }
        if (j < v.size()) {
            buf.push_back(v[j]);
            rec(i, j + 1);
            buf.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

Series<Rational> shuffle(const Alphabet &alphabet, const std::string &u, const std::string &v)
{
    if (!alphabet.valid_word(u) || !alphabet.valid_word(v))
        throw std::invalid_argument("shuffle: word outside the alphabet");
    int n = static_cast<int>(u.size() + v.size());
    auto basis = word_basis(alphabet, n);
    Series<Rational> s(basis, n);
    for (const auto &[w, c] : shuffle_words(u, v))
        s.add(word_id(*basis, w), c);
    return s;
}

MuTable concat_mu(const BasisPtr &basis)
{
    MuTable mu(basis);
    int order = basis->max_degree();
    for (int n = 2; n <= order; ++n)
        for (int id : basis->of_degree(n)) {
            const std::string &w = basis->name(id);
            for (int k = 1; k < n; ++k)
                mu.add(basis->id(w.substr(0, k)), basis->id(w.substr(k)), id, Rational(1));
        }
    return mu;
}

EtaTable shuffle_eta(const BasisPtr &basis)
{
    EtaTable eta(basis);
    int order = basis->max_degree();
    for (int p = 1; p <= order; ++p)
        for (int q = p; p + q <= order; ++q)
            for (int i : basis->of_degree(p))
                for (int j : basis->of_degree(q)) {
                    if (p == q && j < i)
                        continue;
                    for (const auto &[w, c] : shuffle_words(basis->name(i), basis->name(j)))
                        eta.add(i, j, basis->id(w), c);
                }
    return eta;
}

WordAlgebra make_word_algebra(const Alphabet &alphabet, int order)
{
    auto basis = word_basis(alphabet, order);
    return {alphabet, basis, concat_mu(basis), order};
}

LieExpr LieExpr::leaf(char c)
{
    LieExpr e;
    e.letter = c;
    return e;
}

LieExpr LieExpr::bracket(LieExpr l, LieExpr r)
{
    LieExpr e;
    e.left = std::make_shared<const LieExpr>(std::move(l));
    e.right = std::make_shared<const LieExpr>(std::move(r));
    return e;
}

int LieExpr::degree() const
{
    return is_leaf() ? 1 : left->degree() + right->degree();
}

namespace {

struct LieParser {
    const std::string &s;
    const Alphabet &alphabet;
    std::size_t pos = 0;

    void skip()
    {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }
    void expect(char c)
    {
        skip();
        if (pos >= s.size() || s[pos] != c)
            throw std::invalid_argument("malformed Lie expression '" + s + "': expected '" + c + "'");
        ++pos;
    }
    LieExpr parse()
    {
        skip();
        if (pos >= s.size())
            throw std::invalid_argument("malformed Lie expression '" + s + "'");
        if (s[pos] == '[') {
            ++pos;
            LieExpr l = parse();
            expect(',');
            LieExpr r = parse();
            expect(']');
            return LieExpr::bracket(std::move(l), std::move(r));
        }
        char c = s[pos++];
        if (!alphabet.contains(c))
            throw std::invalid_argument("malformed Lie expression '" + s + "': unknown letter");
        return LieExpr::leaf(c);
    }
};

} // namespace

LieExpr parse_lie(const std::string &text, const Alphabet &alphabet)
{
    LieParser p{text, alphabet};
    LieExpr e = p.parse();
    p.skip();
    if (p.pos != text.size())
        throw std::invalid_argument("malformed Lie expression '" + text + "': trailing input");
    return e;
}

std::string to_string(const LieExpr &e)
{
    if (e.is_leaf())
        return std::string(1, e.letter);
    return "[" + to_string(*e.left) + "," + to_string(*e.right) + "]";
}

WordPoly &axpy(WordPoly &y, const Rational &a, const WordPoly &x)
{
    for (const auto &[w, c] : x) {
        Rational &slot = y[w];
        slot += a * c;
        if (sgn(slot) == 0)
            y.erase(w);
    }
    return y;
}

WordPoly word_product(const WordPoly &x, const WordPoly &y)
{
    WordPoly out;
    for (const auto &[u, a] : x)
        for (const auto &[v, b] : y) {
            Rational &slot = out[u + v];
            slot += a * b;
            if (sgn(slot) == 0)
                out.erase(u + v);
        }
    return out;
}

WordPoly expand(const LieExpr &e)
{
    if (e.is_leaf())
        return {{std::string(1, e.letter), Rational(1)}};
    WordPoly l = expand(*e.left), r = expand(*e.right);
    WordPoly out = word_product(l, r);
    return axpy(out, Rational(-1), word_product(r, l));
}

Series<Rational> lie_normal_form(const LieExpr &e, const BasisPtr &basis, int order)
{
    Series<Rational> s(basis, order);
    for (const auto &[w, c] : expand(e))
        s.add(basis->id(w), c);
    return s;
}

namespace {

bool lex_less(const std::string &u, const std::string &v, const Alphabet &a)
{
    return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end(),
                                        [&](char x, char y) { return a.index(x) < a.index(y); });
}

bool is_lyndon(const std::string &w, const Alphabet &a)
{
    for (std::size_t k = 1; k < w.size(); ++k)
        if (!lex_less(w, w.substr(k) + w.substr(0, k), a))
            return false;
    return !w.empty();
}

} // namespace

std::vector<std::string> lyndon_words(const Alphabet &alphabet, int length)
{
    // Duval's generation in lexicographic order
    std::vector<std::string> out;
    int k = alphabet.size();
    std::vector<int> w{-1};
    while (!w.empty()) {
        ++w.back();
        if (static_cast<int>(w.size()) == length) {
            std::string s;
            for (int x : w)
                s += alphabet.letters()[x];
            out.push_back(s);
        }
        std::size_t m = w.size();
        while (static_cast<int>(w.size()) < length)
            w.push_back(w[w.size() - m]);
        while (!w.empty() && w.back() == k - 1)
            w.pop_back();
    }
    return out;
}

LieExpr lyndon_bracket(const std::string &word, const Alphabet &alphabet)
{
    if (!is_lyndon(word, alphabet))
        throw std::invalid_argument("not a Lyndon word: " + word);
    if (word.size() == 1)
        return LieExpr::leaf(word[0]);
    for (std::size_t k = 1; k < word.size(); ++k) {
        std::string v = word.substr(k);
        if (is_lyndon(v, alphabet))
            return LieExpr::bracket(lyndon_bracket(word.substr(0, k), alphabet), lyndon_bracket(v, alphabet));
    }
    throw std::logic_error("Lyndon factorization failed");
}

bool is_lie_polynomial(const WordPoly &p)
{
    // Dynkin-Specht-Wever: left-normed bracketing maps a homogeneous Lie
    // polynomial of degree n to n times itself.
    WordPoly theta;
    for (const auto &[w, c] : p) {
        if (w.empty())
            return false;
        LieExpr e = LieExpr::leaf(w[0]);
        for (std::size_t i = 1; i < w.size(); ++i)
            e = LieExpr::bracket(e, LieExpr::leaf(w[i]));
        axpy(theta, c / Rational(static_cast<long>(w.size())), expand(e));
    }
    return theta == p;
}

} // namespace hopfkit
