#pragma once

#include "hopfkit/series.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace hopfkit {

/// Ordered alphabet of single-character letters.
class Alphabet {
public:
    explicit Alphabet(std::string letters);

    const std::string &letters() const { return letters_; }
    int size() const { return static_cast<int>(letters_.size()); }
    bool contains(char c) const { return letters_.find(c) != std::string::npos; }
    int index(char c) const;
    bool valid_word(const std::string &w) const;
    friend bool operator==(const Alphabet &, const Alphabet &) = default;

private:
    std::string letters_;
};

/// Word basis up to degree N (words listed by length, then lexicographically
/// in alphabet order); the empty word is the unit "1".
BasisPtr word_basis(const Alphabet &alphabet, int order);

/// Index of a word inside word_basis.
int word_id(const GradedBasis &basis, const std::string &word);

/// Word polynomial: word -> coefficient, empty string is the unit.
using WordPoly = std::map<std::string, Rational>;

WordPoly shuffle_words(const std::string &u, const std::string &v);
Series<Rational> shuffle(const Alphabet &alphabet, const std::string &u, const std::string &v);

/// Concatenation: mu^{w}_{w',w''} = 1 iff w = w'w''.
MuTable concat_mu(const BasisPtr &basis);
/// Shuffle product of H in the word basis.
EtaTable shuffle_eta(const BasisPtr &basis);

struct WordAlgebra {
    Alphabet alphabet;
    BasisPtr basis;
    MuTable mu;
    int order;
};

/// Basis plus concatenation table; the shuffle table is built on request.
WordAlgebra make_word_algebra(const Alphabet &alphabet, int order);

/// Bracket expression over letters: either a letter or [left,right].
struct LieExpr {
    char letter = 0;
    std::shared_ptr<const LieExpr> left, right;

    static LieExpr leaf(char c);
    static LieExpr bracket(LieExpr l, LieExpr r);
    bool is_leaf() const { return !left; }
    int degree() const;
};

/// Parses "a", "[a,b]", "[a,[a,b]]" (whitespace ignored).
LieExpr parse_lie(const std::string &text, const Alphabet &alphabet);
std::string to_string(const LieExpr &e);
/// Expansion of brackets by concatenation, collected.
WordPoly expand(const LieExpr &e);
/// Expansion as a series over the word basis.
Series<Rational> lie_normal_form(const LieExpr &e, const BasisPtr &basis, int order);

/// Lyndon words of the given length, increasing lexicographic order.
std::vector<std::string> lyndon_words(const Alphabet &alphabet, int length);
/// Standard bracketing of a Lyndon word.
LieExpr lyndon_bracket(const std::string &word, const Alphabet &alphabet);

WordPoly word_product(const WordPoly &x, const WordPoly &y);
WordPoly &axpy(WordPoly &y, const Rational &a, const WordPoly &x);
bool is_lie_polynomial(const WordPoly &p);

} // namespace hopfkit
