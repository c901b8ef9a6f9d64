#pragma once

#include "hopfkit/series.hpp"
#include "hopfkit/words.hpp"

#include <map>
#include <string>
#include <vector>

namespace hopfkit {

/// Rooted tree with letter decorations; children kept in canonical order.
class Tree {
public:
    Tree() = default;
    explicit Tree(char root, std::vector<Tree> children = {});

    char root() const { return root_; }
    const std::vector<Tree> &children() const { return children_; }
    int degree() const { return degree_; }
    /// Order of the automorphism group.
    long symmetry() const;

    friend bool operator==(const Tree &a, const Tree &b) { return compare(a, b) == 0; }
    friend bool operator<(const Tree &a, const Tree &b) { return compare(a, b) < 0; }
    /// Total order by (degree, root decoration, children).
    static int compare(const Tree &a, const Tree &b);

private:
    char root_ = 0;
    std::vector<Tree> children_;
    int degree_ = 0;
};

/// Sorted multiset of trees; empty forest is the unit.
using Forest = std::vector<Tree>;

Forest make_forest(std::vector<Tree> trees);
Forest forest_product(const Forest &a, const Forest &b);
int degree(const Forest &f);

/// "a", "a[b]", "d[bc]", "d[b[c]]".
std::string to_string(const Tree &t);
/// Trees joined with the middle dot; "1" for the empty forest.
std::string to_string(const Forest &f);
Tree parse_tree(const std::string &text);
Forest parse_forest(const std::string &text);

using TreePoly = std::map<Tree, Rational>;

TreePoly &axpy(TreePoly &y, const Rational &a, const TreePoly &x);

/// Sum over vertices v of host of the tree obtained by hanging guest under v.
TreePoly graft(const Tree &guest, const Tree &host);
TreePoly graft(const TreePoly &guest, const TreePoly &host);
/// graft(x,y) - graft(y,x).
TreePoly gl_bracket(const TreePoly &x, const TreePoly &y);

/// Trees of the given degree over the alphabet, in canonical order.
std::vector<Tree> trees_of_degree(const Alphabet &alphabet, int n);
/// Forests of the given degree over the alphabet.
std::vector<Forest> forests_of_degree(const Alphabet &alphabet, int n);

using ForestTensor = std::map<std::pair<Forest, Forest>, Rational>;

/// Admissible-cut coproduct: pruned forest on the left, trunk on the right.
ForestTensor ck_coproduct(const Forest &f);
ForestTensor ck_coproduct(const Tree &t);

/// Connes-Kreimer Hopf algebra up to degree N: forests as basis of H, mu from
/// the admissible cuts and eta from the forest product.
struct TreeAlgebra {
    Alphabet alphabet;
    BasisPtr basis;
    MuTable mu;
    int order;
    /// Basis id of each tree (as a one-tree forest).
    std::map<Tree, int> tree_ids;
};

TreeAlgebra make_tree_algebra(const Alphabet &alphabet, int order);
EtaTable forest_eta(const TreeAlgebra &algebra);

/// Counts n(s, r; t) of edges of t whose cut leaves the pruned branch s and
/// the trunk r. These are the pre-Lie constants dual to the CK coproduct.
std::map<std::pair<Tree, Tree>, long> single_cuts(const Tree &t);

} // namespace hopfkit
