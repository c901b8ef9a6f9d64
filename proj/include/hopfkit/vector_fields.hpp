#pragma once

#include "hopfkit/hopf.hpp"
#include "hopfkit/linalg.hpp"
#include "hopfkit/poly.hpp"
#include "hopfkit/trees.hpp"
#include "hopfkit/words.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hopfkit {

/// State variables followed by parameters. Parameters are polynomial
/// variables with no velocity component, so derivations never touch them.
struct VariableSet {
    std::vector<std::string> state;
    std::vector<std::string> params;

    std::size_t dimension() const { return state.size(); }
    std::size_t nvars() const { return state.size() + params.size(); }
    std::vector<std::string> names() const;
    /// Index of a state variable or parameter by name; throws if unknown.
    std::size_t index(const std::string &name) const;
};

class PolyVectorField {
public:
    PolyVectorField() = default;
    PolyVectorField(std::size_t dimension, std::size_t nvars);
    PolyVectorField(std::size_t nvars, std::vector<RationalPoly> components);

    std::size_t dimension() const { return comps_.size(); }
    std::size_t nvars() const { return nvars_; }
    const RationalPoly &operator[](std::size_t i) const { return comps_.at(i); }
    RationalPoly &operator[](std::size_t i) { return comps_.at(i); }
    const std::vector<RationalPoly> &components() const { return comps_; }
    bool is_zero() const;

    PolyVectorField &operator+=(const PolyVectorField &o);
    PolyVectorField &operator-=(const PolyVectorField &o);
    PolyVectorField &operator*=(const Rational &c);
    friend PolyVectorField operator+(PolyVectorField a, const PolyVectorField &b) { return a += b; }
    friend PolyVectorField operator-(PolyVectorField a, const PolyVectorField &b) { return a -= b; }
    friend PolyVectorField operator*(PolyVectorField a, const Rational &c) { return a *= c; }
    friend PolyVectorField operator*(const Rational &c, PolyVectorField a) { return a *= c; }
    friend bool operator==(const PolyVectorField &a, const PolyVectorField &b) = default;

    /// Flattened coefficient vector, (component, exponents) -> coefficient.
    SparseVector<std::pair<int, Exponents>> flatten() const;

private:
    void check(const PolyVectorField &o) const;

    std::size_t nvars_ = 0;
    std::vector<RationalPoly> comps_;
};

/// sum_j f^j d(chi)/dx_j.
RationalPoly derivation_apply(const PolyVectorField &f, const RationalPoly &chi);
/// Components (F.grad) g^i - (G.grad) f^i.
PolyVectorField vf_bracket(const PolyVectorField &f, const PolyVectorField &g);
/// Componentwise derivation: the field with components F(g^i), i.e. g' f.
PolyVectorField directional(const PolyVectorField &f, const PolyVectorField &g);

/// "Y*dX + (-1/4*X - ...)*dY".
std::string to_string(const PolyVectorField &f, const VariableSet &vars);

/// Linear differential operator sum p_alpha(x) d^alpha, alpha over the state
/// variables.
class DiffOperator {
public:
    using Terms = std::map<Exponents, RationalPoly>;

    DiffOperator() = default;
    DiffOperator(std::size_t dimension, std::size_t nvars) : dim_(dimension), nvars_(nvars) {}
    static DiffOperator identity(std::size_t dimension, std::size_t nvars);
    static DiffOperator from_field(const PolyVectorField &f);

    const Terms &terms() const { return terms_; }
    std::size_t dimension() const { return dim_; }
    int order() const;
    void add_term(const Exponents &alpha, const RationalPoly &p);

    DiffOperator &operator+=(const DiffOperator &o);
    DiffOperator &operator*=(const Rational &c);
    friend DiffOperator operator+(DiffOperator a, const DiffOperator &b) { return a += b; }
    friend bool operator==(const DiffOperator &a, const DiffOperator &b) { return a.terms_ == b.terms_; }

    /// (this o o)(chi) = this(o(chi)).
    DiffOperator compose(const DiffOperator &o) const;
    RationalPoly apply(const RationalPoly &chi) const;

private:
    std::size_t dim_ = 0;
    std::size_t nvars_ = 0;
    Terms terms_;
};

/// Coordinate function chi^i as a polynomial.
RationalPoly coordinate(const VariableSet &vars, std::size_t i);

/// Psi on words: letters go to fields, Psi(a1...am) = F_a1 ... F_am.
class WordMorphism {
public:
    WordMorphism(Alphabet alphabet, VariableSet vars, std::vector<PolyVectorField> letter_fields);

    const Alphabet &alphabet() const { return alphabet_; }
    const VariableSet &variables() const { return vars_; }
    const PolyVectorField &letter(char c) const;

    /// Psi(w) chi, applying the letters right to left.
    RationalPoly apply(const std::string &word, const RationalPoly &chi) const;
    /// The word basis function f_w, components Psi(w) chi^i.
    PolyVectorField basis_function(const std::string &word) const;
    DiffOperator op(const std::string &word) const;
    /// Sum c_w f_w over a word polynomial.
    PolyVectorField image(const WordPoly &p) const;

private:
    Alphabet alphabet_;
    VariableSet vars_;
    std::vector<PolyVectorField> fields_;
    mutable std::map<std::string, PolyVectorField> cache_;
};

/// Psi on decorated trees through elementary differentials.
class TreeMorphism {
public:
    TreeMorphism(Alphabet alphabet, VariableSet vars, std::vector<PolyVectorField> letter_fields);

    const VariableSet &variables() const { return vars_; }
    /// F(t) = f_root^(k)(F(t_1), ..., F(t_k)).
    const PolyVectorField &elementary_differential(const Tree &t) const;
    /// Image of the Lie generator G_t dual to the forest u_t: F(t) / sigma(t).
    PolyVectorField generator_image(const Tree &t) const;
    PolyVectorField image(const TreePoly &p) const;

private:
    Alphabet alphabet_;
    VariableSet vars_;
    std::vector<PolyVectorField> fields_;
    mutable std::map<Tree, PolyVectorField> cache_;
};

/// Psi on a Hopf algebra built by hopf-forge: generator fields are given and
/// Z_j is expanded in ordered products of generators.
class HopfMorphism {
public:
    HopfMorphism(const GradedLieAlgebra &lie, const HopfData &h, VariableSet vars,
                 std::vector<PolyVectorField> generator_fields);

    /// Psi(Z_j) chi for a basis id j of h.
    RationalPoly apply(int j, const RationalPoly &chi) const;
    DiffOperator op(int j) const;
    /// Lie-homomorphism check on every generator pair.
    bool is_lie_homomorphism(const GradedLieAlgebra &lie) const;

private:
    const HopfData *h_;
    VariableSet vars_;
    std::vector<PolyVectorField> fields_;
    std::map<Monomial, UElement> z_;
};

/// Reduction of images modulo ker Psi, one degree at a time.
struct KernelQuotient {
    struct Degree {
        int degree = 0;
        /// Indices (into the supplied list) whose images form a basis.
        std::vector<int> survivors;
        /// index -> combination of survivors with equal image; zero images
        /// map to the empty combination.
        std::map<int, std::map<int, Rational>> relations;
    };
    std::vector<Degree> degrees;

    bool is_survivor(int index) const;
};

/// images[k] is Psi of the k-th basis element, degree[k] its grading.
KernelQuotient kernel_quotient(const std::vector<PolyVectorField> &images, const std::vector<int> &degree);

/// Graded Lie algebra of vector fields generated in degree one by monomial
/// fields, with the bookkeeping grading.
class GradedVFAlgebra {
public:
    GradedVFAlgebra(VariableSet vars, std::vector<PolyVectorField> generators, int order, std::size_t cap);

    int order() const { return order_; }
    int size() const { return static_cast<int>(fields_.size()); }
    int degree(int i) const { return degrees_.at(i); }
    const PolyVectorField &field(int i) const { return fields_.at(i); }
    /// Basis ids of degree n, as a half-open range.
    std::pair<int, int> range(int n) const { return {offsets_.at(n), offsets_.at(n + 1)}; }
    std::vector<int> dimensions() const;
    const VariableSet &variables() const { return vars_; }
    /// extra brackets that were dependent when building degree n: (l, r, combination)
    struct Relation {
        int left;
        int right;
        std::map<int, Rational> combination;
    };
    const std::vector<Relation> &relations() const { return relations_; }

    /// [B_l, B_r] in the basis, zero above the order. Cached.
    const SparseVector<int> &bracket(int l, int r) const;
    /// Coordinates of a field of degree n in the degree-n basis.
    std::optional<SparseVector<int>> express(const PolyVectorField &f, int n) const;
    /// Structure constants as a hopf-forge input (eager; meant for small orders).
    GradedLieAlgebra lie_algebra(int order) const;

private:
    VariableSet vars_;
    int order_;
    std::vector<PolyVectorField> fields_;
    std::vector<int> degrees_;
    std::vector<int> offsets_;
    std::vector<EchelonBasis<std::pair<int, Exponents>>> echelon_;
    std::vector<Relation> relations_;
    mutable std::map<std::pair<int, int>, SparseVector<int>> brackets_;
};

/// Single-monomial pieces of a field: each term c x^e d_i becomes the
/// generator x^e d_i with coefficient c.
std::vector<std::pair<PolyVectorField, Rational>> monomial_pieces(const PolyVectorField &f);

/// A combination of bracketed Lyndon words whose word expansion matches the
/// target image under Psi, with the fewest terms.
struct CompressedLie {
    std::vector<std::pair<Rational, LieExpr>> terms;
};
std::optional<CompressedLie> compress_commutators(const PolyVectorField &target, const WordMorphism &psi, int degree,
                                                  int max_terms);

} // namespace hopfkit
