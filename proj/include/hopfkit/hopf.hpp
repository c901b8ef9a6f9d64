#pragma once

#include "hopfkit/series.hpp"
#include "hopfkit/trees.hpp"
#include "hopfkit/words.hpp"

#include <map>
#include <string>
#include <vector>

namespace hopfkit {

/// Sparse combination of generator indices.
using IndexVector = std::map<int, Rational>;

/// Graded Lie algebra given by structure constants on a homogeneous basis.
/// Indices are kept sorted by degree (stable in declaration order), which
/// fixes the total order used for multi-indices.
class GradedLieAlgebra {
public:
    struct Index {
        std::string name;
        int degree;
    };

    GradedLieAlgebra() = default;
    explicit GradedLieAlgebra(std::vector<Index> indices);

    int size() const { return static_cast<int>(indices_.size()); }
    int degree(int i) const { return indices_.at(i).degree; }
    const std::string &name(int i) const { return indices_.at(i).name; }
    int find(const std::string &name) const;
    int max_degree() const;

    /// Records [G_l, G_r] += value G_t together with the antisymmetric entry.
    void add_bracket(int l, int r, int t, const Rational &value);
    /// Records a single entry without antisymmetrization (for validation).
    void add_raw(int l, int r, int t, const Rational &value);
    IndexVector bracket(int l, int r) const;
    IndexVector bracket(const IndexVector &x, const IndexVector &y) const;
    const std::map<std::pair<int, int>, IndexVector> &constants() const { return lambda_; }

    bool antisymmetric() const;
    bool graded() const;
    /// Jacobi identity on all triples of total degree <= n.
    bool jacobi(int n) const;

private:
    std::vector<Index> indices_;
    std::map<std::pair<int, int>, IndexVector> lambda_;
};

/// Sorted multiset of generator indices; empty is the unit.
using Monomial = std::vector<int>;
using SPoly = std::map<Monomial, Rational>;
using STensor = std::map<std::pair<Monomial, Monomial>, Rational>;
/// (i', i'') -> coefficient of v_i' (x) v_i''.
using VTensor = std::map<std::pair<int, int>, Rational>;

/// Pre-Lie coproduct: one V (x) V tensor per generator.
struct PreLieCoproduct {
    std::vector<int> degrees;
    std::vector<VTensor> values;
};

PreLieCoproduct prelie_from_lie(const GradedLieAlgebra &lie);
/// delta = hdelta - tau o hdelta, compared against the Lie constants.
bool satisfies_cobracket(const PreLieCoproduct &hd, const GradedLieAlgebra &lie);
/// Left pre-Lie coalgebra identity on generators of degree <= n.
bool is_prelie(const PreLieCoproduct &hd, int n);

/// Dynkin map on generators: D(v_i) as an element of S(V).
std::vector<SPoly> dynkin_map(const PreLieCoproduct &hd, int n);

/// Hopf algebra S(V) built from a pre-Lie coproduct, truncated at degree N.
struct HopfData {
    std::vector<std::string> names;
    std::vector<int> degrees;
    int order = 0;
    PreLieCoproduct hdelta;
    std::vector<SPoly> dynkin;
    /// Reduced coproduct on generators, values in S(V) (x) V.
    std::vector<STensor> delta_bar;
    std::vector<SPoly> antipode_generators;
    /// Monomials u_j indexed by basis id.
    BasisPtr basis;
    std::vector<Monomial> monomials;
    std::map<Monomial, int> monomial_ids;
    MuTable mu;
    EtaTable eta;

    int degree(const Monomial &m) const;
    std::string name(const Monomial &m) const;
    /// Full coproduct of a monomial.
    STensor coproduct(const Monomial &m) const;
    STensor coproduct(const SPoly &p) const;
    SPoly antipode(const Monomial &m) const;
};

/// Requires the pre-Lie identity (checked); throws std::invalid_argument.
HopfData coproduct_from_prelie(const PreLieCoproduct &hd, std::vector<std::string> names, int order);
/// Jacobi is checked; the pre-Lie check is skipped.
HopfData coproduct_from_lie(const GradedLieAlgebra &lie, int order);

/// Element of U(g) in the ordered (unscaled) PBW basis G_i1 ... G_im.
using UElement = std::map<Monomial, Rational>;

/// Normal ordering of an arbitrary product G_w1 ... G_wk.
UElement normal_order(const GradedLieAlgebra &lie, const std::vector<int> &word);
UElement u_product(const GradedLieAlgebra &lie, const UElement &x, const UElement &y);

/// Z_j = (1/|j|) sum over distinct i in j of |i| G_i * Z_{j\i}.
std::map<Monomial, UElement> dual_basis(const GradedLieAlgebra &lie, const HopfData &h);
/// mu table reconstructed by straightening Z_j' * Z_j'' into the Z basis.
MuTable mu_table(const GradedLieAlgebra &lie, const HopfData &h);

/// <G_k1 ... G_kr, u> through iterated coproducts.
Rational pairing(const HopfData &h, const std::vector<int> &word, const Monomial &u);

struct HopfAudit {
    bool coassociative = true;
    bool counit = true;
    bool multiplicative = true;
    bool antipode = true;
    bool duality = true;
    bool rho_identity = true;
    std::vector<std::string> failures;
    bool all() const { return coassociative && counit && multiplicative && antipode && duality && rho_identity; }
};

/// Axiom checks on all monomials of degree <= n. Duality needs the Lie
/// algebra for straightening; pass nullptr to skip it.
HopfAudit audit(const HopfData &h, const GradedLieAlgebra *lie, int n);

// Built-in test algebras.
GradedLieAlgebra abelian_algebra();
/// G_n of degree n, [G_m, G_n] = (n - m) G_{m+n}.
GradedLieAlgebra witt_algebra(int order);
/// Free Lie algebra in the Lyndon basis; names are the Lyndon words.
GradedLieAlgebra free_lie_algebra(const Alphabet &alphabet, int order);
/// Grossman-Larson pre-Lie coproduct on decorated trees (single edge cuts).
PreLieCoproduct grossman_larson_prelie(const Alphabet &alphabet, int order, std::vector<std::string> &names);
/// Lie constants of the same algebra (delta = hdelta - tau hdelta).
GradedLieAlgebra grossman_larson_algebra(const Alphabet &alphabet, int order);

std::string to_string(const SPoly &p, const std::vector<std::string> &names);
std::string to_string(const STensor &t, const std::vector<std::string> &names);

} // namespace hopfkit
