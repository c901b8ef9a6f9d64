#pragma once

#include "hopfkit/averaging.hpp"
#include "hopfkit/lie_averaging.hpp"
#include "hopfkit/system.hpp"
#include "hopfkit/trees.hpp"
#include "hopfkit/words.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hopfkit {

enum class Backend { words, trees, monomial };

std::string to_string(Backend b);
Backend parse_backend(const std::string &text);
/// Largest order accepted by default: 8 for words, 6 for trees, 12 for
/// monomial fields.
int default_cap(Backend b);

/// beta(t) = sum_g cos(k_g w t) g over words or trees.
OscSeries word_curve(const SystemSpec &spec, const WordAlgebra &wa);
OscSeries tree_curve(const SystemSpec &spec, const TreeAlgebra &ta);

/// Monomial generators of the system fields and beta(t) in their coordinates.
struct MonomialCurve {
    std::vector<PolyVectorField> generators;
    LieVec<OscCoef> beta;
};
MonomialCurve monomial_curve(const SystemSpec &spec);

/// Outcome of the product-rule checks on emitted series.
struct PredicateCheck {
    bool holds = true;
    /// "all 120 pairs", "2000 pairs, seed 7" or "Lie coordinates".
    std::string scope;
};

/// Every pair when there are at most exhaustive_limit of them and no seed is
/// given; otherwise sampled_pairs pseudo-random pairs from the seed (0 when
/// absent).
std::vector<std::pair<int, int>> predicate_pairs(const GradedBasis &basis, int order, std::optional<unsigned> seed,
                                                 std::string &scope);
constexpr std::size_t exhaustive_limit = 50000;
constexpr int sampled_pairs = 2000;

/// u_l u_r in the shuffle algebra of words and in the forest algebra.
std::vector<MuEntry> shuffle_entries(const GradedBasis &words, int l, int r);
std::vector<MuEntry> forest_entries(const GradedBasis &forests, int l, int r);

struct TableEntry {
    std::string label;
    int degree;
    std::string coefficient;
};

/// One bracketed Lie element with its coefficient, at a fixed degree and
/// power of w.
struct CompressedTerm {
    int degree;
    int w_power;
    Rational coefficient;
    LieExpr expr;
};
std::string to_string(const std::vector<CompressedTerm> &terms);

struct AverageReport {
    Backend backend;
    AveragingMode mode;
    int order;
    std::vector<TableEntry> beta_bar;
    /// kappa for words and trees, the Lie coordinates W for monomial fields.
    std::vector<TableEntry> kappa;
    LaurentField field;
    /// Trees: support of beta_bar with nonzero image, and a subset whose
    /// images form a basis of the span modulo ker Psi.
    std::vector<std::string> survivors;
    std::vector<std::string> independent;
    /// Only for orders up to 3; empty when some piece does not compress.
    std::vector<CompressedTerm> compressed;
    /// Monomial: dimensions of the graded algebra per degree.
    std::vector<int> dimensions;
    /// beta_bar infinitesimal and kappa a character.
    PredicateCheck predicates;
};

/// Throws std::length_error above the cap (0 means the default cap).
AverageReport run_average(const SystemSpec &spec, Backend backend, AveragingMode mode, int order, int cap = 0,
                          std::optional<unsigned> seed = std::nullopt);

/// Word averaging kept together with the algebra it lives in.
struct WordAveraging {
    WordAlgebra algebra;
    AveragingResult result;
    WordMorphism psi;
};
WordAveraging average_words(const SystemSpec &spec, AveragingMode mode, int order);
/// Psi(beta_bar) and U(x, t) = Psi(kappa(t)) chi.
LaurentField transferred_field(const WordAveraging &w);
OscMap change_of_variables(const WordAveraging &w);

struct TreeSurvivors {
    std::vector<std::string> nonzero;
    std::vector<std::string> independent;
};
/// Kernel quotient over the support of a tree series, degree by degree.
TreeSurvivors tree_survivors(const LaurentSeries &s, const TreeMorphism &psi);

/// Compresses each homogeneous piece of a field series produced from a
/// series on words or trees into a sparsest bracket combination.
std::vector<CompressedTerm> compress_series(const std::vector<std::pair<int, LaurentField>> &by_degree,
                                            const WordMorphism &psi, int max_terms);

} // namespace hopfkit
