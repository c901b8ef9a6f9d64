#pragma once

#include "hopfkit/averaging.hpp"
#include "hopfkit/vector_fields.hpp"

#include <map>

namespace hopfkit {

/// Element of a GradedVFAlgebra with coefficients in R.
template <class R> using LieVec = std::map<int, R>;

/// Averaging carried out in Lie coordinates: kappa(t) = exp(W(t)) with W(t)
/// in the Lie algebra, so that
///   phi(ad_W) W' = beta - exp(-ad_W) beta_bar,  phi(z) = (1 - exp(-z))/z.
/// Zero-mean mode imposes mean(W) = 0, stroboscopic mode W(0) = 0.
struct LieAveragingResult {
    AveragingMode mode;
    int order;
    LieVec<Laurent> beta_bar;
    LieVec<OscCoef> w;
};

LieVec<OscCoef> lie_bracket(const GradedVFAlgebra &alg, const LieVec<OscCoef> &x, const LieVec<OscCoef> &y,
                            int max_degree);

LieAveragingResult lie_average(const GradedVFAlgebra &alg, const LieVec<OscCoef> &beta, AveragingMode mode,
                               int order);

/// phi(ad_W) W' - beta + exp(-ad_W) beta_bar, truncated at the order.
LieVec<OscCoef> lie_residual(const GradedVFAlgebra &alg, const LieVec<OscCoef> &beta, const LieAveragingResult &r);

/// sum beta_bar_i B_i as fields, collected by powers of w.
LaurentField lie_transfer(const GradedVFAlgebra &alg, const LieVec<Laurent> &v);

} // namespace hopfkit
