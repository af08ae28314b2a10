#ifndef PWAVG_MATRIX_RANK_HPP
#define PWAVG_MATRIX_RANK_HPP

#include <vector>

#include "pwavg/jet.hpp"
#include "pwavg/param_poly.hpp"
#include "pwavg/rational.hpp"
#include "pwavg/rng.hpp"

namespace pwavg {

/// Exact rank of a rational matrix (Gaussian elimination over Q).
int rank_exact(std::vector<std::vector<Rat>> m);

/// Exact value and gradient of p at a rational point. `point` must assign
/// every symbol of p (Pi included, via its designated rational surrogate);
/// gradient entries are produced for the listed seeds only.
Jet poly_eval_jet(const ParamPoly& p, const std::vector<std::pair<Symbol, Rat>>& point,
                  const std::vector<Symbol>& seeds);

/// Max over `trials` of the exact Jacobian rank of `rows` w.r.t. `seeds`
/// at fresh random rational points (Pi replaced by a random rational
/// surrogate near it). A certified lower bound on the generic rank.
int rank_at_points(const std::vector<ParamPoly>& rows, const std::vector<Symbol>& seeds,
                   int trials, Rng& rng);

/// Rank of a Jacobian given as jet gradients w.r.t. `seeds`.
int jet_rank(const std::vector<Jet>& rows, const std::vector<Symbol>& seeds);

} // namespace pwavg

#endif
