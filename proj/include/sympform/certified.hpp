#pragma once

#include "sympform/scalar_field.hpp"

namespace sympform {

/// Rigorous lower bound for the global minimum of a trig polynomial over the
/// torus. With L = sum_k 2*pi*|k|_1*|c_k| we have |f(x)-f(y)| <= L*|x-y|_inf,
/// and every point lies within h/2 (h = 1/resolution) of a grid node, so
///     min f  >=  grid_min - L*h/2 - tail_bound,
/// where tail_bound covers spectral content the stored field has discarded
/// (its tail_l1). certified_lower is the best such bound over a ladder of
/// resolutions (see certified_min), so it is monotone in the resolution.
struct CertifiedBound {
    double grid_min = 0.0;
    double tail_bound = 0.0;
    double lipschitz_bound = 0.0;
    double certified_lower = 0.0;
    int resolution = 0;
};

/// Evaluates the bound on the ladder resolution, resolution/2, ..., down to
/// 16, and takes the running max; doubling the resolution therefore never
/// worsens the result. Requires resolution >= 2K+1.
CertifiedBound certified_min(const ScalarField& f, int resolution);

}  // namespace sympform
