#pragma once

#include <vector>

#include "sympform/scalar_field.hpp"

// Serial, single-loop implementations of the grid kernels. These are the
// correctness baseline the parallel kernels are tested against (and the
// slow side of the benchmark). Keep them obvious, not fast.
namespace sympform::reference {

std::vector<double> synthesize(const ScalarField& f, int R);

ScalarField analyze(const std::vector<double>& samples, int R, int K);

/// Direct truncated convolution: (ab)_k = sum_j a_j b_{k-j}, computed for
/// every k with |k|_inf <= Kout.
ScalarField convolve(const ScalarField& a, const ScalarField& b, int Kout);

double grid_min(const ScalarField& f, int R);

}  // namespace sympform::reference
