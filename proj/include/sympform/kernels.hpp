#pragma once

#include <vector>

#include "sympform/scalar_field.hpp"

namespace sympform::kernels {

/// Samples f on the uniform R^3 grid x = (i1,i2,i3)/R.
/// Layout: flat index (i1*R + i2)*R + i3. Parallel over x1 slabs; each output
/// value is a fixed-order serial sum, so results are identical for any thread
/// count.
std::vector<double> synthesize(const ScalarField& f, int R);

/// Fourier coefficients (|k|_inf <= K) of grid samples by the trapezoid rule.
/// Exact when the samples come from a field of bandwidth < R - K (no alias
/// lands inside the kept band). Hermitian symmetry of the output is exact.
ScalarField analyze(const std::vector<double>& samples, int R, int K);

struct ProductResult {
    ScalarField field;   // truncated to the requested bandwidth
    double dropped_l1 = 0.0;  // l1 mass of frequencies beyond it (exact)
};

/// Pointwise product of two fields, computed alias-free on an oversampled
/// grid (R >= 2(Ka+Kb)+1), then truncated to bandwidth Kout. The discarded
/// spectral mass is reported and folded into the result's tail bookkeeping,
/// together with the inputs' own tails.
ProductResult multiply(const ScalarField& a, const ScalarField& b, int Kout);

/// Minimum of f over the R^3 sample grid.
double grid_min(const ScalarField& f, int R);

/// Shared phase table: exp(+2*pi*i*m/R) for m in [0,R), with the conjugate
/// symmetry table[R-m] == conj(table[m]) holding bit-exactly.
std::vector<Complex> phase_table(int R);

}  // namespace sympform::kernels
