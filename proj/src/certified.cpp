#include "sympform/certified.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "sympform/kernels.hpp"

namespace sympform {

CertifiedBound certified_min(const ScalarField& f, int resolution) {
    if (resolution < 2 * f.K() + 1)
        throw std::invalid_argument("certified_min: resolution < 2K+1");

    const double lip = f.lipschitz_bound();

    CertifiedBound out;
    out.resolution = resolution;
    out.tail_bound = f.tail_l1;
    out.lipschitz_bound = lip;

    double best = -std::numeric_limits<double>::infinity();
    for (int r = resolution; r >= 16; r /= 2) {
        const double gm = kernels::grid_min(f, r);
        if (r == resolution) out.grid_min = gm;
        best = std::max(best, gm - lip * 0.5 / r);
    }
    if (resolution < 16) {  // tiny bandwidths may legally ask for < 16
        const double gm = kernels::grid_min(f, resolution);
        out.grid_min = gm;
        best = gm - lip * 0.5 / resolution;
    }
    out.certified_lower = best - out.tail_bound;
    return out;
}

}  // namespace sympform
