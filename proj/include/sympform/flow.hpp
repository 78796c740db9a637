#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "sympform/form.hpp"
#include "sympform/topology.hpp"

namespace sympform {

/// Closed loop in T^3, sampled at uniform parameters t_j = j/n. Samples are
/// stored wrapped to [0,1)^3; the accumulated lattice wrap (the homology
/// class of the loop) is kept alongside. Consecutive samples must stay
/// within max-distance 1/2 so the lift is unambiguous.
struct ParamCurve {
    std::vector<Point3> samples;
    IntVec3 homology{0, 0, 0};

    int size() const { return static_cast<int>(samples.size()); }
    void validate() const;

    /// Continuous lift to R^3 starting at samples[0]; lift[n] would equal
    /// lift[0] + homology.
    std::vector<Point3> lift() const;

    static ParamCurve from_lift(const std::vector<Point3>& lifted);
};

/// Tangent vectors d gamma/dt at the sample points, by spectral
/// differentiation of the trigonometric interpolant of the lift (exact for
/// bandlimited curves).
std::vector<Point3> curve_tangents(const ParamCurve& c);

/// Flow data of a closed non-degenerate 1-form with the flat metric: the
/// normalized dual field v = a / |a|^2 satisfies alpha(v) = 1 everywhere.
struct FlowField {
    Form alpha;
    double rk4_step = 1.0 / 4096.0;

    explicit FlowField(Form a, double step = 1.0 / 4096.0);

    bool constant() const { return constant_; }
    const RealVec3& constant_coords() const { return const_coords_; }

    /// v at a point; throws if |alpha|^2 degenerates below 1e-12.
    Point3 v(const Point3& p) const;

private:
    bool constant_ = false;
    RealVec3 const_coords_{0, 0, 0};
};

/// Period of alpha over the loop. Exact (homology pairing) for constant
/// alpha, spectral quadrature otherwise.
double alpha_period(const ParamCurve& gamma, const Form& alpha);

/// Time-s flow of -v from p. Constant fields use the closed form p - s*v;
/// otherwise fixed-step RK4. If `err` is given it receives a Richardson
/// step-halving estimate of the integration error.
Point3 flow_map(const Point3& p, double s, const FlowField& field,
                double* err = nullptr);

struct TransversalizeResult {
    ParamCurve curve;
    double m = 0.0;              // alpha-period of the input
    double phi_end = 0.0;        // reparametrization drift Phi(1); 0 in exact arithmetic
    double rk4_error = 0.0;      // max Richardson estimate over samples
    std::vector<double> phi;     // Phi at the sample parameters
};

/// Straightens a closed loop along the flow: gamma~(t) = F(gamma(t), Phi(t))
/// with Phi(t) = int_0^t alpha(gamma') - m t. For m != 0 the output is
/// pointwise transverse to ker(alpha) with alpha(gamma~') = m; for m = 0 it
/// lies in a single leaf.
TransversalizeResult transversalize(const ParamCurve& gamma, const FlowField& field);

struct TransversalityReport {
    bool leaf_mode = false;      // m == 0 branch
    double max_deviation = 0.0;  // max |alpha(gamma') - m|, or potential spread
    bool pass = false;
    int zero_speed_samples = 0;  // |gamma'| below 1e-8 (m = 0 may degenerate)
    double min_self_distance = 0.0;  // torus distance between far-apart samples
};

/// Verifies alpha(gamma'(t)) = m at every sample (m != 0), or containment in
/// a leaf via the alpha-potential (m = 0).
TransversalityReport check_transverse(const ParamCurve& gamma, const Form& alpha,
                                      double m, double tol);

}  // namespace sympform
