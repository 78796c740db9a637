#pragma once

#include <array>
#include <string>
#include <vector>

#include "sympform/scalar_field.hpp"

namespace sympform {

/// Coordinate 1-cycles and 2-cycles of the 3-torus, through the origin.
/// The tori are oriented yt: dy^dtheta, tx: dtheta^dx, xy: dx^dy.
enum class Cycle { X, Y, Theta, YTheta, ThetaX, XY };

int cycle_dimension(Cycle c);
std::string cycle_name(Cycle c);

/// Differential form on T^3 over the coframe (dx, dy, dtheta), one component
/// ScalarField per strictly increasing multi-index. Degrees 0..3 are the
/// real ones; degree 4 is allowed as the identically-zero form so that
/// operations that land there (d of a 3-form, top wedges in the bundle
/// algebra) have a value to return.
///
/// Component order: deg 1: x, y, t; deg 2: xy, xt, yt; deg 3: xyt.
class Form {
public:
    Form() : Form(0, 0) {}
    Form(int degree, int K);

    static Form zero(int degree, int K) { return Form(degree, K); }
    /// Constant 1-form a1 dx + a2 dy + a3 dtheta.
    static Form constant_one_form(int K, const std::array<double, 3>& a);
    /// Constant 2-form with coordinates in the basis (dy^dt, dt^dx, dx^dy).
    static Form constant_two_form_b2(int K, const std::array<double, 3>& h);
    static Form volume(int K);  // dx ^ dy ^ dtheta

    int degree() const { return degree_; }
    int K() const { return K_; }
    int component_count() const { return static_cast<int>(comps_.size()); }

    ScalarField& comp(int i) { return comps_[i]; }
    const ScalarField& comp(int i) const { return comps_[i]; }
    const std::vector<ScalarField>& components() const { return comps_; }

    /// Multi-index (ascending axis list) of component i.
    static std::vector<int> component_index(int degree, int i);
    static std::string component_name(int degree, int i);
    static int component_position(int degree, const std::vector<int>& idx);

    double max_abs_coeff() const;
    double tail_l1() const;
    bool is_constant() const;
    Form promoted(int newK) const;

    std::vector<double> evaluate(const Point3& p) const;

    Form operator+(const Form& o) const;
    Form operator-(const Form& o) const;
    Form operator*(double s) const;

private:
    int degree_;
    int K_;
    std::vector<ScalarField> comps_;
};

/// Graded wedge product; inputs are promoted to the larger bandwidth,
/// coefficient products are truncated back to it (discarded mass goes into
/// the components' tail bookkeeping). Total degree > 3 is an error except
/// degree exactly 4, which returns the zero 4-form.
Form wedge(const Form& a, const Form& b);

/// Spectral exterior derivative; exact on the stored coefficients.
Form exterior_derivative(const Form& a);

/// Integral over [0,1)^3 of a degree-3 form (the (0,0,0) coefficient of the
/// xyt component). Orientation: dx^dy^dtheta > 0.
double integrate_fundamental(const Form& a);

/// Period over a coordinate cycle through the origin; exact in terms of the
/// coefficients (frequencies along the cycle are averaged out, transverse
/// ones are evaluated at 0).
double integrate_over_cycle(const Form& a, Cycle c);

/// Periods of a 1-form over (x, y, theta) circles.
std::array<double, 3> periods_b1(const Form& a);
/// Periods of a 2-form over the (yt, tx, xy) coordinate tori.
std::array<double, 3> periods_b2(const Form& a);

}  // namespace sympform
