#pragma once

#include <memory>

#include "sympform/form.hpp"

namespace sympform {

/// S^1-invariant form on the circle bundle M -> T^3 with Euler form gamma,
/// encoded as the pair (sigma, tau) representing p*(sigma) + p*(tau) ^ eta.
/// eta is the global angular form of the bundle; it is never materialized.
/// Everything the algebra needs from it is axiomatic: S^1-invariance, unit
/// fiber integral, d eta = p*(gamma), eta ^ eta = 0.
///
/// Degrees: deg(sigma) = total degree, deg(tau) = total degree - 1. A null
/// gamma means the product bundle (gamma = 0). Invariant forms from
/// different bundles (different gamma objects) cannot be combined.
class InvariantForm {
public:
    InvariantForm(Form sigma, Form tau, std::shared_ptr<const Form> gamma = nullptr);

    int total_degree() const { return sigma_.degree(); }
    const Form& sigma() const { return sigma_; }
    const Form& tau() const { return tau_; }
    const std::shared_ptr<const Form>& gamma() const { return gamma_; }

private:
    Form sigma_;
    Form tau_;
    std::shared_ptr<const Form> gamma_;
};

/// Twisted differential: d(sigma, tau) = (d sigma + (-1)^deg(tau) tau^gamma, d tau).
/// Squares to zero whenever gamma is closed.
InvariantForm invariant_d(const InvariantForm& w);

/// (s1,t1)^(s2,t2) = (s1^s2, s1^t2 + (-1)^deg(s2) t1^s2); the eta^eta term
/// vanishes identically. Total degree of the result must be <= 4.
InvariantForm invariant_wedge(const InvariantForm& a, const InvariantForm& b);

/// Integration along the fiber: p_*(p*sigma + p*tau^eta) = tau.
Form fiber_integrate(const InvariantForm& w);

/// Integral over M of a total-degree-4 invariant form; orientation of M is
/// p*(vol_N) ^ eta, so this is the T^3 integral of tau.
double integrate_M(const InvariantForm& w);

}  // namespace sympform
