#include "sympform/invariant.hpp"

#include <stdexcept>

namespace sympform {

namespace {

void check_same_bundle(const InvariantForm& a, const InvariantForm& b) {
    if (a.gamma() != b.gamma())
        throw std::invalid_argument("invariant forms live on different bundles");
}

}  // namespace

InvariantForm::InvariantForm(Form sigma, Form tau, std::shared_ptr<const Form> gamma)
    : sigma_(std::move(sigma)), tau_(std::move(tau)), gamma_(std::move(gamma)) {
    if (sigma_.degree() != tau_.degree() + 1)
        throw std::invalid_argument("InvariantForm: deg(sigma) must be deg(tau)+1");
    if (gamma_ && gamma_->degree() != 2)
        throw std::invalid_argument("InvariantForm: gamma must be a 2-form");
}

InvariantForm invariant_d(const InvariantForm& w) {
    const int total = w.total_degree();
    if (total > 3) throw std::invalid_argument("invariant_d: degree overflow");
    const Form dtau = exterior_derivative(w.tau());
    if (total == 3) {
        // Both d(sigma) and tau^gamma have degree 4 on N, hence vanish.
        return InvariantForm(Form(4, w.sigma().K()), dtau, w.gamma());
    }
    Form dsigma = exterior_derivative(w.sigma());
    if (w.gamma()) {
        const int sign = (w.tau().degree() % 2 == 0) ? 1 : -1;
        dsigma = dsigma + wedge(w.tau(), *w.gamma()) * double(sign);
    }
    return InvariantForm(std::move(dsigma), dtau, w.gamma());
}

InvariantForm invariant_wedge(const InvariantForm& a, const InvariantForm& b) {
    check_same_bundle(a, b);
    const int total = a.total_degree() + b.total_degree();
    if (total > 4) throw std::invalid_argument("invariant_wedge: degree overflow");
    const int K = std::max(a.sigma().K(), b.sigma().K());

    Form sigma = (total == 4) ? Form(4, K) : wedge(a.sigma(), b.sigma());

    const int sign = (b.sigma().degree() % 2 == 0) ? 1 : -1;
    Form tau = wedge(a.sigma(), b.tau()) + wedge(a.tau(), b.sigma()) * double(sign);

    return InvariantForm(std::move(sigma), std::move(tau), a.gamma());
}

Form fiber_integrate(const InvariantForm& w) { return w.tau(); }

double integrate_M(const InvariantForm& w) {
    if (w.total_degree() != 4)
        throw std::invalid_argument("integrate_M: need total degree 4");
    return integrate_fundamental(w.tau());
}

}  // namespace sympform
