#include "sympform/flow.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace sympform {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap01(double x) {
    double r = x - std::floor(x);
    return (r >= 1.0) ? 0.0 : r;
}

double nearest_image(double d) { return d - std::round(d); }

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

// In-place iterative radix-2 FFT (forward: sign = -1).
void fft_pow2(std::vector<Complex>& a, int sign) {
    const int n = static_cast<int>(a.size());
    for (int i = 1, j = 0; i < n; ++i) {
        int bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (int len = 2; len <= n; len <<= 1) {
        const double ang = sign * kTwoPi / len;
        const Complex wl = std::polar(1.0, ang);
        for (int i = 0; i < n; i += len) {
            Complex w(1.0, 0.0);
            for (int j = 0; j < len / 2; ++j) {
                const Complex u = a[i + j], v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

std::vector<Complex> dft(const std::vector<double>& x, int sign) {
    const int n = static_cast<int>(x.size());
    std::vector<Complex> a(x.begin(), x.end());
    if (is_pow2(n)) {
        fft_pow2(a, sign);
        return a;
    }
    std::vector<Complex> out(n, Complex(0, 0));
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j)
            out[k] += x[j] * std::polar(1.0, sign * kTwoPi * ((long long)k * j % n) / n);
    return out;
}

std::vector<double> idft_real(std::vector<Complex> a) {
    const int n = static_cast<int>(a.size());
    if (is_pow2(n)) {
        fft_pow2(a, +1);
        std::vector<double> out(n);
        for (int j = 0; j < n; ++j) out[j] = a[j].real() / n;
        return out;
    }
    std::vector<double> out(n, 0.0);
    for (int j = 0; j < n; ++j) {
        Complex acc(0, 0);
        for (int k = 0; k < n; ++k)
            acc += a[k] * std::polar(1.0, kTwoPi * ((long long)k * j % n) / n);
        out[j] = acc.real() / n;
    }
    return out;
}

// Signed frequency of DFT bin k for length n.
int bin_freq(int k, int n) { return (k <= n / 2) ? k : k - n; }

// Spectral derivative of a periodic sample sequence.
std::vector<double> periodic_derivative(const std::vector<double>& x) {
    const int n = static_cast<int>(x.size());
    auto a = dft(x, -1);
    for (int k = 0; k < n; ++k) {
        const int m = bin_freq(k, n);
        // The Nyquist bin of an even-length transform has no well-defined
        // derivative phase; a real symmetric choice is to zero it.
        if (2 * m == n || 2 * m == -n)
            a[k] = Complex(0, 0);
        else
            a[k] *= Complex(0, kTwoPi * m);
    }
    return idft_real(std::move(a));
}

// Partial integrals P(t_j) = int_0^{t_j} x(t) dt of the trig interpolant,
// with the mean removed (so P is periodic): x = mean + oscillating part.
// Returns P for the oscillating part only; caller adds mean * t.
std::vector<double> periodic_partial_integral(const std::vector<double>& x) {
    const int n = static_cast<int>(x.size());
    auto a = dft(x, -1);
    std::vector<Complex> b(n, Complex(0, 0));
    for (int k = 1; k < n; ++k) {
        const int m = bin_freq(k, n);
        if (2 * m == n || 2 * m == -n) continue;  // drop Nyquist
        b[k] = a[k] / Complex(0, kTwoPi * m);
    }
    auto vals = idft_real(std::move(b));
    const double p0 = vals[0];  // anchor the integral at zero
    for (auto& v : vals) v -= p0;
    return vals;
}

RealVec3 constant_coords_of(const Form& alpha) {
    return {alpha.comp(0).mean(), alpha.comp(1).mean(), alpha.comp(2).mean()};
}

Point3 eval_alpha(const Form& alpha, bool constant, const RealVec3& cc,
                  const Point3& p) {
    if (constant) return {cc[0], cc[1], cc[2]};
    return {alpha.comp(0).evaluate(p), alpha.comp(1).evaluate(p),
            alpha.comp(2).evaluate(p)};
}

}  // namespace

void ParamCurve::validate() const {
    if (samples.size() < 8)
        throw std::invalid_argument("ParamCurve: need at least 8 samples");
    const int n = size();
    for (int j = 0; j < n; ++j) {
        const Point3& a = samples[j];
        const Point3& b = samples[(j + 1) % n];
        for (int c = 0; c < 3; ++c) {
            if (a[c] < 0.0 || a[c] >= 1.0)
                throw std::invalid_argument("ParamCurve: sample outside [0,1)");
            if (std::abs(nearest_image(b[c] - a[c])) > 0.5 - 1e-9)
                throw std::invalid_argument("ParamCurve: step exceeds lift bound");
        }
    }
    // The declared homology must match the accumulated wrap.
    const auto l = lift();
    for (int c = 0; c < 3; ++c) {
        const double closing =
            l.back()[c] + nearest_image(samples[0][c] - l.back()[c]) - l.front()[c];
        if (std::llround(closing) != homology[c] || std::abs(closing - std::round(closing)) > 1e-9)
            throw std::invalid_argument("ParamCurve: homology does not match the wrap");
    }
}

std::vector<Point3> ParamCurve::lift() const {
    std::vector<Point3> out(samples.size());
    out[0] = samples[0];
    for (std::size_t j = 1; j < samples.size(); ++j)
        for (int c = 0; c < 3; ++c)
            out[j][c] = out[j - 1][c] + nearest_image(samples[j][c] - samples[j - 1][c]);
    return out;
}

ParamCurve ParamCurve::from_lift(const std::vector<Point3>& lifted) {
    if (lifted.size() < 8)
        throw std::invalid_argument("ParamCurve: need at least 8 samples");
    ParamCurve c;
    c.samples.resize(lifted.size());
    for (std::size_t j = 0; j < lifted.size(); ++j)
        for (int a = 0; a < 3; ++a) c.samples[j][a] = wrap01(lifted[j][a]);
    // Wrap accumulated over one period: lift(1) - lift(0) continued past the
    // last sample by the nearest image of the first.
    const Point3& last = lifted.back();
    const Point3& first = lifted.front();
    for (int a = 0; a < 3; ++a) {
        const double closing = last[a] + nearest_image(c.samples[0][a] - last[a]);
        c.homology[a] = std::llround(closing - first[a]);
    }
    c.validate();
    return c;
}

std::vector<Point3> curve_tangents(const ParamCurve& c) {
    const auto l = c.lift();
    const int n = c.size();
    std::vector<Point3> out(n);
    for (int axis = 0; axis < 3; ++axis) {
        std::vector<double> residual(n);
        for (int j = 0; j < n; ++j)
            residual[j] = l[j][axis] - double(j) / n * c.homology[axis];
        const auto d = periodic_derivative(residual);
        for (int j = 0; j < n; ++j) out[j][axis] = d[j] + c.homology[axis];
    }
    return out;
}

FlowField::FlowField(Form a, double step) : alpha(std::move(a)), rk4_step(step) {
    if (alpha.degree() != 1)
        throw std::invalid_argument("FlowField: alpha must be a 1-form");
    if (!(rk4_step > 0))
        throw std::invalid_argument("FlowField: rk4 step must be positive");
    if (exterior_derivative(alpha).max_abs_coeff() > 1e-9)
        throw std::invalid_argument("FlowField: alpha must be closed");
    constant_ = alpha.is_constant();
    const_coords_ = constant_coords_of(alpha);
}

Point3 FlowField::v(const Point3& p) const {
    const Point3 a = eval_alpha(alpha, constant_, const_coords_, p);
    const double n2 = a[0] * a[0] + a[1] * a[1] + a[2] * a[2];
    if (n2 < 1e-12)
        throw std::runtime_error(
            "flow: |alpha|^2 < 1e-12 at a sample point (alpha degenerate), "
            "step size would collapse");
    return {a[0] / n2, a[1] / n2, a[2] / n2};
}

double alpha_period(const ParamCurve& gamma, const Form& alpha) {
    if (alpha.degree() != 1)
        throw std::invalid_argument("alpha_period: alpha must be a 1-form");
    if (alpha.is_constant()) {
        const RealVec3 cc = constant_coords_of(alpha);
        return cc[0] * gamma.homology[0] + cc[1] * gamma.homology[1] +
               cc[2] * gamma.homology[2];
    }
    const auto tangents = curve_tangents(gamma);
    const int n = gamma.size();
    double acc = 0;
    for (int j = 0; j < n; ++j) {
        const Point3 a = eval_alpha(alpha, false, {}, gamma.samples[j]);
        acc += a[0] * tangents[j][0] + a[1] * tangents[j][1] + a[2] * tangents[j][2];
    }
    return acc / n;  // trapezoid rule on a periodic integrand
}

Point3 flow_map(const Point3& p, double s, const FlowField& field, double* err) {
    if (field.constant()) {
        const Point3 vv = field.v(p);
        if (err) *err = 0.0;
        return {wrap01(p[0] - s * vv[0]), wrap01(p[1] - s * vv[1]),
                wrap01(p[2] - s * vv[2])};
    }
    auto rk4 = [&](double h, int steps) {
        Point3 x = p;
        for (int it = 0; it < steps; ++it) {
            auto f = [&](const Point3& y) {
                const Point3 vv = field.v({wrap01(y[0]), wrap01(y[1]), wrap01(y[2])});
                return Point3{-vv[0], -vv[1], -vv[2]};
            };
            const Point3 k1 = f(x);
            const Point3 x2{x[0] + 0.5 * h * k1[0], x[1] + 0.5 * h * k1[1],
                            x[2] + 0.5 * h * k1[2]};
            const Point3 k2 = f(x2);
            const Point3 x3{x[0] + 0.5 * h * k2[0], x[1] + 0.5 * h * k2[1],
                            x[2] + 0.5 * h * k2[2]};
            const Point3 k3 = f(x3);
            const Point3 x4{x[0] + h * k3[0], x[1] + h * k3[1], x[2] + h * k3[2]};
            const Point3 k4 = f(x4);
            for (int c = 0; c < 3; ++c)
                x[c] += h / 6.0 * (k1[c] + 2 * k2[c] + 2 * k3[c] + k4[c]);
        }
        return x;
    };
    const int steps = std::max(1, static_cast<int>(std::ceil(std::abs(s) / field.rk4_step)));
    const double h = s / steps;
    const Point3 coarse = rk4(h, steps);
    Point3 result = coarse;
    if (err) {
        const Point3 fine = rk4(h / 2, 2 * steps);
        double e = 0;
        for (int c = 0; c < 3; ++c)
            e = std::max(e, std::abs(nearest_image(fine[c] - coarse[c])));
        *err = e / 15.0;  // RK4 Richardson factor 2^4 - 1
        result = fine;
    }
    return {wrap01(result[0]), wrap01(result[1]), wrap01(result[2])};
}

TransversalizeResult transversalize(const ParamCurve& gamma, const FlowField& field) {
    gamma.validate();
    TransversalizeResult res;
    res.m = alpha_period(gamma, field.alpha);

    const int n = gamma.size();
    const auto tangents = curve_tangents(gamma);
    std::vector<double> g(n);
    for (int j = 0; j < n; ++j) {
        const Point3 a = eval_alpha(field.alpha, field.constant(),
                                    field.constant_coords(), gamma.samples[j]);
        g[j] = a[0] * tangents[j][0] + a[1] * tangents[j][1] + a[2] * tangents[j][2];
    }
    double mean = 0;
    for (double x : g) mean += x;
    mean /= n;

    // Phi(t) = int_0^t alpha(gamma') - m t; the oscillating part integrates
    // exactly on the interpolant, the mean contributes (mean - m) t.
    const auto osc = periodic_partial_integral(g);
    res.phi.resize(n);
    for (int j = 0; j < n; ++j)
        res.phi[j] = osc[j] + (mean - res.m) * (double(j) / n);
    res.phi_end = mean - res.m;  // Phi(1)

    std::vector<Point3> out_lift(n);
    const auto in_lift = gamma.lift();
    double max_err = 0;
    for (int j = 0; j < n; ++j) {
        if (field.constant()) {
            const Point3 vv = field.v(gamma.samples[j]);
            for (int c = 0; c < 3; ++c)
                out_lift[j][c] = in_lift[j][c] - res.phi[j] * vv[c];
        } else {
            double err = 0;
            const Point3 moved = flow_map(gamma.samples[j], res.phi[j], field, &err);
            max_err = std::max(max_err, err);
            // Re-anchor the wrapped point to the input lift.
            for (int c = 0; c < 3; ++c)
                out_lift[j][c] =
                    in_lift[j][c] + nearest_image(moved[c] - gamma.samples[j][c]);
        }
    }
    res.rk4_error = max_err;
    res.curve = ParamCurve::from_lift(out_lift);
    if (res.curve.homology != gamma.homology)
        throw std::runtime_error("transversalize: homology changed (flow step too coarse)");
    return res;
}

TransversalityReport check_transverse(const ParamCurve& gamma, const Form& alpha,
                                      double m, double tol) {
    TransversalityReport rep;
    rep.leaf_mode = (m == 0.0);
    const int n = gamma.size();
    const auto tangents = curve_tangents(gamma);
    const bool constant = alpha.is_constant();
    const RealVec3 cc = constant_coords_of(alpha);

    std::vector<double> g(n);
    for (int j = 0; j < n; ++j) {
        const Point3 a = eval_alpha(alpha, constant, cc, gamma.samples[j]);
        g[j] = a[0] * tangents[j][0] + a[1] * tangents[j][1] + a[2] * tangents[j][2];
        const double speed = std::sqrt(tangents[j][0] * tangents[j][0] +
                                       tangents[j][1] * tangents[j][1] +
                                       tangents[j][2] * tangents[j][2]);
        if (speed < 1e-8) ++rep.zero_speed_samples;
    }

    if (rep.leaf_mode) {
        // Containment in a leaf: the alpha-potential along the curve stays put.
        const auto pot = periodic_partial_integral(g);
        double mean = 0;
        for (double x : g) mean += x;
        mean /= n;
        double dev = 0;
        for (int j = 0; j < n; ++j)
            dev = std::max(dev, std::abs(pot[j] + mean * (double(j) / n)));
        rep.max_deviation = dev;
    } else {
        double dev = 0;
        for (int j = 0; j < n; ++j) dev = std::max(dev, std::abs(g[j] - m));
        rep.max_deviation = dev;
    }
    rep.pass = rep.max_deviation <= tol;

    // Proximity scan for near self-intersections (embeddedness is not
    // certified; this only flags candidates).
    double min_d = 1e9;
    const int gap = std::max(4, n / 16);
    for (int i = 0; i < n; ++i)
        for (int j = i + gap; j < n && j - i <= n - gap; ++j) {
            double d2 = 0;
            for (int c = 0; c < 3; ++c) {
                const double d = nearest_image(gamma.samples[i][c] - gamma.samples[j][c]);
                d2 += d * d;
            }
            min_d = std::min(min_d, std::sqrt(d2));
        }
    rep.min_self_distance = min_d;
    return rep;
}

}  // namespace sympform
