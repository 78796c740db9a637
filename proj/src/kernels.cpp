#include "sympform/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace sympform::kernels {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// m mod R in [0, R)
inline int pmod(long long m, int R) {
    int r = static_cast<int>(m % R);
    return r < 0 ? r + R : r;
}

void check_resolution(int R) {
    if (R < 1) throw std::invalid_argument("grid resolution must be >= 1");
}

}  // namespace

std::vector<Complex> phase_table(int R) {
    std::vector<Complex> e(R);
    for (int m = 0; m <= R / 2; ++m) e[m] = std::polar(1.0, kTwoPi * m / R);
    for (int m = R / 2 + 1; m < R; ++m) e[m] = std::conj(e[R - m]);
    return e;
}

std::vector<double> synthesize(const ScalarField& f, int R) {
    check_resolution(R);
    const int K = f.K();
    const int n = f.n();
    const auto& c = f.data();
    const auto E = phase_table(R);

    std::vector<double> out(static_cast<std::size_t>(R) * R * R);

#pragma omp parallel
    {
        std::vector<Complex> A(static_cast<std::size_t>(n) * n);  // [k2][k3]
        std::vector<Complex> B(static_cast<std::size_t>(R) * n);  // [x2][k3]

#pragma omp for schedule(static)
        for (int x1 = 0; x1 < R; ++x1) {
            // A[k2][k3] = sum_k1 c[k1][k2][k3] e(k1 x1)
            std::fill(A.begin(), A.end(), Complex(0, 0));
            for (int i1 = 0; i1 < n; ++i1) {
                const Complex w = E[pmod(static_cast<long long>(i1 - K) * x1, R)];
                const Complex* src = &c[static_cast<std::size_t>(i1) * n * n];
                for (std::size_t j = 0; j < static_cast<std::size_t>(n) * n; ++j)
                    A[j] += w * src[j];
            }
            // B[x2][k3] = sum_k2 A[k2][k3] e(k2 x2)
            std::fill(B.begin(), B.end(), Complex(0, 0));
            for (int x2 = 0; x2 < R; ++x2) {
                Complex* dst = &B[static_cast<std::size_t>(x2) * n];
                for (int i2 = 0; i2 < n; ++i2) {
                    const Complex w = E[pmod(static_cast<long long>(i2 - K) * x2, R)];
                    const Complex* src = &A[static_cast<std::size_t>(i2) * n];
                    for (int i3 = 0; i3 < n; ++i3) dst[i3] += w * src[i3];
                }
            }
            // out[x1][x2][x3] = Re sum_k3 B[x2][k3] e(k3 x3)
            double* slab = &out[static_cast<std::size_t>(x1) * R * R];
            for (int x2 = 0; x2 < R; ++x2) {
                const Complex* row = &B[static_cast<std::size_t>(x2) * n];
                for (int x3 = 0; x3 < R; ++x3) {
                    Complex acc(0, 0);
                    for (int i3 = 0; i3 < n; ++i3)
                        acc += row[i3] * E[pmod(static_cast<long long>(i3 - K) * x3, R)];
                    slab[static_cast<std::size_t>(x2) * R + x3] = acc.real();
                }
            }
        }
    }
    return out;
}

ScalarField analyze(const std::vector<double>& samples, int R, int K) {
    check_resolution(R);
    if (samples.size() != static_cast<std::size_t>(R) * R * R)
        throw std::invalid_argument("analyze: sample count != R^3");
    if (2 * K + 1 > R)
        throw std::invalid_argument("analyze: need R >= 2K+1");
    const int n = 2 * K + 1;
    const auto E = phase_table(R);

    // E2[x1][k2][k3] = sum_{x2,x3} f[x1][x2][x3] e(-k2 x2) e(-k3 x3)
    std::vector<Complex> E2(static_cast<std::size_t>(R) * n * n);

#pragma omp parallel
    {
        std::vector<Complex> D(n);  // per (x1,x2): sum over x3

#pragma omp for schedule(static)
        for (int x1 = 0; x1 < R; ++x1) {
            Complex* eslab = &E2[static_cast<std::size_t>(x1) * n * n];
            std::fill(eslab, eslab + static_cast<std::size_t>(n) * n, Complex(0, 0));
            for (int x2 = 0; x2 < R; ++x2) {
                const double* row =
                    &samples[(static_cast<std::size_t>(x1) * R + x2) * R];
                for (int i3 = 0; i3 < n; ++i3) {
                    const int k3 = i3 - K;
                    Complex acc(0, 0);
                    for (int x3 = 0; x3 < R; ++x3)
                        acc += row[x3] * E[pmod(-static_cast<long long>(k3) * x3, R)];
                    D[i3] = acc;
                }
                for (int i2 = 0; i2 < n; ++i2) {
                    const Complex w =
                        E[pmod(-static_cast<long long>(i2 - K) * x2, R)];
                    Complex* dst = &eslab[static_cast<std::size_t>(i2) * n];
                    for (int i3 = 0; i3 < n; ++i3) dst[i3] += w * D[i3];
                }
            }
        }
    }

    ScalarField out(K);
    auto& c = out.data();
    const double scale = 1.0 / (static_cast<double>(R) * R * R);

#pragma omp parallel for schedule(static)
    for (int i1 = 0; i1 < n; ++i1) {
        const int k1 = i1 - K;
        for (int i2 = 0; i2 < n; ++i2) {
            for (int i3 = 0; i3 < n; ++i3) {
                Complex acc(0, 0);
                for (int x1 = 0; x1 < R; ++x1)
                    acc += E2[(static_cast<std::size_t>(x1) * n + i2) * n + i3] *
                           E[pmod(-static_cast<long long>(k1) * x1, R)];
                c[(static_cast<std::size_t>(i1) * n + i2) * n + i3] = scale * acc;
            }
        }
    }
    return out;
}

ProductResult multiply(const ScalarField& a, const ScalarField& b, int Kout) {
    // Work at the effective bandwidths; zero padding costs grid volume.
    const ScalarField ea = a.truncated(a.effective_band());
    const ScalarField eb = b.truncated(b.effective_band());
    const int F = ea.K() + eb.K();  // full bandwidth of the product
    const int R = 2 * F + 2;        // alias-free analysis up to F
    auto ga = synthesize(ea, R);
    const auto gb = synthesize(eb, R);
    for (std::size_t i = 0; i < ga.size(); ++i) ga[i] *= gb[i];
    ScalarField full = analyze(ga, R, F);

    ScalarField kept = full.truncated(std::min(Kout, F));
    const double dropped = kept.tail_l1;  // full had no tail of its own
    if (kept.K() < Kout) kept = kept.promoted(Kout);
    // Account for the inputs' already-discarded content: the computed product
    // differs from the product of the exact fields by a.tail*|b| + b.tail*|a|
    // in sup norm, on top of what we just dropped.
    kept.tail_l1 = dropped + a.tail_l1 * (b.l1() + b.tail_l1) + b.tail_l1 * a.l1();
    int band = dropped > 0 ? F : 0;
    if (a.tail_l1 > 0) band = std::max(band, a.tail_band + eb.K());
    if (b.tail_l1 > 0) band = std::max(band, b.tail_band + ea.K());
    kept.tail_band = band;
    return ProductResult{std::move(kept), dropped};
}

double grid_min(const ScalarField& f, int R) {
    // Same slab structure as synthesize, reduced to a per-slab minimum.
    check_resolution(R);
    const int K = f.K();
    const int n = f.n();
    const auto& c = f.data();
    const auto E = phase_table(R);

    std::vector<double> slab_min(R, 0.0);

#pragma omp parallel
    {
        std::vector<Complex> A(static_cast<std::size_t>(n) * n);
        std::vector<Complex> B(static_cast<std::size_t>(R) * n);

#pragma omp for schedule(static)
        for (int x1 = 0; x1 < R; ++x1) {
            std::fill(A.begin(), A.end(), Complex(0, 0));
            for (int i1 = 0; i1 < n; ++i1) {
                const Complex w = E[pmod(static_cast<long long>(i1 - K) * x1, R)];
                const Complex* src = &c[static_cast<std::size_t>(i1) * n * n];
                for (std::size_t j = 0; j < static_cast<std::size_t>(n) * n; ++j)
                    A[j] += w * src[j];
            }
            std::fill(B.begin(), B.end(), Complex(0, 0));
            for (int x2 = 0; x2 < R; ++x2) {
                Complex* dst = &B[static_cast<std::size_t>(x2) * n];
                for (int i2 = 0; i2 < n; ++i2) {
                    const Complex w = E[pmod(static_cast<long long>(i2 - K) * x2, R)];
                    const Complex* src = &A[static_cast<std::size_t>(i2) * n];
                    for (int i3 = 0; i3 < n; ++i3) dst[i3] += w * src[i3];
                }
            }
            double m = std::numeric_limits<double>::infinity();
            for (int x2 = 0; x2 < R; ++x2) {
                const Complex* row = &B[static_cast<std::size_t>(x2) * n];
                for (int x3 = 0; x3 < R; ++x3) {
                    Complex acc(0, 0);
                    for (int i3 = 0; i3 < n; ++i3)
                        acc += row[i3] * E[pmod(static_cast<long long>(i3 - K) * x3, R)];
                    m = std::min(m, acc.real());
                }
            }
            slab_min[x1] = m;
        }
    }
    return *std::min_element(slab_min.begin(), slab_min.end());
}

}  // namespace sympform::kernels
