#include "sympform/reference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace sympform::reference {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

std::vector<double> synthesize(const ScalarField& f, int R) {
    std::vector<double> out(static_cast<std::size_t>(R) * R * R);
    std::size_t idx = 0;
    for (int x1 = 0; x1 < R; ++x1)
        for (int x2 = 0; x2 < R; ++x2)
            for (int x3 = 0; x3 < R; ++x3)
                out[idx++] = f.evaluate({double(x1) / R, double(x2) / R, double(x3) / R});
    return out;
}

ScalarField analyze(const std::vector<double>& samples, int R, int K) {
    if (samples.size() != static_cast<std::size_t>(R) * R * R)
        throw std::invalid_argument("analyze: sample count != R^3");
    ScalarField out(K);
    for (int k1 = -K; k1 <= K; ++k1)
        for (int k2 = -K; k2 <= K; ++k2)
            for (int k3 = -K; k3 <= K; ++k3) {
                Complex acc(0, 0);
                std::size_t idx = 0;
                for (int x1 = 0; x1 < R; ++x1)
                    for (int x2 = 0; x2 < R; ++x2)
                        for (int x3 = 0; x3 < R; ++x3) {
                            const double phase =
                                -kTwoPi *
                                (double(k1 * x1) / R + double(k2 * x2) / R +
                                 double(k3 * x3) / R);
                            acc += samples[idx++] * std::polar(1.0, phase);
                        }
                out.at({k1, k2, k3}) = acc / (double(R) * R * R);
            }
    return out;
}

ScalarField convolve(const ScalarField& a, const ScalarField& b, int Kout) {
    ScalarField out(Kout);
    const int Ka = a.K(), Kb = b.K();
    for (int k1 = -Kout; k1 <= Kout; ++k1)
        for (int k2 = -Kout; k2 <= Kout; ++k2)
            for (int k3 = -Kout; k3 <= Kout; ++k3) {
                Complex acc(0, 0);
                for (int j1 = std::max(-Ka, k1 - Kb); j1 <= std::min(Ka, k1 + Kb); ++j1)
                    for (int j2 = std::max(-Ka, k2 - Kb); j2 <= std::min(Ka, k2 + Kb); ++j2)
                        for (int j3 = std::max(-Ka, k3 - Kb); j3 <= std::min(Ka, k3 + Kb); ++j3)
                            acc += a.get({j1, j2, j3}) *
                                   b.get({k1 - j1, k2 - j2, k3 - j3});
                out.at({k1, k2, k3}) = acc;
            }
    return out;
}

double grid_min(const ScalarField& f, int R) {
    double m = std::numeric_limits<double>::infinity();
    for (int x1 = 0; x1 < R; ++x1)
        for (int x2 = 0; x2 < R; ++x2)
            for (int x3 = 0; x3 < R; ++x3)
                m = std::min(m, f.evaluate({double(x1) / R, double(x2) / R,
                                            double(x3) / R}));
    return m;
}

}  // namespace sympform::reference
