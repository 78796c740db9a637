#include "sympform/scalar_field.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sympform {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

ScalarField::ScalarField(int K) : K_(K) {
    if (K < 0) throw std::invalid_argument("ScalarField: K must be >= 0");
    const std::size_t n = static_cast<std::size_t>(2 * K + 1);
    coeffs_.assign(n * n * n, Complex(0.0, 0.0));
}

ScalarField ScalarField::constant(int K, double value) {
    ScalarField f(K);
    f.at({0, 0, 0}) = value;
    return f;
}

ScalarField ScalarField::cosine(int K, const Freq3& k, double amplitude) {
    ScalarField f(K);
    if (k == Freq3{0, 0, 0}) {
        f.at(k) = amplitude;
        return f;
    }
    f.at(k) = Complex(amplitude / 2, 0);
    f.at({-k[0], -k[1], -k[2]}) = Complex(amplitude / 2, 0);
    return f;
}

ScalarField ScalarField::sine(int K, const Freq3& k, double amplitude) {
    ScalarField f(K);
    if (k == Freq3{0, 0, 0}) return f;
    f.at(k) = Complex(0, -amplitude / 2);
    f.at({-k[0], -k[1], -k[2]}) = Complex(0, amplitude / 2);
    return f;
}

std::size_t ScalarField::index(const Freq3& k) const {
    const int n = 2 * K_ + 1;
    for (int a = 0; a < 3; ++a) {
        if (k[a] < -K_ || k[a] > K_)
            throw std::out_of_range("ScalarField: frequency outside band");
    }
    return (static_cast<std::size_t>(k[0] + K_) * n + (k[1] + K_)) * n + (k[2] + K_);
}

Freq3 ScalarField::freq_at(std::size_t flat) const {
    const int n = 2 * K_ + 1;
    const int k3 = static_cast<int>(flat % n) - K_;
    const int k2 = static_cast<int>((flat / n) % n) - K_;
    const int k1 = static_cast<int>(flat / (static_cast<std::size_t>(n) * n)) - K_;
    return {k1, k2, k3};
}

Complex ScalarField::get(const Freq3& k) const {
    for (int a = 0; a < 3; ++a)
        if (k[a] < -K_ || k[a] > K_) return Complex(0, 0);
    return coeffs_[index(k)];
}

double ScalarField::evaluate(const Point3& p) const {
    // Separable phase tables keep this a few n^3 fused multiplies.
    const int n = 2 * K_ + 1;
    std::vector<Complex> e1(n), e2(n), e3(n);
    for (int j = -K_; j <= K_; ++j) {
        e1[j + K_] = std::polar(1.0, kTwoPi * j * p[0]);
        e2[j + K_] = std::polar(1.0, kTwoPi * j * p[1]);
        e3[j + K_] = std::polar(1.0, kTwoPi * j * p[2]);
    }
    Complex acc(0, 0);
    std::size_t flat = 0;
    for (int i1 = 0; i1 < n; ++i1) {
        for (int i2 = 0; i2 < n; ++i2) {
            const Complex e12 = e1[i1] * e2[i2];
            Complex row(0, 0);
            for (int i3 = 0; i3 < n; ++i3, ++flat) row += coeffs_[flat] * e3[i3];
            acc += e12 * row;
        }
    }
    return acc.real();
}

double ScalarField::l1() const {
    double s = 0;
    for (const auto& c : coeffs_) s += std::abs(c);
    return s;
}

double ScalarField::max_abs_coeff() const {
    double m = 0;
    for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

double ScalarField::lipschitz_bound() const {
    double s = 0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const double a = std::abs(coeffs_[i]);
        if (a == 0.0) continue;
        const Freq3 k = freq_at(i);
        s += kTwoPi * (std::abs(k[0]) + std::abs(k[1]) + std::abs(k[2])) * a;
    }
    return s;
}

bool ScalarField::is_hermitian(double tol) const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Freq3 k = freq_at(i);
        const Complex mirror = coeffs_[index({-k[0], -k[1], -k[2]})];
        if (std::abs(coeffs_[i] - std::conj(mirror)) > tol) return false;
    }
    return true;
}

void ScalarField::enforce_hermitian() {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Freq3 k = freq_at(i);
        const std::size_t j = index({-k[0], -k[1], -k[2]});
        if (j < i) continue;
        const Complex avg = 0.5 * (coeffs_[i] + std::conj(coeffs_[j]));
        coeffs_[i] = avg;
        coeffs_[j] = std::conj(avg);
    }
}

int ScalarField::effective_band() const {
    int band = 0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == Complex(0, 0)) continue;
        const Freq3 k = freq_at(i);
        band = std::max({band, std::abs(k[0]), std::abs(k[1]), std::abs(k[2])});
    }
    return band;
}

ScalarField ScalarField::promoted(int newK) const {
    if (newK < K_) throw std::invalid_argument("promoted: newK < K");
    if (newK == K_) return *this;
    ScalarField out(newK);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out.coeffs_[out.index(freq_at(i))] = coeffs_[i];
    out.tail_l1 = tail_l1;
    out.tail_band = tail_band;
    return out;
}

ScalarField ScalarField::truncated(int newK) const {
    if (newK >= K_) return *this;
    ScalarField out(newK);
    double dropped = 0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Freq3 k = freq_at(i);
        if (std::abs(k[0]) <= newK && std::abs(k[1]) <= newK && std::abs(k[2]) <= newK)
            out.coeffs_[out.index(k)] = coeffs_[i];
        else
            dropped += std::abs(coeffs_[i]);
    }
    out.tail_l1 = tail_l1 + dropped;
    out.tail_band = std::max(tail_band, dropped > 0 ? K_ : 0);
    return out;
}

ScalarField ScalarField::derivative(int axis) const {
    if (axis < 0 || axis > 2) throw std::invalid_argument("derivative: bad axis");
    ScalarField out(K_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Freq3 k = freq_at(i);
        out.coeffs_[i] = coeffs_[i] * Complex(0, kTwoPi * k[axis]);
    }
    // Differentiating the (unknown) dropped content costs a factor of its band.
    out.tail_l1 = tail_l1 * kTwoPi * tail_band;
    out.tail_band = tail_band;
    return out;
}

ScalarField& ScalarField::operator+=(const ScalarField& o) {
    if (o.K_ != K_) {
        auto [a, b] = match_bandwidth(*this, o);
        *this = a;
        return *this += b;
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    tail_l1 += o.tail_l1;
    tail_band = std::max(tail_band, o.tail_band);
    return *this;
}

ScalarField& ScalarField::operator-=(const ScalarField& o) {
    if (o.K_ != K_) {
        auto [a, b] = match_bandwidth(*this, o);
        *this = a;
        return *this -= b;
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    tail_l1 += o.tail_l1;
    tail_band = std::max(tail_band, o.tail_band);
    return *this;
}

ScalarField& ScalarField::operator*=(double s) {
    for (auto& c : coeffs_) c *= s;
    tail_l1 *= std::abs(s);
    return *this;
}

std::pair<ScalarField, ScalarField> match_bandwidth(const ScalarField& a,
                                                    const ScalarField& b) {
    const int K = std::max(a.K(), b.K());
    return {a.promoted(K), b.promoted(K)};
}

}  // namespace sympform
