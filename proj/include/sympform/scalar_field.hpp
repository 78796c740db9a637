#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

namespace sympform {

using Complex = std::complex<double>;
using Point3 = std::array<double, 3>;
using Freq3 = std::array<int, 3>;

/// Real-valued trigonometric polynomial on the 3-torus [0,1)^3, stored as the
/// full set of Fourier coefficients c_k for frequencies with max-norm <= K.
/// Real-valuedness is the Hermitian symmetry c_{-k} = conj(c_k); every
/// constructor and operation here preserves it.
///
/// `tail_l1` tracks an upper bound (in l1 coefficient norm, hence sup norm)
/// on spectral content that was discarded when a product was truncated back
/// to the working bandwidth. It is zero for fields defined directly by their
/// coefficients and propagates through arithmetic, so certified lower bounds
/// can account for it. `tail_band` bounds the max-norm of the discarded
/// frequencies, which is what a derivative of the discarded part costs.
class ScalarField {
public:
    ScalarField() : ScalarField(0) {}
    explicit ScalarField(int K);

    static ScalarField constant(int K, double value);
    /// Single cosine mode: amplitude * cos(2*pi*(k . x) + phase shift via sin).
    static ScalarField cosine(int K, const Freq3& k, double amplitude);
    static ScalarField sine(int K, const Freq3& k, double amplitude);

    int K() const { return K_; }
    int n() const { return 2 * K_ + 1; }
    std::size_t size() const { return coeffs_.size(); }

    Complex& at(const Freq3& k) { return coeffs_[index(k)]; }
    const Complex& at(const Freq3& k) const { return coeffs_[index(k)]; }
    Complex get(const Freq3& k) const;   // 0 outside the band

    const std::vector<Complex>& data() const { return coeffs_; }
    std::vector<Complex>& data() { return coeffs_; }

    std::size_t index(const Freq3& k) const;
    Freq3 freq_at(std::size_t flat) const;

    /// Pointwise evaluation of the series (exact, O((2K+1)^3)).
    double evaluate(const Point3& p) const;

    double l1() const;                   // sum |c_k|
    double max_abs_coeff() const;
    /// Sum over k of 2*pi*|k|_1*|c_k|; a Lipschitz constant w.r.t. the
    /// max-metric on the torus.
    double lipschitz_bound() const;
    double mean() const { return coeffs_[index({0, 0, 0})].real(); }

    bool is_hermitian(double tol = 1e-12) const;
    void enforce_hermitian();
    /// Largest |k|_inf with a nonzero coefficient (0 for constants).
    int effective_band() const;
    bool is_constant() const { return effective_band() == 0; }

    /// Re-embed into bandwidth newK >= K (zero padding).
    ScalarField promoted(int newK) const;
    /// Drop frequencies with |k|_inf > newK; adds their l1 mass to tail_l1.
    ScalarField truncated(int newK) const;

    /// d/dx_axis as multiplication by 2*pi*i*k_axis.
    ScalarField derivative(int axis) const;

    ScalarField& operator+=(const ScalarField& o);
    ScalarField& operator-=(const ScalarField& o);
    ScalarField& operator*=(double s);
    friend ScalarField operator+(ScalarField a, const ScalarField& b) { return a += b; }
    friend ScalarField operator-(ScalarField a, const ScalarField& b) { return a -= b; }
    friend ScalarField operator*(double s, ScalarField f) { return f *= s; }

    double tail_l1 = 0.0;
    int tail_band = 0;

private:
    int K_;
    std::vector<Complex> coeffs_;
};

/// Matches fields of different bandwidth by zero padding to the larger one.
std::pair<ScalarField, ScalarField> match_bandwidth(const ScalarField& a,
                                                    const ScalarField& b);

}  // namespace sympform
