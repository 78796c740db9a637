#include "sympform/rational.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace sympform {

namespace {

constexpr long long kLcmCap = 1'000'000'000'000LL;

double dot(const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Rational simplest_positive(double lo, double hi, int depth) {
    if (depth > 64) throw std::runtime_error("simplest_in_interval: depth exhausted");
    const double fl = std::floor(lo);
    if (std::ceil(lo) <= hi) return {static_cast<long long>(std::ceil(lo)), 1};
    const Rational inner = simplest_positive(1.0 / (hi - fl), 1.0 / (lo - fl), depth + 1);
    // x = fl + 1/inner
    const __int128 num =
        static_cast<__int128>(fl) * inner.num + inner.den;
    if (num > INT64_MAX || num < INT64_MIN)
        throw std::runtime_error("simplest_in_interval: overflow");
    return {static_cast<long long>(num), inner.num};
}

}  // namespace

Rational normalized(Rational r) {
    if (r.den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (r.den < 0) { r.num = -r.num; r.den = -r.den; }
    const long long g = std::gcd(std::abs(r.num), r.den);
    if (g > 1) { r.num /= g; r.den /= g; }
    return r;
}

Rational simplest_in_interval(double lo, double hi) {
    if (!(lo <= hi)) std::swap(lo, hi);
    if (lo <= 0.0 && 0.0 <= hi) return {0, 1};
    if (hi < 0.0) {
        Rational r = simplest_positive(-hi, -lo, 0);
        return normalized({-r.num, r.den});
    }
    return normalized(simplest_positive(lo, hi, 0));
}

std::optional<Rational> detect_rational(double x, long long max_den) {
    if (!std::isfinite(x)) return std::nullopt;
    // Walk the continued-fraction convergents h/k of x.
    long long hm1 = 1, km1 = 0, hm2 = 0, km2 = 1;
    double v = x;
    for (int it = 0; it < 64; ++it) {
        const double fa = std::floor(v);
        if (std::abs(fa) > 9e15) return std::nullopt;
        const long long a = static_cast<long long>(fa);
        const __int128 h = static_cast<__int128>(a) * hm1 + hm2;
        const __int128 k = static_cast<__int128>(a) * km1 + km2;
        if (k > max_den || h > INT64_MAX || h < INT64_MIN) return std::nullopt;
        const long long hh = static_cast<long long>(h), kk = static_cast<long long>(k);
        if (static_cast<double>(hh) / static_cast<double>(kk) == x)
            return normalized({hh, kk});
        if (v == fa) return std::nullopt;  // terminated without matching
        v = 1.0 / (v - fa);
        hm2 = hm1; km2 = km1; hm1 = hh; km1 = kk;
    }
    return std::nullopt;
}

std::vector<DecomposeTerm> rational_decompose(const std::array<double, 3>& h,
                                              const std::array<double, 3>& alpha) {
    const double p0 = dot(h, alpha);
    if (!(p0 > 0.0))
        throw std::invalid_argument("rational_decompose: requires h . alpha > 0");

    // Fast path: h itself is rational with small denominators.
    {
        std::array<Rational, 3> r{};
        long long L = 1;
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i) {
            auto d = detect_rational(h[i]);
            if (!d) { ok = false; break; }
            r[i] = *d;
            const long long g = std::gcd(L, d->den);
            if (L / g > kLcmCap / d->den) { ok = false; break; }
            L = L / g * d->den;
        }
        if (ok) {
            std::array<long long, 3> H{};
            for (int i = 0; i < 3; ++i) H[i] = r[i].num * (L / r[i].den);
            return {DecomposeTerm{1.0 / static_cast<double>(L), H}};
        }
    }

    // Basis v_1,v_2,v_3 of the lattice with v_i . alpha > 0: flip the signs
    // of the unit vectors, then shear any zero-pairing one by the best axis.
    long long V[3][3] = {{0}};  // columns are the basis vectors
    int jstar = 0;
    for (int i = 1; i < 3; ++i)
        if (std::abs(alpha[i]) > std::abs(alpha[jstar])) jstar = i;
    for (int i = 0; i < 3; ++i) V[i][i] = (alpha[i] < 0.0) ? -1 : 1;
    for (int i = 0; i < 3; ++i)
        if (i != jstar && alpha[i] == 0.0)
            for (int rrow = 0; rrow < 3; ++rrow) V[rrow][i] += V[rrow][jstar];

    std::array<double, 3> pairings{};
    for (int i = 0; i < 3; ++i)
        for (int rrow = 0; rrow < 3; ++rrow) pairings[i] += V[rrow][i] * alpha[rrow];

    // Coordinates of h in the new basis; V is unimodular so the inverse is
    // the (integer) adjugate up to the sign of det.
    long long adj[3][3];
    adj[0][0] = V[1][1] * V[2][2] - V[1][2] * V[2][1];
    adj[0][1] = V[0][2] * V[2][1] - V[0][1] * V[2][2];
    adj[0][2] = V[0][1] * V[1][2] - V[0][2] * V[1][1];
    adj[1][0] = V[1][2] * V[2][0] - V[1][0] * V[2][2];
    adj[1][1] = V[0][0] * V[2][2] - V[0][2] * V[2][0];
    adj[1][2] = V[0][2] * V[1][0] - V[0][0] * V[1][2];
    adj[2][0] = V[1][0] * V[2][1] - V[1][1] * V[2][0];
    adj[2][1] = V[0][1] * V[2][0] - V[0][0] * V[2][1];
    adj[2][2] = V[0][0] * V[1][1] - V[0][1] * V[1][0];
    const long long det = V[0][0] * adj[0][0] + V[0][1] * adj[1][0] + V[0][2] * adj[2][0];
    if (det != 1 && det != -1)
        throw std::runtime_error("rational_decompose: basis not unimodular");

    std::array<double, 3> g{};
    for (int i = 0; i < 3; ++i)
        for (int c = 0; c < 3; ++c) g[i] += det * adj[i][c] * h[c];

    std::vector<DecomposeTerm> terms;
    std::array<Rational, 3> q{};
    double pairing = p0;
    long long L = 1;
    for (int i = 0; i < 3; ++i) {
        Rational qi;
        auto d = detect_rational(g[i]);
        if (d) {
            qi = *d;
        } else {
            const double rmax = 0.5 * pairing / pairings[i];
            qi = simplest_in_interval(g[i] - rmax, g[i]);
        }
        double ri = g[i] - qi.value();
        if (ri < 0.0) ri = 0.0;  // one-ulp guard
        if (ri > 0.0) {
            std::array<long long, 3> vi{V[0][i], V[1][i], V[2][i]};
            terms.push_back({ri, vi});
            pairing -= ri * pairings[i];
        }
        const long long gg = std::gcd(L, qi.den);
        if (L / gg > kLcmCap / qi.den)
            throw std::runtime_error("rational_decompose: denominator overflow");
        L = L / gg * qi.den;
        q[i] = qi;
    }

    std::array<long long, 3> H{};
    bool nonzero = false;
    for (int rrow = 0; rrow < 3; ++rrow) {
        __int128 acc = 0;
        for (int i = 0; i < 3; ++i)
            acc += static_cast<__int128>(q[i].num) * (L / q[i].den) * V[rrow][i];
        if (acc > INT64_MAX || acc < INT64_MIN)
            throw std::runtime_error("rational_decompose: class overflow");
        H[rrow] = static_cast<long long>(acc);
        nonzero = nonzero || H[rrow] != 0;
    }
    if (nonzero) terms.push_back({1.0 / static_cast<double>(L), H});
    if (terms.empty())
        throw std::runtime_error("rational_decompose: empty decomposition");
    return terms;
}

}  // namespace sympform
