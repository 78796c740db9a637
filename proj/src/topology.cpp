#include "sympform/topology.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace sympform {

namespace {

double dot(const RealVec3& a, const RealVec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

double norm2(const RealVec3& a) { return dot(a, a); }

}  // namespace

bool ManifoldDescriptor::is_torus() const {
    return monodromy == std::array<std::array<long long, 2>, 2>{{{1, 0}, {0, 1}}};
}

void ManifoldDescriptor::validate() const {
    const long long det = monodromy[0][0] * monodromy[1][1] -
                          monodromy[0][1] * monodromy[1][0];
    if (det != 1)
        throw std::invalid_argument("monodromy must lie in SL(2,Z), det = 1");
}

GysinClass make_gysin_class(const RealVec3& sigma_raw, const RealVec3& tau_raw,
                            const EulerClass& e) {
    GysinClass psi;
    psi.tau = tau_raw;
    psi.sigma = sigma_raw;
    if (!e.is_zero()) {
        RealVec3 ev{double(e.coords[0]), double(e.coords[1]), double(e.coords[2])};
        const double ee = norm2(ev);
        const double te = dot(tau_raw, ev);
        const double scale = std::sqrt(norm2(tau_raw)) * std::sqrt(ee) + 1.0;
        if (std::abs(te) > 1e-9 * scale)
            throw std::invalid_argument(
                "GysinClass: tau cup e != 0; psi is not a class on this bundle");
        const double se = dot(sigma_raw, ev);
        for (int i = 0; i < 3; ++i) {
            psi.sigma[i] = sigma_raw[i] - se / ee * ev[i];
            psi.tau[i] = tau_raw[i] - te / ee * ev[i];
        }
    }
    return psi;
}

CohomologyBases cohomology_basis(const ManifoldDescriptor& desc) {
    desc.validate();
    CohomologyBases out;

    // H^1(N_A) = R[dt] + Fix(A^T): kernel of B = A^T - I over the integers.
    const auto& A = desc.monodromy;
    const long long b11 = A[0][0] - 1, b12 = A[1][0];
    const long long b21 = A[0][1], b22 = A[1][1] - 1;
    const long long detB = b11 * b22 - b12 * b21;

    std::vector<std::array<long long, 2>> fixed;
    if (b11 == 0 && b12 == 0 && b21 == 0 && b22 == 0) {
        fixed = {{1, 0}, {0, 1}};
    } else if (detB == 0) {
        std::array<long long, 2> v = (b11 != 0 || b12 != 0)
                                         ? std::array<long long, 2>{-b12, b11}
                                         : std::array<long long, 2>{-b22, b21};
        const long long g = std::gcd(std::abs(v[0]), std::abs(v[1]));
        if (g > 1) { v[0] /= g; v[1] /= g; }
        fixed = {v};
    }

    out.h1_basis.push_back({0, 0, 1});
    out.h1_names.push_back("[dt]");
    for (const auto& v : fixed) {
        out.h1_basis.push_back({v[0], v[1], 0});
        out.h1_names.push_back("[" + std::to_string(v[0]) + " dx + " +
                               std::to_string(v[1]) + " dy]");
    }
    out.b1 = static_cast<int>(out.h1_basis.size());
    out.b2 = out.b1;  // Poincare duality

    // H^2: [dx^dy] is always monodromy-invariant; fixed covectors wedge dt.
    if (desc.is_torus()) {
        out.h2_basis = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
        out.h2_names = {"[dy^dt]", "[dt^dx]", "[dx^dy]"};
    } else {
        out.h2_basis.push_back({0, 0, 1});
        out.h2_names.push_back("[dx^dy]");
        for (const auto& v : fixed) {
            // (v1 dx + v2 dy)^dt = -v1 [dt^dx]... in B2: v1 dx^dt + v2 dy^dt
            // = v2 [dy^dt] - v1 [dt^dx].
            out.h2_basis.push_back({v[1], -v[0], 0});
            out.h2_names.push_back("[(" + std::to_string(v[0]) + " dx + " +
                                   std::to_string(v[1]) + " dy)^dt]");
        }
    }
    return out;
}

double cup_12(const CohomClass& h, const CohomClass& phi) {
    if (h.degree != 2 || phi.degree != 1)
        throw std::invalid_argument("cup_12: need degrees (2, 1)");
    return dot(h.coords, phi.coords);
}

double square(const GysinClass& psi) { return 2.0 * dot(psi.sigma, psi.tau); }

CohomClass gysin_pushforward(const GysinClass& psi) {
    return CohomClass{1, psi.tau};
}

GysinClass gysin_pullback(const CohomClass& h, const EulerClass& e) {
    if (h.degree != 2) throw std::invalid_argument("gysin_pullback: need degree 2");
    return make_gysin_class(h.coords, {0, 0, 0}, e);
}

bool is_fibered_class(const CohomClass& phi, const ManifoldDescriptor& desc) {
    if (phi.degree != 1) throw std::invalid_argument("is_fibered_class: need degree 1");
    if (phi.coords == RealVec3{0, 0, 0}) return false;
    if (desc.is_torus()) return true;
    // Must lie in the span of the computed H^1 basis: the dt coefficient is
    // free, the (dx, dy) part must be a multiple of the fixed covector.
    const auto bases = cohomology_basis(desc);
    RealVec3 planar{phi.coords[0], phi.coords[1], 0};
    RealVec3 residual = planar;
    for (std::size_t i = 1; i < bases.h1_basis.size(); ++i) {
        RealVec3 v{double(bases.h1_basis[i][0]), double(bases.h1_basis[i][1]), 0};
        const double c = dot(planar, v) / norm2(v);
        for (int a = 0; a < 3; ++a) residual[a] -= c * v[a];
    }
    const double scale = std::sqrt(norm2(phi.coords)) + 1.0;
    return std::sqrt(norm2(residual)) <= 1e-9 * scale;
}

ConeVerdict symplectic_cone_membership(const GysinClass& psi, const EulerClass& e,
                                       const ManifoldDescriptor& desc) {
    (void)e;  // tau cup e = 0 is already enforced by make_gysin_class
    ConeVerdict v;
    v.square_value = square(psi);
    if (!(v.square_value > 0.0))
        v.reasons.push_back("psi^2 <= 0");
    const CohomClass phi = gysin_pushforward(psi);
    if (phi.coords == RealVec3{0, 0, 0})
        v.reasons.push_back("p_*(psi) = 0 not fibered");
    else if (!is_fibered_class(phi, desc))
        v.reasons.push_back("p_*(psi) not in the fibered cone");
    v.yes = v.reasons.empty();
    return v;
}

CohomClass solve_h(const GysinClass& psi, const CohomClass& alpha_class,
                   const EulerClass& e) {
    if (alpha_class.degree != 1)
        throw std::invalid_argument("solve_h: alpha must have degree 1");
    RealVec3 diff{psi.tau[0] - alpha_class.coords[0],
                  psi.tau[1] - alpha_class.coords[1],
                  psi.tau[2] - alpha_class.coords[2]};
    const double scale = std::sqrt(norm2(psi.tau)) + 1.0;
    if (std::sqrt(norm2(diff)) > 1e-9 * scale)
        throw std::invalid_argument("solve_h: p_*(psi) != [alpha]");
    if (!e.is_zero()) {
        RealVec3 ev{double(e.coords[0]), double(e.coords[1]), double(e.coords[2])};
        const double ea = dot(ev, alpha_class.coords);
        if (std::abs(ea) > 1e-9 * (std::sqrt(norm2(ev)) + 1.0) * scale)
            throw std::invalid_argument("solve_h: e cup [alpha] != 0");
    }
    return CohomClass{2, psi.sigma};
}

}  // namespace sympform
