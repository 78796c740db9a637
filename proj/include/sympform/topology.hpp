#pragma once

#include <array>
#include <string>
#include <vector>

#include "sympform/rational.hpp"

namespace sympform {

using IntVec3 = std::array<long long, 3>;
using RealVec3 = std::array<double, 3>;

/// Mapping torus N_A of the 2-torus, A in SL(2,Z). A = I is the 3-torus,
/// the only case the construction pipeline accepts; other monodromies are
/// supported for cohomology bookkeeping only.
struct ManifoldDescriptor {
    std::array<std::array<long long, 2>, 2> monodromy{{{1, 0}, {0, 1}}};

    bool is_torus() const;
    void validate() const;  // det = 1
};

/// Euler class of the circle bundle, coordinates in the basis
/// B2 = ([dy^dt], [dt^dx], [dx^dy]) of H^2(N;Z).
struct EulerClass {
    IntVec3 coords{0, 0, 0};
    bool is_zero() const { return coords == IntVec3{0, 0, 0}; }
};

/// Real cohomology class of degree 1 (coords in B1 = ([dx],[dy],[dt])) or
/// degree 2 (coords in B2).
struct CohomClass {
    int degree = 1;
    RealVec3 coords{0, 0, 0};
};

/// Degree-2 class on M in Gysin-split coordinates: sigma is a lift to
/// H^2(N;R) taken in the orthogonal complement of e (all of H^2 when e = 0),
/// tau = p_*(psi) lies in ker(. cup e).
struct GysinClass {
    RealVec3 sigma{0, 0, 0};
    RealVec3 tau{0, 0, 0};
};

/// Canonicalizes raw (sigma, tau) coordinates: projects sigma onto the
/// complement of e and checks tau cup e = 0 (within 1e-9 of the input scale;
/// Gysin exactness makes this a hard requirement on inputs).
GysinClass make_gysin_class(const RealVec3& sigma_raw, const RealVec3& tau_raw,
                            const EulerClass& e);

struct CohomologyBases {
    int b1 = 0;
    int b2 = 0;
    std::vector<IntVec3> h1_basis;          // coords in (dx, dy, dt)
    std::vector<std::string> h1_names;
    std::vector<IntVec3> h2_basis;          // coords in B2
    std::vector<std::string> h2_names;
};

/// H^1 of the mapping torus is R[dt] + Fix(A^T); H^2 matches by duality.
CohomologyBases cohomology_basis(const ManifoldDescriptor& desc);

/// Cup product H^2 x H^1 -> H^3 = R; the pairing matrix of (B2, B1) is the
/// identity under the normalization vol(T^3) = 1.
double cup_12(const CohomClass& h, const CohomClass& phi);

/// psi^2 as a multiple of the fundamental class: 2 * (sigma cup tau).
double square(const GysinClass& psi);

CohomClass gysin_pushforward(const GysinClass& psi);

GysinClass gysin_pullback(const CohomClass& h, const EulerClass& e);

/// A class on the flat family is fibered iff it is nonzero (and lies in the
/// H^1 of the given mapping torus).
bool is_fibered_class(const CohomClass& phi, const ManifoldDescriptor& desc);

struct ConeVerdict {
    bool yes = false;
    double square_value = 0.0;
    std::vector<std::string> reasons;  // empty iff yes
};

/// Symplectic-cone test: psi^2 > 0 and p_*(psi) fibered.
ConeVerdict symplectic_cone_membership(const GysinClass& psi, const EulerClass& e,
                                       const ManifoldDescriptor& desc = {});

/// Canonical lift h of psi's sigma part, preconditioned on p_*(psi) = [alpha].
/// Because e cup [alpha] = 0, every lift has the same h cup [alpha] =
/// square(psi)/2.
CohomClass solve_h(const GysinClass& psi, const CohomClass& alpha_class,
                   const EulerClass& e);

}  // namespace sympform
