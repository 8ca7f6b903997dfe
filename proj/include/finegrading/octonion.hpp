#pragma once

#include "finegrading/linalg.hpp"

namespace fgr {

/// The split octonion algebra over the cyclotomic rationals in the basis
/// {e1, e2, u1, u2, u3, v1, v2, v3} (indices 0..7), with its multiplicative
/// norm q. Octonions are 8x1 columns; operators on the algebra are 8x8.

CycMatrix oct_basis_vector(int i);
CycMatrix oct_unit();  // 1 = e1 + e2

CycMatrix oct_mul(const CycMatrix& x, const CycMatrix& y);
/// Conjugation x -> q(x,1) 1 - x.
CycMatrix oct_conj(const CycMatrix& x);
CycNum oct_norm(const CycMatrix& x);
CycNum oct_polar(const CycMatrix& x, const CycMatrix& y);
/// Coordinate matrix of the polar form.
const CycMatrix& oct_polar_matrix();

bool is_octonion_automorphism(const CycMatrix& f);

/// The order-3 automorphism tau: e_j fixed, u_i -> u_{i+1}, v_i -> v_{i+1}.
CycMatrix octonion_tau();
/// tau_omega = diag(1,1,1,w,w^2,1,w^2,w) for a primitive cube root w.
CycMatrix octonion_tau_omega();
/// The order-2 exchange automorphism e1 <-> e2, u_i <-> v_i.
CycMatrix octonion_exchange();

/// Twisted product x*y = eta(conj x) eta^2(conj y); eta must be an
/// automorphism with eta^3 = id.
CycMatrix eta_mul(const CycMatrix& x, const CycMatrix& y, const CycMatrix& eta);

/// so(C, q) = skew transformations; 28-dimensional, deterministic basis.
const std::vector<CycMatrix>& so8_basis();
/// der C; 14-dimensional.
const std::vector<CycMatrix>& derivation_basis();
/// The diagonal Cartan basis h0, h1, h2, h3.
std::vector<CycMatrix> cartan_h();

struct TrialityTriple {
    CycMatrix d0, d1, d2;
};
/// The unique (d1, d2) with d0(x*y) = d1(x)*y + x*d2(y) for the eta-twisted
/// product; solved exactly as a linear system over so(C,q) x so(C,q).
TrialityTriple triality_lift(const CycMatrix& d0, const CycMatrix& eta);

/// theta = theta_id: d0 -> d2, as a 28x28 coordinate matrix over so8_basis().
const CycMatrix& theta_matrix();
CycMatrix theta_apply(const CycMatrix& d0);

/// Coordinate matrix (over so8_basis) of d -> p d p^{-1}.
CycMatrix so_conjugation_matrix(const CycMatrix& p);

/// Coordinates of an so(C,q) element in so8_basis().
std::vector<CycNum> so_coords(const CycMatrix& d);
CycMatrix so_from_coords(const std::vector<CycNum>& c);

}  // namespace fgr
