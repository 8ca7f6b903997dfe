#pragma once

#include "finegrading/sesquilinear.hpp"

namespace fgr {

/// Lie gradings are MatGradings with product_kind LieBracket and a trace-zero
/// or skew span descriptor.
using LieGrading = MatGrading;

/// Type A restriction: the zero component is intersected with the trace-zero
/// subspace, all other components are copied (they are traceless already).
LieGrading sl_restriction(const MatGrading& g);

/// K(R,*) for the involution x* = m x^T m^{-1}: componentwise -1 eigenspaces;
/// every component must be invariant under the involution.
LieGrading skew_part(const MatGrading& g, const CycMatrix& m);

/// The fine grading of sl_n induced by a fine phi_B-grading: the refined
/// components split into phi-eigenspaces, labeled over G x Z_2 (phi of order
/// 2, phi(x) = -(-1)^i x) or G x Z_4 (order 4, phi(x) = -eps^i x with eps a
/// primitive fourth root); the result is renormalized over its universal
/// grading group.
LieGrading outer_sl_grading(const FormSpec& spec);

std::vector<GradingViolation> verify_lie(const LieGrading& g);

}  // namespace fgr
