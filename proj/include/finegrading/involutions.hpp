#pragma once

#include <map>

#include "finegrading/graded_matrix.hpp"

namespace fgr {

/// Representative of the 1-dimensional component at h, scaled so its square
/// is the identity (the square of a homogeneous element of a graded division
/// algebra with 2-elementary support is a scalar).
CycMatrix unit_rep(const MatGrading& div, const GrpElt& h);

/// beta(g,h) in {0,1}: do homogeneous representatives at g and h commute (0)
/// or anticommute (1)?
int beta_pairing(const MatGrading& div, const GrpElt& g, const GrpElt& h);

/// A graded involution tau on a graded division algebra with 2-elementary
/// support: each homogeneous component is preserved and d^tau = sign(deg d) d.
/// Carried both as the sign function (drives classification) and as a matrix
/// realization x^tau = s x^T s^{-1} (drives phi_B arithmetic).
class GradedInvolution {
public:
    enum class Kind { Orthogonal, Symplectic };

    /// Derive the sign function from a realization; validates that s induces
    /// a graded involution of the division grading.
    static GradedInvolution from_realization(const MatGrading& target, CycMatrix s);

    /// The transpose involution on Q = pauli_grading(2): signs (+,+,+,-).
    static GradedInvolution tau_o();
    /// The quaternion conjugation on Q: signs (+,-,-,-).
    static GradedInvolution tau_s();
    /// The identity involution on D = F.
    static GradedInvolution identity_on_F();

    /// tau_o^{(x)m} (orthogonal) or tau_s (x) tau_o^{(x)(m-1)} (symplectic)
    /// on the given Q^{(x)m} division algebra.
    static GradedInvolution reference(const DivisionAlgebra& d, Kind kind);

    /// Involution on the tensor product grading, sign function multiplicative
    /// across factors.
    static GradedInvolution tensor(const std::vector<GradedInvolution>& factors);

    const MatGrading& target() const { return target_; }
    const CycMatrix& realization() const { return s_; }
    int sign(const GrpElt& h) const;
    const std::map<GrpElt, int>& sign_fn() const { return sign_; }

    CycMatrix apply(const CycMatrix& x) const;

    Kind kind() const;

    /// The twisted involution tau^d with d the canonical representative at
    /// the given label: x -> d x^tau d^{-1}.
    GradedInvolution twist(const GrpElt& label) const;
    /// Twist by an explicit homogeneous element (zero input is an error).
    GradedInvolution twist_by(const CycMatrix& d) const;

private:
    MatGrading target_{0, ProductKind::Associative, SpanDescriptor::full(), FinAbGroup()};
    std::map<GrpElt, int> sign_;
    CycMatrix s_;
};

std::string kind_str(GradedInvolution::Kind k);

}  // namespace fgr
