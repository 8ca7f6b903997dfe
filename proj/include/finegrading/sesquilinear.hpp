#pragma once

#include <optional>

#include "finegrading/involutions.hpp"

namespace fgr {

/// Explicit module degrees for the unrefined induced grading: an ambient
/// group, a degree per good-basis vector, and the images of the normalized
/// generators of Supp D in the ambient group.
struct DegreeAssignment {
    FinAbGroup ambient;
    std::vector<GrpElt> degrees;
    std::vector<GrpElt> h_images;
};

/// Good-basis data of a tau-sesquilinear nondegenerate balanced homogeneous
/// form on a free D-module: p diagonal entries d_i (labels in Supp D with
/// representatives scaled to square 1) and s hyperbolic pairs with scalars
/// nu_j. The refined degrees are implicit (presented by the standard
/// relations); explicit unrefined degrees are optional.
struct FormSpec {
    DivisionAlgebra division;
    GradedInvolution tau;
    std::vector<GrpElt> d_labels;
    std::vector<CycNum> nus;
    std::optional<DegreeAssignment> degrees;

    long p() const { return long(d_labels.size()); }
    long s() const { return long(nus.size()); }
    long rank() const { return p() + 2 * s(); }
    long matrix_size() const { return rank() * division.matrix_size(); }
    /// The excluded non-fine case: p = 2, s = 0 with equal labels.
    bool degenerate_excluded() const;

    std::string str() const;
};

/// Validates labels, scalars and involution target; throws on bad specs.
void validate_spec(const FormSpec& spec);

/// The adjoint antiautomorphism phi_B(A) = Delta^{-1} (A^T)^tau Delta in the
/// Kronecker realization End_D(V) = Mat_rank(F) (x) D.
struct PhiOperator {
    CycMatrix delta;              // coordinate matrix of B
    CycMatrix m;                  // phi(A) = m A^T m^{-1}
    std::vector<CycNum> gamma_diag;  // eps_i per good-basis index
    int order = 2;                // 2 or 4

    CycMatrix apply(const CycMatrix& a) const { return m * a.transpose() * m.inverse(); }
    /// Per-index scalar of phi^2 on E_ij (x) D: eps_i / eps_j.
    CycNum eps_ratio(long i, long j) const { return gamma_diag[i] * gamma_diag[j].inverse(); }
};

PhiOperator build_phi(const FormSpec& spec);

/// The refined grading of End_D(V) over the group presented by
/// 2g~_1 + h_1 = ... = 2g~_p + h_p = g~_{p+1} + g~_{p+2} = ... = 0,
/// normalized, with components E_ij (x) D_h.
struct RefinedGrading {
    MatGrading grading;
    std::vector<GrpElt> v_degrees;  // refined degrees of the good basis
    std::vector<GrpElt> h_embed;    // images of the normalized generators of Supp D

    GrpElt h_image(const GrpElt& h) const;
};
RefinedGrading refined_grading(const FormSpec& spec);

/// Proposition test: the (refined or explicitly given) induced grading is a
/// phi_B-grading iff eps_i eps_j^{-1} = eps_{i'} eps_{j'}^{-1} whenever
/// (g_i - g_j) - (g_{i'} - g_{j'}) lies in the image of Supp D.
bool is_phi_grading(const FormSpec& spec);

/// Exhaustive zero-symmetry check of B over good-basis vectors scaled by
/// homogeneous elements of D.
bool balanced_check(const FormSpec& spec);

/// B(x, y) for coordinate columns x, y (matrix_size x dim_D blocks), as an
/// element of D.
CycMatrix form_value(const FormSpec& spec, const PhiOperator& phi, const CycMatrix& x,
                     const CycMatrix& y);

}  // namespace fgr
