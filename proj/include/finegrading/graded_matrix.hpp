#pragma once

#include <map>
#include <string>
#include <vector>

#include "finegrading/abgroup.hpp"
#include "finegrading/linalg.hpp"

namespace fgr {

enum class ProductKind { Associative, LieBracket };

/// Which subspace of Mat_n the graded components are expected to span.
struct SpanDescriptor {
    enum class Kind { Full, TraceZero, Skew };
    Kind kind = Kind::Full;
    CycMatrix involution_m;  // Skew: the fixed involution is x -> m x^T m^{-1}

    static SpanDescriptor full() { return {Kind::Full, {}}; }
    static SpanDescriptor trace_zero() { return {Kind::TraceZero, {}}; }
    static SpanDescriptor skew(CycMatrix m) { return {Kind::Skew, std::move(m)}; }

    long expected_dim(long n) const;
    bool member(const CycMatrix& x) const;
};

/// A group-labeled direct-sum decomposition of a subspace of Mat_n into
/// homogeneous components, each stored as an explicit matrix basis.
/// Components are never empty; the support is exactly the key set.
class MatGrading {
public:
    MatGrading(long n, ProductKind pk, SpanDescriptor span, FinAbGroup group)
        : n_(n), product_(pk), span_(std::move(span)), group_(std::move(group)) {}

    long n() const { return n_; }
    ProductKind product_kind() const { return product_; }
    const SpanDescriptor& span() const { return span_; }
    const FinAbGroup& group() const { return group_; }
    const std::map<GrpElt, std::vector<CycMatrix>>& components() const { return comps_; }

    void add_to_component(const GrpElt& g, CycMatrix m);
    const std::vector<CycMatrix>* component(const GrpElt& g) const;

    std::vector<GrpElt> support() const;
    long total_dim() const;
    long component_count() const { return long(comps_.size()); }

    /// The algebra product this grading respects (xy or [x,y]).
    CycMatrix product(const CycMatrix& x, const CycMatrix& y) const;

    /// All basis matrices in deterministic (label, index) order.
    std::vector<CycMatrix> flat_basis() const;

private:
    long n_;
    ProductKind product_;
    SpanDescriptor span_;
    FinAbGroup group_;
    std::map<GrpElt, std::vector<CycMatrix>> comps_;
};

/// One component of Mat_n with label 0 over the trivial group.
MatGrading trivial_grading(long n, ProductKind pk, SpanDescriptor span,
                           const std::vector<CycMatrix>& basis);

/// The Z_n x Z_n division grading of Mat_n generated by the clock matrix x
/// and the cyclic shift y with xy = eps_n yx; deg x = (1,0), deg y = (0,1).
MatGrading pauli_grading(long n);

/// A graded division algebra A_{n_1} (x) ... (x) A_{n_r} with its canonical
/// generator representatives, supporting exponent-indexed access.
struct DivisionAlgebra {
    MatGrading grading;
    std::vector<long> factors;
    /// deg x_t, deg y_t for each factor, in order.
    std::vector<GrpElt> gen_labels;

    long matrix_size() const;
    /// Canonical representative prod_t x_t^{a_t} y_t^{b_t} (Kronecker order).
    CycMatrix rep(const std::vector<long>& exps) const;
    GrpElt label(const std::vector<long>& exps) const;
    /// Exponent vector of a support label.
    std::vector<long> exponents(const GrpElt& h) const;
};
DivisionAlgebra division_algebra(const std::vector<long>& factors);

/// Kronecker-product grading over the direct product group.
MatGrading tensor_grading(const MatGrading& a, const MatGrading& b);

/// The Z^{m-1} Cartan grading of Mat_m: deg v_1 = 0, deg v_i = e_{i-1}.
MatGrading cartan_grading(long m);

/// Grading of Mat_m(D) = End_D(V) induced by homogeneous module degrees,
/// over the product of the ambient group and Supp D.
MatGrading induced_grading(const DivisionAlgebra& division, const std::vector<GrpElt>& degrees);

struct GradingViolation {
    std::string what;
};
/// Empty iff closure, independence and span coverage all hold exactly.
std::vector<GradingViolation> verify_grading(const MatGrading& g);

/// (n_1, ..., n_r): n_i components of dimension i, trailing entry nonzero.
std::vector<long> type_of(const MatGrading& g);
std::string type_str(const std::vector<long>& type);

bool is_graded_division(const MatGrading& g);

/// An exact finite-order operator on a matrix space: either conjugation by an
/// invertible matrix or a linear map given by its action on a fixed basis.
class AlgebraOperator {
public:
    static AlgebraOperator conjugation(const CycMatrix& p);
    static AlgebraOperator linear_on_basis(std::vector<CycMatrix> basis, CycMatrix coord);
    CycMatrix apply(const CycMatrix& x) const;

private:
    bool is_conj_ = true;
    CycMatrix p_, pinv_;
    std::vector<CycMatrix> basis_;
    CycMatrix coord_;
    Echelon basis_ech_{0};
};

/// Simultaneous eigenspace refinement of a grading by commuting finite-order
/// product-preserving operators; labels extend by prod_t Z_{ord_t}.
MatGrading refine_by_operators(const MatGrading& g, const std::vector<AlgebraOperator>& ops,
                               long order_bound = 24);

/// Eigenspace grading of a matrix space by commuting finite-order operators.
MatGrading grade_by_automorphisms(long n, ProductKind pk, SpanDescriptor span,
                                  const std::vector<CycMatrix>& space_basis,
                                  const std::vector<AlgebraOperator>& ops, long order_bound = 24);

/// Z^k grading by simultaneous integer ad-eigenvalues of commuting elements.
MatGrading refine_by_semisimple(const MatGrading& g, const std::vector<CycMatrix>& elems,
                                long eigen_bound = 8);
MatGrading grade_by_semisimple_elements(long n, SpanDescriptor span,
                                        const std::vector<CycMatrix>& space_basis,
                                        const std::vector<CycMatrix>& elems, long eigen_bound = 8);

/// The universal grading group: one generator per support label, one relation
/// g + h - (g+h) per nonzero component product, normalized; the grading is
/// relabeled through the quotient map.
struct UniversalResult {
    FinAbGroup group;
    MatGrading relabeled;
};
UniversalResult universal_group_of(const MatGrading& g);

}  // namespace fgr
