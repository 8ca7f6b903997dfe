#include "finegrading/involutions.hpp"

#include <stdexcept>

namespace fgr {

CycMatrix unit_rep(const MatGrading& div, const GrpElt& h) {
    const auto* comp = div.component(h);
    if (!comp || comp->size() != 1) throw std::runtime_error("unit_rep: label not homogeneous of dim 1");
    const CycMatrix& r = (*comp)[0];
    CycMatrix sq = r * r;
    CycNum c = sq.at(0, 0);
    for (size_t i = 0; i < sq.rows(); ++i)
        for (size_t j = 0; j < sq.cols(); ++j)
            if (sq.at(i, j) != (i == j ? c : CycNum(0)))
                throw std::runtime_error("unit_rep: square is not scalar");
    return r.scaled(c.sqrt_root_of_unity().inverse());
}

int beta_pairing(const MatGrading& div, const GrpElt& g, const GrpElt& h) {
    const auto* cg = div.component(g);
    const auto* ch = div.component(h);
    if (!cg || !ch) throw std::runtime_error("beta_pairing: label outside the support");
    const CycMatrix& x = (*cg)[0];
    const CycMatrix& y = (*ch)[0];
    if (x * y == y * x) return 0;
    if (x * y == -(y * x)) return 1;
    throw std::runtime_error("beta_pairing: representatives neither commute nor anticommute");
}

GradedInvolution GradedInvolution::from_realization(const MatGrading& target, CycMatrix s) {
    if (!is_graded_division(target))
        throw std::runtime_error("GradedInvolution: target is not a graded division algebra");
    GradedInvolution inv;
    inv.target_ = target;
    inv.s_ = std::move(s);
    CycMatrix sinv = inv.s_.inverse();
    for (const auto& [h, basis] : target.components()) {
        auto ord = h.element_order();
        if (!ord || ord.value() > 2)
            throw std::runtime_error("GradedInvolution: support is not 2-elementary");
        const CycMatrix& r = basis[0];
        CycMatrix img = inv.s_ * r.transpose() * sinv;
        if (img == r)
            inv.sign_.emplace(h, 1);
        else if (img == -r)
            inv.sign_.emplace(h, -1);
        else
            throw std::runtime_error("GradedInvolution: realization does not preserve a component");
    }
    if (inv.sign_.at(target.group().zero()) != 1)
        throw std::runtime_error("GradedInvolution: sign at 0 must be +1");
    return inv;
}

GradedInvolution GradedInvolution::tau_o() {
    return from_realization(pauli_grading(2), CycMatrix::identity(2));
}

GradedInvolution GradedInvolution::tau_s() {
    CycMatrix q3(2, 2);
    q3.at(0, 1) = CycNum(1);
    q3.at(1, 0) = CycNum(-1);
    return from_realization(pauli_grading(2), q3);
}

GradedInvolution GradedInvolution::identity_on_F() {
    return from_realization(pauli_grading(1), CycMatrix::identity(1));
}

GradedInvolution GradedInvolution::reference(const DivisionAlgebra& d, Kind kind) {
    const long m = long(d.factors.size());
    for (long f : d.factors)
        if (f != 2) throw std::runtime_error("GradedInvolution::reference: division algebra must be Q^m");
    CycMatrix s = CycMatrix::identity(1);
    for (long t = 0; t < m; ++t) {
        if (t == 0 && kind == Kind::Symplectic) {
            CycMatrix q3(2, 2);
            q3.at(0, 1) = CycNum(1);
            q3.at(1, 0) = CycNum(-1);
            s = s.kron(q3);
        } else {
            s = s.kron(CycMatrix::identity(2));
        }
    }
    GradedInvolution inv = from_realization(d.grading, s);
    if (inv.kind() != kind) throw std::runtime_error("GradedInvolution::reference: kind mismatch");
    return inv;
}

GradedInvolution GradedInvolution::tensor(const std::vector<GradedInvolution>& factors) {
    if (factors.empty()) return identity_on_F();
    MatGrading acc = factors[0].target();
    CycMatrix s = factors[0].s_;
    for (size_t i = 1; i < factors.size(); ++i) {
        acc = tensor_grading(acc, factors[i].target());
        s = s.kron(factors[i].s_);
    }
    return from_realization(acc, s);
}

int GradedInvolution::sign(const GrpElt& h) const {
    auto it = sign_.find(h);
    if (it == sign_.end()) throw std::runtime_error("GradedInvolution::sign: label outside the support");
    return it->second;
}

CycMatrix GradedInvolution::apply(const CycMatrix& x) const {
    return s_ * x.transpose() * s_.inverse();
}

GradedInvolution::Kind GradedInvolution::kind() const {
    long sum = 0;
    for (const auto& [_, s] : sign_) sum += s;
    if (sum == target_.n()) return Kind::Orthogonal;
    if (sum == -target_.n()) return Kind::Symplectic;
    throw std::runtime_error("not an involution sign function");
}

GradedInvolution GradedInvolution::twist(const GrpElt& label) const {
    return twist_by(unit_rep(target_, label));
}

GradedInvolution GradedInvolution::twist_by(const CycMatrix& d) const {
    if (d.is_zero()) throw std::runtime_error("GradedInvolution::twist: zero element");
    return from_realization(target_, d * s_);
}

std::string kind_str(GradedInvolution::Kind k) {
    return k == GradedInvolution::Kind::Orthogonal ? "orthogonal" : "symplectic";
}

}  // namespace fgr
