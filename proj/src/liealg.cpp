#include "finegrading/liealg.hpp"

#include <stdexcept>

namespace fgr {

namespace {

// basis of the trace-zero elements of the span of `basis`
std::vector<CycMatrix> trace_zero_part(const std::vector<CycMatrix>& basis) {
    CycMatrix a(1, basis.size());
    for (size_t j = 0; j < basis.size(); ++j) a.at(0, j) = basis[j].trace();
    auto null = nullspace(a);
    std::vector<CycMatrix> out;
    for (const auto& y : null) {
        CycMatrix v(basis[0].rows(), basis[0].cols());
        for (size_t j = 0; j < basis.size(); ++j)
            if (!y[j].is_zero()) v = v + basis[j].scaled(y[j]);
        out.push_back(v);
    }
    return out;
}

}  // namespace

LieGrading sl_restriction(const MatGrading& g) {
    if (g.product_kind() != ProductKind::Associative)
        throw std::runtime_error("sl_restriction: associative grading expected");
    LieGrading out(g.n(), ProductKind::LieBracket, SpanDescriptor::trace_zero(), g.group());
    for (const auto& [lab, basis] : g.components()) {
        if (lab.is_zero()) {
            for (auto& m : trace_zero_part(basis)) out.add_to_component(lab, std::move(m));
        } else {
            for (const auto& m : basis) out.add_to_component(lab, m);
        }
    }
    return out;
}

LieGrading skew_part(const MatGrading& g, const CycMatrix& m) {
    const size_t w = size_t(g.n()) * size_t(g.n());
    CycMatrix minv = m.inverse();
    auto phi = [&](const CycMatrix& x) { return m * x.transpose() * minv; };
    LieGrading out(g.n(), ProductKind::LieBracket, SpanDescriptor::skew(m), g.group());
    for (const auto& [lab, basis] : g.components()) {
        Echelon ech(w);
        for (const auto& b : basis) ech.add(b.vec());
        const size_t d = basis.size();
        CycMatrix restr(d, d);
        for (size_t j = 0; j < d; ++j) {
            auto c = ech.coordinates(phi(basis[j]).vec());
            if (!c) throw std::runtime_error("skew_part: component not invariant under the involution");
            for (size_t i = 0; i < d; ++i) restr.at(i, j) = (*c)[i];
        }
        auto null = nullspace(restr + CycMatrix::identity(d));
        for (const auto& y : null) {
            CycMatrix v(g.n(), g.n());
            for (size_t j = 0; j < d; ++j)
                if (!y[j].is_zero()) v = v + basis[j].scaled(y[j]);
            out.add_to_component(lab, std::move(v));
        }
    }
    return out;
}

LieGrading outer_sl_grading(const FormSpec& spec) {
    if (spec.degenerate_excluded())
        throw std::runtime_error("outer_sl_grading: spec excluded as non-fine");
    if (!is_phi_grading(spec))
        throw std::runtime_error("outer_sl_grading: refined spec is not a phi-grading");
    RefinedGrading rg = refined_grading(spec);
    PhiOperator phi = build_phi(spec);
    const long n = spec.matrix_size();
    const size_t w = size_t(n) * size_t(n);
    const long ord = phi.order;

    // product group G~ x Z_ord
    Presentation pres;
    const FinAbGroup& gt = rg.grading.group();
    const long ng = gt.coord_count();
    pres.num_generators = ng + 1;
    for (size_t i = 0; i < gt.torsion().size(); ++i) {
        std::vector<Integer> rel(pres.num_generators, Integer(0));
        rel[gt.free_rank() + long(i)] = gt.torsion()[i];
        pres.relations.push_back(std::move(rel));
    }
    {
        std::vector<Integer> rel(pres.num_generators, Integer(0));
        rel[ng] = ord;
        pres.relations.push_back(std::move(rel));
    }
    FinAbGroup big = FinAbGroup::normalize(pres);

    LieGrading lie(n, ProductKind::LieBracket, SpanDescriptor::trace_zero(), big);
    CycNum eps = CycNum::root_of_unity(ord, 1);
    for (const auto& [lab, basis] : rg.grading.components()) {
        Echelon ech(w);
        for (const auto& b : basis) ech.add(b.vec());
        const size_t d = basis.size();
        CycMatrix restr(d, d);
        for (size_t j = 0; j < d; ++j) {
            auto c = ech.coordinates(phi.apply(basis[j]).vec());
            if (!c) throw std::runtime_error("outer_sl_grading: phi leaves a component");
            for (size_t i = 0; i < d; ++i) restr.at(i, j) = (*c)[i];
        }
        size_t found = 0;
        for (long i = 0; i < ord; ++i) {
            // eigenvalue -eps^i of phi on this component
            CycNum lambda = -eps.pow(i);
            auto null = nullspace(restr - CycMatrix::identity(d).scaled(lambda));
            if (null.empty()) continue;
            std::vector<CycMatrix> eig;
            for (const auto& y : null) {
                CycMatrix v(n, n);
                for (size_t j = 0; j < d; ++j)
                    if (!y[j].is_zero()) v = v + basis[j].scaled(y[j]);
                eig.push_back(v);
            }
            found += eig.size();
            // trace-zero restriction applies componentwise
            eig = trace_zero_part(eig);
            if (eig.empty()) continue;
            std::vector<Integer> e(pres.num_generators, Integer(0));
            for (long t = 0; t < ng; ++t) e[t] = lab.coords()[t];
            e[ng] = i;
            GrpElt nl = big.from_presentation(e);
            for (auto& v : eig) lie.add_to_component(nl, std::move(v));
        }
        if (found != d)
            throw std::runtime_error("outer_sl_grading: phi not diagonalizable on a component");
    }
    return universal_group_of(lie).relabeled;
}

std::vector<GradingViolation> verify_lie(const LieGrading& g) {
    if (g.product_kind() != ProductKind::LieBracket)
        return {{"not a Lie grading (product kind mismatch)"}};
    return verify_grading(g);
}

}  // namespace fgr
