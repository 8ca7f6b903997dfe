#include "finegrading/sesquilinear.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace fgr {

bool FormSpec::degenerate_excluded() const {
    return p() == 2 && s() == 0 && d_labels[0] == d_labels[1];
}

std::string FormSpec::str() const {
    std::ostringstream os;
    os << "[D=Q^" << division.factors.size() << ", " << kind_str(tau.kind()) << ", d=(";
    for (size_t i = 0; i < d_labels.size(); ++i) {
        if (i) os << ",";
        os << d_labels[i].str();
    }
    os << "), s=" << s() << "]";
    return os.str();
}

void validate_spec(const FormSpec& spec) {
    if (spec.rank() < 1) throw std::runtime_error("FormSpec: empty good basis");
    const FinAbGroup& hg = spec.division.grading.group();
    const FinAbGroup& tg = spec.tau.target().group();
    if (tg.free_rank() != hg.free_rank() || tg.torsion() != hg.torsion())
        throw std::runtime_error("FormSpec: involution target mismatch");
    for (const auto& [h, _] : spec.division.grading.components()) spec.tau.sign(h);
    for (const auto& h : spec.d_labels) unit_rep(spec.division.grading, h);
    for (const auto& nu : spec.nus)
        if (!nu.is_root_of_unity()) throw std::runtime_error("FormSpec: nu_j must be a root of unity");
    if (spec.degrees) {
        if (long(spec.degrees->degrees.size()) != spec.rank())
            throw std::runtime_error("FormSpec: explicit degree count mismatch");
        if (long(spec.degrees->h_images.size()) != spec.division.grading.group().coord_count())
            throw std::runtime_error("FormSpec: support embedding size mismatch");
    }
}

namespace {

CycMatrix block_unit(long rank, long i, long j, const CycMatrix& d) {
    CycMatrix e(rank, rank);
    e.at(i, j) = CycNum(1);
    return e.kron(d);
}

}  // namespace

PhiOperator build_phi(const FormSpec& spec) {
    validate_spec(spec);
    const long rank = spec.rank(), r = spec.division.matrix_size();
    PhiOperator phi;
    phi.delta = CycMatrix(rank * r, rank * r);
    phi.gamma_diag.resize(rank);
    for (long i = 0; i < spec.p(); ++i) {
        CycMatrix d = unit_rep(spec.division.grading, spec.d_labels[i]);
        phi.delta = phi.delta + block_unit(rank, i, i, d);
        phi.gamma_diag[i] = CycNum(spec.tau.sign(spec.d_labels[i]));
    }
    for (long j = 0; j < spec.s(); ++j) {
        long a = spec.p() + 2 * j, b = a + 1;
        phi.delta = phi.delta + block_unit(rank, a, b, CycMatrix::identity(r).scaled(spec.nus[j]));
        phi.delta = phi.delta +
                    block_unit(rank, b, a, CycMatrix::identity(r).scaled(spec.nus[j].inverse()));
        phi.gamma_diag[a] = spec.nus[j] * spec.nus[j];
        phi.gamma_diag[b] = phi.gamma_diag[a].inverse();
    }
    if (!phi.delta.is_invertible()) throw std::runtime_error("build_phi: Delta not invertible");
    phi.m = phi.delta.inverse() * CycMatrix::identity(rank).kron(spec.tau.realization());
    phi.order = 2;
    for (long i = 1; i < rank; ++i)
        if (phi.gamma_diag[i] != phi.gamma_diag[0]) phi.order = 4;
    return phi;
}

GrpElt RefinedGrading::h_image(const GrpElt& h) const {
    GrpElt acc = grading.group().zero();
    for (size_t t = 0; t < h.coords().size(); ++t) acc = acc + h_embed[t].times(h.coords()[t]);
    return acc;
}

RefinedGrading refined_grading(const FormSpec& spec) {
    validate_spec(spec);
    if (spec.degenerate_excluded())
        throw std::runtime_error("not fine: refines to a division grading");
    const long rank = spec.rank();
    const FinAbGroup& hgroup = spec.division.grading.group();
    const long hn = hgroup.coord_count();

    Presentation pres;
    pres.num_generators = rank + hn;
    for (long i = 0; i < spec.p(); ++i) {
        std::vector<Integer> rel(pres.num_generators, Integer(0));
        rel[i] = 2;
        for (long t = 0; t < hn; ++t) rel[rank + t] = spec.d_labels[i].coords()[t];
        pres.relations.push_back(std::move(rel));
    }
    for (long j = 0; j < spec.s(); ++j) {
        std::vector<Integer> rel(pres.num_generators, Integer(0));
        rel[spec.p() + 2 * j] = 1;
        rel[spec.p() + 2 * j + 1] = 1;
        pres.relations.push_back(std::move(rel));
    }
    for (long t = 0; t < hn; ++t) {
        std::vector<Integer> rel(pres.num_generators, Integer(0));
        rel[rank + t] = hgroup.torsion()[t - hgroup.free_rank()];
        pres.relations.push_back(std::move(rel));
    }
    FinAbGroup big = FinAbGroup::normalize(pres);

    RefinedGrading out{MatGrading(spec.matrix_size(), ProductKind::Associative,
                                  SpanDescriptor::full(), big),
                       {},
                       {}};
    for (long i = 0; i < rank + hn; ++i) {
        std::vector<Integer> e(pres.num_generators, Integer(0));
        e[i] = 1;
        (i < rank ? out.v_degrees : out.h_embed).push_back(big.from_presentation(e));
    }
    // the support of D must embed
    std::set<GrpElt> images;
    for (const auto& h : hgroup.elements()) images.insert(out.h_image(h));
    if (long(images.size()) != hgroup.order().get_si())
        throw std::runtime_error("refined_grading: support does not embed in the refined group");

    for (long i = 0; i < rank; ++i)
        for (long j = 0; j < rank; ++j)
            for (const auto& [h, basis] : spec.division.grading.components()) {
                GrpElt label = out.v_degrees[i] - out.v_degrees[j] + out.h_image(h);
                out.grading.add_to_component(label, block_unit(rank, i, j, basis[0]));
            }
    return out;
}

bool is_phi_grading(const FormSpec& spec) {
    PhiOperator phi = build_phi(spec);
    const long rank = spec.rank();
    std::vector<GrpElt> degs;
    std::vector<GrpElt> hgens;
    if (spec.degrees) {
        degs = spec.degrees->degrees;
        hgens = spec.degrees->h_images;
    } else {
        RefinedGrading rg = refined_grading(spec);
        degs = rg.v_degrees;
        hgens = rg.h_embed;
    }
    for (long i = 0; i < rank; ++i)
        for (long j = 0; j < rank; ++j)
            for (long i2 = 0; i2 < rank; ++i2)
                for (long j2 = 0; j2 < rank; ++j2) {
                    GrpElt diff = (degs[i] - degs[j]) - (degs[i2] - degs[j2]);
                    if (!subgroup_contains(hgens, diff)) continue;
                    if (phi.eps_ratio(i, j) != phi.eps_ratio(i2, j2)) return false;
                }
    return true;
}

bool balanced_check(const FormSpec& spec) {
    validate_spec(spec);
    PhiOperator phi = build_phi(spec);
    const long rank = spec.rank(), r = spec.division.matrix_size();
    // Delta_ij as D-blocks
    auto delta_block = [&](long i, long j) {
        CycMatrix b(r, r);
        for (long u = 0; u < r; ++u)
            for (long v = 0; v < r; ++v) b.at(u, v) = phi.delta.at(i * r + u, j * r + v);
        return b;
    };
    for (long i = 0; i < rank; ++i)
        for (long j = 0; j < rank; ++j)
            for (const auto& [hx, bx] : spec.division.grading.components())
                for (const auto& [hy, by] : spec.division.grading.components()) {
                    // B(v_i x, v_j y) = x^tau Delta_ij y
                    CycMatrix fwd = spec.tau.apply(bx[0]) * delta_block(i, j) * by[0];
                    CycMatrix bwd = spec.tau.apply(by[0]) * delta_block(j, i) * bx[0];
                    if (fwd.is_zero() != bwd.is_zero()) return false;
                }
    return true;
}

CycMatrix form_value(const FormSpec& spec, const PhiOperator& phi, const CycMatrix& x,
                     const CycMatrix& y) {
    const long rank = spec.rank(), r = spec.division.matrix_size();
    if (long(x.rows()) != rank * r || long(x.cols()) != r || long(y.rows()) != rank * r ||
        long(y.cols()) != r)
        throw std::runtime_error("form_value: coordinate shape mismatch");
    // B(x, y) = s_tau x^T (I (x) s_tau^{-1}) Delta y, an element of D
    const CycMatrix& s = spec.tau.realization();
    CycMatrix left = s * x.transpose() * CycMatrix::identity(rank).kron(s.inverse());
    return left * phi.delta * y;
}

}  // namespace fgr
