#include "finegrading/graded_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fgr {

long SpanDescriptor::expected_dim(long n) const {
    switch (kind) {
        case Kind::Full:
            return n * n;
        case Kind::TraceZero:
            return n * n - 1;
        case Kind::Skew: {
            // trace of x -> m x^T m^{-1} on Mat_n is sum_ij m_ij (m^{-1})_ij,
            // equal to +-n; the skew part has dimension (n^2 - trace)/2
            CycMatrix minv = involution_m.inverse();
            CycNum tr;
            for (size_t i = 0; i < involution_m.rows(); ++i)
                for (size_t j = 0; j < involution_m.cols(); ++j)
                    tr += involution_m.at(i, j) * minv.at(i, j);
            if (!tr.is_rational()) throw std::runtime_error("SpanDescriptor: invalid involution");
            long t = tr.rational_value().get_num().get_si();
            if (t != n && t != -n) throw std::runtime_error("SpanDescriptor: matrix is not an involution form");
            return (n * n - t) / 2;
        }
    }
    return 0;
}

bool SpanDescriptor::member(const CycMatrix& x) const {
    switch (kind) {
        case Kind::Full:
            return true;
        case Kind::TraceZero:
            return x.trace().is_zero();
        case Kind::Skew:
            return (involution_m * x.transpose() * involution_m.inverse()) == -x;
    }
    return false;
}

void MatGrading::add_to_component(const GrpElt& g, CycMatrix m) {
    if (m.is_zero()) return;
    comps_[g].push_back(std::move(m));
}

const std::vector<CycMatrix>* MatGrading::component(const GrpElt& g) const {
    auto it = comps_.find(g);
    return it == comps_.end() ? nullptr : &it->second;
}

std::vector<GrpElt> MatGrading::support() const {
    std::vector<GrpElt> s;
    for (const auto& [g, _] : comps_) s.push_back(g);
    return s;
}

long MatGrading::total_dim() const {
    long d = 0;
    for (const auto& [_, basis] : comps_) d += long(basis.size());
    return d;
}

CycMatrix MatGrading::product(const CycMatrix& x, const CycMatrix& y) const {
    return product_ == ProductKind::Associative ? x * y : CycMatrix::bracket(x, y);
}

std::vector<CycMatrix> MatGrading::flat_basis() const {
    std::vector<CycMatrix> out;
    for (const auto& [_, basis] : comps_)
        for (const auto& m : basis) out.push_back(m);
    return out;
}

MatGrading trivial_grading(long n, ProductKind pk, SpanDescriptor span,
                           const std::vector<CycMatrix>& basis) {
    MatGrading g(n, pk, std::move(span), FinAbGroup::free_group(0));
    GrpElt zero = g.group().zero();
    for (const auto& m : basis) g.add_to_component(zero, m);
    return g;
}

namespace {

CycMatrix clock_matrix(long n) {
    CycMatrix x(n, n);
    for (long i = 0; i < n; ++i) x.at(i, i) = CycNum::root_of_unity(n, i);
    return x;
}

CycMatrix shift_matrix(long n) {
    CycMatrix y(n, n);
    for (long i = 0; i < n; ++i) y.at((i + 1) % n, i) = CycNum(1);
    return y;
}

CycMatrix elementary(long m, long i, long j) {
    CycMatrix e(m, m);
    e.at(i, j) = CycNum(1);
    return e;
}

FinAbGroup direct_product(const FinAbGroup& a, const FinAbGroup& b, std::vector<GrpElt>& emb_a,
                          std::vector<GrpElt>& emb_b) {
    Presentation p;
    const long na = a.coord_count(), nb = b.coord_count();
    p.num_generators = na + nb;
    auto add_torsion = [&](const FinAbGroup& g, long offset) {
        for (size_t i = 0; i < g.torsion().size(); ++i) {
            std::vector<Integer> rel(p.num_generators, Integer(0));
            rel[offset + g.free_rank() + long(i)] = g.torsion()[i];
            p.relations.push_back(std::move(rel));
        }
    };
    add_torsion(a, 0);
    add_torsion(b, na);
    FinAbGroup prod = FinAbGroup::normalize(p);
    emb_a.clear();
    emb_b.clear();
    for (long i = 0; i < na + nb; ++i) {
        std::vector<Integer> e(p.num_generators, Integer(0));
        e[i] = 1;
        (i < na ? emb_a : emb_b).push_back(prod.from_presentation(e));
    }
    return prod;
}

GrpElt apply_embedding(const std::vector<GrpElt>& emb, const FinAbGroup& target, const GrpElt& x) {
    GrpElt acc = target.zero();
    for (size_t i = 0; i < x.coords().size(); ++i) acc = acc + emb[i].times(x.coords()[i]);
    return acc;
}

}  // namespace

DivisionAlgebra division_algebra(const std::vector<long>& factors) {
    const long r = long(factors.size());
    Presentation p;
    p.num_generators = 2 * r;
    for (long t = 0; t < 2 * r; ++t) {
        std::vector<Integer> rel(p.num_generators, Integer(0));
        rel[t] = factors[t / 2];
        p.relations.push_back(std::move(rel));
    }
    FinAbGroup group = FinAbGroup::normalize(p);

    long size = 1;
    for (long f : factors) size *= f;
    DivisionAlgebra d{MatGrading(size, ProductKind::Associative, SpanDescriptor::full(), group),
                      factors,
                      {}};
    for (long t = 0; t < 2 * r; ++t) {
        std::vector<Integer> e(p.num_generators, Integer(0));
        e[t] = 1;
        d.gen_labels.push_back(group.from_presentation(e));
    }
    std::vector<long> exps(2 * r, 0);
    while (true) {
        d.grading.add_to_component(d.label(exps), d.rep(exps));
        size_t i = exps.size();
        bool done = exps.empty();
        while (i > 0) {
            --i;
            exps[i]++;
            if (exps[i] < factors[i / 2]) break;
            exps[i] = 0;
            if (i == 0) done = true;
        }
        if (done) break;
    }
    return d;
}

long DivisionAlgebra::matrix_size() const {
    long s = 1;
    for (long f : factors) s *= f;
    return s;
}

CycMatrix DivisionAlgebra::rep(const std::vector<long>& exps) const {
    CycMatrix acc = CycMatrix::identity(1);
    for (size_t t = 0; t < factors.size(); ++t) {
        CycMatrix f = CycMatrix::identity(factors[t]);
        CycMatrix x = clock_matrix(factors[t]), y = shift_matrix(factors[t]);
        for (long i = 0; i < exps[2 * t]; ++i) f = f * x;
        for (long i = 0; i < exps[2 * t + 1]; ++i) f = f * y;
        acc = acc.kron(f);
    }
    return acc;
}

GrpElt DivisionAlgebra::label(const std::vector<long>& exps) const {
    GrpElt acc = grading.group().zero();
    for (size_t i = 0; i < gen_labels.size(); ++i) acc = acc + gen_labels[i].times(exps[i]);
    return acc;
}

std::vector<long> DivisionAlgebra::exponents(const GrpElt& h) const {
    std::vector<long> exps(2 * factors.size(), 0);
    while (true) {
        if (label(exps) == h) return exps;
        size_t i = exps.size();
        bool done = exps.empty();
        while (i > 0) {
            --i;
            exps[i]++;
            if (exps[i] < factors[i / 2]) break;
            exps[i] = 0;
            if (i == 0) done = true;
        }
        if (done) break;
    }
    throw std::runtime_error("DivisionAlgebra::exponents: label not in support");
}

MatGrading pauli_grading(long n) {
    if (n < 1) throw std::runtime_error("pauli_grading: n must be positive");
    if (n == 1)
        return trivial_grading(1, ProductKind::Associative, SpanDescriptor::full(),
                               {CycMatrix::identity(1)});
    return division_algebra({n}).grading;
}

MatGrading tensor_grading(const MatGrading& a, const MatGrading& b) {
    if (a.product_kind() != ProductKind::Associative || b.product_kind() != ProductKind::Associative)
        throw std::runtime_error("tensor_grading: inputs must be associative gradings");
    std::vector<GrpElt> emb_a, emb_b;
    FinAbGroup prod = direct_product(a.group(), b.group(), emb_a, emb_b);
    MatGrading out(a.n() * b.n(), ProductKind::Associative, SpanDescriptor::full(), prod);
    for (const auto& [g, ba] : a.components())
        for (const auto& [h, bb] : b.components()) {
            GrpElt label = apply_embedding(emb_a, prod, g) + apply_embedding(emb_b, prod, h);
            for (const auto& x : ba)
                for (const auto& y : bb) out.add_to_component(label, x.kron(y));
        }
    return out;
}

MatGrading cartan_grading(long m) {
    if (m < 1) throw std::runtime_error("cartan_grading: m must be positive");
    FinAbGroup z = FinAbGroup::free_group(m - 1);
    MatGrading out(m, ProductKind::Associative, SpanDescriptor::full(), z);
    auto deg = [&](long i) {  // degree of v_i
        std::vector<Integer> c(m - 1, Integer(0));
        if (i > 0) c[i - 1] = 1;
        return z.element(std::move(c));
    };
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < m; ++j) out.add_to_component(deg(i) - deg(j), elementary(m, i, j));
    return out;
}

MatGrading induced_grading(const DivisionAlgebra& division, const std::vector<GrpElt>& degrees) {
    if (!is_graded_division(division.grading))
        throw std::runtime_error("induced_grading: not a graded division algebra");
    if (degrees.empty()) throw std::runtime_error("induced_grading: empty degree list");
    const FinAbGroup& ambient = degrees[0].owner();
    std::vector<GrpElt> emb_a, emb_d;
    FinAbGroup prod = direct_product(ambient, division.grading.group(), emb_a, emb_d);
    const long m = long(degrees.size());
    MatGrading out(m * division.matrix_size(), ProductKind::Associative, SpanDescriptor::full(), prod);
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < m; ++j)
            for (const auto& [h, basis] : division.grading.components()) {
                GrpElt label = apply_embedding(emb_a, prod, degrees[i] - degrees[j]) +
                               apply_embedding(emb_d, prod, h);
                for (const auto& d : basis) out.add_to_component(label, elementary(m, i, j).kron(d));
            }
    return out;
}

std::vector<GradingViolation> verify_grading(const MatGrading& g) {
    std::vector<GradingViolation> out;
    const long n = g.n();
    Echelon all(n * n);
    for (const auto& [lab, basis] : g.components()) {
        for (size_t i = 0; i < basis.size(); ++i) {
            if (!g.span().member(basis[i]))
                out.push_back({"basis vector " + std::to_string(i) + " at " + lab.str() +
                               " outside the declared span"});
            if (!all.add(basis[i].vec()))
                out.push_back({"basis vector " + std::to_string(i) + " at " + lab.str() +
                               " linearly dependent"});
        }
    }
    if (long(all.rank()) != g.span().expected_dim(n))
        out.push_back({"components span dimension " + std::to_string(all.rank()) + ", expected " +
                       std::to_string(g.span().expected_dim(n))});

    std::map<GrpElt, Echelon> echs;
    for (const auto& [lab, basis] : g.components()) {
        Echelon e(n * n);
        for (const auto& m : basis) e.add(m.vec());
        echs.emplace(lab, std::move(e));
    }
    for (const auto& [ga, ba] : g.components())
        for (const auto& [gb, bb] : g.components()) {
            GrpElt sum = ga + gb;
            auto it = echs.find(sum);
            bool bad = false;
            for (size_t i = 0; i < ba.size() && !bad; ++i)
                for (size_t j = 0; j < bb.size() && !bad; ++j) {
                    CycMatrix p = g.product(ba[i], bb[j]);
                    if (p.is_zero()) continue;
                    if (it == echs.end()) {
                        out.push_back({"product (" + ga.str() + ", " + gb.str() +
                                       ") nonzero but label sum " + sum.str() + " unsupported"});
                        bad = true;
                    } else if (!it->second.contains(p.vec())) {
                        out.push_back({"closure violated at (" + ga.str() + ", " + gb.str() +
                                       ") witnesses " + std::to_string(i) + "," +
                                       std::to_string(j)});
                        bad = true;
                    }
                }
        }
    return out;
}

std::vector<long> type_of(const MatGrading& g) {
    std::vector<long> t;
    for (const auto& [_, basis] : g.components()) {
        size_t d = basis.size();
        if (t.size() < d) t.resize(d, 0);
        t[d - 1]++;
    }
    return t;
}

std::string type_str(const std::vector<long>& type) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < type.size(); ++i) {
        if (i) os << ",";
        os << type[i];
    }
    os << ")";
    return os.str();
}

bool is_graded_division(const MatGrading& g) {
    if (g.product_kind() != ProductKind::Associative) return false;
    for (const auto& [_, basis] : g.components()) {
        if (basis.size() != 1) return false;
        if (!basis[0].is_invertible()) return false;
    }
    auto supp = g.support();
    std::set<GrpElt> s(supp.begin(), supp.end());
    if (!s.count(g.group().zero())) return false;
    for (const auto& a : supp)
        for (const auto& b : supp)
            if (!s.count(a + b)) return false;
    return true;
}

AlgebraOperator AlgebraOperator::conjugation(const CycMatrix& p) {
    AlgebraOperator op;
    op.is_conj_ = true;
    op.p_ = p;
    op.pinv_ = p.inverse();
    return op;
}

AlgebraOperator AlgebraOperator::linear_on_basis(std::vector<CycMatrix> basis, CycMatrix coord) {
    if (basis.empty() || coord.rows() != basis.size() || coord.cols() != basis.size())
        throw std::runtime_error("AlgebraOperator: coordinate matrix shape mismatch");
    AlgebraOperator op;
    op.is_conj_ = false;
    op.basis_ = std::move(basis);
    op.coord_ = std::move(coord);
    op.basis_ech_ = Echelon(op.basis_[0].rows() * op.basis_[0].cols());
    for (const auto& b : op.basis_)
        if (!op.basis_ech_.add(b.vec())) throw std::runtime_error("AlgebraOperator: dependent basis");
    return op;
}

CycMatrix AlgebraOperator::apply(const CycMatrix& x) const {
    if (is_conj_) return p_ * x * pinv_;
    auto coords = basis_ech_.coordinates(x.vec());
    if (!coords) throw std::runtime_error("AlgebraOperator: element outside the operator domain");
    const size_t d = basis_.size();
    CycMatrix out(x.rows(), x.cols());
    for (size_t i = 0; i < d; ++i) {
        CycNum c;
        for (size_t j = 0; j < d; ++j) {
            if ((*coords)[j].is_zero() || coord_.at(i, j).is_zero()) continue;
            c += coord_.at(i, j) * (*coords)[j];
        }
        if (!c.is_zero()) out = out + basis_[i].scaled(c);
    }
    return out;
}

namespace {

long operator_order(const AlgebraOperator& op, const std::vector<CycMatrix>& basis, long bound) {
    std::vector<CycMatrix> cur = basis;
    for (long m = 1; m <= bound; ++m) {
        bool ident = true;
        for (size_t i = 0; i < basis.size(); ++i) {
            cur[i] = op.apply(cur[i]);
            if (cur[i] != basis[i]) ident = false;
        }
        if (ident) return m;
    }
    throw std::runtime_error("operator order exceeds bound");
}

using Parts = std::vector<std::pair<std::vector<long>, std::vector<CycMatrix>>>;

// split each part into eigenspaces of `restrict_fn` applied within the part,
// with eigenvalues drawn from `eigenvalues`; labels extend by the list index
template <typename Apply>
Parts split_parts(const Parts& parts, long n, Apply&& apply,
                  const std::vector<std::pair<long, CycNum>>& eigenvalues, const char* who) {
    Parts next;
    const size_t w = size_t(n) * size_t(n);
    for (const auto& [ks, sub] : parts) {
        Echelon ech(w);
        for (const auto& b : sub) ech.add(b.vec());
        const size_t d = sub.size();
        CycMatrix restr(d, d);
        for (size_t j = 0; j < d; ++j) {
            auto c = ech.coordinates(apply(sub[j]).vec());
            if (!c) throw std::runtime_error(std::string(who) + " does not preserve a homogeneous component");
            for (size_t i = 0; i < d; ++i) restr.at(i, j) = (*c)[i];
        }
        size_t found = 0;
        for (const auto& [k, zeta] : eigenvalues) {
            CycMatrix shifted = restr - CycMatrix::identity(d).scaled(zeta);
            auto null = nullspace(shifted);
            if (null.empty()) continue;
            std::vector<CycMatrix> eig;
            for (const auto& y : null) {
                CycMatrix v(n, n);
                for (size_t j = 0; j < d; ++j)
                    if (!y[j].is_zero()) v = v + sub[j].scaled(y[j]);
                eig.push_back(v);
            }
            found += eig.size();
            auto nk = ks;
            nk.push_back(k);
            next.push_back({std::move(nk), std::move(eig)});
        }
        if (found != d)
            throw std::runtime_error(std::string(who) + " is not diagonalizable with the expected eigenvalues");
    }
    return next;
}

MatGrading assemble_refined(const MatGrading& g, long extra_gens,
                            const std::vector<long>& extra_orders,
                            const std::map<GrpElt, Parts>& split) {
    Presentation p;
    const long ng = g.group().coord_count();
    p.num_generators = ng + extra_gens;
    for (size_t i = 0; i < g.group().torsion().size(); ++i) {
        std::vector<Integer> rel(p.num_generators, Integer(0));
        rel[g.group().free_rank() + long(i)] = g.group().torsion()[i];
        p.relations.push_back(std::move(rel));
    }
    for (long t = 0; t < extra_gens; ++t) {
        if (extra_orders[t] == 0) continue;  // infinite order: free generator
        std::vector<Integer> rel(p.num_generators, Integer(0));
        rel[ng + t] = extra_orders[t];
        p.relations.push_back(std::move(rel));
    }
    FinAbGroup big = FinAbGroup::normalize(p);
    MatGrading out(g.n(), g.product_kind(), g.span(), big);
    for (const auto& [lab, parts] : split)
        for (const auto& [ks, sub] : parts) {
            std::vector<Integer> e(p.num_generators, Integer(0));
            for (long i = 0; i < ng; ++i) e[i] = lab.coords()[i];
            for (size_t t = 0; t < ks.size(); ++t) e[ng + long(t)] = ks[t];
            GrpElt nl = big.from_presentation(e);
            for (const auto& m : sub) out.add_to_component(nl, m);
        }
    return out;
}

}  // namespace

MatGrading refine_by_operators(const MatGrading& g, const std::vector<AlgebraOperator>& ops,
                               long order_bound) {
    std::vector<CycMatrix> basis = g.flat_basis();
    for (size_t s = 0; s < ops.size(); ++s)
        for (size_t t = s + 1; t < ops.size(); ++t)
            for (const auto& b : basis)
                if (ops[s].apply(ops[t].apply(b)) != ops[t].apply(ops[s].apply(b)))
                    throw std::runtime_error("operators " + std::to_string(s) + " and " +
                                             std::to_string(t) + " do not commute");
    for (size_t s = 0; s < ops.size(); ++s)
        for (size_t i = 0; i < basis.size(); ++i)
            for (size_t j = 0; j < basis.size(); ++j)
                if (ops[s].apply(g.product(basis[i], basis[j])) !=
                    g.product(ops[s].apply(basis[i]), ops[s].apply(basis[j])))
                    throw std::runtime_error("operator " + std::to_string(s) +
                                             " does not preserve the product");
    std::vector<long> orders;
    for (const auto& op : ops) orders.push_back(operator_order(op, basis, order_bound));

    std::map<GrpElt, Parts> split;
    for (const auto& [lab, cbasis] : g.components()) {
        Parts parts{{{}, cbasis}};
        for (size_t t = 0; t < ops.size(); ++t) {
            std::vector<std::pair<long, CycNum>> eigs;
            for (long k = 0; k < orders[t]; ++k) eigs.push_back({k, CycNum::root_of_unity(orders[t], k)});
            parts = split_parts(parts, g.n(), [&](const CycMatrix& x) { return ops[t].apply(x); },
                                eigs, ("operator " + std::to_string(t)).c_str());
        }
        split.emplace(lab, std::move(parts));
    }
    return assemble_refined(g, long(ops.size()), orders, split);
}

MatGrading grade_by_automorphisms(long n, ProductKind pk, SpanDescriptor span,
                                  const std::vector<CycMatrix>& space_basis,
                                  const std::vector<AlgebraOperator>& ops, long order_bound) {
    return refine_by_operators(trivial_grading(n, pk, std::move(span), space_basis), ops, order_bound);
}

MatGrading refine_by_semisimple(const MatGrading& g, const std::vector<CycMatrix>& elems,
                                long eigen_bound) {
    for (size_t s = 0; s < elems.size(); ++s)
        for (size_t t = s + 1; t < elems.size(); ++t)
            if (!CycMatrix::bracket(elems[s], elems[t]).is_zero())
                throw std::runtime_error("semisimple elements " + std::to_string(s) + " and " +
                                         std::to_string(t) + " do not commute");
    std::map<GrpElt, Parts> split;
    for (const auto& [lab, cbasis] : g.components()) {
        Parts parts{{{}, cbasis}};
        for (size_t t = 0; t < elems.size(); ++t) {
            std::vector<std::pair<long, CycNum>> eigs;
            for (long k = -eigen_bound; k <= eigen_bound; ++k) eigs.push_back({k, CycNum(k)});
            parts = split_parts(parts, g.n(),
                                [&](const CycMatrix& x) { return CycMatrix::bracket(elems[t], x); },
                                eigs, "the ad-action (integer eigenvalues expected)");
        }
        split.emplace(lab, std::move(parts));
    }
    return assemble_refined(g, long(elems.size()), std::vector<long>(elems.size(), 0), split);
}

MatGrading grade_by_semisimple_elements(long n, SpanDescriptor span,
                                        const std::vector<CycMatrix>& space_basis,
                                        const std::vector<CycMatrix>& elems, long eigen_bound) {
    return refine_by_semisimple(
        trivial_grading(n, ProductKind::LieBracket, std::move(span), space_basis), elems, eigen_bound);
}

UniversalResult universal_group_of(const MatGrading& g) {
    std::vector<GrpElt> supp = g.support();
    std::map<GrpElt, long> index;
    for (size_t i = 0; i < supp.size(); ++i) index.emplace(supp[i], long(i));

    Presentation p;
    p.num_generators = long(supp.size());
    for (const auto& [ga, ba] : g.components())
        for (const auto& [gb, bb] : g.components()) {
            bool nonzero = false;
            for (const auto& x : ba) {
                for (const auto& y : bb)
                    if (!g.product(x, y).is_zero()) {
                        nonzero = true;
                        break;
                    }
                if (nonzero) break;
            }
            if (!nonzero) continue;
            GrpElt sum = ga + gb;
            auto it = index.find(sum);
            if (it == index.end())
                throw std::runtime_error("universal_group_of: nonzero product outside the support");
            std::vector<Integer> rel(p.num_generators, Integer(0));
            rel[index[ga]] += 1;
            rel[index[gb]] += 1;
            rel[it->second] -= 1;
            p.relations.push_back(std::move(rel));
        }
    FinAbGroup uni = FinAbGroup::normalize(p);

    MatGrading out(g.n(), g.product_kind(), g.span(), uni);
    std::map<GrpElt, GrpElt> seen;  // new label -> old label
    for (const auto& [lab, basis] : g.components()) {
        std::vector<Integer> e(p.num_generators, Integer(0));
        e[index[lab]] = 1;
        GrpElt nl = uni.from_presentation(e);
        if (seen.count(nl)) throw std::runtime_error("grading not realizable over universal group");
        seen.emplace(nl, lab);
        for (const auto& m : basis) out.add_to_component(nl, m);
    }
    return {uni, std::move(out)};
}

}  // namespace fgr
