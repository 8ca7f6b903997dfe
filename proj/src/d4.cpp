#include "finegrading/d4.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fgr {

std::vector<CycMatrix> d4_roots() {
    std::vector<CycMatrix> roots;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int si : {1, -1})
                for (int sj : {1, -1}) {
                    CycMatrix r(4, 1);
                    r.at(i, 0) = CycNum(si);
                    r.at(j, 0) = CycNum(sj);
                    roots.push_back(r);
                }
    return roots;
}

namespace {

CycNum dot(const CycMatrix& a, const CycMatrix& b) {
    CycNum acc;
    for (int i = 0; i < 4; ++i) acc += a.at(i, 0) * b.at(i, 0);
    return acc;
}

// reflection along a root: x -> x - (x|a) a   (roots have (a|a) = 2)
CycMatrix reflection(const CycMatrix& a) {
    CycMatrix m = CycMatrix::identity(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m.at(i, j) -= a.at(i, 0) * a.at(j, 0);
    return m;
}

bool permutes_roots(const CycMatrix& m) {
    static const std::vector<CycMatrix> roots = d4_roots();
    std::set<std::vector<CycNum>> root_set;
    for (const auto& r : roots) root_set.insert(r.vec());
    for (const auto& r : roots)
        if (!root_set.count((m * r).vec())) return false;
    return true;
}

std::vector<CycMatrix> closure(std::vector<CycMatrix> gens) {
    std::set<std::vector<CycNum>> seen;
    std::queue<CycMatrix> work;
    CycMatrix id = CycMatrix::identity(4);
    seen.insert(id.vec());
    work.push(id);
    std::vector<CycMatrix> out{id};
    while (!work.empty()) {
        CycMatrix cur = work.front();
        work.pop();
        for (const auto& g : gens) {
            CycMatrix nxt = g * cur;
            if (seen.insert(nxt.vec()).second) {
                out.push_back(nxt);
                work.push(nxt);
            }
        }
    }
    return out;
}

}  // namespace

CycMatrix theta_weight_matrix() {
    CycMatrix m(4, 4);
    Rational half(1, 2);
    // columns: images of eps_0..eps_3 under theta
    long sign[4][4] = {{-1, -1, -1, -1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
    for (int col = 0; col < 4; ++col)
        for (int row = 0; row < 4; ++row) m.at(row, col) = CycNum(Rational(sign[col][row]) * half);
    return m;
}

CycMatrix iota_tau_weight_matrix() {
    CycMatrix m(4, 4);
    m.at(0, 0) = CycNum(1);
    m.at(2, 1) = CycNum(1);  // eps_1 -> eps_2
    m.at(3, 2) = CycNum(1);  // eps_2 -> eps_3
    m.at(1, 3) = CycNum(1);  // eps_3 -> eps_1
    return m;
}

const AutPhi& autphi_group() {
    static AutPhi g = [] {
        AutPhi out;
        std::vector<CycMatrix> refl;
        auto roots = d4_roots();
        std::set<std::vector<CycNum>> distinct;
        for (const auto& r : roots) {
            CycMatrix s = reflection(r);
            if (distinct.insert(s.vec()).second) refl.push_back(s);
        }
        out.weyl = closure(refl);
        // diagram automorphisms: iota_sigma = diag(-1,1,1,1) and theta
        CycMatrix iota_sigma = CycMatrix::identity(4);
        iota_sigma.at(0, 0) = CycNum(-1);
        auto gens = refl;
        gens.push_back(iota_sigma);
        gens.push_back(theta_weight_matrix());
        out.full = closure(gens);
        for (const auto& m : out.full)
            if (!permutes_roots(m)) throw std::runtime_error("autphi_group: element leaves Phi");
        return out;
    }();
    return g;
}

long element_order(const CycMatrix& m, long bound) {
    CycMatrix id = CycMatrix::identity(m.rows());
    CycMatrix p = m;
    for (long k = 1; k <= bound; ++k) {
        if (p == id) return k;
        p = p * m;
    }
    throw std::runtime_error("element_order: bound exceeded");
}

std::vector<std::vector<size_t>> order3_classes() {
    const AutPhi& g = autphi_group();
    std::vector<size_t> elems3;
    for (size_t i = 0; i < g.full.size(); ++i)
        if (element_order(g.full[i]) == 3) elems3.push_back(i);
    std::vector<std::vector<size_t>> classes;
    std::set<size_t> assigned;
    for (size_t i : elems3) {
        if (assigned.count(i)) continue;
        std::vector<size_t> cls;
        std::set<std::vector<CycNum>> orbit;
        for (const auto& h : g.full) {
            CycMatrix conj = h * g.full[i] * h.inverse();
            orbit.insert(conj.vec());
        }
        for (size_t j : elems3)
            if (orbit.count(g.full[j].vec())) {
                cls.push_back(j);
                assigned.insert(j);
            }
        classes.push_back(std::move(cls));
    }
    return classes;
}

namespace {

// partition the 12 root lines into 3 groups of 4 pairwise-orthogonal lines
void partition_search(const std::vector<CycMatrix>& lines, std::vector<int>& assign, int next_group,
                      long& count) {
    size_t first = lines.size();
    for (size_t i = 0; i < lines.size(); ++i)
        if (assign[i] < 0) {
            first = i;
            break;
        }
    if (first == lines.size()) {
        ++count;
        return;
    }
    for (int grp = 0; grp <= std::min(next_group, 2); ++grp) {
        // the unassigned line joins group grp if orthogonal to all its members
        bool ok = true;
        int members = 0;
        for (size_t j = 0; j < lines.size() && ok; ++j) {
            if (assign[j] != grp) continue;
            ++members;
            if (!dot(lines[first], lines[j]).is_zero()) ok = false;
        }
        if (!ok || members >= 4) continue;
        assign[first] = grp;
        partition_search(lines, assign, grp == next_group ? next_group + 1 : next_group, count);
        assign[first] = -1;
    }
}

}  // namespace

long phi_partition_count() {
    auto roots = d4_roots();
    std::vector<CycMatrix> lines;
    std::set<std::vector<CycNum>> seen;
    for (const auto& r : roots) {
        if (seen.count(r.vec()) || seen.count((-r).vec())) continue;
        seen.insert(r.vec());
        lines.push_back(r);
    }
    std::vector<int> assign(lines.size(), -1);
    long count = 0;
    partition_search(lines, assign, 0, count);
    return count;
}

bool phi_partition_stated_valid() {
    // Phi_i = {+-eps_0 +- eps_i, +-eps_{i'} +- eps_{i''}}
    auto mk = [](int a, int b) {
        std::vector<CycMatrix> v;
        for (int sa : {1, -1})
            for (int sb : {1, -1}) {
                CycMatrix r(4, 1);
                r.at(a, 0) = CycNum(sa);
                r.at(b, 0) = CycNum(sb);
                v.push_back(r);
            }
        return v;
    };
    for (int i = 1; i <= 3; ++i) {
        int i2 = (i % 3) + 1, i3 = ((i + 1) % 3) + 1;
        std::vector<CycMatrix> block = mk(0, i);
        for (auto& r : mk(i2, i3)) block.push_back(r);
        if (block.size() != 8) return false;
        for (size_t a = 0; a < block.size(); ++a)
            for (size_t b = 0; b < block.size(); ++b) {
                bool prop = block[a] == block[b] || block[a] == -block[b];
                if (!prop && !dot(block[a], block[b]).is_zero()) return false;
            }
    }
    return true;
}

namespace {

SpanDescriptor so8_span() { return SpanDescriptor::skew(oct_polar_matrix()); }

AlgebraOperator theta_operator() {
    return AlgebraOperator::linear_on_basis(so8_basis(), theta_matrix());
}

// grading (a): the weight decomposition for {h1-h2, h2-h3} refined by theta
LieGrading triality_grading_a() {
    auto h = cartan_h();
    auto base = grade_by_semisimple_elements(8, so8_span(), so8_basis(),
                                             {h[1] - h[2], h[2] - h[3]}, 4);
    auto refined = refine_by_operators(base, {theta_operator()}, 6);
    return universal_group_of(refined).relabeled;
}

// grading (b): iota of a commuting order-2 automorphism triple of C plus theta
LieGrading triality_grading_b() {
    // candidate involutive automorphisms: diagonal with beta_0 = 1,
    // beta_i = +-1, beta_1 beta_2 beta_3 = 1, plus the exchange composites
    std::vector<CycMatrix> cands;
    for (int b1 : {1, -1})
        for (int b2 : {1, -1}) {
            int b3 = b1 * b2;
            std::vector<CycNum> d = {CycNum(1),  CycNum(1),  CycNum(b1), CycNum(b2),
                                     CycNum(b3), CycNum(b1), CycNum(b2), CycNum(b3)};
            CycMatrix f = CycMatrix::diagonal(d);
            cands.push_back(f);
            cands.push_back(octonion_exchange() * f);
        }
    std::vector<CycMatrix> good;
    CycMatrix id8 = CycMatrix::identity(8);
    for (const auto& f : cands) {
        if (f == id8) continue;
        if (!is_octonion_automorphism(f) || f * f != id8) continue;
        good.push_back(f);
    }
    // first commuting triple generating an 8-element group
    for (size_t a = 0; a < good.size(); ++a)
        for (size_t b = a + 1; b < good.size(); ++b) {
            if (good[a] * good[b] != good[b] * good[a]) continue;
            for (size_t c = b + 1; c < good.size(); ++c) {
                if (good[a] * good[c] != good[c] * good[a] ||
                    good[b] * good[c] != good[c] * good[b])
                    continue;
                std::set<std::vector<CycNum>> grp;
                for (int ea : {0, 1})
                    for (int eb : {0, 1})
                        for (int ec : {0, 1}) {
                            CycMatrix g = id8;
                            if (ea) g = g * good[a];
                            if (eb) g = g * good[b];
                            if (ec) g = g * good[c];
                            grp.insert(g.vec());
                        }
                if (grp.size() != 8) continue;
                auto lie = grade_by_automorphisms(
                    8, ProductKind::LieBracket, so8_span(), so8_basis(),
                    {AlgebraOperator::conjugation(good[a]), AlgebraOperator::conjugation(good[b]),
                     AlgebraOperator::conjugation(good[c]), theta_operator()},
                    6);
                return universal_group_of(lie).relabeled;
            }
        }
    throw std::runtime_error("triality grading (b): no commuting triple found");
}

// grading (c): theta_tau for the order-3 permutation tau, together with two
// independent elements of its finite centralizer torus T^(theta_tau) (the
// mu_3-diagonal elements; the constraints force beta_0^3 = beta_1^3 = 1,
// beta_2 = beta_0 beta_1, beta_3 = beta_0 beta_2, nine elements in all)
LieGrading triality_grading_c() {
    CycMatrix tau = octonion_tau();
    CycMatrix theta_c_coord = so_conjugation_matrix(tau) * theta_matrix();
    auto theta_c = AlgebraOperator::linear_on_basis(so8_basis(), theta_c_coord);

    CycNum w = CycNum::root_of_unity(3, 1);
    std::vector<CycMatrix> torus;      // centralizing mu_3 torus elements
    std::vector<CycMatrix> torus_conj; // their so-coordinate actions
    for (int e0 = 0; e0 < 3; ++e0)
        for (int e1 = 0; e1 < 3; ++e1)
            for (int e2 = 0; e2 < 3; ++e2)
                for (int e3 = 0; e3 < 3; ++e3) {
                    if (e0 == 0 && e1 == 0 && e2 == 0 && e3 == 0) continue;
                    std::vector<CycNum> d = {w.pow(e0),     w.pow(3 - e0), w.pow(e1),
                                             w.pow(e2),     w.pow(e3),     w.pow(3 - e1),
                                             w.pow(3 - e2), w.pow(3 - e3)};
                    CycMatrix f = CycMatrix::diagonal(d);
                    CycMatrix fc = so_conjugation_matrix(f);
                    if (fc * theta_c_coord != theta_c_coord * fc) continue;
                    torus.push_back(f);
                    torus_conj.push_back(fc);
                }
    // first independent pair generates the full nine-element group
    for (size_t a = 0; a < torus.size(); ++a)
        for (size_t b = a + 1; b < torus.size(); ++b) {
            const CycMatrix& ac = torus_conj[a];
            const CycMatrix& bc = torus_conj[b];
            if (bc == ac || bc == ac * ac || bc == CycMatrix::identity(28)) continue;
            auto lie = grade_by_automorphisms(8, ProductKind::LieBracket, so8_span(), so8_basis(),
                                              {theta_c, AlgebraOperator::conjugation(torus[a]),
                                               AlgebraOperator::conjugation(torus[b])},
                                              6);
            auto uni = universal_group_of(lie);
            if (uni.group.isomorphic_to(FinAbGroup::torsion_group({3, 3, 3})))
                return std::move(uni.relabeled);
        }
    throw std::runtime_error("triality grading (c): no Z_3^3 joint eigenstructure found");
}

}  // namespace

std::vector<LieGrading> build_triality_gradings() {
    return {triality_grading_a(), triality_grading_b(), triality_grading_c()};
}

std::vector<D4Row> d4_table() {
    auto matrix_rows = fine_gradings_so(8, {}, /*pre_merge=*/true);
    // merge the two Z_2^3 x Z_4 classes of type (24,2) (they are conjugate
    // under triality, though not under Aut(R,*))
    FinAbGroup z234 = FinAbGroup::torsion_group({2, 2, 2, 4});
    std::vector<long> t242{24, 2};
    std::vector<size_t> merge_idx;
    for (size_t i = 0; i < matrix_rows.size(); ++i)
        if (matrix_rows[i].report.universal_group.isomorphic_to(z234) &&
            matrix_rows[i].report.type == t242)
            merge_idx.push_back(i);
    if (merge_idx.size() != 2)
        throw std::runtime_error("d4_table: expected exactly two mergeable (24,2) classes");

    std::vector<D4Row> rows;
    for (size_t i = 0; i < matrix_rows.size(); ++i) {
        if (i == merge_idx[1]) continue;  // collapsed into the first
        D4Row r;
        r.group = matrix_rows[i].report.universal_group;
        r.type = matrix_rows[i].report.type;
        if (i == merge_idx[0])
            r.provenance = "merged: " + matrix_rows[merge_idx[0]].report.provenance + " = " +
                           matrix_rows[merge_idx[1]].report.provenance;
        else
            r.provenance = matrix_rows[i].report.provenance;
        rows.push_back(std::move(r));
    }
    auto triality = build_triality_gradings();
    const char* names[3] = {"triality-a", "triality-b", "triality-c"};
    for (int i = 0; i < 3; ++i) {
        D4Row r;
        r.group = triality[i].group();
        r.type = type_of(triality[i]);
        r.provenance = names[i];
        rows.push_back(std::move(r));
    }
    for (size_t i = 0; i < rows.size(); ++i) rows[i].index = int(i + 1);
    return rows;
}

}  // namespace fgr
