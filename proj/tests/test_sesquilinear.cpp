#include <random>

#include "doctest.h"
#include "finegrading/sesquilinear.hpp"

using namespace fgr;

namespace {

FormSpec f_spec(long p, long s, std::vector<CycNum> nus = {}) {
    FormSpec spec{division_algebra({}), GradedInvolution::identity_on_F(), {}, std::move(nus), {}};
    auto zero = spec.division.grading.group().zero();
    for (long i = 0; i < p; ++i) spec.d_labels.push_back(zero);
    while (long(spec.nus.size()) < s) spec.nus.push_back(CycNum(1));
    return spec;
}

FormSpec q_spec(std::vector<std::vector<long>> dexps, long s, GradedInvolution::Kind kind) {
    auto d = division_algebra({2});
    FormSpec spec{d, GradedInvolution::reference(d, kind), {}, {}, {}};
    for (auto& e : dexps) spec.d_labels.push_back(d.label(e));
    for (long j = 0; j < s; ++j) spec.nus.push_back(CycNum(1));
    return spec;
}

CycMatrix basis_column(const FormSpec& spec, long i) {
    const long rank = spec.rank(), r = spec.division.matrix_size();
    CycMatrix x(rank * r, r);
    for (long u = 0; u < r; ++u) x.at(i * r + u, u) = CycNum(1);
    return x;
}

CycMatrix gamma_matrix(const FormSpec& spec, const PhiOperator& phi) {
    const long r = spec.division.matrix_size();
    CycMatrix g(spec.matrix_size(), spec.matrix_size());
    for (long i = 0; i < spec.rank(); ++i)
        for (long u = 0; u < r; ++u) g.at(i * r + u, i * r + u) = phi.gamma_diag[i];
    return g;
}

CycMatrix random_exact(std::mt19937& rng, long n) {
    std::uniform_int_distribution<int> v(-3, 3);
    CycMatrix m(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) m.at(i, j) = CycNum(v(rng));
    return m;
}

}  // namespace

TEST_CASE("build_phi: identity form is the transpose") {
    auto spec = f_spec(3, 0);
    auto phi = build_phi(spec);
    CHECK(phi.order == 2);
    std::mt19937 rng(3);
    CycMatrix a = random_exact(rng, 3);
    CHECK(phi.apply(a) == a.transpose());
}

TEST_CASE("build_phi: the counterexample spec has order 4") {
    // D = Q, tau_o, Delta = diag(1, q1, q2, q3): eps = tau_o signs (+,+,+,-),
    // mixed signs force phi^2 != id
    auto spec = q_spec({{0, 0}, {1, 0}, {0, 1}, {1, 1}}, 0, GradedInvolution::Kind::Orthogonal);
    auto phi = build_phi(spec);
    CHECK(phi.gamma_diag[0] == CycNum(1));
    CHECK(phi.gamma_diag[1] == CycNum(1));
    CHECK(phi.gamma_diag[2] == CycNum(1));
    CHECK(phi.gamma_diag[3] == CycNum(-1));
    CHECK(phi.order == 4);
    // phi^4 = id, phi^2 != id
    std::mt19937 rng(5);
    CycMatrix a = random_exact(rng, 8);
    CycMatrix p2 = phi.apply(phi.apply(a));
    CHECK(phi.apply(phi.apply(p2)) == a);
}

TEST_CASE("build_phi: skew form gives the symplectic involution on Mat_2") {
    auto spec = f_spec(0, 1, {CycNum::root_of_unity(4, 1)});
    auto phi = build_phi(spec);
    CHECK(phi.order == 2);
    // the -1 eigenspace of an involution x -> phi(x) on Mat_2 has dim 3 iff symplectic
    long skew_dim = 0;
    for (long i = 0; i < 2; ++i)
        for (long j = 0; j < 2; ++j) {
            CycMatrix e(2, 2);
            e.at(i, j) = CycNum(1);
            CycMatrix minus = e - phi.apply(e);
            if (!minus.is_zero()) ++skew_dim;  // e - phi(e) spans skew part
        }
    // count dim of the -1 eigenspace via x - phi(x) images: rank of the span
    Echelon ech(4);
    long dim = 0;
    for (long i = 0; i < 2; ++i)
        for (long j = 0; j < 2; ++j) {
            CycMatrix e(2, 2);
            e.at(i, j) = CycNum(1);
            if (ech.add((e - phi.apply(e)).vec())) ++dim;
        }
    CHECK(dim == 3);
}

TEST_CASE("phi^2 equals conjugation by Gamma") {
    std::mt19937 rng(11);
    std::vector<FormSpec> specs = {
        f_spec(2, 1),
        f_spec(0, 2, {CycNum(1), CycNum::root_of_unity(4, 1)}),
        q_spec({{0, 0}, {1, 0}}, 1, GradedInvolution::Kind::Orthogonal),
        q_spec({{0, 0}, {1, 1}}, 0, GradedInvolution::Kind::Orthogonal),
    };
    for (const auto& spec : specs) {
        auto phi = build_phi(spec);
        CycMatrix g = gamma_matrix(spec, phi);
        for (int it = 0; it < 10; ++it) {
            CycMatrix a = random_exact(rng, spec.matrix_size());
            CHECK(phi.apply(phi.apply(a)) == g * a * g.inverse());
        }
    }
}

TEST_CASE("adjoint identity B(r x, y) = B(x, phi(r) y)") {
    std::mt19937 rng(13);
    auto spec = q_spec({{0, 0}, {1, 0}}, 1, GradedInvolution::Kind::Orthogonal);
    auto phi = build_phi(spec);
    const long n = spec.matrix_size();
    for (int it = 0; it < 20; ++it) {
        CycMatrix r = random_exact(rng, n);
        for (long i = 0; i < spec.rank(); ++i)
            for (long j = 0; j < spec.rank(); ++j) {
                CycMatrix x = basis_column(spec, i), y = basis_column(spec, j);
                CHECK(form_value(spec, phi, r * x, y) == form_value(spec, phi, x, phi.apply(r) * y));
            }
    }
}

TEST_CASE("is_phi_grading") {
    // hermitian case: all nu = 1 and all d_i symmetric
    CHECK(is_phi_grading(q_spec({{0, 0}, {1, 0}}, 1, GradedInvolution::Kind::Orthogonal)));
    // the refined-degree spec of any FormSpec is a phi-grading
    CHECK(is_phi_grading(q_spec({{0, 0}, {1, 0}, {0, 1}, {1, 1}}, 0, GradedInvolution::Kind::Orthogonal)));
    CHECK(is_phi_grading(f_spec(0, 2, {CycNum(1), CycNum::root_of_unity(4, 1)})));

    // deliberately mixed spec over D = F with colliding explicit degrees
    auto bad = f_spec(0, 2, {CycNum(1), CycNum::root_of_unity(4, 1)});
    DegreeAssignment da;
    da.ambient = FinAbGroup::free_group(1);
    auto one = da.ambient.generator(0);
    da.degrees = {one, -one, one, -one};
    da.h_images = {};
    bad.degrees = da;
    CHECK(!is_phi_grading(bad));
}

TEST_CASE("refined grading: groups and component dimensions") {
    // D = F, p = 0, s = 2: a Z^2 Cartan-type grading of Mat_4
    auto rg = refined_grading(f_spec(0, 2));
    CHECK(rg.grading.group().free_rank() == 2);
    CHECK(verify_grading(rg.grading).empty());
    auto uni = universal_group_of(rg.grading);
    CHECK(uni.group.isomorphic_to(FinAbGroup::free_group(2)));

    // D = Q, tau_o, p = 4, labels (0,0,0,deg q1): support generates Z_2^3 x Z_4
    auto spec = q_spec({{0, 0}, {0, 0}, {0, 0}, {1, 0}}, 0, GradedInvolution::Kind::Orthogonal);
    auto rg2 = refined_grading(spec);
    CHECK(verify_grading(rg2.grading).empty());
    auto uni2 = universal_group_of(rg2.grading);
    CHECK(uni2.group.isomorphic_to(FinAbGroup::torsion_group({2, 2, 2, 4})));

    // component dimensions: 0-coset components dim p+2s, the +-2g~_{p+2j-1}+h
    // components dim 1, all others dim 2
    auto spec3 = q_spec({{0, 0}, {1, 0}}, 1, GradedInvolution::Kind::Orthogonal);
    auto rg3 = refined_grading(spec3);
    CHECK(verify_grading(rg3.grading).empty());
    const long rank = spec3.rank();
    std::map<long, long> dim_counts;
    for (const auto& [_, basis] : rg3.grading.components()) dim_counts[long(basis.size())]++;
    // 4 coset-of-H components of dim rank=4, 2*|H|=8 of dim 1, rest dim 2
    CHECK(dim_counts[rank] == 4);
    CHECK(dim_counts[1] == 8);
    long total = 0;
    for (auto [d, c] : dim_counts) total += d * c;
    CHECK(total == spec3.matrix_size() * spec3.matrix_size());

    CHECK_THROWS_WITH(refined_grading(q_spec({{1, 0}, {1, 0}}, 0, GradedInvolution::Kind::Orthogonal)),
                      "not fine: refines to a division grading");
}

TEST_CASE("balanced_check and hyperbolic form values") {
    auto spec = q_spec({{0, 0}, {1, 0}}, 1, GradedInvolution::Kind::Orthogonal);
    CHECK(balanced_check(spec));
    auto phi = build_phi(spec);
    // diagonal: distinct basis vectors pair to zero
    CHECK(form_value(spec, phi, basis_column(spec, 0), basis_column(spec, 1)).is_zero());
    // hyperbolic pair: B(x,y) = nu, B(y,x) = nu^{-1}
    auto spec2 = f_spec(0, 1, {CycNum::root_of_unity(4, 1)});
    auto phi2 = build_phi(spec2);
    auto b01 = form_value(spec2, phi2, basis_column(spec2, 0), basis_column(spec2, 1));
    auto b10 = form_value(spec2, phi2, basis_column(spec2, 1), basis_column(spec2, 0));
    CHECK(b01.at(0, 0) == CycNum::root_of_unity(4, 1));
    CHECK(b10.at(0, 0) == CycNum::root_of_unity(4, 3));
    CHECK(balanced_check(spec2));
}
