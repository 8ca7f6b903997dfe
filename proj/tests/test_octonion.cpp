#include <random>
#include <set>

#include "doctest.h"
#include "finegrading/d4.hpp"

using namespace fgr;

namespace {

CycMatrix random_octonion(std::mt19937& rng) {
    std::uniform_int_distribution<int> v(-3, 3);
    CycMatrix x(8, 1);
    for (int i = 0; i < 8; ++i) x.at(i, 0) = CycNum(v(rng));
    return x;
}

const int E1 = 0, U1 = 2, U2 = 3, V3 = 7;

}  // namespace

TEST_CASE("octonion multiplication table") {
    CHECK(oct_mul(oct_basis_vector(U1), oct_basis_vector(U2)) == oct_basis_vector(V3));
    CHECK(oct_mul(oct_basis_vector(U2), oct_basis_vector(U1)) == -oct_basis_vector(V3));
    CHECK(oct_mul(oct_basis_vector(E1), oct_basis_vector(U1)) == oct_basis_vector(U1));
    CHECK(oct_mul(oct_basis_vector(U1), oct_basis_vector(E1)) == CycMatrix(8, 1));
    CHECK(oct_mul(oct_unit(), oct_unit()) == oct_unit());
}

TEST_CASE("norm is multiplicative and conjugation is an antiautomorphism") {
    std::mt19937 rng(2718);
    for (int it = 0; it < 100; ++it) {
        CycMatrix x = random_octonion(rng), y = random_octonion(rng);
        CHECK(oct_norm(oct_mul(x, y)) == oct_norm(x) * oct_norm(y));
        CHECK(oct_conj(oct_mul(x, y)) == oct_mul(oct_conj(y), oct_conj(x)));
        // x conj(x) = q(x) 1
        CycMatrix nx = oct_mul(x, oct_conj(x));
        CHECK(nx == oct_unit().scaled(oct_norm(x)));
    }
    CHECK(oct_conj(oct_basis_vector(0)) == oct_basis_vector(1));  // conj e1 = e2
}

TEST_CASE("twisted products") {
    CycMatrix id = CycMatrix::identity(8);
    // para-product: e1 * e1 = conj(e1) conj(e1) = e2 e2 = e2
    CHECK(eta_mul(oct_basis_vector(0), oct_basis_vector(0), id) == oct_basis_vector(1));
    CHECK(eta_mul(oct_unit(), oct_unit(), id) == oct_unit());
    // tau is an automorphism of order 3 fixing the idempotents
    CycMatrix tau = octonion_tau();
    CHECK(is_octonion_automorphism(tau));
    CHECK(tau * tau * tau == id);
    CHECK(tau * oct_basis_vector(0) == oct_basis_vector(0));
    CHECK(is_octonion_automorphism(octonion_tau_omega()));
    CHECK(is_octonion_automorphism(octonion_exchange()));
    // q(x*y, z) = q(x, y*z) for both twisted products
    std::mt19937 rng(31415);
    for (int it = 0; it < 20; ++it) {
        CycMatrix x = random_octonion(rng), y = random_octonion(rng), z = random_octonion(rng);
        for (const CycMatrix& eta : {id, tau}) {
            CHECK(oct_polar(eta_mul(x, y, eta), z) == oct_polar(x, eta_mul(y, z, eta)));
        }
    }
    CHECK_THROWS(eta_mul(oct_unit(), oct_unit(), octonion_exchange()));  // order 2, not 3
}

TEST_CASE("so(C,q) and der C dimensions") {
    CHECK(so8_basis().size() == 28);
    CHECK(derivation_basis().size() == 14);
    for (const auto& h : cartan_h()) CHECK_NOTHROW(so_coords(h));
}

TEST_CASE("triality lift") {
    CycMatrix id = CycMatrix::identity(8);
    // derivations lift to (d, d, d)
    const auto& der = derivation_basis();
    auto t = triality_lift(der[0], id);
    CHECK(t.d1 == der[0]);
    CHECK(t.d2 == der[0]);
    // theta on the Cartan basis
    auto h = cartan_h();
    Rational half(1, 2);
    CycMatrix th0 = theta_apply(h[0]);
    CycMatrix expect = (-h[0] - h[1] - h[2] - h[3]).scaled(CycNum(half));
    CHECK(th0 == expect);
    CHECK(theta_apply(h[1]) == (h[0] + h[1] - h[2] - h[3]).scaled(CycNum(half)));
    CHECK(theta_apply(h[2]) == (h[0] - h[1] + h[2] - h[3]).scaled(CycNum(half)));
    CHECK(theta_apply(h[3]) == (h[0] - h[1] - h[2] + h[3]).scaled(CycNum(half)));
    CHECK(theta_apply(h[1] - h[2]) == h[1] - h[2]);
}

TEST_CASE("theta is an order-3 Lie algebra automorphism fixing der C") {
    const auto& basis = so8_basis();
    const CycMatrix& th = theta_matrix();
    CHECK(th * th * th == CycMatrix::identity(28));
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j)
            CHECK(theta_apply(CycMatrix::bracket(basis[i], basis[j])) ==
                  CycMatrix::bracket(theta_apply(basis[i]), theta_apply(basis[j])));
    for (const auto& d : derivation_basis()) CHECK(theta_apply(d) == d);
    // theta_tau = iota_tau theta = theta iota_tau
    CycMatrix tau = octonion_tau();
    for (size_t i = 0; i < 5; ++i) {
        auto lift = triality_lift(so8_basis()[i], tau);
        CycMatrix via_comp = tau * theta_apply(so8_basis()[i]) * tau.inverse();
        CHECK(lift.d2 == via_comp);
        CycMatrix other = theta_apply(tau * so8_basis()[i] * tau.inverse());
        CHECK(lift.d2 == other);
    }
}

TEST_CASE("Aut Phi combinatorics") {
    const AutPhi& g = autphi_group();
    CHECK(g.weyl.size() == 192);
    CHECK(g.full.size() == 1152);
    for (const auto& m : g.full) CHECK(element_order(m) != 9);
    auto classes = order3_classes();
    CHECK(classes.size() == 3);
    // representatives: iota_tau, theta, iota_tau * theta
    CycMatrix it = iota_tau_weight_matrix(), th = theta_weight_matrix();
    CHECK(element_order(it) == 3);
    CHECK(element_order(th) == 3);
    std::set<std::vector<CycNum>> reps{it.vec(), th.vec(), (it * th).vec()};
    int hit = 0;
    for (const auto& cls : classes) {
        bool found = false;
        for (size_t i : cls)
            if (reps.count(g.full[i].vec())) found = true;
        if (found) ++hit;
    }
    CHECK(hit == 3);
    // iota_tau equals the product of two reflections
    auto roots = d4_roots();
    CycMatrix e1me2(4, 1), e2me3(4, 1);
    e1me2.at(1, 0) = CycNum(1);
    e1me2.at(2, 0) = CycNum(-1);
    e2me3.at(2, 0) = CycNum(1);
    e2me3.at(3, 0) = CycNum(-1);
    CycMatrix s1 = CycMatrix::identity(4), s2 = CycMatrix::identity(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            s1.at(i, j) -= e1me2.at(i, 0) * e1me2.at(j, 0);
            s2.at(i, j) -= e2me3.at(i, 0) * e2me3.at(j, 0);
        }
    CHECK(it == s1 * s2);
}

TEST_CASE("the root partition is unique") {
    CHECK(phi_partition_stated_valid());
    CHECK(phi_partition_count() == 1);
    // a block mixing eps0-eps1 and eps0-eps2 is rejected: they are neither
    // proportional nor orthogonal
    CycMatrix a(4, 1), b(4, 1);
    a.at(0, 0) = CycNum(1);
    a.at(1, 0) = CycNum(-1);
    b.at(0, 0) = CycNum(1);
    b.at(2, 0) = CycNum(-1);
    CycNum d;
    for (int i = 0; i < 4; ++i) d += a.at(i, 0) * b.at(i, 0);
    CHECK(d == CycNum(1));
}

TEST_CASE("the three triality gradings") {
    auto gs = build_triality_gradings();
    REQUIRE(gs.size() == 3);
    CHECK(gs[0].group().isomorphic_to(FinAbGroup::normalize([] {
        Presentation p;
        p.num_generators = 3;
        p.relations.push_back({Integer(0), Integer(0), Integer(3)});
        return p;
    }())));
    CHECK(type_of(gs[0]) == std::vector<long>{26, 1});
    CHECK(gs[1].group().isomorphic_to(FinAbGroup::torsion_group({2, 2, 2, 3})));
    CHECK(type_of(gs[1]) == std::vector<long>{14, 7});
    CHECK(gs[2].group().isomorphic_to(FinAbGroup::torsion_group({3, 3, 3})));
    CHECK(type_of(gs[2]) == std::vector<long>{24, 2});
    for (const auto& g : gs) CHECK(verify_lie(g).empty());
}

TEST_CASE("the 17-row d4 table") {
    auto rows = d4_table();
    REQUIRE(rows.size() == 17);
    // the merged row and its unmerged sibling
    long merged = 0, sibling = 0;
    FinAbGroup z234 = FinAbGroup::torsion_group({2, 2, 2, 4});
    for (const auto& r : rows) {
        if (r.group.isomorphic_to(z234) && r.type == std::vector<long>{24, 2}) {
            ++merged;
            CHECK(r.provenance.substr(0, 7) == "merged:");
        }
        if (r.group.isomorphic_to(z234) && r.type == std::vector<long>{25, 0, 1}) ++sibling;
    }
    CHECK(merged == 1);
    CHECK(sibling == 1);
}
