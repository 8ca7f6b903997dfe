#include <random>
#include <set>

#include "doctest.h"
#include "finegrading/invariants.hpp"

using namespace fgr;

namespace {

// all non-decreasing tuples of length p over [0, size)
void tuples_rec(HLabel size, int p, std::vector<HLabel>& cur, std::vector<std::vector<HLabel>>& out) {
    if (int(cur.size()) == p) {
        out.push_back(cur);
        return;
    }
    for (HLabel h = cur.empty() ? 0 : cur.back(); h < size; ++h) {
        cur.push_back(h);
        tuples_rec(size, p, cur, out);
        cur.pop_back();
    }
}

long count_I_classes(int m, const std::vector<int>& ps) {
    std::set<std::string> keys;
    for (int p : ps) {
        std::vector<std::vector<HLabel>> ts;
        std::vector<HLabel> cur;
        tuples_rec(HLabel(1) << (2 * m), p, cur, ts);
        for (const auto& t : ts) keys.insert(canonicalize_I({m, t}).key);
    }
    return long(keys.size());
}

long count_I2_classes(int m, const std::vector<int>& ps, GradedInvolution::Kind kind,
                      bool exclude_degenerate_pairs, int rank) {
    DivisionAlgebra d = division_algebra(std::vector<long>(m, 2));
    GradedInvolution tau = GradedInvolution::reference(d, kind);
    std::uint64_t sign = sign_bits_of(d, tau);
    std::vector<HLabel> sym;
    for (HLabel h = 0; h < (HLabel(1) << (2 * m)); ++h)
        if (!((sign >> h) & 1)) sym.push_back(h);
    std::set<std::string> keys;
    for (int p : ps) {
        std::vector<std::vector<HLabel>> idx;
        std::vector<HLabel> cur;
        tuples_rec(HLabel(sym.size()), p, cur, idx);
        for (const auto& t : idx) {
            std::vector<HLabel> labels;
            for (HLabel i : t) labels.push_back(sym[i]);
            if (exclude_degenerate_pairs && p == 2 && p == rank && labels[0] == labels[1]) continue;
            keys.insert(canonicalize_I2({m, labels, sign}).key);
        }
    }
    return long(keys.size());
}

}  // namespace

TEST_CASE("beta_bits matches the matrix-level commutation pairing") {
    for (int m = 1; m <= 2; ++m) {
        DivisionAlgebra d = division_algebra(std::vector<long>(m, 2));
        for (HLabel a = 0; a < (HLabel(1) << (2 * m)); ++a)
            for (HLabel b = 0; b < (HLabel(1) << (2 * m)); ++b)
                CHECK(beta_bits(m, a, b) ==
                      beta_pairing(d.grading, bits_to_label(d, a), bits_to_label(d, b)));
    }
}

TEST_CASE("symplectic group orders") {
    CHECK(symplectic_group(1).size() == 6);    // Sp(2,2) = S_3
    CHECK(symplectic_group(2).size() == 720);  // Sp(4,2) = S_6
}

TEST_CASE("canonicalize_I basic identifications") {
    // (1,1) and (q1,q1) are the same class (translate by q1)
    CHECK(equivalent(ITuple{1, {0, 0}}, ITuple{1, {1, 1}}));
    // the empty tuple is canonical
    CHECK(canonicalize_I({1, {}}).labels.empty());
    // (1, q1) and (1, 1) are distinct classes
    CHECK(!equivalent(ITuple{1, {0, 1}}, ITuple{1, {0, 0}}));
}

TEST_CASE("canonicalize_I2 basic identifications") {
    DivisionAlgebra q = division_algebra({2});
    auto to = GradedInvolution::tau_o();
    std::uint64_t sign_o = sign_bits_of(q, to);
    // q1 has bits 01 -> value 1; tuples (1,1,1,q1) vs (1,1,q1,q1) distinct
    CHECK(!equivalent(I2Tuple{1, {0, 0, 0, 1}, sign_o}, I2Tuple{1, {0, 0, 1, 1}, sign_o}));
    // empty tuple with tau_s is canonical
    auto ts = GradedInvolution::tau_s();
    std::uint64_t sign_s = sign_bits_of(q, ts);
    CHECK(canonicalize_I2({1, {}, sign_s}).labels.empty());
    // mixed symmetric/skew tuples are rejected (q3 has bits 11 -> 3, skew)
    CHECK_THROWS_WITH(canonicalize_I2({1, {0, 3}, sign_o}), "mixed symmetric/skew tuple");
}

TEST_CASE("class counts of the worked examples") {
    // sl8 outer blocks
    CHECK(count_I_classes(0, {0, 2, 4, 6, 8}) == 5);
    CHECK(count_I_classes(1, {0, 2, 4}) == 8);
    // so8 example blocks: orthogonal involutions on Mat_8
    CHECK(count_I2_classes(0, {0, 2, 4, 6, 8}, GradedInvolution::Kind::Orthogonal, false, 8) == 5);
    CHECK(count_I2_classes(1, {0, 2, 4}, GradedInvolution::Kind::Orthogonal, false, 4) == 7);
    CHECK(count_I2_classes(2, {0, 2}, GradedInvolution::Kind::Orthogonal, true, 2) == 2);
    CHECK(count_I2_classes(3, {1}, GradedInvolution::Kind::Orthogonal, false, 1) == 1);
    // sp8 blocks: symplectic involutions
    CHECK(count_I2_classes(1, {0, 2, 4}, GradedInvolution::Kind::Symplectic, false, 4) == 3);
    CHECK(count_I2_classes(2, {0, 2}, GradedInvolution::Kind::Symplectic, true, 2) == 2);
    CHECK(count_I2_classes(3, {1}, GradedInvolution::Kind::Symplectic, false, 1) == 1);
}

TEST_CASE("canonical keys invariant under random symmetry generators") {
    std::mt19937 rng(2024);
    for (int m = 1; m <= 3; ++m) {
        const HLabel size = HLabel(1) << (2 * m);
        std::uniform_int_distribution<HLabel> lab(0, size - 1), nz(1, size - 1);
        std::uniform_int_distribution<int> plen(0, m == 3 ? 1 : 3), steps(1, 6), coin(0, 1);
        for (int it = 0; it < (m == 3 ? 6 : 30); ++it) {
            std::vector<HLabel> t;
            for (int i = 0, p = plen(rng); i < p; ++i) t.push_back(lab(rng));
            auto base = canonicalize_I({m, t});
            std::vector<HLabel> u = t;
            for (int s = 0, k = steps(rng); s < k; ++s) {
                if (coin(rng)) {
                    HLabel z = nz(rng);
                    for (auto& h : u) h ^= z;
                } else {
                    auto tv = transvection_table(m, nz(rng));
                    for (auto& h : u) h = tv[h];
                }
            }
            CHECK(canonicalize_I({m, u}).key == base.key);
        }
    }
}

TEST_CASE("I2 canonical keys invariant under transported generators") {
    std::mt19937 rng(77);
    DivisionAlgebra q2 = division_algebra({2, 2});
    auto tau = GradedInvolution::reference(q2, GradedInvolution::Kind::Orthogonal);
    std::uint64_t sign = sign_bits_of(q2, tau);
    const int m = 2;
    const HLabel size = 16;
    std::vector<HLabel> sym;
    for (HLabel h = 0; h < size; ++h)
        if (!((sign >> h) & 1)) sym.push_back(h);
    std::uniform_int_distribution<size_t> pick(0, sym.size() - 1);
    std::uniform_int_distribution<HLabel> nz(1, size - 1);
    std::uniform_int_distribution<int> steps(1, 5), coin(0, 1);
    for (int it = 0; it < 25; ++it) {
        std::vector<HLabel> t{sym[pick(rng)], sym[pick(rng)]};
        auto base = canonicalize_I2({m, t, sign});
        std::vector<HLabel> u = t;
        std::uint64_t s = sign;
        for (int k = steps(rng); k-- > 0;) {
            if (coin(rng)) {
                HLabel z = nz(rng);
                std::uint64_t ns = 0;
                for (HLabel h = 0; h < size; ++h)
                    if ((int((s >> h) & 1) ^ beta_bits(m, z, h)) != 0) ns |= std::uint64_t(1) << h;
                for (auto& h : u) h ^= z;
                s = ns;
            } else {
                auto tv = transvection_table(m, nz(rng));
                std::uint64_t ns = 0;
                for (HLabel h = 0; h < size; ++h)
                    if ((s >> h) & 1) ns |= std::uint64_t(1) << tv[h];
                for (auto& h : u) h = tv[h];
                s = ns;
            }
        }
        CHECK(canonicalize_I2({m, u, s}).key == base.key);
    }
}

TEST_CASE("symplectic maps are realizable as graded algebra automorphisms") {
    DivisionAlgebra q = division_algebra({2});
    for (const auto& phi : symplectic_group(1)) {
        auto aut = realize_symplectic(q, phi);
        CHECK(verify_automorphism(q, aut, /*all_pairs=*/true));
    }
    DivisionAlgebra q2 = division_algebra({2, 2});
    const auto& sp2 = symplectic_group(2);
    std::mt19937 rng(5);
    std::uniform_int_distribution<size_t> pick(0, sp2.size() - 1);
    for (int it = 0; it < 12; ++it) {
        auto aut = realize_symplectic(q2, sp2[pick(rng)]);
        CHECK(verify_automorphism(q2, aut, /*all_pairs=*/true));
    }
}

TEST_CASE("matrix-level cross-validation at m = 1") {
    auto cv = cross_validate_I(1, 4);
    CHECK(cv.disagreements == 0);
    CHECK(cv.classes == 12);  // p = 0..4 over Q: 1+1+2+3+5
    auto cv2 = cross_validate_I2(1, 4, GradedInvolution::Kind::Orthogonal);
    CHECK(cv2.disagreements == 0);
}

TEST_CASE("every twisted involution transports to the reference of its kind") {
    for (int m = 1; m <= 3; ++m) {
        DivisionAlgebra d = division_algebra(std::vector<long>(m, 2));
        auto ref_o = GradedInvolution::reference(d, GradedInvolution::Kind::Orthogonal);
        auto ref_s = GradedInvolution::reference(d, GradedInvolution::Kind::Symplectic);
        std::uint64_t so = sign_bits_of(d, ref_o), ss = sign_bits_of(d, ref_s);
        for (HLabel z = 0; z < (HLabel(1) << (2 * m)); ++z) {
            auto tw = ref_o.twist(bits_to_label(d, z));
            std::uint64_t st = sign_bits_of(d, tw);
            std::uint64_t target = tw.kind() == GradedInvolution::Kind::Orthogonal ? so : ss;
            CHECK(find_sign_transport(m, st, target).has_value());
        }
    }
}

TEST_CASE("equivalence is reflexive on random tuples") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<HLabel> lab(0, 15);
    for (int it = 0; it < 20; ++it) {
        std::vector<HLabel> t;
        for (int i = 0; i < 3; ++i) t.push_back(lab(rng));
        CHECK(equivalent(ITuple{2, t}, ITuple{2, t}));
    }
}

TEST_CASE("class displays") {
    auto c = canonicalize_I({2, {0, 1}});
    CHECK(c.display().substr(0, 5) == "[Q^2,");
    auto e = canonicalize_I({0, {0, 0}});
    CHECK(e.display() == "[F,(0,0)]");
}
