#include "doctest.h"
#include "finegrading/involutions.hpp"

using namespace fgr;

namespace {

GrpElt qlabel(const DivisionAlgebra& d, std::vector<long> exps) { return d.label(exps); }

}  // namespace

TEST_CASE("tau_o and tau_s signs") {
    auto q = division_algebra({2});
    auto to = GradedInvolution::tau_o();
    auto ts = GradedInvolution::tau_s();

    auto q1 = qlabel(q, {1, 0}), q2 = qlabel(q, {0, 1}), q3 = qlabel(q, {1, 1});
    CHECK(to.sign(q.grading.group().zero()) == 1);
    CHECK(to.sign(q1) == 1);
    CHECK(to.sign(q2) == 1);
    CHECK(to.sign(q3) == -1);

    CHECK(ts.sign(q.grading.group().zero()) == 1);
    CHECK(ts.sign(q1) == -1);
    CHECK(ts.sign(q2) == -1);
    CHECK(ts.sign(q3) == -1);

    // q3 under tau_o -> -q3, q2 under tau_s -> -q2, 1 fixed by both
    const CycMatrix& rq3 = (*q.grading.component(q3))[0];
    const CycMatrix& rq2 = (*q.grading.component(q2))[0];
    CHECK(to.apply(rq3) == -rq3);
    CHECK(ts.apply(rq2) == -rq2);
    CHECK(to.apply(CycMatrix::identity(2)) == CycMatrix::identity(2));
    CHECK(ts.apply(CycMatrix::identity(2)) == CycMatrix::identity(2));
}

TEST_CASE("kinds") {
    CHECK(GradedInvolution::tau_o().kind() == GradedInvolution::Kind::Orthogonal);
    CHECK(GradedInvolution::tau_s().kind() == GradedInvolution::Kind::Symplectic);
    CHECK(GradedInvolution::identity_on_F().kind() == GradedInvolution::Kind::Orthogonal);

    auto q3t = division_algebra({2, 2, 2});
    auto ooo = GradedInvolution::reference(q3t, GradedInvolution::Kind::Orthogonal);
    CHECK(ooo.kind() == GradedInvolution::Kind::Orthogonal);
    auto soo = GradedInvolution::reference(q3t, GradedInvolution::Kind::Symplectic);
    CHECK(soo.kind() == GradedInvolution::Kind::Symplectic);
}

TEST_CASE("tensor involutions") {
    auto to = GradedInvolution::tau_o();
    auto ts = GradedInvolution::tau_s();

    auto tt = GradedInvolution::tensor({to, to});
    // sign at deg(q1 (x) q3) is (+1)(-1) = -1
    bool found = false;
    for (const auto& [h, s] : tt.sign_fn()) {
        const CycMatrix& r = (*tt.target().component(h))[0];
        CycMatrix expect = (*to.target().component(qlabel(division_algebra({2}), {1, 0})))[0].kron(
            (*to.target().component(qlabel(division_algebra({2}), {1, 1})))[0]);
        if (r == expect) {
            CHECK(s == -1);
            found = true;
        }
    }
    CHECK(found);

    auto single = GradedInvolution::tensor({to});
    CHECK(single.sign_fn() == to.sign_fn());

    auto so = GradedInvolution::tensor({ts, to});
    CHECK(so.target().n() == 4);
    CHECK(so.kind() == GradedInvolution::Kind::Symplectic);
}

TEST_CASE("kind parity under tensoring") {
    auto to = GradedInvolution::tau_o();
    auto ts = GradedInvolution::tau_s();
    for (int mask = 0; mask < 8; ++mask) {
        std::vector<GradedInvolution> fs;
        int skew = 0;
        for (int b = 0; b < 3; ++b) {
            if (mask & (1 << b)) {
                fs.push_back(ts);
                ++skew;
            } else {
                fs.push_back(to);
            }
        }
        auto t = GradedInvolution::tensor(fs);
        CHECK(t.kind() == (skew % 2 ? GradedInvolution::Kind::Symplectic
                                    : GradedInvolution::Kind::Orthogonal));
    }
}

TEST_CASE("twists") {
    auto q = division_algebra({2});
    auto to = GradedInvolution::tau_o();
    auto q1 = qlabel(q, {1, 0});

    auto tw = to.twist(q1);
    // signs flip exactly at degrees anticommuting with deg q1
    for (const auto& [h, s] : to.sign_fn()) {
        int flip = beta_pairing(q.grading, q1, h) ? -1 : 1;
        CHECK(tw.sign(h) == s * flip);
    }
    // twisting by the identity label is a no-op
    auto tw0 = to.twist(q.grading.group().zero());
    CHECK(tw0.sign_fn() == to.sign_fn());
    // twisting twice returns the original involution
    auto twtw = tw.twist(q1);
    CHECK(twtw.sign_fn() == to.sign_fn());
    for (const auto& [h, basis] : q.grading.components())
        CHECK(twtw.apply(basis[0]) == to.apply(basis[0]));

    CHECK_THROWS(to.twist_by(CycMatrix(2, 2)));
}

TEST_CASE("involution identities") {
    auto q2t = division_algebra({2, 2});
    auto ref = GradedInvolution::reference(q2t, GradedInvolution::Kind::Orthogonal);
    // tau^2 = id on a full basis
    for (const auto& [h, basis] : q2t.grading.components())
        CHECK(ref.apply(ref.apply(basis[0])) == basis[0]);
    // sign-compatibility: sign(g) sign(h) (-1)^beta(g,h) = sign(g+h)
    for (const auto& [g, _] : q2t.grading.components())
        for (const auto& [h, __] : q2t.grading.components()) {
            int lhs = ref.sign(g) * ref.sign(h) * (beta_pairing(q2t.grading, g, h) ? -1 : 1);
            CHECK(lhs == ref.sign(g + h));
        }
    // same identities after a twist
    auto tw = ref.twist(q2t.label({1, 1, 0, 1}));
    for (const auto& [g, _] : q2t.grading.components())
        for (const auto& [h, __] : q2t.grading.components()) {
            int lhs = tw.sign(g) * tw.sign(h) * (beta_pairing(q2t.grading, g, h) ? -1 : 1);
            CHECK(lhs == tw.sign(g + h));
        }
}
