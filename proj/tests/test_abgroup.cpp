#include <random>

#include "doctest.h"
#include "finegrading/abgroup.hpp"

using namespace fgr;

namespace {

Presentation make_pres(long n, std::vector<std::vector<long>> rels) {
    Presentation p;
    p.num_generators = n;
    for (auto& r : rels) {
        std::vector<Integer> v(r.begin(), r.end());
        p.relations.push_back(std::move(v));
    }
    return p;
}

std::vector<long> torsion_of(const FinAbGroup& g) {
    std::vector<long> t;
    for (const auto& d : g.torsion()) t.push_back(d.get_si());
    return t;
}

}  // namespace

TEST_CASE("normalize: worked sl8 presentations") {
    // generators {g2,g3,g4,h1,h2}, relations {2g2, 2g3+h1, 2g4+h1, 2h1, 2h2}
    auto g = FinAbGroup::normalize(make_pres(
        5, {{2, 0, 0, 0, 0}, {0, 2, 0, 1, 0}, {0, 0, 2, 1, 0}, {0, 0, 0, 2, 0}, {0, 0, 0, 0, 2}}));
    CHECK(g.free_rank() == 0);
    CHECK(torsion_of(g) == std::vector<long>{2, 2, 2, 4});  // Z_4 x Z_2^3

    // generators {g1,g2,g3,h1,h2}, relations {2g1+h1, 2g2+h2, 2g3+h1+h2, 2h1, 2h2}
    auto g2 = FinAbGroup::normalize(make_pres(
        5, {{2, 0, 0, 1, 0}, {0, 2, 0, 0, 1}, {0, 0, 2, 1, 1}, {0, 0, 0, 2, 0}, {0, 0, 0, 0, 2}}));
    CHECK(g2.free_rank() == 0);
    CHECK(torsion_of(g2) == std::vector<long>{2, 4, 4});  // Z_4^2 x Z_2

    auto freeg = FinAbGroup::normalize(make_pres(3, {}));
    CHECK(freeg.free_rank() == 3);
    CHECK(freeg.torsion().empty());
}

TEST_CASE("element arithmetic") {
    // presentation generators a (order 4), b (order 2)
    auto g = FinAbGroup::normalize(make_pres(2, {{4, 0}, {0, 2}}));
    auto a = g.from_presentation({Integer(1), Integer(0)});
    auto b = g.from_presentation({Integer(0), Integer(1)});
    auto x = g.from_presentation({Integer(1), Integer(1)});
    auto y = g.from_presentation({Integer(3), Integer(1)});
    CHECK((x + y).is_zero());
    CHECK(a.element_order().value() == 4);
    CHECK(b.element_order().value() == 2);

    auto z2 = FinAbGroup::free_group(2);
    CHECK(!z2.generator(1).element_order().has_value());

    auto other = FinAbGroup::normalize(make_pres(1, {{3}}));
    CHECK_THROWS(void(a + other.generator(0)));
}

TEST_CASE("isomorphism testing") {
    auto g1 = FinAbGroup::torsion_group({2, 4});
    auto g2 = FinAbGroup::torsion_group({4, 2});
    CHECK(g1.isomorphic_to(g2));
    auto g3 = FinAbGroup::torsion_group({8});
    CHECK(!g3.isomorphic_to(g1));
}

TEST_CASE("normalize invariance under presentation shuffles") {
    std::mt19937 rng(4242);
    for (int it = 0; it < 40; ++it) {
        std::uniform_int_distribution<long> gens(1, 4), rels(0, 5), coef(-3, 3);
        long n = gens(rng);
        Presentation p;
        p.num_generators = n;
        long k = rels(rng);
        for (long i = 0; i < k; ++i) {
            std::vector<Integer> r(n);
            for (long j = 0; j < n; ++j) r[j] = coef(rng);
            p.relations.push_back(r);
        }
        auto base = FinAbGroup::normalize(p);

        // permute generators
        std::vector<long> perm(n);
        for (long i = 0; i < n; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        Presentation q = p;
        for (auto& r : q.relations) {
            std::vector<Integer> nr(n);
            for (long j = 0; j < n; ++j) nr[perm[j]] = r[j];
            r = nr;
        }
        // and a row operation on the relations
        if (q.relations.size() >= 2) {
            for (long j = 0; j < n; ++j) q.relations[0][j] += 2 * q.relations[1][j];
        }
        CHECK(FinAbGroup::normalize(q).isomorphic_to(base));
    }
}

TEST_CASE("finite enumeration") {
    auto g = FinAbGroup::torsion_group({2, 6});
    auto elts = g.elements();
    CHECK(elts.size() == 12);
    Integer exponent = 6;
    for (const auto& e : elts) {
        auto o = e.element_order();
        REQUIRE(o.has_value());
        CHECK(exponent % o.value() == 0);
    }
}

TEST_CASE("round trip: canonical groups re-normalize to themselves") {
    std::mt19937 rng(11);
    std::vector<std::vector<long>> cases = {{2, 2, 4}, {3, 9}, {2, 6}, {5}, {}};
    for (auto& tor : cases) {
        for (long r = 0; r <= 2; ++r) {
            Presentation p;
            p.num_generators = r + long(tor.size());
            for (size_t i = 0; i < tor.size(); ++i) {
                std::vector<Integer> rel(p.num_generators, Integer(0));
                rel[r + i] = tor[i];
                p.relations.push_back(rel);
            }
            auto g = FinAbGroup::normalize(p);
            CHECK(g.free_rank() == r);
            CHECK(torsion_of(g) == tor);
        }
    }
}

TEST_CASE("subgroup membership") {
    auto g = FinAbGroup::torsion_group({2, 4});
    auto a = g.generator(0);  // order 2
    auto b = g.generator(1);  // order 4
    CHECK(subgroup_contains({b}, b.times(2)));
    CHECK(!subgroup_contains({b.times(2)}, b));
    CHECK(subgroup_contains({a, b.times(2)}, a + b.times(2)));
    auto z = FinAbGroup::free_group(2);
    CHECK(subgroup_contains({z.generator(0) + z.generator(1)}, (z.generator(0) + z.generator(1)).times(3)));
    CHECK(!subgroup_contains({z.generator(0) + z.generator(1)}, z.generator(0)));
}

TEST_CASE("group rendering") {
    CHECK(FinAbGroup::free_group(0).str() == "Z^0");
    CHECK(FinAbGroup::free_group(1).str() == "Z");
    CHECK(FinAbGroup::torsion_group({4, 2}).str() == "Z_2 x Z_4");
    auto g = FinAbGroup::normalize(make_pres(3, {{2, 0, 0}, {0, 2, 0}}));
    CHECK(g.str() == "Z x Z_2 x Z_2");
}
