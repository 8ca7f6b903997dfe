#include <random>

#include "doctest.h"
#include "finegrading/linalg.hpp"

using namespace fgr;

namespace {

CycMatrix random_matrix(std::mt19937& rng, size_t n) {
    std::uniform_int_distribution<int> v(-3, 3), pick(0, 5);
    CycMatrix m(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            m.at(i, j) = CycNum(v(rng));
            if (pick(rng) == 0) m.at(i, j) += CycNum::root_of_unity(4, 1) * CycNum(v(rng));
        }
    return m;
}

}  // namespace

TEST_CASE("determinant and inverse") {
    std::mt19937 rng(5);
    for (int it = 0; it < 15; ++it) {
        CycMatrix m = random_matrix(rng, 4);
        CycNum d = m.det();
        if (d.is_zero()) {
            CHECK(!m.is_invertible());
            continue;
        }
        CycMatrix inv = m.inverse();
        CHECK(m * inv == CycMatrix::identity(4));
        CHECK(inv * m == CycMatrix::identity(4));
    }
}

TEST_CASE("kron determinant identity det(a (x) b) = det(a)^s det(b)^r") {
    std::mt19937 rng(17);
    for (int it = 0; it < 8; ++it) {
        CycMatrix a = random_matrix(rng, 2), b = random_matrix(rng, 3);
        CycNum lhs = a.kron(b).det();
        CycNum rhs = a.det().pow(3) * b.det().pow(2);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("nullspace and solve") {
    CycMatrix a(2, 3);
    a.at(0, 0) = CycNum(1);
    a.at(0, 1) = CycNum(2);
    a.at(0, 2) = CycNum(3);
    a.at(1, 0) = CycNum(2);
    a.at(1, 1) = CycNum(4);
    a.at(1, 2) = CycNum(6);
    auto ns = nullspace(a);
    CHECK(ns.size() == 2);
    for (const auto& v : ns) {
        CycNum acc;
        for (size_t j = 0; j < 3; ++j) acc += a.at(0, j) * v[j];
        CHECK(acc.is_zero());
    }
    auto sol = solve(a, {CycNum(6), CycNum(12)});
    REQUIRE(sol.has_value());
    CycNum acc;
    for (size_t j = 0; j < 3; ++j) acc += a.at(0, j) * (*sol)[j];
    CHECK(acc == CycNum(6));
    CHECK(!solve(a, {CycNum(1), CycNum(0)}).has_value());
}

TEST_CASE("echelon membership and coordinates") {
    Echelon e(3);
    CHECK(e.add({CycNum(1), CycNum(0), CycNum(1)}));
    CHECK(e.add({CycNum(0), CycNum(1), CycNum(1)}));
    CHECK(!e.add({CycNum(1), CycNum(1), CycNum(2)}));
    CHECK(e.rank() == 2);
    CHECK(e.contains({CycNum(2), CycNum(3), CycNum(5)}));
    CHECK(!e.contains({CycNum(0), CycNum(0), CycNum(1)}));

    Echelon f(3);
    f.add({CycNum(1), CycNum(1), CycNum(0)});
    f.add({CycNum(0), CycNum(2), CycNum(0)});
    auto c = f.coordinates({CycNum(3), CycNum(5), CycNum(0)});
    REQUIRE(c.has_value());
    CHECK((*c)[0] == CycNum(3));
    CHECK((*c)[1] == CycNum(1));
    CHECK(!f.coordinates({CycNum(0), CycNum(0), CycNum(1)}).has_value());
}
