#include <random>

#include "doctest.h"
#include "finegrading/cyclotomic.hpp"

using namespace fgr;

namespace {

// Independent oracle: arithmetic of Z[x] modulo the n-th cyclotomic
// polynomial, with naive integer coefficient vectors. Used to pin expected
// values without going through CycNum.
std::vector<long> oracle_reduce(std::vector<long> poly, long n) {
    const auto& phi = cyclotomic_polynomial(n);
    const size_t deg = phi.size() - 1;
    while (poly.size() > deg) {
        long lead = poly.back();
        size_t shift = poly.size() - 1 - deg;
        for (size_t i = 0; i < deg; ++i) poly[shift + i] -= lead * phi[i].get_si();
        poly.pop_back();
        while (!poly.empty() && poly.back() == 0) poly.pop_back();
    }
    poly.resize(deg, 0);
    return poly;
}

CycNum random_cyc(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-4, 4), den(1, 4), nn(1, 3), kk(0, 11);
    static const long conductors[] = {1, 3, 4, 8};
    CycNum x(Rational(num(rng), den(rng)));
    for (int t = 0; t < nn(rng); ++t)
        x += CycNum(Rational(num(rng), den(rng))) * CycNum::root_of_unity(conductors[kk(rng) % 4], kk(rng));
    return x;
}

}  // namespace

TEST_CASE("root_of_unity basics") {
    CHECK(CycNum::root_of_unity(1, 0) == CycNum(1));
    CHECK(CycNum::root_of_unity(4, 1) * CycNum::root_of_unity(4, 1) == CycNum(-1));

    // zeta_3 + zeta_3^2 = -1, pinned by the polynomial reduction oracle
    auto reduced = oracle_reduce({0, 1, 1}, 3);
    CHECK(reduced == std::vector<long>{-1, 0});
    CHECK(CycNum::root_of_unity(3, 1) + CycNum::root_of_unity(3, 2) == CycNum(-1));
}

TEST_CASE("field operations") {
    CycNum i = CycNum::root_of_unity(4, 1);
    CHECK((CycNum(1) + i) * (CycNum(1) - i) == CycNum(2));
    CHECK(CycNum::root_of_unity(8, 1).inverse() == CycNum::root_of_unity(8, 7));
    CHECK(CycNum::root_of_unity(5, 3).conjugate() == CycNum::root_of_unity(5, 2));
    CHECK_THROWS_WITH(CycNum(0).inverse(), "division by zero");
}

TEST_CASE("square roots of roots of unity") {
    CHECK(CycNum(1).sqrt_root_of_unity() == CycNum(1));
    CHECK(CycNum(-1).sqrt_root_of_unity() == CycNum::root_of_unity(4, 1));
    CycNum z3 = CycNum::root_of_unity(3, 1);
    CycNum r = z3.sqrt_root_of_unity();
    CHECK(r * r == z3);
    CHECK_THROWS_WITH(CycNum(2).sqrt_root_of_unity(), "square root restricted to roots of unity");
}

TEST_CASE("field axioms on random samples") {
    std::mt19937 rng(20231101);
    for (int it = 0; it < 60; ++it) {
        CycNum a = random_cyc(rng), b = random_cyc(rng), c = random_cyc(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!a.is_zero()) CHECK(a * a.inverse() == CycNum(1));
    }
}

TEST_CASE("conjugation is an involutive ring homomorphism") {
    std::mt19937 rng(7);
    for (int it = 0; it < 40; ++it) {
        CycNum a = random_cyc(rng), b = random_cyc(rng);
        CHECK(a.conjugate().conjugate() == a);
        CHECK((a + b).conjugate() == a.conjugate() + b.conjugate());
        CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
    }
}

TEST_CASE("orders of roots of unity up to 24") {
    for (long n = 1; n <= 24; ++n) {
        for (long k = 0; k < n; ++k) {
            CycNum z = CycNum::root_of_unity(n, k);
            CHECK(z.pow(n) == CycNum(1));
            long ord = z.root_of_unity_order();
            CHECK(ord > 0);
            CHECK(n % ord == 0);
        }
    }
}

TEST_CASE("canonical form: minimal conductor") {
    // zeta_8^2 = i must live at conductor 4; zeta_6 at conductor 3
    CHECK(CycNum::root_of_unity(8, 2).conductor() == 4);
    CHECK(CycNum::root_of_unity(6, 1).conductor() == 3);
    CHECK(CycNum::root_of_unity(12, 3).conductor() == 4);
    CycNum z = CycNum::root_of_unity(8, 1) * CycNum::root_of_unity(8, 7);
    CHECK(z == CycNum(1));
    CHECK(z.conductor() == 1);
    // equality relies on canonical (conductor, coeffs) records
    CycNum a = CycNum::root_of_unity(3, 1) * CycNum::root_of_unity(4, 2);  // -zeta_3
    CycNum b = -CycNum::root_of_unity(3, 1);
    CHECK(a == b);
}

TEST_CASE("rendering and parsing round trip") {
    std::mt19937 rng(99);
    for (int it = 0; it < 25; ++it) {
        CycNum a = random_cyc(rng);
        CHECK(CycNum::parse(a.str()) == a);
    }
    CHECK(CycNum::parse("1/2 + -3*z(8)^3") == CycNum(Rational(1, 2)) - CycNum(3) * CycNum::root_of_unity(8, 3));
    CHECK(CycNum::parse("0") == CycNum(0));
}
