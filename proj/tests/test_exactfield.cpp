#include "support.hpp"

#include <fano3lab/cyclotomic.hpp>

using namespace fano3lab;
using namespace testing;

namespace {

CycNum sqrt5() {
    CycNum z = CycNum::zeta(5);
    return z - z.pow(2) - z.pow(3) + z.pow(4);
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == IntPoly{-1, 1});
    CHECK(cyclotomic_polynomial(4) == IntPoly{1, 0, 1});
    IntPoly p40 = cyclotomic_polynomial(40);
    IntPoly expect{1, 0, 0, 0, -1, 0, 0, 0, 1, 0, 0, 0, -1, 0, 0, 0, 1};
    CHECK(p40 == expect);
    for (unsigned n : {1u, 2u, 6u, 12u, 15u, 40u, 60u}) CHECK(cyclotomic_polynomial(n).size() == euler_phi(n) + 1);
}

TEST_CASE("totient") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(40) == 16);
    CHECK(euler_phi(5) == 4);
    CHECK(euler_phi(24) == 8);
}

TEST_CASE("arithmetic examples") {
    CycNum i = CycNum::zeta(4);
    CHECK(i * i == CycNum(-1));
    CHECK((i * i).conductor() == 4);
    CHECK(sqrt5() * sqrt5() == CycNum(5));
    CHECK(CycNum::zeta(8).pow(2) == embed(i, 8));
    CHECK(parse_scalar("6/4").coords()[0].get_num() == 3);
    CHECK(CycNum(Rational(1, 3)) + CycNum(Rational(2, 3)) == CycNum(1));
}

TEST_CASE("primitivity") {
    for (unsigned n : {4u, 5u, 8u, 20u, 40u}) {
        CycNum z = CycNum::zeta(n);
        CHECK(z.pow(n).is_one());
        for (unsigned k = 1; k < n; ++k) CHECK_FALSE(z.pow(k).is_one());
    }
}

TEST_CASE("embed and project") {
    CycNum i = CycNum::zeta(4);
    CHECK(embed(i, 40) == CycNum::zeta(40, 10));
    CHECK(embed(i, 40).conductor() == 40);
    CHECK(embed(CycNum::zeta(5), 40) == CycNum::zeta(40, 8));
    CHECK(embed(CycNum(3), 40) == CycNum(3));
    CHECK(project(CycNum::zeta(40, 10), 4) == i);
    CHECK(project(CycNum::zeta(40, 10), 4).conductor() == 4);
    CHECK_KIND(embed(CycNum::zeta(5), 12), "NotASubfield");
    CHECK_KIND(project(CycNum::zeta(40), 8), "NotASubfield");
}

TEST_CASE("errors") {
    CHECK_KIND(CycNum(1) / CycNum(0), "DivisionByZero");
    CHECK_KIND(CycNum(0).inverse(), "DivisionByZero");
    CHECK(promote_conductor(4, 40) == 40);
    CHECK(promote_conductor(40, 1) == 40);
    CHECK_KIND(promote_conductor(3, 4), "ConductorMismatch");
    CHECK_KIND(CycNum::zeta(3) + CycNum::zeta(4), "ConductorMismatch");
}

TEST_CASE("comparison across conductors") {
    CHECK(CycNum::zeta(4) == CycNum::zeta(40, 10));
    CHECK_FALSE(CycNum::zeta(3) == CycNum::zeta(4));
    CHECK(CycNum(2) == CycNum(Rational(2), 40));
}

TEST_CASE("reduction is idempotent") {
    for (int k = 0; k < 100; ++k) {
        CycNum a = rand_cyc(40);
        CycNum b = CycNum::from_coords(40, a.coords());
        CHECK(a == b);
        CHECK(a.coords().size() == 16);
    }
}

TEST_CASE("field axioms on random elements") {
    for (unsigned n : {5u, 8u, 40u}) {
        for (int k = 0; k < 100; ++k) {
            CycNum a = rand_cyc(n), b = rand_cyc(n), c = rand_cyc(n);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a - a == CycNum(0));
            if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
            if (!b.is_zero()) CHECK((a / b) * b == a);
        }
    }
}

TEST_CASE("embed is a field homomorphism") {
    const std::pair<unsigned, unsigned> pairs[] = {{4, 40}, {5, 40}, {8, 40}, {20, 40}, {5, 60}};
    for (auto [n, m] : pairs) {
        for (int k = 0; k < 100; ++k) {
            CycNum a = rand_cyc(n), b = rand_cyc(n);
            CHECK(embed(a * b, m) == embed(a, m) * embed(b, m));
            CHECK(embed(a + b, m) == embed(a, m) + embed(b, m));
            CHECK(project(embed(a, m), n) == a);
            if (!(a - b).is_zero()) CHECK_FALSE(embed(a, m) == embed(b, m));
        }
    }
}

TEST_CASE("scalar parser") {
    CHECK(parse_scalar("3/6") == CycNum(Rational(1, 2)));
    CHECK(parse_scalar("z^10", 40) == CycNum::zeta(4));
    CHECK(parse_scalar("(1 + z)^2 - 2*z", 4) == CycNum(0));
    CHECK(parse_scalar("z^5 - z^10 - z^15 + z^20", 25) * parse_scalar("z^5 - z^10 - z^15 + z^20", 25) ==
          CycNum(5));
    CHECK_KIND(parse_scalar("1/0"), "DivisionByZero");
    CHECK_KIND(parse_scalar("w + 1"), "ParseError");
    CHECK_KIND(parse_scalar("(1 + 2"), "ParseError");
}
