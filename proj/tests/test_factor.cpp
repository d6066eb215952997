#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "orbicat/factor.hpp"
#include "orbicat/poly.hpp"

using namespace orbicat;

namespace {

CycScalar zeta(long n, long t = 1) { return CycScalar::root_of_unity(n, t); }

KPoly qpoly(std::vector<long> coeffs) {
    KPoly p;
    for (long c : coeffs) p.push_back(cyc(c));
    return poly::trim(p);
}

KPoly reassemble(const std::vector<KPoly>& factors) {
    KPoly acc = {cyc(1)};
    for (const auto& f : factors) acc = poly::mul(acc, f);
    return acc;
}

}  // namespace

TEST_CASE("polynomial division, gcd, and evaluation") {
    KPoly a = qpoly({-1, 0, 0, 0, 0, 0, 1});  // t^6 - 1
    KPoly b = qpoly({-1, 0, 1});              // t^2 - 1
    auto [q, r] = poly::divmod(a, b);
    CHECK(poly::is_zero(r));
    CHECK(poly::mul(q, b) == a);

    KPoly g = poly::gcd(a, qpoly({-1, 0, 0, 1}));  // gcd(t^6-1, t^3-1) = t^3-1
    CHECK(g == qpoly({-1, 0, 0, 1}));

    CHECK(poly::eval(qpoly({1, 2, 1}), cyc(3)) == cyc(16));
    CHECK(poly::eval(qpoly({1, 0, 1}), zeta(4)).is_zero());

    KPoly shifted = poly::compose_linear(qpoly({0, 0, 1}), cyc(1), cyc(-2));  // (t-2)^2
    CHECK(shifted == qpoly({4, -4, 1}));
}

TEST_CASE("resultants match the root-product oracle") {
    // res(x-2, x-5) = (2-5)
    CHECK(poly::resultant(qpoly({-2, 1}), qpoly({-5, 1})) == cyc(-3));
    // res(x^2-1, x^2-4) = (1-4)(1-4) = 9
    CHECK(poly::resultant(qpoly({-1, 0, 1}), qpoly({-4, 0, 1})) == cyc(9));
    // res(x^2+1, x-1) = (i-1)(-i-1) = 2
    CHECK(poly::resultant(qpoly({1, 0, 1}), qpoly({-1, 1})) == cyc(2));
    // swap flips by (-1)^{deg a deg b}
    CHECK(poly::resultant(qpoly({-5, 1}), qpoly({-2, 1})) == cyc(3));
    // common root: vanishes
    CHECK(poly::resultant(qpoly({-1, 1}), qpoly({-1, 0, 0, 1})).is_zero());
}

TEST_CASE("interpolation recovers exact polynomials") {
    KPoly target = {cyc(1, 2), cyc(0), cyc(1)};  // t^2 + 1/2
    std::vector<CycScalar> pts = {cyc(0), cyc(1), cyc(2)};
    std::vector<CycScalar> vals;
    for (const auto& p : pts) vals.push_back(poly::eval(target, p));
    CHECK(poly::interpolate(pts, vals) == target);
}

TEST_CASE("minimal polynomials of matrices") {
    Mat d{{cyc(1), cyc(0), cyc(0)}, {cyc(0), cyc(1), cyc(0)}, {cyc(0), cyc(0), cyc(2)}};
    CHECK(min_poly(d) == qpoly({2, -3, 1}));  // (t-1)(t-2)

    Mat companion{{cyc(0), cyc(0), cyc(2)}, {cyc(1), cyc(0), cyc(0)}, {cyc(0), cyc(1), cyc(0)}};
    CHECK(min_poly(companion) == qpoly({-2, 0, 0, 1}));  // t^3 - 2

    Mat nil{{cyc(0), cyc(1)}, {cyc(0), cyc(0)}};
    CHECK(min_poly(nil) == qpoly({0, 0, 1}));  // t^2

    CHECK(min_poly(Mat::identity(4)) == qpoly({-1, 1}));

    Mat rot{{cyc(0), cyc(-1)}, {cyc(1), cyc(0)}};  // rotation by 90 degrees
    KPoly mp = min_poly(rot);
    CHECK(mp == qpoly({1, 0, 1}));
    CHECK(eval_poly(mp, rot).is_zero());
}

TEST_CASE("rational factorization: cyclotomic shapes") {
    auto f1 = factor_poly(qpoly({-1, 0, 1}));
    REQUIRE(f1.size() == 2);
    CHECK(reassemble(f1) == qpoly({-1, 0, 1}));

    CHECK(factor_poly(qpoly({1, 0, 1})).size() == 1);  // t^2+1 irreducible over Q

    auto f6 = factor_poly(qpoly({-1, 0, 0, 0, 0, 0, 1}));  // t^6 - 1
    REQUIRE(f6.size() == 4);
    CHECK(reassemble(f6) == qpoly({-1, 0, 0, 0, 0, 0, 1}));
    // factors sorted by degree: two linear then two quadratic
    CHECK(poly::deg(f6[0]) == 1);
    CHECK(poly::deg(f6[1]) == 1);
    CHECK(poly::deg(f6[2]) == 2);
    CHECK(poly::deg(f6[3]) == 2);
}

TEST_CASE("rational factorization: multiplicity and content") {
    // (t^2+t+1)^2 (t-3)
    KPoly f = poly::mul(poly::mul(qpoly({1, 1, 1}), qpoly({1, 1, 1})), qpoly({-3, 1}));
    auto fs = factor_poly(f);
    REQUIRE(fs.size() == 3);
    CHECK(reassemble(fs) == f);
    int quad = 0, lin = 0;
    for (const auto& g : fs) (poly::deg(g) == 2 ? quad : lin)++;
    CHECK(quad == 2);
    CHECK(lin == 1);

    // content is dropped and the result is monic
    auto fc = factor_poly(qpoly({-6, 0, 6}));
    REQUIRE(fc.size() == 2);
    CHECK(reassemble(fc) == qpoly({-1, 0, 1}));
}

TEST_CASE("rational factorization: recombination stress") {
    // (t^3+t+1)(t^3+t^2+1): both cubics irreducible.
    KPoly f = poly::mul(qpoly({1, 1, 0, 1}), qpoly({1, 0, 1, 1}));
    auto fs = factor_poly(f);
    REQUIRE(fs.size() == 2);
    CHECK(poly::deg(fs[0]) == 3);
    CHECK(poly::deg(fs[1]) == 3);
    CHECK(reassemble(fs) == f);

    // (t^2-2)(t^2-3)(t^2-6): splits further modulo every prime.
    KPoly g = poly::mul(poly::mul(qpoly({-2, 0, 1}), qpoly({-3, 0, 1})), qpoly({-6, 0, 1}));
    auto gs = factor_poly(g);
    REQUIRE(gs.size() == 3);
    for (const auto& q : gs) CHECK(poly::deg(q) == 2);
    CHECK(reassemble(gs) == g);
}

TEST_CASE("rational roots") {
    auto r = roots_in_field(qpoly({6, -5, 1}));  // (t-2)(t-3)
    REQUIRE(r.size() == 2);
    CHECK(((r[0] == cyc(2) && r[1] == cyc(3)) || (r[0] == cyc(3) && r[1] == cyc(2))));
    CHECK(roots_in_field(qpoly({1, 0, 1})).empty());
}

TEST_CASE("factorization over cyclotomic extensions") {
    const CycField* q4 = CycField::of(4);
    const CycField* q3 = CycField::of(3);
    const CycField* q8 = CycField::of(8);
    const CycField* q12 = CycField::of(12);

    // t^2+1 splits over Q(i)
    auto fs = factor_poly(qpoly({1, 0, 1}), q4);
    REQUIRE(fs.size() == 2);
    auto roots = roots_in_field(qpoly({1, 0, 1}), q4);
    REQUIRE(roots.size() == 2);
    for (const auto& r : roots) CHECK(r * r == cyc(-1));

    // t^2-2 stays irreducible over Q(i)
    CHECK(factor_poly(qpoly({-2, 0, 1}), q4).size() == 1);

    // t^2+t+1 splits over Q(zeta_3)
    auto r3 = roots_in_field(qpoly({1, 1, 1}), q3);
    REQUIRE(r3.size() == 2);
    for (const auto& r : r3) CHECK(r * r + r + cyc(1) == CycScalar());

    // t^4+1 splits completely over Q(zeta_8)
    auto r8 = roots_in_field(qpoly({1, 0, 0, 0, 1}), q8);
    REQUIRE(r8.size() == 4);
    for (const auto& r : r8) {
        CycScalar r4 = r * r * r * r;
        CHECK(r4 == cyc(-1));
    }

    // sqrt(3) lives in Q(zeta_12)
    auto r12 = roots_in_field(qpoly({-3, 0, 1}), q12);
    REQUIRE(r12.size() == 2);
    for (const auto& r : r12) CHECK(r * r == cyc(3));

    // mixed-coefficient input: (t - zeta_4)(t + zeta_4) = t^2 + 1 over Q(i)
    KPoly mixed = poly::mul(KPoly{-zeta(4), cyc(1)}, KPoly{zeta(4), cyc(1)});
    auto ms = factor_poly(mixed);
    REQUIRE(ms.size() == 2);
    CHECK(reassemble(ms) == mixed);
    for (const auto& g : ms) CHECK(poly::deg(g) == 1);
}

TEST_CASE("factorization results are themselves irreducible") {
    for (const auto& g : factor_poly(qpoly({-1, 0, 0, 0, 0, 0, 1}))) {
        CHECK(factor_poly(g).size() == 1);
    }
    const CycField* q8 = CycField::of(8);
    for (const auto& g : factor_poly(qpoly({1, 0, 0, 0, 1}), q8)) {
        CHECK(factor_poly(g, q8).size() == 1);
    }
}
