#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "orbicat/irreps.hpp"

using namespace orbicat;

namespace {

CycScalar zeta(long n, long t = 1) { return CycScalar::root_of_unity(n, t); }

std::vector<long> irrep_dims(const RepTheory& rt) {
    std::vector<long> dims;
    for (const auto& v : rt.irreps) dims.push_back(v.dim);
    return dims;
}

CycScalar pair(const Mat& functional, const Mat& coords) {
    return mat_mul(functional, coords).at(0, 0);
}

void check_fourier_toolkit(const RepTheory& rt) {
    long n = rt.hopf.dim;
    long r = rt.simple_count();
    // rho_W(unit_{V,ij}) = delta_{VW} E_{ij}
    for (long v = 0; v < r; ++v) {
        long d = rt.dim_of(v);
        for (long i = 0; i < d; ++i)
            for (long j = 0; j < d; ++j) {
                const Mat& coords = rt.matrix_units[v][i * d + j];
                for (long w = 0; w < r; ++w) {
                    Mat got = rho_of_vec(rt.irreps[w], coords);
                    Mat want = (w == v) ? Mat::unit(rt.dim_of(w), rt.dim_of(w), i, j)
                                        : Mat::zero(rt.dim_of(w), rt.dim_of(w));
                    CHECK(got == want);
                }
            }
    }
    // biorthogonality with the transpose pairing, scaled by the dimension
    for (long v = 0; v < r; ++v) {
        long dv = rt.dim_of(v);
        for (long i = 0; i < dv; ++i)
            for (long j = 0; j < dv; ++j)
                for (long w = 0; w < r; ++w) {
                    long dw = rt.dim_of(w);
                    for (long k = 0; k < dw; ++k)
                        for (long l = 0; l < dw; ++l) {
                            CycScalar p = pair(rt.dual_functionals[v][i * dv + j],
                                               rt.matrix_units[w][k * dw + l]);
                            bool hit = (v == w && k == j && l == i);
                            CHECK(p == (hit ? cyc(dv) : cyc(0)));
                        }
                }
    }
    // Fourier inversion: every basis element is recovered from its blocks.
    for (long t = 0; t < n; ++t) {
        Mat recon(n, 1);
        for (long v = 0; v < r; ++v) {
            long d = rt.dim_of(v);
            Mat block = rt.irreps[v].action[t];
            for (long i = 0; i < d; ++i)
                for (long j = 0; j < d; ++j)
                    if (!block.at(i, j).is_zero())
                        recon += rt.matrix_units[v][i * d + j].scaled(block.at(i, j));
        }
        CHECK(recon == Mat::unit(n, 1, t, 0));
    }
    // The integral acts as the projection onto the trivial block.
    for (long v = 0; v < r; ++v) {
        Mat got = rho_of_vec(rt.irreps[v], rt.integral);
        CHECK(got == (v == 0 ? Mat::identity(1) : Mat::zero(rt.dim_of(v), rt.dim_of(v))));
    }
    // The dual-side integral really is the integral of the dual algebra.
    auto dual_int = integral_element(dual_hopf(rt.hopf));
    REQUIRE(dual_int.has_value());
    CHECK(rt.dual_integral == dual_int->transpose());
}

}  // namespace

TEST_CASE("symmetric group on three letters: simples and characters") {
    RepTheory rt = rep_theory(*hopf_preset("group:S3"));
    REQUIRE(irrep_dims(rt) == std::vector<long>{1, 1, 2});
    CHECK(rt.irreps[0].label == "V0");

    // trivial character
    for (long t = 0; t < 6; ++t) CHECK(rt.irreps[0].character[t] == cyc(1));
    // sign character: -1 exactly on the three reflections
    std::vector<long> sign = {1, 1, 1, -1, -1, -1};
    for (long t = 0; t < 6; ++t) CHECK(rt.irreps[1].character[t] == cyc(sign[t]));
    // two-dimensional character: 2, -1, -1, 0, 0, 0
    std::vector<long> two = {2, -1, -1, 0, 0, 0};
    for (long t = 0; t < 6; ++t) CHECK(rt.irreps[2].character[t] == cyc(two[t]));

    check_fourier_toolkit(rt);

    // the dimension-scaled transpose pairing on the plane: <f_{01}, e_{10}> = 2
    CHECK(pair(rt.dual_functionals[2][0 * 2 + 1], rt.matrix_units[2][1 * 2 + 0]) == cyc(2));
    CHECK(pair(rt.dual_functionals[2][0 * 2 + 1], rt.matrix_units[2][0 * 2 + 1]).is_zero());
}

TEST_CASE("cyclic group of order four: four characters through i") {
    RepTheory rt = rep_theory(*hopf_preset("group:Z4"));
    REQUIRE(irrep_dims(rt) == std::vector<long>{1, 1, 1, 1});
    // the generator acts by a fourth root of unity, all four appearing
    std::vector<CycScalar> vals;
    for (const auto& v : rt.irreps) vals.push_back(v.action[1].at(0, 0));
    auto contains = [&](const CycScalar& c) {
        for (const auto& x : vals)
            if (x == c) return true;
        return false;
    };
    CHECK(contains(cyc(1)));
    CHECK(contains(cyc(-1)));
    CHECK(contains(zeta(4)));
    CHECK(contains(zeta(4, 3)));
    check_fourier_toolkit(rt);
}

TEST_CASE("klein four group and the commutative function algebra") {
    RepTheory rt = rep_theory(*hopf_preset("group:Z2xZ2"));
    REQUIRE(irrep_dims(rt) == std::vector<long>{1, 1, 1, 1});
    check_fourier_toolkit(rt);

    RepTheory rf = rep_theory(*hopf_preset("function:S3"));
    REQUIRE(irrep_dims(rf) == std::vector<long>{1, 1, 1, 1, 1, 1});
    check_fourier_toolkit(rf);
}

TEST_CASE("dihedral and quaternion groups: four lines and a plane") {
    RepTheory rd = rep_theory(*hopf_preset("group:D4"));
    REQUIRE(irrep_dims(rd) == std::vector<long>{1, 1, 1, 1, 2});
    check_fourier_toolkit(rd);

    RepTheory rq = rep_theory(*hopf_preset("group:Q8"));
    REQUIRE(irrep_dims(rq) == std::vector<long>{1, 1, 1, 1, 2});
    check_fourier_toolkit(rq);
    // the plane is a faithful action: -1 acts by -I
    CHECK(rq.irreps[4].action[1] == Mat::identity(2).scaled(cyc(-1)));
}

TEST_CASE("the eight-dimensional self-dual example: four lines and a plane") {
    RepTheory rt = rep_theory(kac_paljutkin8());
    REQUIRE(irrep_dims(rt) == std::vector<long>{1, 1, 1, 1, 2});
    check_fourier_toolkit(rt);
}
