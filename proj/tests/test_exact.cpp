#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "orbicat/cyclotomic.hpp"
#include "orbicat/matrix.hpp"
#include "orbicat/rational.hpp"

using namespace orbicat;

namespace {

// Independent determinant oracle: Leibniz sum over all permutations, sign by
// inversion count.  Deliberately shares no code with the elimination-based
// routines under test.
CycScalar det_leibniz(const Mat& m) {
    long n = m.rows();
    std::vector<long> p(n);
    std::iota(p.begin(), p.end(), 0);
    CycScalar total;
    do {
        long inv = 0;
        for (long i = 0; i < n; ++i)
            for (long j = i + 1; j < n; ++j)
                if (p[i] > p[j]) ++inv;
        CycScalar term = cyc(inv % 2 == 0 ? 1 : -1);
        for (long i = 0; i < n; ++i) term *= m.at(i, p[i]);
        total += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

Mat minor_of(const Mat& m, long drop_i, long drop_j) {
    Mat out(m.rows() - 1, m.cols() - 1);
    for (long i = 0, oi = 0; i < m.rows(); ++i) {
        if (i == drop_i) continue;
        for (long j = 0, oj = 0; j < m.cols(); ++j) {
            if (j == drop_j) continue;
            out.at(oi, oj) = m.at(i, j);
            ++oj;
        }
        ++oi;
    }
    return out;
}

// Independent inverse oracle: adjugate over determinant, cofactors by minors.
Mat inverse_adjugate(const Mat& m) {
    long n = m.rows();
    Mat adj(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            CycScalar c = det_leibniz(minor_of(m, i, j));
            if ((i + j) % 2 != 0) c = -c;
            adj.at(j, i) = c;  // transposed
        }
    return adj.scaled(det_leibniz(m).inverse());
}

CycScalar zeta(long n, long t = 1) { return CycScalar::root_of_unity(n, t); }

CycScalar pow_scalar(CycScalar base, long e) {
    CycScalar r = cyc(1);
    for (long i = 0; i < e; ++i) r *= base;
    return r;
}

// Deterministic pseudo-random matrix with small mixed-conductor entries.
Mat sample_matrix(long rows, long cols, unsigned seed) {
    std::minstd_rand rng(seed);
    Mat m(rows, cols);
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j) {
            long a = static_cast<long>(rng() % 7) - 3;
            switch (rng() % 4) {
                case 0: m.at(i, j) = cyc(a); break;
                case 1: m.at(i, j) = cyc(a) * zeta(4); break;
                case 2: m.at(i, j) = cyc(a) * zeta(3); break;
                default: m.at(i, j) = cyc(a, 2); break;
            }
        }
    return m;
}

}  // namespace

TEST_CASE("rational string round trip and strict parsing") {
    CHECK(to_string(rat(5)) == "5");
    CHECK(to_string(rat(-7, 3)) == "-7/3");
    CHECK(to_string(rat(0)) == "0");
    CHECK(to_string(rat(4, 6)) == "2/3");

    for (const char* s : {"5", "-7/3", "0", "12/35"}) {
        auto q = parse_rational(s);
        REQUIRE(q.has_value());
        CHECK(to_string(*q) == s);
    }
    for (const char* s : {"", "1/0", "a", "1/2/3", "+3", "1/", "/2", "--1", "1 /2"}) {
        CHECK_FALSE(parse_rational(s).has_value());
    }
}

TEST_CASE("euler phi and cyclotomic polynomials") {
    long expected[] = {1, 1, 2, 2, 4, 2, 6, 4, 6, 4};
    for (long n = 1; n <= 10; ++n) CHECK(euler_phi(n) == expected[n - 1]);
    CHECK(euler_phi(12) == 4);

    auto poly_is = [](long n, std::vector<long> want) {
        auto got = cyclotomic_polynomial(n);
        REQUIRE(got.size() == want.size());
        for (size_t i = 0; i < want.size(); ++i) CHECK(got[i] == want[i]);
    };
    poly_is(1, {-1, 1});
    poly_is(2, {1, 1});
    poly_is(3, {1, 1, 1});
    poly_is(4, {1, 0, 1});
    poly_is(6, {1, -1, 1});
    poly_is(12, {1, 0, -1, 0, 1});
}

TEST_CASE("roots of unity satisfy their defining relations") {
    CHECK(zeta(1, 0) == cyc(1));
    CHECK(pow_scalar(zeta(6), 3) == cyc(-1));
    CHECK(pow_scalar(zeta(5), 5) == cyc(1));

    CycScalar s3 = cyc(1) + zeta(3) + pow_scalar(zeta(3), 2);
    CHECK(s3.is_zero());
    CycScalar s4 = cyc(1) + zeta(4) + pow_scalar(zeta(4), 2) + pow_scalar(zeta(4), 3);
    CHECK(s4.is_zero());
}

TEST_CASE("conductor unification embeds compatibly") {
    // In conductor 12: zeta_3 = zeta_12^4 and zeta_4 = zeta_12^3.
    CHECK(zeta(3) == zeta(12, 4));
    CHECK(zeta(4) == zeta(12, 3));
    CHECK(zeta(3) * zeta(4) == zeta(12, 7));
    CHECK(zeta(8, 2) == zeta(4));

    CycScalar mixed = zeta(3) + zeta(4);
    CHECK(mixed.field()->conductor() == 12);
    CHECK((mixed - zeta(4)).restrict_to(3).value() == zeta(3));
    CHECK_FALSE(mixed.restrict_to(3).has_value());
    CHECK_FALSE(mixed.restrict_to(4).has_value());

    // Round trip through a bigger field is the identity.
    CycScalar x = cyc(2, 3) + zeta(3);
    CycScalar lifted = x.lift_to(CycField::of(24));
    CHECK(lifted.restrict_to(3).value() == x);
}

TEST_CASE("field inverses and division") {
    CycScalar a = cyc(1) + zeta(5);
    CHECK(a * a.inverse() == cyc(1));

    CycScalar x = cyc(2, 3) + pow_scalar(zeta(7), 2);
    CycScalar y = cyc(1) - zeta(7);
    CHECK((x / y) * y == x);
    CHECK_THROWS(CycScalar().inverse());
}

TEST_CASE("galois twists are ring maps; conjugation gives rational norms") {
    CycScalar x = cyc(1) + cyc(2) * zeta(5);
    CycScalar y = pow_scalar(zeta(5), 2) + cyc(1, 3);
    CHECK((x * y).galois(2) == x.galois(2) * y.galois(2));
    CHECK((x + y).galois(3) == x.galois(3) + y.galois(3));

    CycScalar z = cyc(3) + cyc(4) * zeta(4);  // 3 + 4i
    CycScalar norm = z * z.conj();
    REQUIRE(norm.is_rational());
    CHECK(norm.rational_value() == rat(25));
}

TEST_CASE("deterministic total order on scalars") {
    std::vector<CycScalar> v = {cyc(0), cyc(1), cyc(-2), zeta(3), zeta(4),
                                zeta(3) + cyc(1), cyc(1, 2)};
    for (const auto& a : v) CHECK(CycScalar::compare(a, a) == 0);
    for (const auto& a : v)
        for (const auto& b : v)
            CHECK(CycScalar::compare(a, b) == -CycScalar::compare(b, a));
    std::vector<CycScalar> sorted = v;
    std::sort(sorted.begin(), sorted.end(), [](const CycScalar& a, const CycScalar& b) {
        return CycScalar::compare(a, b) < 0;
    });
    for (size_t i = 0; i + 1 < sorted.size(); ++i)
        CHECK(CycScalar::compare(sorted[i], sorted[i + 1]) <= 0);
}

TEST_CASE("matrix inverse matches the cofactor-adjugate oracle") {
    Mat m{{cyc(1), zeta(4)}, {cyc(0), cyc(1)}};
    Mat inv = inverse(m);
    CHECK(inv == inverse_adjugate(m));
    CHECK(mat_mul(inv, m) == Mat::identity(2));
    CHECK(inv.at(0, 1) == -zeta(4));

    Mat big{{cyc(1), zeta(3), cyc(0)},
            {cyc(2), cyc(1), zeta(4)},
            {cyc(0), cyc(1, 2), cyc(1)}};
    REQUIRE_FALSE(det_leibniz(big).is_zero());
    CHECK(inverse(big) == inverse_adjugate(big));
    CHECK(mat_mul(big, inverse(big)) == Mat::identity(3));
}

TEST_CASE("determinant matches the Leibniz oracle") {
    Mat m{{cyc(1), zeta(3), cyc(0)},
          {cyc(2), cyc(1), zeta(4)},
          {cyc(0), cyc(1, 2), cyc(1)}};
    CHECK(det(m) == det_leibniz(m));
    Mat u{{cyc(1), zeta(4)}, {cyc(0), cyc(1)}};
    CHECK(det(u) == cyc(1));
    Mat singular{{cyc(1), cyc(2)}, {cyc(2), cyc(4)}};
    CHECK(det(singular).is_zero());
    CHECK_THROWS(inverse(singular));
}

TEST_CASE("parallel and serial products agree bitwise") {
    Mat a = sample_matrix(7, 5, 11);
    Mat b = sample_matrix(5, 6, 23);
    CHECK(mat_mul(a, b) == mat_mul_serial(a, b));

    Mat c = sample_matrix(20, 20, 37);
    Mat d = sample_matrix(20, 20, 41);
    CHECK(mat_mul(c, d) == mat_mul_serial(c, d));

    Mat z = Mat::zero(5, 7);
    CHECK(mat_mul(a, Mat::zero(5, 4)).is_zero());
    CHECK(mat_mul(z, sample_matrix(7, 3, 5)).is_zero());
}

TEST_CASE("kronecker product is functorial") {
    Mat a = sample_matrix(2, 3, 1);
    Mat b = sample_matrix(3, 2, 2);
    Mat c = sample_matrix(3, 2, 3);
    Mat d = sample_matrix(2, 3, 4);
    CHECK(kron(a, b).rows() == 6);
    CHECK(kron(a, b).cols() == 6);
    CHECK(mat_mul(kron(a, b), kron(c, d)) == kron(mat_mul(a, c), mat_mul(b, d)));
    CHECK(kron(Mat::identity(2), Mat::identity(3)) == Mat::identity(6));
}

TEST_CASE("stacking and direct sums place blocks correctly") {
    Mat a{{cyc(1), cyc(2)}};
    Mat b{{cyc(3), cyc(4)}};
    Mat h = hstack(a, b);
    CHECK(h.rows() == 1);
    CHECK(h.cols() == 4);
    CHECK(h.at(0, 2) == cyc(3));
    Mat v = vstack(a, b);
    CHECK(v.rows() == 2);
    CHECK(v.at(1, 1) == cyc(4));
    Mat s = direct_sum(a, b);
    CHECK(s.rows() == 2);
    CHECK(s.cols() == 4);
    CHECK(s.at(0, 0) == cyc(1));
    CHECK(s.at(1, 2) == cyc(3));
    CHECK(s.at(0, 2).is_zero());
}

TEST_CASE("rref, rank, kernel, and solve are consistent") {
    Mat m = sample_matrix(4, 6, 99);
    long r = rank(m);
    Mat k = kernel_basis(m);
    CHECK(k.cols() == 6 - r);
    CHECK(mat_mul(m, k).is_zero());
    CHECK(rank(k) == k.cols());

    Mat serial = m;
    Mat parallel = m;
    auto p1 = rref_serial(serial);
    auto p2 = rref(parallel);
    CHECK(serial == parallel);
    CHECK(p1 == p2);

    // Consistent system: b in the image by construction.
    Mat x0 = sample_matrix(6, 2, 7);
    Mat b = mat_mul(m, x0);
    Mat x;
    REQUIRE(solve(m, b, x));
    CHECK(mat_mul(m, x) == b);

    // Inconsistent system.
    Mat a{{cyc(1), cyc(0)}, {cyc(0), cyc(0)}};
    Mat rhs{{cyc(0)}, {cyc(1)}};
    Mat dummy;
    CHECK_FALSE(solve(a, rhs, dummy));
}

TEST_CASE("image basis consists of pivot columns and spans the image") {
    Mat m{{cyc(1), cyc(2), cyc(3)},
          {cyc(2), cyc(4), cyc(6)},
          {cyc(0), cyc(0), zeta(4)}};
    Mat im = image_basis(m);
    CHECK(im.cols() == rank(m));
    // First pivot column is the literal first column of m.
    CHECK(im.at(0, 0) == cyc(1));
    CHECK(im.at(1, 0) == cyc(2));
    Mat x;
    CHECK(solve(im, m, x));

    Mat z = Mat::zero(3, 3);
    CHECK(image_basis(z).cols() == 0);
}

TEST_CASE("idempotent splitting satisfies both composition laws") {
    Mat e{{cyc(1, 2), cyc(1, 2)}, {cyc(1, 2), cyc(1, 2)}};
    REQUIRE(mat_mul(e, e) == e);
    auto s = split_idempotent(e);
    CHECK(mat_mul(s.proj, s.inj) == Mat::identity(1));
    CHECK(mat_mul(s.inj, s.proj) == e);

    Mat e2{{cyc(1), zeta(4)}, {cyc(0), cyc(0)}};
    REQUIRE(mat_mul(e2, e2) == e2);
    auto s2 = split_idempotent(e2);
    CHECK(mat_mul(s2.proj, s2.inj) == Mat::identity(1));
    CHECK(mat_mul(s2.inj, s2.proj) == e2);

    auto sid = split_idempotent(Mat::identity(3));
    CHECK(sid.inj == Mat::identity(3));
    auto sz = split_idempotent(Mat::zero(2, 2));
    CHECK(sz.inj.cols() == 0);
}

TEST_CASE("trace and transpose behave linearly") {
    Mat a = sample_matrix(4, 4, 13);
    Mat b = sample_matrix(4, 4, 17);
    CHECK(trace(a + b) == trace(a) + trace(b));
    CHECK(trace(mat_mul(a, b)) == trace(mat_mul(b, a)));
    CHECK(a.transpose().transpose() == a);
    CHECK(mat_mul(a, b).transpose() == mat_mul(b.transpose(), a.transpose()));
}
