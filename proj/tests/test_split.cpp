#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <vector>

#include "orbicat/split.hpp"

using namespace orbicat;

namespace {

CycScalar zeta(long n, long t = 1) { return CycScalar::root_of_unity(n, t); }

// Left-multiplication modules of a finite group, from its multiplication
// table: (L_g)(e_h) = e_{g h}.
ActionModule regular_module(const std::vector<std::vector<long>>& table) {
    long n = static_cast<long>(table.size());
    ActionModule m;
    for (long g = 0; g < n; ++g) {
        Mat l = Mat::zero(n, n);
        for (long h = 0; h < n; ++h) l.at(table[g][h], h) = cyc(1);
        m.action.push_back(std::move(l));
    }
    return m;
}

std::vector<std::vector<long>> cyclic_table(long n) {
    std::vector<std::vector<long>> t(n, std::vector<long>(n));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return t;
}

// The symmetric group on three letters via explicit permutation composition.
std::vector<std::vector<long>> s3_table() {
    using Perm = std::array<long, 3>;
    std::vector<Perm> elems = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                               {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    auto index_of = [&](const Perm& p) {
        for (std::size_t i = 0; i < elems.size(); ++i)
            if (elems[i] == p) return static_cast<long>(i);
        throw std::logic_error("unreachable");
    };
    std::vector<std::vector<long>> t(6, std::vector<long>(6));
    for (long a = 0; a < 6; ++a)
        for (long b = 0; b < 6; ++b) {
            Perm c;
            for (long i = 0; i < 3; ++i) c[i] = elems[a][elems[b][i]];
            t[a][b] = index_of(c);
        }
    return t;
}

std::vector<long> piece_dims(const std::vector<SubmodulePiece>& ps) {
    std::vector<long> dims;
    for (const auto& p : ps) dims.push_back(p.mod.dim());
    std::sort(dims.begin(), dims.end());
    return dims;
}

void check_resolution(const ActionModule& m, const std::vector<SubmodulePiece>& ps) {
    long n = m.dim();
    Mat total = Mat::zero(n, n);
    for (const auto& p : ps) {
        CHECK(mat_mul(p.proj, p.inj) == Mat::identity(p.mod.dim()));
        total += mat_mul(p.inj, p.proj);
    }
    CHECK(total == Mat::identity(n));
    // Invariance: no action component leaks between different summands.
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = 0; j < ps.size(); ++j) {
            if (i == j) continue;
            for (const Mat& act : m.action)
                CHECK(mat_mul(ps[i].proj, mat_mul(act, ps[j].inj)).is_zero());
        }
}

}  // namespace

TEST_CASE("two-point function algebra splits into distinct lines") {
    ActionModule m;
    m.action = {Mat{{cyc(1), cyc(0)}, {cyc(0), cyc(0)}},
                Mat{{cyc(0), cyc(0)}, {cyc(0), cyc(1)}}};
    auto ps = decompose_module(m, CycField::of(1));
    REQUIRE(ps.size() == 2);
    CHECK(piece_dims(ps) == std::vector<long>{1, 1});
    check_resolution(m, ps);
    CHECK_FALSE(modules_isomorphic(ps[0].mod, ps[1].mod));
}

TEST_CASE("the natural module of a full matrix algebra is irreducible") {
    ActionModule m;
    m.action = {Mat::unit(2, 2, 0, 0), Mat::unit(2, 2, 0, 1), Mat::unit(2, 2, 1, 0),
                Mat::unit(2, 2, 1, 1)};
    auto ps = decompose_module(m, CycField::of(1));
    REQUIRE(ps.size() == 1);
    CHECK(ps[0].mod.dim() == 2);
    CHECK(hom_dim(m, m) == 1);
}

TEST_CASE("the regular module of a full matrix algebra has multiplicity two") {
    // Left multiplication by E_{ab} on the 4-dimensional space of 2x2
    // matrices, row-major: E_{ab} E_{cd} = delta_{bc} E_{ad}.
    auto unit_index = [](long a, long b) { return a * 2 + b; };
    ActionModule m;
    for (long a = 0; a < 2; ++a)
        for (long b = 0; b < 2; ++b) {
            Mat l = Mat::zero(4, 4);
            for (long c = 0; c < 2; ++c)
                for (long d = 0; d < 2; ++d)
                    if (b == c) l.at(unit_index(a, d), unit_index(c, d)) = cyc(1);
            m.action.push_back(std::move(l));
        }
    auto ps = decompose_module(m, CycField::of(1));
    REQUIRE(ps.size() == 2);
    CHECK(piece_dims(ps) == std::vector<long>{2, 2});
    check_resolution(m, ps);
    CHECK(modules_isomorphic(ps[0].mod, ps[1].mod));
}

TEST_CASE("cyclic group of order three: split field versus rational field") {
    ActionModule m = regular_module(cyclic_table(3));

    auto over_q3 = decompose_module(m, CycField::of(3));
    REQUIRE(over_q3.size() == 3);
    CHECK(piece_dims(over_q3) == std::vector<long>{1, 1, 1});
    check_resolution(m, over_q3);
    // The generator acts by 1, zeta_3, zeta_3^2 across the three lines.
    std::vector<CycScalar> eigen;
    for (const auto& p : over_q3)
        eigen.push_back(mat_mul(p.proj, mat_mul(m.action[1], p.inj)).at(0, 0));
    std::sort(eigen.begin(), eigen.end(),
              [](const CycScalar& a, const CycScalar& b) { return CycScalar::compare(a, b) < 0; });
    std::vector<CycScalar> want = {cyc(1), zeta(3), zeta(3, 2)};
    std::sort(want.begin(), want.end(),
              [](const CycScalar& a, const CycScalar& b) { return CycScalar::compare(a, b) < 0; });
    CHECK(eigen == want);

    // Over the rationals the plane with an irreducible action stays whole;
    // its endomorphisms form a quadratic field, which must be certified, not
    // reported as a stall.
    auto over_q = decompose_module(m, CycField::of(1));
    REQUIRE(over_q.size() == 2);
    CHECK(piece_dims(over_q) == std::vector<long>{1, 2});
    check_resolution(m, over_q);
}

TEST_CASE("klein four group splits into four rational lines") {
    std::vector<std::vector<long>> t(4, std::vector<long>(4));
    for (long i = 0; i < 4; ++i)
        for (long j = 0; j < 4; ++j) t[i][j] = i ^ j;
    ActionModule m = regular_module(t);
    auto ps = decompose_module(m, CycField::of(1));
    REQUIRE(ps.size() == 4);
    CHECK(piece_dims(ps) == std::vector<long>{1, 1, 1, 1});
    check_resolution(m, ps);
}

TEST_CASE("symmetric group on three letters: 1 + 1 + 2 + 2") {
    ActionModule m = regular_module(s3_table());
    auto ps = decompose_module(m, CycField::of(1));
    REQUIRE(ps.size() == 4);
    CHECK(piece_dims(ps) == std::vector<long>{1, 1, 2, 2});
    check_resolution(m, ps);

    std::vector<const SubmodulePiece*> lines, planes;
    for (const auto& p : ps)
        (p.mod.dim() == 1 ? lines : planes).push_back(&p);
    REQUIRE(lines.size() == 2);
    REQUIRE(planes.size() == 2);
    CHECK_FALSE(modules_isomorphic(lines[0]->mod, lines[1]->mod));
    CHECK(modules_isomorphic(planes[0]->mod, planes[1]->mod));
    // Schur: irreducible endomorphisms are scalars over a splitting field.
    CHECK(hom_dim(planes[0]->mod, planes[0]->mod) == 1);
    CHECK(hom_dim(planes[0]->mod, lines[0]->mod) == 0);
}
