#include "orbicat/group.hpp"

#include <array>
#include <numeric>
#include <stdexcept>

namespace orbicat {

long FiniteGroup::inverse(long g) const {
    for (long h = 0; h < order(); ++h)
        if (table[g][h] == 0) return h;
    throw std::logic_error("group element without inverse");
}

long FiniteGroup::element_order(long g) const {
    long x = g, k = 1;
    while (x != 0) {
        x = table[g][x];
        ++k;
    }
    return k;
}

long FiniteGroup::exponent() const {
    long e = 1;
    for (long g = 0; g < order(); ++g) e = std::lcm(e, element_order(g));
    return e;
}

bool FiniteGroup::is_valid() const {
    long n = order();
    for (long g = 0; g < n; ++g) {
        if (table[g][0] != g || table[0][g] != g) return false;
        bool has_inverse = false;
        for (long h = 0; h < n; ++h)
            if (table[g][h] == 0) has_inverse = true;
        if (!has_inverse) return false;
    }
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b)
            for (long c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]]) return false;
    return true;
}

FiniteGroup trivial_group() { return {"trivial", {{0}}, {"e"}}; }

FiniteGroup cyclic_group(long n) {
    if (n < 1) throw std::invalid_argument("cyclic_group: order must be positive");
    FiniteGroup g;
    g.name = "Z" + std::to_string(n);
    g.table.assign(n, std::vector<long>(n));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) g.table[i][j] = (i + j) % n;
    g.element_names.push_back("e");
    for (long i = 1; i < n; ++i)
        g.element_names.push_back(i == 1 ? "g" : "g" + std::to_string(i));
    return g;
}

FiniteGroup klein_four_group() {
    FiniteGroup g;
    g.name = "Z2xZ2";
    g.table.assign(4, std::vector<long>(4));
    for (long i = 0; i < 4; ++i)
        for (long j = 0; j < 4; ++j) g.table[i][j] = i ^ j;
    g.element_names = {"e", "a", "b", "ab"};
    return g;
}

FiniteGroup symmetric_group_3() {
    // Permutations of {0,1,2}; product g h applies h first.
    using Perm = std::array<long, 3>;
    std::vector<Perm> elems = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                               {1, 0, 2}, {2, 1, 0}, {0, 2, 1}};
    FiniteGroup g;
    g.name = "S3";
    g.element_names = {"e", "r", "r2", "s", "rs", "r2s"};
    g.table.assign(6, std::vector<long>(6));
    auto index_of = [&](const Perm& p) {
        for (std::size_t i = 0; i < elems.size(); ++i)
            if (elems[i] == p) return static_cast<long>(i);
        throw std::logic_error("unreachable");
    };
    for (long a = 0; a < 6; ++a)
        for (long b = 0; b < 6; ++b) {
            Perm c;
            for (long i = 0; i < 3; ++i) c[i] = elems[a][elems[b][i]];
            g.table[a][b] = index_of(c);
        }
    return g;
}

FiniteGroup dihedral_group_4() {
    // r^4 = s^2 = e, s r s = r^{-1}; elements r^a s^b with a < 4, b < 2.
    FiniteGroup g;
    g.name = "D4";
    g.table.assign(8, std::vector<long>(8));
    auto idx = [](long a, long b) { return a + 4 * b; };
    for (long a1 = 0; a1 < 4; ++a1)
        for (long b1 = 0; b1 < 2; ++b1)
            for (long a2 = 0; a2 < 4; ++a2)
                for (long b2 = 0; b2 < 2; ++b2) {
                    // (r^{a1} s^{b1})(r^{a2} s^{b2}) = r^{a1 + (-1)^{b1} a2} s^{b1+b2}
                    long a = ((a1 + (b1 ? 4 - a2 : a2)) % 4 + 4) % 4;
                    long b = (b1 + b2) % 2;
                    g.table[idx(a1, b1)][idx(a2, b2)] = idx(a, b);
                }
    g.element_names = {"e", "r", "r2", "r3", "s", "rs", "r2s", "r3s"};
    return g;
}

FiniteGroup quaternion_group_8() {
    // {1, -1, i, -i, j, -j, k, -k}; the sign occupies the low bit.
    FiniteGroup g;
    g.name = "Q8";
    g.element_names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    g.table.assign(8, std::vector<long>(8));
    // base symbols 0:1, 1:i, 2:j, 3:k; base products with signs
    auto base_mul = [](long x, long y) -> std::pair<long, long> {
        if (x == 0) return {y, 0};
        if (y == 0) return {x, 0};
        if (x == y) return {0, 1};  // i*i = j*j = k*k = -1
        static const long out[4][4] = {{0, 1, 2, 3},
                                       {1, 0, 3, 2},
                                       {2, 3, 0, 1},
                                       {3, 2, 1, 0}};
        // the cyclic order i -> j -> k -> i carries the positive sign
        bool positive = (x == 1 && y == 2) || (x == 2 && y == 3) || (x == 3 && y == 1);
        return {out[x][y], positive ? 0 : 1};
    };
    for (long x = 0; x < 4; ++x)
        for (long sx = 0; sx < 2; ++sx)
            for (long y = 0; y < 4; ++y)
                for (long sy = 0; sy < 2; ++sy) {
                    auto [b, sb] = base_mul(x, y);
                    long sign = (sx + sy + sb) % 2;
                    g.table[2 * x + sx][2 * y + sy] = 2 * b + sign;
                }
    return g;
}

}  // namespace orbicat
