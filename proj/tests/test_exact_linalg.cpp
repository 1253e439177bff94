#include "rackh/snf.hpp"

#include <doctest.h>

#include <random>

using namespace rackh;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>> &rows) {
    IntMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

bool diagonal_chain_ok(const IntMatrix &d) {
    int nmin = std::min(d.rows(), d.cols());
    for (int i = 0; i < d.rows(); ++i)
        for (int j = 0; j < d.cols(); ++j)
            if (i != j && d.at(i, j) != 0) return false;
    for (int i = 0; i + 1 < nmin; ++i) {
        if (d.at(i, i) < 0 || d.at(i + 1, i + 1) < 0) return false;
        if (d.at(i, i) == 0 && d.at(i + 1, i + 1) != 0) return false;
        if (d.at(i, i) != 0 && d.at(i + 1, i + 1) % d.at(i, i) != 0) return false;
    }
    return true;
}

} // namespace

TEST_CASE("determinant on small matrices") {
    CHECK(determinant(from_rows({{2, 0}, {0, 3}})) == 6);
    CHECK(determinant(from_rows({{0, 1}, {1, 0}})) == -1);
    CHECK(determinant(from_rows({{1, 2}, {2, 4}})) == 0);
    CHECK(determinant(IntMatrix::identity(5)) == 1);
    CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("smith normal form of diag(2,3) is diag(1,6)") {
    IntMatrix m = from_rows({{2, 0}, {0, 3}});
    SnfResult s = snf(m);
    CHECK(s.D.at(0, 0) == 1);
    CHECK(s.D.at(1, 1) == 6);
    CHECK(s.U * m * s.V == s.D);
}

TEST_CASE("smith normal form: identity, zero, and non-square") {
    CHECK(snf(IntMatrix::identity(4)).D == IntMatrix::identity(4));
    IntMatrix z(3, 2);
    CHECK(snf(z).D == z);
    IntMatrix m = from_rows({{4, 6, 10}});
    SnfResult s = snf(m);
    CHECK(s.D.at(0, 0) == 2);
    CHECK(s.U * m * s.V == s.D);
}

TEST_CASE("smith normal form on seeded random matrices") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 60; ++trial) {
        int r = 1 + static_cast<int>(rng() % 8), c = 1 + static_cast<int>(rng() % 8);
        IntMatrix m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m.at(i, j) = static_cast<long>(rng() % 11) - 5;
        SnfResult s = snf(m);
        CHECK(s.U * m * s.V == s.D);
        CHECK(diagonal_chain_ok(s.D));
        Int du = determinant(s.U), dv = determinant(s.V);
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));
    }
}

TEST_CASE("kernel basis spans the integer kernel") {
    IntMatrix m = from_rows({{1, 1, 1}});
    IntMatrix k = kernel_basis(m);
    CHECK(k.cols() == 2);
    CHECK((m * k).is_zero());
    CHECK(kernel_basis(IntMatrix::identity(3)).cols() == 0);
    IntMatrix z(2, 4);
    CHECK(kernel_basis(z).cols() == 4);
}

TEST_CASE("cohomology invariants of simple pairs") {
    // 0 -> Z^2 -> 0 : betti 2
    AbelianInvariants inv = cohomology_invariants(IntMatrix(3, 2), IntMatrix(2, 0));
    CHECK(inv.betti == 2);
    CHECK(inv.torsion.empty());
    // ker(0: Z -> Z) / im(2: Z -> Z) = Z/2
    IntMatrix two(1, 1);
    two.at(0, 0) = 2;
    inv = cohomology_invariants(IntMatrix(1, 1), two);
    CHECK(inv.betti == 0);
    CHECK(inv.torsion == std::vector<Int>{2});
    // rejects non-complexes
    IntMatrix one = IntMatrix::identity(1);
    CHECK_THROWS_AS(cohomology_invariants(one, one), std::invalid_argument);
}

TEST_CASE("invariants with entries taken mod m") {
    // x in Z/4 with no conditions and no relations: Z/4
    AbelianInvariants inv = quotient_invariants_mod(IntMatrix(1, 1), IntMatrix(1, 0), 4);
    CHECK(inv.betti == 0);
    CHECK(inv.torsion == std::vector<Int>{4});
    // multiplication by 2 on Z/4: the kernel {0,2} equals the relations, so the
    // quotient is trivial
    IntMatrix two(1, 1);
    two.at(0, 0) = 2;
    inv = quotient_invariants_mod(two, two, 4);
    CHECK(inv.betti == 0);
    CHECK(inv.torsion.empty());
    // all of Z/4 modulo the image of doubling -> Z/2
    inv = quotient_invariants_mod(IntMatrix(1, 1), two, 4);
    CHECK(inv.betti == 0);
    CHECK(inv.torsion == std::vector<Int>{2});
    CHECK_THROWS_AS(quotient_invariants_mod(IntMatrix::identity(1), IntMatrix::identity(1), 4),
                    std::invalid_argument);
}

TEST_CASE("rank and nullspace over prime fields") {
    IntMatrix m = from_rows({{2, 0}, {0, 3}});
    CHECK(rank_mod_p(m, 2) == 1);
    CHECK(rank_mod_p(m, 3) == 1);
    CHECK(rank_mod_p(m, 5) == 2);
    CHECK_THROWS_AS(rank_mod_p(m, 4), std::invalid_argument);
    CHECK_THROWS_AS(rank_mod_p(m, 1), std::invalid_argument);

    IntMatrix ns = nullspace_mod_p(m, 2);
    CHECK(ns.cols() == 1);
    for (int i = 0; i < 2; ++i) {
        Int v = (m * ns).at(i, 0) % 2;
        CHECK(v == 0);
    }
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        IntMatrix a(4, 5);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 5; ++j) a.at(i, j) = static_cast<long>(rng() % 7) - 3;
        for (long p : {2L, 3L, 5L}) {
            IntMatrix n = nullspace_mod_p(a, p);
            CHECK(n.cols() == 5 - rank_mod_p(a, p));
            IntMatrix an = a * n;
            for (int i = 0; i < an.rows(); ++i)
                for (int j = 0; j < an.cols(); ++j) CHECK(an.at(i, j) % p == 0);
        }
    }
}

TEST_CASE("mod-p rank is bounded by the integer rank") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        IntMatrix a(5, 5);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) a.at(i, j) = static_cast<long>(rng() % 11) - 5;
        SnfResult s = snf(a);
        int rank_z = 0;
        while (rank_z < 5 && s.D.at(rank_z, rank_z) != 0) ++rank_z;
        for (long p : {2L, 3L}) CHECK(rank_mod_p(a, p) <= rank_z);
    }
}
