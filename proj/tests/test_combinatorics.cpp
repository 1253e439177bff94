#include "rackh/permutation.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace rackh;

namespace {

long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<Permutation> all_perms(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    std::vector<Permutation> out;
    do out.emplace_back(img);
    while (std::next_permutation(img.begin(), img.end()));
    return out;
}

} // namespace

TEST_CASE("permutation basics: sign, inverse, composition") {
    CHECK(Permutation(3).sign() == 1);
    CHECK(transposition(3, 1, 2).sign() == -1);
    Permutation c = cycle_asc(4, 1, 3); // (1 2 3)
    CHECK(c(1) == 2);
    CHECK(c(2) == 3);
    CHECK(c(3) == 1);
    CHECK(c(4) == 4);
    CHECK(c.sign() == 1);
    CHECK(c.compose(c.inverse()) == Permutation(4));
    Permutation d = cycle_desc(4, 3, 1); // inverse of (1 2 3)
    CHECK(c.compose(d) == Permutation(4));
    CHECK(cycle_asc(5, 2, 2) == Permutation(5));
    for (const Permutation &s : all_perms(4))
        for (const Permutation &t : all_perms(4)) {
            CHECK(s.compose(t).sign() == s.sign() * t.sign());
            for (int i = 1; i <= 4; ++i) CHECK(s.compose(t)(i) == s(t(i)));
        }
}

TEST_CASE("blockwise concatenation") {
    Permutation a({2, 1}), b({1, 3, 2});
    Permutation c = concat(a, b);
    CHECK(c.images() == std::vector<int>{2, 1, 3, 5, 4});
    CHECK(c.sign() == a.sign() * b.sign());
    CHECK(concat(Permutation(0), b) == b);
}

TEST_CASE("shuffle counts follow binomial coefficients") {
    for (int p1 = 0; p1 <= 4; ++p1)
        for (int p2 = 0; p1 + p2 <= 8 && p2 <= 4; ++p2) {
            int n = p1 + p2;
            auto all = shuffles(p1, p2, ShuffleClass::All);
            CHECK(static_cast<long>(all.size()) == binom(n, p1));
            for (const Permutation &s : all) CHECK(is_shuffle(s, p1, p2));
            auto top = shuffles(p1, p2, ShuffleClass::TopFixed);
            auto left = shuffles(p1, p2, ShuffleClass::LeftMax);
            if (p1 >= 1 && p2 >= 1) {
                CHECK(static_cast<long>(top.size()) == binom(n - 1, p1));
                CHECK(static_cast<long>(left.size()) == binom(n - 1, p1 - 1));
                // the two classes partition all shuffles
                std::set<Permutation> seen;
                for (const Permutation &s : top) {
                    CHECK(s(n) == n);
                    seen.insert(s);
                }
                for (const Permutation &s : left) {
                    CHECK(s(p1) == n);
                    CHECK(seen.insert(s).second);
                }
                CHECK(seen.size() == all.size());
            }
        }
}

TEST_CASE("degenerate shuffle blocks") {
    for (int p = 0; p <= 3; ++p) {
        CHECK(shuffles(p, 0, ShuffleClass::All) == std::vector<Permutation>{Permutation(p)});
        CHECK(shuffles(p, 0, ShuffleClass::TopFixed) == std::vector<Permutation>{Permutation(p)});
        CHECK(shuffles(p, 0, ShuffleClass::LeftMax).empty());
        if (p > 0) {
            CHECK(shuffles(0, p, ShuffleClass::LeftMax) == std::vector<Permutation>{Permutation(p)});
            CHECK(shuffles(0, p, ShuffleClass::TopFixed).empty());
        }
    }
    CHECK(shuffles(0, 0, ShuffleClass::TopFixed) == std::vector<Permutation>{Permutation(0)});
    CHECK(shuffles(0, 0, ShuffleClass::LeftMax).empty());
}

TEST_CASE("alpha and beta reparametrize triple shuffles bijectively") {
    for (int p1 = 1; p1 <= 3; ++p1)
        for (int p2 = 1; p2 <= 3; ++p2)
            for (int p3 = 1; p1 + p2 + p3 <= 7 && p3 <= 3; ++p3) {
                int n = p1 + p2 + p3;
                std::set<Permutation> triple;
                for (const Permutation &s : all_perms(n)) {
                    bool inc = true;
                    for (int k = 1; k < n; ++k)
                        if (k != p1 && k != p1 + p2 && s(k) > s(k + 1)) inc = false;
                    if (inc) triple.insert(s);
                }
                std::set<Permutation> via_alpha, via_beta;
                for (const Permutation &s : shuffles(p1, p2 + p3, ShuffleClass::All))
                    for (const Permutation &g : shuffles(p2, p3, ShuffleClass::All)) {
                        Permutation a = alpha(s, g, p1, p2, p3);
                        CHECK(a.sign() == s.sign() * g.sign());
                        CHECK(via_alpha.insert(a).second);
                    }
                for (const Permutation &s : shuffles(p1 + p2, p3, ShuffleClass::All))
                    for (const Permutation &g : shuffles(p1, p2, ShuffleClass::All)) {
                        Permutation b = beta(s, g, p1, p2, p3);
                        CHECK(b.sign() == s.sign() * g.sign());
                        CHECK(via_beta.insert(b).second);
                    }
                CHECK(via_alpha == triple);
                CHECK(via_beta == triple);
            }
    // identity inputs reproduce the block-concatenation
    CHECK(alpha(Permutation(3), Permutation(2), 1, 1, 1) == Permutation(3));
    CHECK(beta(Permutation(3), Permutation(2), 1, 1, 1) == Permutation(3));
}

TEST_CASE("phi and psi on identity and sign bookkeeping") {
    for (int n = 1; n <= 4; ++n)
        for (int i = 1; i <= n + 1; ++i) {
            CHECK(phi(Permutation(n + 1), i) == Permutation(n));
            auto [p, si] = psi(Permutation(n + 1), i);
            CHECK(p == Permutation(n));
            CHECK(si == i);
        }
    for (const Permutation &s : all_perms(4))
        for (int i = 1; i <= 4; ++i) {
            auto [p, si] = psi(s, i);
            CHECK(si == s(i));
            CHECK(p == phi(s, i));
            CHECK(p.degree() == 3);
        }
}

TEST_CASE("nu, xi: bijections S_n x {1..n+1} -> S_{n+1}") {
    CHECK(nu(Permutation(0), 1) == Permutation(1));
    for (int n = 0; n <= 3; ++n) {
        std::set<Permutation> nu_img, xi_img;
        for (const Permutation &s : all_perms(n))
            for (int i = 1; i <= n + 1; ++i) {
                Permutation vn = nu(s, i), vx = xi(s, i);
                CHECK(vn.degree() == n + 1);
                CHECK(vx.degree() == n + 1);
                CHECK(nu_img.insert(vn).second);
                CHECK(xi_img.insert(vx).second);
                // sign transport under the change of variables
                CHECK(vn.sign() == (i % 2 ? s.sign() : -s.sign()));
                int lhs = (i % 2 ? -1 : 1) * s.sign();
                CHECK(lhs == ((n + 1) % 2 ? -1 : 1) * vx.sign());
            }
        CHECK(static_cast<long>(nu_img.size()) == static_cast<long>(all_perms(n + 1).size()));
        CHECK(static_cast<long>(xi_img.size()) == static_cast<long>(all_perms(n + 1).size()));
    }
}

TEST_CASE("kappa is a sign-flipping involution") {
    for (int n = 2; n <= 4; ++n)
        for (const Permutation &s : all_perms(n))
            for (int i = 1; i < n; ++i) {
                auto [t, j] = kappa(s, i);
                CHECK(t.sign() == -s.sign());
                auto [back, j2] = kappa(t, j);
                CHECK(back == s);
                CHECK(j2 == i);
            }
}
