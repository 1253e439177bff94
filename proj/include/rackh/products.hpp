#pragma once

#include "rackh/cochain.hpp"
#include "rackh/permutation.hpp"

#include <cstdint>
#include <random>

namespace rackh {

// Signed shuffle sums over Sh^{p1+p2} (succ) and Sh^{p1} (prec):
// (f1 x f2)(x_1..x_{p1+p2}) = sum of eps(sigma) f1(y) f2(z), where y_k is the
// right-bracketed |>-product over {1..sigma(k)} \ sigma({1..k-1}) and
// z_k = x_{sigma(p1+k)}.
Cochain succ(const FiniteRack &x, const Cochain &f1, const Cochain &f2);
Cochain prec(const FiniteRack &x, const Cochain &f1, const Cochain &f2);
// star = succ + prec; associative.
Cochain star(const FiniteRack &x, const Cochain &f1, const Cochain &f2);

// Cup product on group cochains: prefix/suffix split.
Cochain cup(const FiniteGroup &g, const Cochain &f1, const Cochain &f2);

Cochain cochain_add(const Cochain &a, const Cochain &b);
Cochain cochain_neg(const Cochain &a);

Cochain random_cochain(ComplexTag tag, int carrier, int degree, const Ring &ring, std::mt19937_64 &rng);

struct ProductCheckOptions {
    long trials = 0; // 0: exhaustive over basis cochains
    std::uint64_t seed = 1;
    int min_degree_each = 0;        // skip degree tuples with any entry below this
    bool corrupt_prec_sign = false; // negative control for the harness itself
};

struct ProductReport {
    std::string identity;
    std::vector<std::vector<int>> degrees;
    long cases = 0;
    bool pass = true;
    std::string counterexample; // replayable: degrees, cochains, evaluation tuple
};

// x>(y>z) = (x>y)>z + (x<y)>z ; (x>y)<z = x>(y<z) ; (x<y)<z = x<(y<z) + x<(y>z)
// Quantified over positive degrees: dendriform algebras carry no unit, and with
// a degree-0 factor identity 2 fails under every convention for empty shuffles.
ProductReport check_dendriform(const FiniteRack &x, const Ring &ring, int max_total_degree,
                               const ProductCheckOptions &opt = {});
// d(f1 > f2) = df1 > f2 + (-1)^{p1} f1 > df2, and the < analogue.
ProductReport check_leibniz(const FiniteRack &x, const Ring &ring,
                            const std::vector<std::pair<int, int>> &degrees,
                            const ProductCheckOptions &opt = {});
ProductReport check_star_associativity(const FiniteRack &x, const Ring &ring, int max_total_degree,
                                       const ProductCheckOptions &opt = {});
// d(f cup g) = df cup g + (-1)^{p1} f cup dg on group cochains.
ProductReport check_cup_leibniz(const FiniteGroup &g, const Ring &ring,
                                const std::vector<std::pair<int, int>> &degrees,
                                const ProductCheckOptions &opt = {});

} // namespace rackh
