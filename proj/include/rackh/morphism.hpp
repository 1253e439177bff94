#pragma once

#include "rackh/cochain.hpp"
#include "rackh/products.hpp"

#include <string>

namespace rackh {

// S^n(f)(x_1..x_n) = sum over all sigma in S_n of eps(sigma) f(y_1..y_n) with
// y_k the right-bracketed |>-product over {1..sigma(k)} \ sigma({1..k-1}).
// Guarded at n <= 6 (n! * |G|^n evaluations).
Cochain S_map(const FiniteGroup &g, const Cochain &f);

// Matrix of S^n : C^n(G) -> CR^n(Conj G) in the delta basis.
IntMatrix s_matrix(const FiniteGroup &g, int n);

struct MorphismReport {
    std::string group;
    int max_degree = 0;
    bool chain_map_pass = true;
    bool algebra_pass = true;
    long cases = 0;
    std::string detail;
};

// d_R o S^n = S^{n+1} o d_G as exact matrices for all n < max_degree.
MorphismReport verify_chain_map(const FiniteGroup &g, int max_degree);
// S(f cup g) = S(f) * S(g) over basis (or seeded random) cochains for all
// degree pairs with p1 + p2 <= max_total_degree.
MorphismReport verify_algebra_morphism(const FiniteGroup &g, const Ring &ring, int max_total_degree,
                                       const ProductCheckOptions &opt = {});

struct InducedH1 {
    int dim_h1_group = 0;
    int dim_h1_rack = 0;
    int rank_s1 = 0;
    bool injective = true;
};

// Degree-1 cohomology over F_p on both sides and the rank of the induced map.
InducedH1 induced_H1(const FiniteGroup &g, long p);

// Literal composite: eta-tuple -> edge labeling -> inclusion into the group
// trunk -> signed sum over sigma-functors -> simplicial tuples; compared with
// S_map on every basis cochain.  Guarded at |G| <= 6, n <= 2.
bool composite_S_check(const FiniteGroup &g, int n, std::string *detail = nullptr);

} // namespace rackh
