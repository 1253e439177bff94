#include "rackh/morphism.hpp"

#include "rackh/cubical.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rackh {

namespace {

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    std::vector<Permutation> out;
    do out.emplace_back(img);
    while (std::next_permutation(img.begin(), img.end()));
    return out;
}

// y-tuple of the explicit formula for one sigma.
std::vector<int> pulled_tuple(const FiniteRack &x, const std::vector<int> &tup, const Permutation &s) {
    const int n = s.degree();
    std::vector<int> y(n);
    std::uint32_t prev = 0;
    for (int k = 1; k <= n; ++k) {
        int r = tup[s(k) - 1];
        for (int j = s(k) - 1; j >= 1; --j)
            if (!((prev >> (j - 1)) & 1u)) r = x.apply(tup[j - 1], r);
        y[k - 1] = r;
        prev |= 1u << (s(k) - 1);
    }
    return y;
}

} // namespace

Cochain S_map(const FiniteGroup &g, const Cochain &f) {
    if (f.tag != ComplexTag::Group || f.carrier != g.size)
        throw std::invalid_argument("S_map: expected a group cochain on G");
    const int n = f.degree;
    if (n > 6) throw std::invalid_argument("S_map: degree guard n <= 6 (cost is n! * |G|^n evaluations)");
    FiniteRack conj = conj_rack(g);
    Cochain out = zero_cochain(ComplexTag::Rack, g.size, n, f.ring);
    std::vector<Permutation> perms = all_permutations(n);
    for (std::size_t t = 0; t < out.values.size(); ++t) {
        std::vector<int> tup = index_tuple(t, g.size, n);
        RingElem acc = ring_zero(f.ring);
        for (const Permutation &s : perms) {
            const RingElem &v = f.at(pulled_tuple(conj, tup, s));
            acc = ring_add(f.ring, acc, s.sign() < 0 ? ring_neg(f.ring, v) : v);
        }
        out.values[t] = std::move(acc);
    }
    return out;
}

IntMatrix s_matrix(const FiniteGroup &g, int n) {
    if (n > 6) throw std::invalid_argument("s_matrix: degree guard n <= 6");
    FiniteRack conj = conj_rack(g);
    const int dim = static_cast<int>(power(g.size, n));
    IntMatrix m(dim, dim);
    std::vector<Permutation> perms = all_permutations(n);
    for (int t = 0; t < dim; ++t) {
        std::vector<int> tup = index_tuple(t, g.size, n);
        for (const Permutation &s : perms)
            m.at(t, static_cast<int>(tuple_index(pulled_tuple(conj, tup, s), g.size))) += s.sign();
    }
    return m;
}

MorphismReport verify_chain_map(const FiniteGroup &g, int max_degree) {
    MorphismReport rep;
    rep.max_degree = max_degree;
    FiniteRack conj = conj_rack(g);
    for (int n = 0; n < max_degree; ++n) {
        IntMatrix lhs = rack_diff_matrix(conj, n) * s_matrix(g, n);
        IntMatrix rhs = s_matrix(g, n + 1) * group_diff_matrix(g, n);
        ++rep.cases;
        if (!(lhs == rhs)) {
            rep.chain_map_pass = false;
            std::ostringstream os;
            os << "d_R o S^" << n << " != S^" << n + 1 << " o d_G";
            rep.detail = os.str();
            return rep;
        }
    }
    return rep;
}

MorphismReport verify_algebra_morphism(const FiniteGroup &g, const Ring &ring, int max_total_degree,
                                       const ProductCheckOptions &opt) {
    MorphismReport rep;
    rep.max_degree = max_total_degree;
    FiniteRack conj = conj_rack(g);
    auto run_case = [&](const Cochain &f1, const Cochain &f2) {
        Cochain lhs = S_map(g, cup(g, f1, f2));
        Cochain rhs = star(conj, S_map(g, f1), S_map(g, f2));
        ++rep.cases;
        if (!(lhs == rhs)) {
            rep.algebra_pass = false;
            std::ostringstream os;
            os << "S(f cup g) != S(f) * S(g) at degrees (" << f1.degree << "," << f2.degree << ")";
            rep.detail = os.str();
            return false;
        }
        return true;
    };
    for (int p1 = 0; p1 <= max_total_degree; ++p1)
        for (int p2 = 0; p1 + p2 <= max_total_degree; ++p2) {
            if (opt.trials == 0) {
                const std::size_t n1 = power(g.size, p1) * ring.value_len();
                const std::size_t n2 = power(g.size, p2) * ring.value_len();
                for (std::size_t i = 0; i < n1; ++i)
                    for (std::size_t j = 0; j < n2; ++j) {
                        Cochain f1 = basis_cochain(ComplexTag::Group, g.size, p1, ring, i / ring.value_len(),
                                                   static_cast<int>(i % ring.value_len()));
                        Cochain f2 = basis_cochain(ComplexTag::Group, g.size, p2, ring, j / ring.value_len(),
                                                   static_cast<int>(j % ring.value_len()));
                        if (!run_case(f1, f2)) return rep;
                    }
            } else {
                std::mt19937_64 rng(opt.seed);
                for (long trial = 0; trial < opt.trials; ++trial) {
                    Cochain f1 = random_cochain(ComplexTag::Group, g.size, p1, ring, rng);
                    Cochain f2 = random_cochain(ComplexTag::Group, g.size, p2, ring, rng);
                    if (!run_case(f1, f2)) return rep;
                }
            }
        }
    return rep;
}

InducedH1 induced_H1(const FiniteGroup &g, long p) {
    InducedH1 r;
    FiniteRack conj = conj_rack(g);
    IntMatrix d2g = group_diff_matrix(g, 1);
    IntMatrix d2r = rack_diff_matrix(conj, 1);
    // d^1 = 0 with trivial coefficients, so H^1 is the degree-1 cocycle space
    IntMatrix d1r = rack_diff_matrix(conj, 0);
    r.dim_h1_group = g.size - rank_mod_p(d2g, p) - rank_mod_p(group_diff_matrix(g, 0), p);
    r.dim_h1_rack = g.size - rank_mod_p(d2r, p) - rank_mod_p(d1r, p);
    // rank of [S^1]: image of a group-cocycle basis, modulo rack coboundaries
    IntMatrix cocycles = nullspace_mod_p(d2g, p);
    IntMatrix image = s_matrix(g, 1) * cocycles;
    IntMatrix stacked(g.size, image.cols() + d1r.cols());
    for (int i = 0; i < g.size; ++i) {
        for (int j = 0; j < image.cols(); ++j) stacked.at(i, j) = image.at(i, j);
        for (int j = 0; j < d1r.cols(); ++j) stacked.at(i, image.cols() + j) = d1r.at(i, j);
    }
    r.rank_s1 = rank_mod_p(stacked, p) - rank_mod_p(d1r, p);
    r.injective = r.rank_s1 == r.dim_h1_group;
    return r;
}

bool composite_S_check(const FiniteGroup &g, int n, std::string *detail) {
    if (g.size > 6 || n > 2 || n < 0)
        throw std::invalid_argument("composite_S_check: guard |G| <= 6, n <= 2 exceeded");
    FiniteRack conj = conj_rack(g);
    const int dim = static_cast<int>(power(g.size, n));
    std::vector<Permutation> perms = all_permutations(n);
    IntMatrix composite(dim, dim);
    for (int t = 0; t < dim; ++t) {
        // eta^{-1} then inc: the full edge labeling, read as group elements
        EdgeLabeling labels = labeling_from_tuple(conj, index_tuple(t, g.size, n));
        GroupCubeFunctor functor{n, labels}; // theta is the identity on this data
        if (!functor_squares_commute(g, functor)) {
            if (detail) *detail = "inclusion image is not a commuting-square functor";
            return false;
        }
        for (const Permutation &s : perms) {
            // lambda of (functor o sigma): generator edges along the sigma-path
            std::vector<int> y(n);
            for (int k = 1; k <= n; ++k) y[k - 1] = functor.labels.label(sigma_vertex(s, k - 1), s(k));
            composite.at(t, static_cast<int>(tuple_index(y, g.size))) += s.sign();
        }
    }
    bool ok = composite == s_matrix(g, n);
    if (!ok && detail) *detail = "composite path disagrees with the explicit formula";
    return ok;
}

} // namespace rackh
