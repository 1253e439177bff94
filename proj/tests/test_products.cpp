#include "rackh/cubical.hpp"
#include "rackh/products.hpp"

#include <doctest.h>

using namespace rackh;

namespace {

Int ev(const Cochain &f, std::vector<int> tuple) { return f.at(tuple).v[0]; }

Cochain rand_cochain(ComplexTag tag, int carrier, int degree, std::mt19937_64 &rng) {
    return random_cochain(tag, carrier, degree, Ring::integers(), rng);
}

// Block embeddings square_{p_k} -> square_n at a given offset: the face spanned
// by directions offset+1..offset+p based at the vertex [offset].
std::vector<CubeVertex> block_embedding(int offset, int p) {
    std::vector<CubeVertex> vm(std::size_t{1} << p);
    CubeVertex base = (1u << offset) - 1;
    for (CubeVertex a = 0; a < vm.size(); ++a) vm[a] = base | (a << offset);
    return vm;
}

} // namespace

TEST_CASE("shuffle products in degrees (1,1)") {
    FiniteRack d = dihedral_quandle(3);
    std::mt19937_64 rng(17);
    Cochain f1 = rand_cochain(ComplexTag::Rack, 3, 1, rng);
    Cochain f2 = rand_cochain(ComplexTag::Rack, 3, 1, rng);
    Cochain s = succ(d, f1, f2), p = prec(d, f1, f2), both = star(d, f1, f2);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) {
            CHECK(ev(s, {x, y}) == ev(f1, {x}) * ev(f2, {y}));
            CHECK(ev(p, {x, y}) == -ev(f1, {d.apply(x, y)}) * ev(f2, {x}));
            CHECK(ev(both, {x, y}) == ev(s, {x, y}) + ev(p, {x, y}));
        }
}

TEST_CASE("degree-0 factors act as scalars on one side only") {
    FiniteRack d = dihedral_quandle(3);
    std::mt19937_64 rng(19);
    Cochain f = rand_cochain(ComplexTag::Rack, 3, 2, rng);
    Cochain c = zero_cochain(ComplexTag::Rack, 3, 0, Ring::integers());
    c.values[0].v[0] = 5;
    Cochain fc = succ(d, f, c), cf = prec(d, c, f);
    for (std::size_t t = 0; t < f.values.size(); ++t) {
        CHECK(fc.values[t].v[0] == 5 * f.values[t].v[0]);
        CHECK(cf.values[t].v[0] == 5 * f.values[t].v[0]);
    }
    for (const RingElem &v : prec(d, f, c).values) CHECK(ring_is_zero(v));
    for (const RingElem &v : succ(d, c, f).values) CHECK(ring_is_zero(v));
    // star is unital-like against degree 0 from either side
    CHECK(star(d, f, c) == fc);
    CHECK(star(d, c, f) == cf);
}

TEST_CASE("star of degree-1 cochains vanishes on a point") {
    FiniteRack pt = trivial_rack(1);
    std::mt19937_64 rng(23);
    Cochain f1 = rand_cochain(ComplexTag::Rack, 1, 1, rng);
    Cochain f2 = rand_cochain(ComplexTag::Rack, 1, 1, rng);
    for (const RingElem &v : star(pt, f1, f2).values) CHECK(ring_is_zero(v));
}

TEST_CASE("identity checkers pass on small racks and catch planted bugs") {
    FiniteRack d = dihedral_quandle(3);
    Ring z = Ring::integers();
    CHECK(check_dendriform(d, z, 3).pass);
    CHECK(check_star_associativity(d, z, 3).pass);
    CHECK(check_leibniz(d, z, {{1, 1}, {1, 2}, {2, 1}}).pass);
    CHECK(check_cup_leibniz(cyclic_group(3), z, {{1, 1}, {1, 2}, {2, 1}}).pass);
    // negative control: flipping the sign convention of prec must be detected
    ProductCheckOptions bad;
    bad.corrupt_prec_sign = true;
    ProductReport r = check_dendriform(d, z, 3, bad);
    CHECK_FALSE(r.pass);
    CHECK_FALSE(r.counterexample.empty());
}

TEST_CASE("random-trial mode covers mixed degrees") {
    FiniteRack c = conj_rack(symmetric_group_s3());
    ProductCheckOptions opt;
    opt.trials = 3;
    opt.seed = 101;
    opt.min_degree_each = 1;
    CHECK(check_dendriform(c, Ring::integers(), 4, opt).pass);
    CHECK(check_star_associativity(c, Ring::matrix_ring(2, 2), 3, opt).pass);
}

TEST_CASE("cup product in degrees (1,1)") {
    FiniteGroup g = cyclic_group(4);
    std::mt19937_64 rng(29);
    Cochain f1 = rand_cochain(ComplexTag::Group, 4, 1, rng);
    Cochain f2 = rand_cochain(ComplexTag::Group, 4, 1, rng);
    Cochain c = cup(g, f1, f2);
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) CHECK(ev(c, {x, y}) == ev(f1, {x}) * ev(f2, {y}));
    // degree-0 scalars act on both sides
    Cochain k = zero_cochain(ComplexTag::Group, 4, 0, Ring::integers());
    k.values[0].v[0] = 3;
    for (std::size_t t = 0; t < f1.values.size(); ++t) {
        CHECK(cup(g, k, f1).values[t].v[0] == 3 * f1.values[t].v[0]);
        CHECK(cup(g, f1, k).values[t].v[0] == 3 * f1.values[t].v[0]);
    }
}

TEST_CASE("shuffle products agree with their cube-restriction description") {
    // (f1 x f2)(x) = sum over the shuffle class of eps(sigma) times f1 and f2
    // evaluated on the generator tuples of the two block restrictions of the
    // labeling attached to x, pulled back along sigma.
    FiniteRack d = dihedral_quandle(3);
    std::mt19937_64 rng(31);
    for (auto [p1, p2] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}, {2, 2}}) {
        const int n = p1 + p2;
        Cochain f1 = rand_cochain(ComplexTag::Rack, 3, p1, rng);
        Cochain f2 = rand_cochain(ComplexTag::Rack, 3, p2, rng);
        Cochain s = succ(d, f1, f2), p = prec(d, f1, f2);
        for (std::size_t t = 0; t < s.values.size(); ++t) {
            std::vector<int> tup = index_tuple(t, 3, n);
            EdgeLabeling full = labeling_from_tuple(d, tup);
            auto side = [&](ShuffleClass cls) {
                Int acc = 0;
                for (const Permutation &sigma : shuffles(p1, p2, cls)) {
                    auto vm = perm_vertex_map(sigma);
                    EdgeLabeling lo = pullback_labeling(full, compose_vertex_maps(vm, block_embedding(0, p1)), p1);
                    EdgeLabeling hi = pullback_labeling(full, compose_vertex_maps(vm, block_embedding(p1, p2)), p2);
                    acc += sigma.sign() * ev(f1, generator_edges(lo)) * ev(f2, generator_edges(hi));
                }
                return acc;
            };
            CHECK(s.values[t].v[0] == side(ShuffleClass::TopFixed));
            CHECK(p.values[t].v[0] == side(ShuffleClass::LeftMax));
        }
    }
}

TEST_CASE("block restrictions compose along shuffle reparametrization") {
    // restricting along sigma in Sh_{p1,p2+p3} and then along gamma in Sh_{p2,p3}
    // is the same as restricting once along alpha(sigma, gamma).
    FiniteRack d = dihedral_quandle(3);
    for (auto [p1, p2, p3] : std::vector<std::array<int, 3>>{{1, 1, 1}, {1, 1, 2}, {1, 2, 1}, {2, 1, 1}}) {
        const int n = p1 + p2 + p3;
        for (std::size_t t = 0; t < power(3, n); ++t) {
            EdgeLabeling full = labeling_from_tuple(d, index_tuple(t, 3, n));
            for (const Permutation &sigma : shuffles(p1, p2 + p3, ShuffleClass::All))
                for (const Permutation &gamma : shuffles(p2, p3, ShuffleClass::All)) {
                    Permutation a = alpha(sigma, gamma, p1, p2, p3);
                    auto svm = perm_vertex_map(sigma), avm = perm_vertex_map(a), gvm = perm_vertex_map(gamma);
                    // first block is untouched by gamma
                    CHECK(pullback_labeling(full, compose_vertex_maps(svm, block_embedding(0, p1)), p1) ==
                          pullback_labeling(full, compose_vertex_maps(avm, block_embedding(0, p1)), p1));
                    // the upper restriction of sigma, cut by gamma, matches the
                    // middle and top restrictions of alpha
                    EdgeLabeling upper =
                        pullback_labeling(full, compose_vertex_maps(svm, block_embedding(p1, p2 + p3)), p2 + p3);
                    CHECK(pullback_labeling(upper, compose_vertex_maps(gvm, block_embedding(0, p2)), p2) ==
                          pullback_labeling(full, compose_vertex_maps(avm, block_embedding(p1, p2)), p2));
                    CHECK(pullback_labeling(upper, compose_vertex_maps(gvm, block_embedding(p2, p3)), p3) ==
                          pullback_labeling(full, compose_vertex_maps(avm, block_embedding(p1 + p2, p3)), p3));
                }
        }
    }
}

TEST_CASE("products reject mismatched cochains") {
    FiniteRack d = dihedral_quandle(3);
    Cochain f = zero_cochain(ComplexTag::Rack, 3, 1, Ring::integers());
    Cochain g = zero_cochain(ComplexTag::Rack, 4, 1, Ring::integers());
    CHECK_THROWS_AS(succ(d, f, g), std::invalid_argument);
    Cochain m = zero_cochain(ComplexTag::Rack, 3, 1, Ring::integers_mod(2));
    CHECK_THROWS_AS(star(d, f, m), std::invalid_argument);
}
