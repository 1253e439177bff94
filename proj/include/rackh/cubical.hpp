#pragma once

#include "rackh/permutation.hpp"
#include "rackh/structures.hpp"

#include <cstdint>
#include <vector>

namespace rackh {

// Vertex of the n-cube: bitmask subset of {1..n}, element b <-> bit b-1.
using CubeVertex = std::uint32_t;

inline bool vertex_contains(CubeVertex a, int b) { return (a >> (b - 1)) & 1u; }

// Face functor on vertices: square_{n-1} -> square_n, shift elements >= i up and
// insert i when eps = 1.
CubeVertex face_vertex(int n, int i, int eps, CubeVertex a);

// Vertex image of the functor Delta_n -> square_n attached to sigma: {sigma(1..k)}.
CubeVertex sigma_vertex(const Permutation &s, int k);

// sigma acting on cube vertices elementwise.
CubeVertex perm_vertex(const Permutation &s, CubeVertex a);

// Edge labeling of square_n by elements of X (trunk map in raw form).
// Edge (A, A+{b}) stored at slot (b-1)*2^n + A; unused slots hold -1.
struct EdgeLabeling {
    int n = 0;
    std::vector<int> labels;

    int label(CubeVertex a, int b) const { return labels[((static_cast<size_t>(b) - 1) << n) + a]; }
    int &label(CubeVertex a, int b) { return labels[((static_cast<size_t>(b) - 1) << n) + a]; }
    bool operator==(const EdgeLabeling &) const = default;
};

EdgeLabeling empty_labeling(int n);

// Label of edge (A, A+{b}) in the trunk map attached to gens: the right-bracketed
// product of the generators indexed by {1..b} \ A.
int label_edge(const FiniteShelf &x, const std::vector<int> &gens, CubeVertex a, int b);

// Full labeling of square_n induced by an n-tuple of rack elements.
EdgeLabeling labeling_from_tuple(const FiniteShelf &x, const std::vector<int> &gens);

// Face action on tuples: eps=1 deletes entry i, eps=0 gives
// (x_1,...,x_{i-1}, x_i|>x_{i+1},...,x_i|>x_n).
std::vector<int> nerve_face(const FiniteShelf &x, int i, int eps, const std::vector<int> &tuple);

// Brute-force enumeration of all trunk maps square_n -> trunk of X: labelings
// sending every preferred square (a,b,c,d) to one with c = a|>b and d = a.
// Guarded at |X| <= 3, n <= 3.
std::vector<EdgeLabeling> enumerate_trunk_maps(const FiniteRack &x, int n);

// Generator edges ([k-1], k) of a labeling, i.e. the tuple it corresponds to.
std::vector<int> generator_edges(const EdgeLabeling &l);

// Precompose a labeling of square_n with a graph map square_m -> square_n given by
// its vertex table (size 2^m); the map must send edges to edges.
EdgeLabeling pullback_labeling(const EdgeLabeling &l, const std::vector<CubeVertex> &vertex_map, int m);

// Vertex tables of the basic graph maps into square_n.
std::vector<CubeVertex> face_vertex_map(int n, int i, int eps);    // square_{n-1} -> square_n
std::vector<CubeVertex> perm_vertex_map(const Permutation &s);     // square_n -> square_n
std::vector<CubeVertex> compose_vertex_maps(const std::vector<CubeVertex> &outer,
                                            const std::vector<CubeVertex> &inner);

// Functor square_n -> G as a category: edge labels with commuting preferred squares.
struct GroupCubeFunctor {
    int n = 0;
    EdgeLabeling labels;
};

// Extension of an n-tuple of generators to a functor; edge (A, A+{b}) carries the
// right-bracketed conjugation product over {1..b} \ A (the section of lambda_tuple
// landing in the image of the conjugation rack's nerve).
GroupCubeFunctor extend_group_functor(const FiniteGroup &g, const std::vector<int> &gens);
std::vector<int> lambda_tuple(const GroupCubeFunctor &f);
bool functor_squares_commute(const FiniteGroup &g, const GroupCubeFunctor &f);

// A composite of face functors square_m -> square_n as the list applied innermost
// first: partial(i_k, eps_k) o ... o partial(i_1, eps_1).
struct FaceComposite {
    int m = 0;
    std::vector<std::pair<int, int>> faces; // (index, eps), innermost first
};

std::vector<CubeVertex> composite_vertex_map(const FaceComposite &c);
// Rewrite to the unique ascending form i_1 < i_2 < ... using the cubical relation.
FaceComposite normalize_faces(FaceComposite c);

} // namespace rackh
