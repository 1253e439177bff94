#include "rackh/cubical.hpp"

#include <stdexcept>

namespace rackh {

CubeVertex face_vertex(int n, int i, int eps, CubeVertex a) {
    if (i < 1 || i > n || (eps != 0 && eps != 1)) throw std::invalid_argument("face_vertex: index out of range");
    if (a >> (n - 1)) throw std::invalid_argument("face_vertex: vertex outside square_{n-1}");
    CubeVertex low = a & ((1u << (i - 1)) - 1u);
    CubeVertex high = (a >> (i - 1)) << i;
    return low | high | (eps ? 1u << (i - 1) : 0u);
}

CubeVertex sigma_vertex(const Permutation &s, int k) {
    if (k < 0 || k > s.degree()) throw std::invalid_argument("sigma_vertex: k out of range");
    CubeVertex v = 0;
    for (int j = 1; j <= k; ++j) v |= 1u << (s(j) - 1);
    return v;
}

CubeVertex perm_vertex(const Permutation &s, CubeVertex a) {
    CubeVertex v = 0;
    for (int b = 1; b <= s.degree(); ++b)
        if (vertex_contains(a, b)) v |= 1u << (s(b) - 1);
    return v;
}

EdgeLabeling empty_labeling(int n) {
    if (n < 0 || n > 30) throw std::invalid_argument("empty_labeling: dimension guard (n <= 30)");
    EdgeLabeling l;
    l.n = n;
    l.labels.assign(static_cast<size_t>(n) << n, -1);
    return l;
}

int label_edge(const FiniteShelf &x, const std::vector<int> &gens, CubeVertex a, int b) {
    const int n = static_cast<int>(gens.size());
    if (b < 1 || b > n) throw std::invalid_argument("label_edge: b out of range");
    if (vertex_contains(a, b)) throw std::invalid_argument("label_edge: b already in A");
    int r = gens[b - 1];
    for (int j = b - 1; j >= 1; --j)
        if (!vertex_contains(a, j)) r = x.apply(gens[j - 1], r);
    return r;
}

EdgeLabeling labeling_from_tuple(const FiniteShelf &x, const std::vector<int> &gens) {
    const int n = static_cast<int>(gens.size());
    EdgeLabeling l = empty_labeling(n);
    for (int b = 1; b <= n; ++b)
        for (CubeVertex a = 0; a < (1u << n); ++a)
            if (!vertex_contains(a, b)) l.label(a, b) = label_edge(x, gens, a, b);
    return l;
}

std::vector<int> nerve_face(const FiniteShelf &x, int i, int eps, const std::vector<int> &tuple) {
    const int n = static_cast<int>(tuple.size());
    if (i < 1 || i > n || (eps != 0 && eps != 1)) throw std::invalid_argument("nerve_face: index out of range");
    std::vector<int> r;
    r.reserve(n - 1);
    for (int k = 1; k <= n; ++k) {
        if (k == i) continue;
        r.push_back(eps == 0 && k > i ? x.apply(tuple[i - 1], tuple[k - 1]) : tuple[k - 1]);
    }
    return r;
}

std::vector<EdgeLabeling> enumerate_trunk_maps(const FiniteRack &x, int n) {
    if (x.size > 3 || n > 3 || n < 0) throw std::invalid_argument("enumerate_trunk_maps: guard |X| <= 3, n <= 3 exceeded");
    // collect the edge slots in a fixed order
    std::vector<std::pair<CubeVertex, int>> edges;
    for (int b = 1; b <= n; ++b)
        for (CubeVertex a = 0; a < (1u << n); ++a)
            if (!vertex_contains(a, b)) edges.emplace_back(a, b);
    std::vector<EdgeLabeling> out;
    EdgeLabeling l = empty_labeling(n);
    std::vector<int> assign(edges.size(), 0);
    auto preferred_squares_ok = [&] {
        for (int k = 1; k <= n; ++k)
            for (int m = k + 1; m <= n; ++m)
                for (CubeVertex a = 0; a < (1u << n); ++a) {
                    if (vertex_contains(a, k) || vertex_contains(a, m)) continue;
                    int ea = l.label(a, k);
                    int eb = l.label(a | (1u << (k - 1)), m);
                    int ec = l.label(a, m);
                    int ed = l.label(a | (1u << (m - 1)), k);
                    if (ec != x.apply(ea, eb) || ed != ea) return false;
                }
        return true;
    };
    for (;;) {
        for (size_t e = 0; e < edges.size(); ++e) l.label(edges[e].first, edges[e].second) = assign[e];
        if (preferred_squares_ok()) out.push_back(l);
        size_t e = 0;
        while (e < edges.size() && assign[e] == x.size - 1) assign[e++] = 0;
        if (e == edges.size()) break;
        ++assign[e];
    }
    return out;
}

std::vector<int> generator_edges(const EdgeLabeling &l) {
    std::vector<int> gens(l.n);
    CubeVertex a = 0;
    for (int k = 1; k <= l.n; ++k) {
        gens[k - 1] = l.label(a, k);
        a |= 1u << (k - 1);
    }
    return gens;
}

EdgeLabeling pullback_labeling(const EdgeLabeling &l, const std::vector<CubeVertex> &vertex_map, int m) {
    if (vertex_map.size() != (1u << m)) throw std::invalid_argument("pullback_labeling: vertex table size mismatch");
    EdgeLabeling r = empty_labeling(m);
    for (int b = 1; b <= m; ++b)
        for (CubeVertex a = 0; a < (1u << m); ++a) {
            if (vertex_contains(a, b)) continue;
            CubeVertex u = vertex_map[a], v = vertex_map[a | (1u << (b - 1))];
            CubeVertex d = u ^ v;
            if ((u & v) != u || !d || (d & (d - 1)))
                throw std::invalid_argument("pullback_labeling: map does not send edges to edges");
            int added = 1;
            while (!(d & 1u)) { d >>= 1; ++added; }
            r.label(a, b) = l.label(u, added);
        }
    return r;
}

std::vector<CubeVertex> face_vertex_map(int n, int i, int eps) {
    std::vector<CubeVertex> v(1u << (n - 1));
    for (CubeVertex a = 0; a < v.size(); ++a) v[a] = face_vertex(n, i, eps, a);
    return v;
}

std::vector<CubeVertex> perm_vertex_map(const Permutation &s) {
    std::vector<CubeVertex> v(1u << s.degree());
    for (CubeVertex a = 0; a < v.size(); ++a) v[a] = perm_vertex(s, a);
    return v;
}

std::vector<CubeVertex> compose_vertex_maps(const std::vector<CubeVertex> &outer,
                                            const std::vector<CubeVertex> &inner) {
    std::vector<CubeVertex> v(inner.size());
    for (size_t a = 0; a < inner.size(); ++a) v[a] = outer.at(inner[a]);
    return v;
}

GroupCubeFunctor extend_group_functor(const FiniteGroup &g, const std::vector<int> &gens) {
    return {static_cast<int>(gens.size()), labeling_from_tuple(conj_rack(g), gens)};
}

std::vector<int> lambda_tuple(const GroupCubeFunctor &f) { return generator_edges(f.labels); }

bool functor_squares_commute(const FiniteGroup &g, const GroupCubeFunctor &f) {
    const EdgeLabeling &l = f.labels;
    for (int k = 1; k <= f.n; ++k)
        for (int m = k + 1; m <= f.n; ++m)
            for (CubeVertex a = 0; a < (1u << f.n); ++a) {
                if (vertex_contains(a, k) || vertex_contains(a, m)) continue;
                int lhs = g.apply(l.label(a, k), l.label(a | (1u << (k - 1)), m));
                int rhs = g.apply(l.label(a, m), l.label(a | (1u << (m - 1)), k));
                if (lhs != rhs) return false;
            }
    return true;
}

std::vector<CubeVertex> composite_vertex_map(const FaceComposite &c) {
    std::vector<CubeVertex> v(1u << c.m);
    for (CubeVertex a = 0; a < v.size(); ++a) v[a] = a;
    int dim = c.m;
    for (auto [i, eps] : c.faces) {
        ++dim;
        for (CubeVertex a = 0; a < v.size(); ++a) v[a] = face_vertex(dim, i, eps, v[a]);
    }
    return v;
}

FaceComposite normalize_faces(FaceComposite c) {
    // bubble with partial(i,eps) o partial(j-1,w) = partial(j,w) o partial(i,eps), i < j
    auto &f = c.faces;
    for (bool moved = true; moved;) {
        moved = false;
        for (size_t t = 0; t + 1 < f.size(); ++t) {
            if (f[t + 1].first <= f[t].first) {
                auto inner = f[t + 1];
                auto outer = std::make_pair(f[t].first + 1, f[t].second);
                f[t] = inner;
                f[t + 1] = outer;
                moved = true;
            }
        }
    }
    return c;
}

} // namespace rackh
