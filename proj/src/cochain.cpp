#include "rackh/cochain.hpp"

#include "rackh/cubical.hpp"
#include "rackh/parallel.hpp"

#include <stdexcept>

namespace rackh {

std::size_t power(int base, int exp) {
    std::size_t r = 1;
    for (int i = 0; i < exp; ++i) r *= static_cast<std::size_t>(base);
    return r;
}

std::size_t tuple_index(std::span<const int> tuple, int base) {
    std::size_t idx = 0;
    for (int x : tuple) idx = idx * base + static_cast<std::size_t>(x);
    return idx;
}

std::vector<int> index_tuple(std::size_t index, int base, int len) {
    std::vector<int> t(len);
    for (int k = len - 1; k >= 0; --k) {
        t[k] = static_cast<int>(index % base);
        index /= base;
    }
    return t;
}

Cochain zero_cochain(ComplexTag tag, int carrier, int degree, const Ring &ring) {
    if (carrier <= 0 || degree < 0) throw std::invalid_argument("zero_cochain: bad carrier/degree");
    Cochain f{tag, carrier, degree, ring, {}};
    f.values.assign(power(carrier, degree), ring_zero(ring));
    return f;
}

Cochain basis_cochain(ComplexTag tag, int carrier, int degree, const Ring &ring,
                      std::size_t tuple, int component) {
    Cochain f = zero_cochain(tag, carrier, degree, ring);
    f.values.at(tuple).v.at(component) = 1;
    return f;
}

namespace {

void check_rack_cochain(const Cochain &f, const FiniteRack &x, const RackModuleAction *action) {
    if (f.tag != ComplexTag::Rack || f.carrier != x.size)
        throw std::invalid_argument("rack_diff: cochain does not live on this rack");
    if (action && (f.ring.value_len() != action->rank || f.ring.modulus != action->modulus))
        throw std::invalid_argument("rack_diff: coefficients do not match the action's group");
}

RingElem act_on(const RackModuleAction &a, int elem, const RingElem &v, const Ring &ring) {
    RingElem r = ring_zero(ring);
    const IntMatrix &m = a.mats[elem];
    for (int i = 0; i < a.rank; ++i)
        for (int j = 0; j < a.rank; ++j)
            if (m.at(i, j) != 0) r.v[i] += m.at(i, j) * v.v[j];
    return ring_reduce(ring, std::move(r));
}

} // namespace

Cochain rack_diff(const FiniteRack &x, const Cochain &f, const RackModuleAction *action) {
    check_rack_cochain(f, x, action);
    const int n = f.degree;
    Cochain d = zero_cochain(ComplexTag::Rack, x.size, n + 1, f.ring);
    const std::size_t total = d.values.size();
    for (std::size_t t = 0; t < total; ++t) {
        std::vector<int> tup = index_tuple(t, x.size, n + 1);
        RingElem acc = ring_zero(f.ring);
        for (int i = 1; i <= n + 1; ++i) {
            const RingElem &a0 = f.at(nerve_face(x, i, 0, tup));
            RingElem a1 = f.at(nerve_face(x, i, 1, tup));
            if (action) {
                std::vector<int> prefix(tup.begin(), tup.begin() + i - 1);
                a1 = act_on(*action, x.apply_chain(prefix, tup[i - 1]), a1, f.ring);
            }
            RingElem term = ring_add(f.ring, a0, ring_neg(f.ring, a1));
            acc = ring_add(f.ring, acc, i % 2 ? ring_neg(f.ring, term) : term);
        }
        d.values[t] = std::move(acc);
    }
    return d;
}

Cochain group_diff(const FiniteGroup &g, const Cochain &f) {
    if (f.tag != ComplexTag::Group || f.carrier != g.size)
        throw std::invalid_argument("group_diff: cochain does not live on this group");
    const int n = f.degree;
    Cochain d = zero_cochain(ComplexTag::Group, g.size, n + 1, f.ring);
    for (std::size_t t = 0; t < d.values.size(); ++t) {
        std::vector<int> tup = index_tuple(t, g.size, n + 1);
        RingElem acc = ring_zero(f.ring);
        for (int i = 0; i <= n + 1; ++i) {
            std::vector<int> face;
            face.reserve(n);
            if (i == 0) {
                face.assign(tup.begin() + 1, tup.end()); // trivial action
            } else if (i == n + 1) {
                face.assign(tup.begin(), tup.end() - 1);
            } else {
                face.assign(tup.begin(), tup.end());
                face[i - 1] = g.apply(tup[i - 1], tup[i]);
                face.erase(face.begin() + i);
            }
            const RingElem &v = f.at(face);
            acc = ring_add(f.ring, acc, i % 2 ? ring_neg(f.ring, v) : v);
        }
        d.values[t] = std::move(acc);
    }
    return d;
}

Cochain cubical_group_diff(const FiniteGroup &g, const Cochain &f) {
    if (f.tag != ComplexTag::CubicalGroup || f.carrier != g.size)
        throw std::invalid_argument("cubical_group_diff: cochain does not live on this group");
    const int n = f.degree;
    Cochain d = zero_cochain(ComplexTag::CubicalGroup, g.size, n + 1, f.ring);
    std::vector<std::vector<CubeVertex>> fmap[2];
    for (int eps = 0; eps <= 1; ++eps)
        for (int i = 1; i <= n + 1; ++i) fmap[eps].push_back(face_vertex_map(n + 1, i, eps));
    for (std::size_t t = 0; t < d.values.size(); ++t) {
        GroupCubeFunctor fun = extend_group_functor(g, index_tuple(t, g.size, n + 1));
        RingElem acc = ring_zero(f.ring);
        for (int i = 1; i <= n + 1; ++i) {
            for (int eps = 0; eps <= 1; ++eps) {
                GroupCubeFunctor face{n, pullback_labeling(fun.labels, fmap[eps][i - 1], n)};
                const RingElem &v = f.at(lambda_tuple(face));
                RingElem term = eps ? ring_neg(f.ring, v) : v;
                acc = ring_add(f.ring, acc, i % 2 ? ring_neg(f.ring, term) : term);
            }
        }
        d.values[t] = std::move(acc);
    }
    return d;
}

namespace {

// Shared assembly: for each output tuple, add +/- blocks at the face columns.
template <typename FaceTerms>
IntMatrix assemble(int carrier, int n, int block, FaceTerms &&terms) {
    IntMatrix m(static_cast<int>(power(carrier, n + 1)) * block, static_cast<int>(power(carrier, n)) * block);
    parallel_for(power(carrier, n + 1), [&](std::size_t lo, std::size_t hi) {
        for (std::size_t t = lo; t < hi; ++t) terms(static_cast<int>(t), m);
    });
    return m;
}

} // namespace

IntMatrix rack_diff_matrix(const FiniteRack &x, int n, const RackModuleAction *action) {
    const int k = action ? action->rank : 1;
    return assemble(x.size, n, k, [&](int t, IntMatrix &m) {
        std::vector<int> tup = index_tuple(t, x.size, n + 1);
        for (int i = 1; i <= n + 1; ++i) {
            int s = i % 2 ? -1 : 1;
            std::size_t c0 = tuple_index(nerve_face(x, i, 0, tup), x.size);
            std::size_t c1 = tuple_index(nerve_face(x, i, 1, tup), x.size);
            if (!action) {
                m.at(t, static_cast<int>(c0)) += s;
                m.at(t, static_cast<int>(c1)) -= s;
            } else {
                std::vector<int> prefix(tup.begin(), tup.begin() + i - 1);
                const IntMatrix &mz = action->mats[x.apply_chain(prefix, tup[i - 1])];
                for (int a = 0; a < k; ++a) {
                    m.at(t * k + a, static_cast<int>(c0) * k + a) += s;
                    for (int b = 0; b < k; ++b) m.at(t * k + a, static_cast<int>(c1) * k + b) -= s * mz.at(a, b);
                }
            }
        }
    });
}

IntMatrix group_diff_matrix(const FiniteGroup &g, int n) {
    return assemble(g.size, n, 1, [&](int t, IntMatrix &m) {
        std::vector<int> tup = index_tuple(t, g.size, n + 1);
        for (int i = 0; i <= n + 1; ++i) {
            std::vector<int> face;
            if (i == 0) {
                face.assign(tup.begin() + 1, tup.end());
            } else if (i == n + 1) {
                face.assign(tup.begin(), tup.end() - 1);
            } else {
                face.assign(tup.begin(), tup.end());
                face[i - 1] = g.apply(tup[i - 1], tup[i]);
                face.erase(face.begin() + i);
            }
            m.at(t, static_cast<int>(tuple_index(face, g.size))) += i % 2 ? -1 : 1;
        }
    });
}

IntMatrix cubical_group_diff_matrix(const FiniteGroup &g, int n) {
    std::vector<std::vector<CubeVertex>> fmap[2];
    for (int eps = 0; eps <= 1; ++eps)
        for (int i = 1; i <= n + 1; ++i) fmap[eps].push_back(face_vertex_map(n + 1, i, eps));
    return assemble(g.size, n, 1, [&](int t, IntMatrix &m) {
        GroupCubeFunctor fun = extend_group_functor(g, index_tuple(t, g.size, n + 1));
        for (int i = 1; i <= n + 1; ++i) {
            int s = i % 2 ? -1 : 1;
            for (int eps = 0; eps <= 1; ++eps) {
                GroupCubeFunctor face{n, pullback_labeling(fun.labels, fmap[eps][i - 1], n)};
                std::size_t c = tuple_index(lambda_tuple(face), g.size);
                m.at(t, static_cast<int>(c)) += eps ? -s : s;
            }
        }
    });
}

namespace {

AbelianInvariants invariants_of(const IntMatrix &d_out, const IntMatrix &d_in, const Ring &ring) {
    if (!ring.snf_amenable()) throw std::invalid_argument("cohomology: coefficient ring is not SNF-amenable");
    return quotient_invariants_mod(d_out, d_in, ring.modulus);
}

} // namespace

AbelianInvariants rack_cohomology(const FiniteRack &x, int n, const Ring &ring, const RackModuleAction *action) {
    if (action) {
        if (ring.value_len() != action->rank || ring.modulus != action->modulus)
            throw std::invalid_argument("rack_cohomology: coefficients do not match the action's group");
        IntMatrix d_out = rack_diff_matrix(x, n, action);
        IntMatrix d_in = n > 0 ? rack_diff_matrix(x, n - 1, action) : IntMatrix(d_out.cols(), 0);
        return quotient_invariants_mod(d_out, d_in, action->modulus);
    }
    IntMatrix d_out = rack_diff_matrix(x, n);
    IntMatrix d_in = n > 0 ? rack_diff_matrix(x, n - 1) : IntMatrix(d_out.cols(), 0);
    return invariants_of(d_out, d_in, ring);
}

AbelianInvariants group_cohomology(const FiniteGroup &g, int n, const Ring &ring) {
    IntMatrix d_out = group_diff_matrix(g, n);
    IntMatrix d_in = n > 0 ? group_diff_matrix(g, n - 1) : IntMatrix(d_out.cols(), 0);
    return invariants_of(d_out, d_in, ring);
}

AbelianInvariants cubical_group_cohomology(const FiniteGroup &g, int n, const Ring &ring) {
    IntMatrix d_out = cubical_group_diff_matrix(g, n);
    IntMatrix d_in = n > 0 ? cubical_group_diff_matrix(g, n - 1) : IntMatrix(d_out.cols(), 0);
    return invariants_of(d_out, d_in, ring);
}

namespace {

// Indices of tuples avoiding the unit, plus a flag per tuple index.
std::vector<int> pointed_indices(int size, int unit, int n) {
    std::vector<int> idx;
    idx.reserve(power(size - 1, n));
    for (std::size_t t = 0; t < power(size, n); ++t) {
        std::vector<int> tup = index_tuple(t, size, n);
        bool keep = true;
        for (int v : tup)
            if (v == unit) { keep = false; break; }
        if (keep) idx.push_back(static_cast<int>(t));
    }
    return idx;
}

} // namespace

IntMatrix pointed_diff_matrix(const FiniteRack &x, int n, long modulus) {
    if (!x.unit) throw std::invalid_argument("pointed_diff_matrix: rack is not pointed");
    if (n < 1) throw std::invalid_argument("pointed_diff_matrix: degree must be >= 1");
    const int u = *x.unit;
    std::vector<int> rows = pointed_indices(x.size, u, n + 1);
    std::vector<int> cols = pointed_indices(x.size, u, n);
    IntMatrix full = rack_diff_matrix(x, n);
    // closure: d of a pointed cochain must vanish on unit-containing tuples
    std::vector<bool> keep(full.rows(), false);
    for (int r : rows) keep[r] = true;
    for (int i = 0; i < full.rows(); ++i) {
        if (keep[i]) continue;
        for (int j : cols) {
            Int v = full.at(i, j);
            if (modulus > 0) v %= modulus;
            if (v != 0) throw std::logic_error("pointed_diff_matrix: subcomplex not closed under d");
        }
    }
    IntMatrix r(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) r.at(static_cast<int>(i), static_cast<int>(j)) = full.at(rows[i], cols[j]);
    return r;
}

AbelianInvariants pointed_cohomology(const FiniteRack &x, int n, const Ring &ring) {
    IntMatrix d_out = pointed_diff_matrix(x, n, ring.modulus);
    IntMatrix d_in = n > 1 ? pointed_diff_matrix(x, n - 1, ring.modulus) : IntMatrix(d_out.cols(), 0);
    return invariants_of(d_out, d_in, ring);
}

} // namespace rackh
