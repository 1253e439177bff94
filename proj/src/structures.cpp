#include "rackh/structures.hpp"

#include "rackh/snf.hpp"

#include <algorithm>
#include <stdexcept>

namespace rackh {

namespace {

ValidationReport fail(std::string axiom, std::vector<int> witness, std::string msg) {
    return {false, std::move(axiom), std::move(witness), std::move(msg)};
}

bool in_range(int v, int n) { return v >= 0 && v < n; }

} // namespace

ValidationReport validate(const FiniteShelf &x, StructureKind kind) {
    const int n = x.size;
    if (n < 0 || x.op.size() != static_cast<size_t>(n) * n)
        return fail("table-shape", {}, "op table is not size x size");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (!in_range(x.apply(a, b), n)) return fail("table-range", {a, b}, "entry outside element range");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (x.apply(a, x.apply(b, c)) != x.apply(x.apply(a, b), x.apply(a, c)))
                    return fail("self-distributivity", {a, b, c}, "x|>(y|>z) != (x|>y)|>(x|>z)");
    if (x.unit) {
        const int u = *x.unit;
        if (!in_range(u, n)) return fail("unit-range", {u}, "unit outside element range");
        for (int a = 0; a < n; ++a) {
            if (x.apply(u, a) != a) return fail("unit-left", {a}, "1|>x != x");
            if (x.apply(a, u) != u) return fail("unit-right", {a}, "x|>1 != 1");
        }
    }
    if (kind == StructureKind::Rack || kind == StructureKind::PointedRack) {
        for (int a = 0; a < n; ++a) {
            std::vector<bool> seen(n, false);
            for (int b = 0; b < n; ++b) {
                int v = x.apply(a, b);
                if (seen[v]) return fail("left-translation-bijective", {a, v}, "c_x is not injective");
                seen[v] = true;
            }
        }
    }
    if (kind == StructureKind::PointedRack && !x.unit) return fail("pointed", {}, "no unit designated");
    return {};
}

ValidationReport validate(const FiniteGroup &g) {
    const int n = g.size;
    if (n <= 0 || g.mul.size() != static_cast<size_t>(n) * n)
        return fail("table-shape", {}, "mul table is not size x size");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (!in_range(g.apply(a, b), n)) return fail("table-range", {a, b}, "entry outside element range");
    if (!in_range(g.identity, n)) return fail("identity-range", {g.identity}, "identity outside range");
    for (int a = 0; a < n; ++a)
        if (g.apply(g.identity, a) != a || g.apply(a, g.identity) != a)
            return fail("identity-law", {a}, "e*x != x or x*e != x");
    if (g.inv.size() != static_cast<size_t>(n)) return fail("inverse-shape", {}, "inv list length != size");
    for (int a = 0; a < n; ++a) {
        if (!in_range(g.inv[a], n)) return fail("inverse-range", {a}, "inverse outside range");
        if (g.apply(a, g.inv[a]) != g.identity || g.apply(g.inv[a], a) != g.identity)
            return fail("inverse-law", {a}, "x*x^-1 != e");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g.apply(g.apply(a, b), c) != g.apply(a, g.apply(b, c)))
                    return fail("associativity", {a, b, c}, "(ab)c != a(bc)");
    return {};
}

ValidationReport validate(const RackModuleAction &act, const FiniteRack &x) {
    if (act.rank < 1) return fail("action-rank", {}, "rank must be positive");
    if (act.modulus < 0) return fail("action-modulus", {}, "modulus must be nonnegative");
    if (act.mats.size() != static_cast<size_t>(x.size)) return fail("action-shape", {}, "one matrix per rack element required");
    auto reduce = [&](Int v) {
        if (act.modulus == 0) return v;
        Int r = v % act.modulus;
        if (r < 0) r += act.modulus;
        return r;
    };
    auto equal_mod = [&](const IntMatrix &a, const IntMatrix &b) {
        for (int i = 0; i < act.rank; ++i)
            for (int j = 0; j < act.rank; ++j)
                if (reduce(a.at(i, j)) != reduce(b.at(i, j))) return false;
        return true;
    };
    for (int e = 0; e < x.size; ++e) {
        const IntMatrix &m = act.mats[e];
        if (m.rows() != act.rank || m.cols() != act.rank) return fail("action-matrix-shape", {e}, "matrix is not rank x rank");
        Int d = determinant(m);
        bool invertible;
        if (act.modulus == 0) {
            invertible = d == 1 || d == -1;
        } else {
            Int r = reduce(d);
            invertible = boost::multiprecision::gcd(r, Int(act.modulus)) == 1;
        }
        if (!invertible) return fail("action-invertible", {e}, "matrix not invertible over the coefficient group");
    }
    for (int a = 0; a < x.size; ++a)
        for (int b = 0; b < x.size; ++b)
            if (!equal_mod(act.mats[a] * act.mats[b], act.mats[x.apply(a, b)] * act.mats[a]))
                return fail("action-compatibility", {a, b}, "x.(y.a) != (x|>y).(x.a)");
    if (x.unit) {
        if (!equal_mod(act.mats[*x.unit], IntMatrix::identity(act.rank)))
            return fail("action-unit", {*x.unit}, "unit must act as identity");
    }
    return {};
}

FiniteRack conj_rack(const FiniteGroup &g) {
    ValidationReport v = validate(g);
    if (!v.ok) throw std::invalid_argument("conj_rack: invalid group: " + v.axiom);
    FiniteRack r;
    r.size = g.size;
    r.op.resize(static_cast<size_t>(g.size) * g.size);
    for (int x = 0; x < g.size; ++x)
        for (int y = 0; y < g.size; ++y)
            r.op[static_cast<size_t>(x) * g.size + y] = g.apply(g.apply(x, y), g.inv[x]);
    r.unit = g.identity;
    return r;
}

FiniteRack augmented_rack(const FiniteGroup &g, const std::vector<int> &action,
                          const std::vector<int> &f, std::optional<int> point) {
    ValidationReport v = validate(g);
    if (!v.ok) throw std::invalid_argument("augmented_rack: invalid group: " + v.axiom);
    if (f.empty() || action.size() != f.size() * g.size)
        throw std::invalid_argument("augmented_rack: action table must be |G| x |X|");
    const int n = static_cast<int>(f.size());
    auto act = [&](int e, int x) { return action[static_cast<size_t>(e) * n + x]; };
    for (int x = 0; x < n; ++x) {
        if (!in_range(act(g.identity, x), n) || act(g.identity, x) != x)
            throw std::invalid_argument("augmented_rack: identity must act trivially");
        if (!in_range(f[x], g.size)) throw std::invalid_argument("augmented_rack: f out of range");
    }
    for (int a = 0; a < g.size; ++a)
        for (int b = 0; b < g.size; ++b)
            for (int x = 0; x < n; ++x) {
                if (!in_range(act(a, x), n)) throw std::invalid_argument("augmented_rack: action out of range");
                if (act(a, act(b, x)) != act(g.apply(a, b), x))
                    throw std::invalid_argument("augmented_rack: not a group action");
            }
    for (int a = 0; a < g.size; ++a)
        for (int x = 0; x < n; ++x)
            if (f[act(a, x)] != g.apply(g.apply(a, f[x]), g.inv[a]))
                throw std::invalid_argument("augmented_rack: f is not equivariant");
    FiniteRack r;
    r.size = n;
    r.op.resize(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            r.op[static_cast<size_t>(x) * n + y] = act(f[x], y);
    if (point) {
        if (!in_range(*point, n) || f[*point] != g.identity)
            throw std::invalid_argument("augmented_rack: designated point must satisfy f(1) = e");
        r.unit = *point;
    }
    return r;
}

FiniteRack trivial_rack(int n) {
    FiniteRack r;
    r.size = n;
    r.op.resize(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) r.op[static_cast<size_t>(x) * n + y] = y;
    return r;
}

FiniteRack dihedral_quandle(int n) {
    FiniteRack r;
    r.size = n;
    r.op.resize(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) r.op[static_cast<size_t>(x) * n + y] = ((2 * x - y) % n + n) % n;
    return r;
}

FiniteGroup cyclic_group(int n) {
    FiniteGroup g;
    g.size = n;
    g.identity = 0;
    g.mul.resize(static_cast<size_t>(n) * n);
    g.inv.resize(n);
    for (int a = 0; a < n; ++a) {
        g.inv[a] = (n - a) % n;
        for (int b = 0; b < n; ++b) g.mul[static_cast<size_t>(a) * n + b] = (a + b) % n;
    }
    return g;
}

FiniteGroup product_group(const FiniteGroup &a, const FiniteGroup &b) {
    FiniteGroup g;
    g.size = a.size * b.size;
    g.identity = a.identity * b.size + b.identity;
    g.mul.resize(static_cast<size_t>(g.size) * g.size);
    g.inv.resize(g.size);
    for (int x = 0; x < g.size; ++x) {
        int xa = x / b.size, xb = x % b.size;
        g.inv[x] = a.inv[xa] * b.size + b.inv[xb];
        for (int y = 0; y < g.size; ++y) {
            int ya = y / b.size, yb = y % b.size;
            g.mul[static_cast<size_t>(x) * g.size + y] = a.apply(xa, ya) * b.size + b.apply(xb, yb);
        }
    }
    return g;
}

FiniteGroup klein_four() { return product_group(cyclic_group(2), cyclic_group(2)); }

FiniteGroup symmetric_group_s3() {
    // elements as permutations of {0,1,2}: e,(01),(02),(12),(012),(021)
    const int perms[6][3] = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    auto find = [&](const int p[3]) {
        for (int i = 0; i < 6; ++i)
            if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2]) return i;
        throw std::logic_error("symmetric_group_s3: lookup failed");
    };
    FiniteGroup g;
    g.size = 6;
    g.identity = 0;
    g.mul.resize(36);
    g.inv.resize(6);
    for (int a = 0; a < 6; ++a) {
        int ainv[3];
        for (int k = 0; k < 3; ++k) ainv[perms[a][k]] = k;
        g.inv[a] = find(ainv);
        for (int b = 0; b < 6; ++b) {
            int c[3];
            for (int k = 0; k < 3; ++k) c[k] = perms[a][perms[b][k]]; // (a*b)(k) = a(b(k))
            g.mul[static_cast<size_t>(a) * 6 + b] = find(c);
        }
    }
    return g;
}

const std::vector<NamedGroup> &group_fixtures() {
    static const std::vector<NamedGroup> fixtures = [] {
        std::vector<NamedGroup> v;
        for (int n = 2; n <= 6; ++n) v.push_back({"Z/" + std::to_string(n), cyclic_group(n)});
        v.push_back({"Z/2xZ/2", klein_four()});
        v.push_back({"S3", symmetric_group_s3()});
        for (const auto &[name, g] : v) {
            ValidationReport r = validate(g);
            if (!r.ok) throw std::logic_error("group fixture " + name + " invalid: " + r.axiom);
        }
        return v;
    }();
    return fixtures;
}

const std::vector<NamedRack> &rack_fixtures() {
    static const std::vector<NamedRack> fixtures = [] {
        std::vector<NamedRack> v;
        for (int n = 1; n <= 4; ++n) v.push_back({"trivial" + std::to_string(n), trivial_rack(n)});
        v.push_back({"conj-Z/2", conj_rack(cyclic_group(2))});
        v.push_back({"conj-Z/3", conj_rack(cyclic_group(3))});
        v.push_back({"conj-Z/4", conj_rack(cyclic_group(4))});
        v.push_back({"conj-Z/2xZ/2", conj_rack(klein_four())});
        v.push_back({"conj-S3", conj_rack(symmetric_group_s3())});
        for (int n = 3; n <= 5; ++n) v.push_back({"dihedral" + std::to_string(n), dihedral_quandle(n)});
        for (const auto &[name, x] : v) {
            ValidationReport r = validate(x, x.unit ? StructureKind::PointedRack : StructureKind::Rack);
            if (!r.ok) throw std::logic_error("rack fixture " + name + " invalid: " + r.axiom);
        }
        return v;
    }();
    return fixtures;
}

} // namespace rackh
