#include "rackh/products.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rackh {

namespace {

void check_pair(const Cochain &f1, const Cochain &f2, ComplexTag tag) {
    if (f1.tag != tag || f2.tag != tag || f1.carrier != f2.carrier)
        throw std::invalid_argument("product: cochains live on different structures");
    if (f1.ring != f2.ring) throw std::invalid_argument("product: coefficient rings differ");
    if (!f1.ring.has_product()) throw std::invalid_argument("product: coefficients carry no ring product");
}

Cochain shuffle_product(const FiniteRack &x, const Cochain &f1, const Cochain &f2,
                        ShuffleClass cls, int sign_mult) {
    check_pair(f1, f2, ComplexTag::Rack);
    const int p1 = f1.degree, p2 = f2.degree, n = p1 + p2;
    const Ring &ring = f1.ring;
    Cochain out = zero_cochain(ComplexTag::Rack, x.size, n, ring);
    std::vector<std::pair<Permutation, int>> sh;
    for (Permutation &s : shuffles(p1, p2, cls)) {
        int sg = s.sign() * sign_mult;
        sh.emplace_back(std::move(s), sg);
    }
    std::vector<int> y(p1), z(p2);
    for (std::size_t t = 0; t < out.values.size(); ++t) {
        std::vector<int> tup = index_tuple(t, x.size, n);
        RingElem acc = ring_zero(ring);
        bool any = false;
        for (const auto &[s, sg] : sh) {
            std::uint32_t prev = 0; // values sigma(1..k-1) as a bitmask
            for (int k = 1; k <= p1; ++k) {
                int r = tup[s(k) - 1];
                for (int j = s(k) - 1; j >= 1; --j)
                    if (!((prev >> (j - 1)) & 1u)) r = x.apply(tup[j - 1], r);
                y[k - 1] = r;
                prev |= 1u << (s(k) - 1);
            }
            const RingElem &v1 = f1.at(y);
            if (ring_is_zero(v1)) continue;
            for (int k = 1; k <= p2; ++k) z[k - 1] = tup[s(p1 + k) - 1];
            const RingElem &v2 = f2.at(z);
            if (ring_is_zero(v2)) continue;
            RingElem term = ring_mul(ring, v1, v2);
            if (sg < 0) term = ring_neg(ring, term);
            acc = ring_add(ring, acc, term);
            any = true;
        }
        if (any) out.values[t] = std::move(acc);
    }
    return out;
}

} // namespace

Cochain succ(const FiniteRack &x, const Cochain &f1, const Cochain &f2) {
    return shuffle_product(x, f1, f2, ShuffleClass::TopFixed, 1);
}

Cochain prec(const FiniteRack &x, const Cochain &f1, const Cochain &f2) {
    return shuffle_product(x, f1, f2, ShuffleClass::LeftMax, 1);
}

Cochain star(const FiniteRack &x, const Cochain &f1, const Cochain &f2) {
    return cochain_add(succ(x, f1, f2), prec(x, f1, f2));
}

Cochain cup(const FiniteGroup &g, const Cochain &f1, const Cochain &f2) {
    check_pair(f1, f2, ComplexTag::Group);
    if (f1.carrier != g.size) throw std::invalid_argument("cup: cochains do not live on this group");
    const int p1 = f1.degree, n = p1 + f2.degree;
    Cochain out = zero_cochain(ComplexTag::Group, g.size, n, f1.ring);
    for (std::size_t t = 0; t < out.values.size(); ++t) {
        std::vector<int> tup = index_tuple(t, g.size, n);
        std::vector<int> a(tup.begin(), tup.begin() + p1), b(tup.begin() + p1, tup.end());
        const RingElem &v1 = f1.at(a);
        if (ring_is_zero(v1)) continue;
        const RingElem &v2 = f2.at(b);
        if (ring_is_zero(v2)) continue;
        out.values[t] = ring_mul(f1.ring, v1, v2);
    }
    return out;
}

Cochain cochain_add(const Cochain &a, const Cochain &b) {
    if (a.tag != b.tag || a.carrier != b.carrier || a.degree != b.degree || a.ring != b.ring)
        throw std::invalid_argument("cochain_add: shape mismatch");
    Cochain c = a;
    for (std::size_t i = 0; i < c.values.size(); ++i) c.values[i] = ring_add(a.ring, c.values[i], b.values[i]);
    return c;
}

Cochain cochain_neg(const Cochain &a) {
    Cochain c = a;
    for (RingElem &v : c.values) v = ring_neg(a.ring, v);
    return c;
}

Cochain random_cochain(ComplexTag tag, int carrier, int degree, const Ring &ring, std::mt19937_64 &rng) {
    Cochain f = zero_cochain(tag, carrier, degree, ring);
    for (RingElem &v : f.values)
        for (Int &c : v.v)
            c = ring.modulus > 0 ? Int(rng() % static_cast<std::uint64_t>(ring.modulus))
                                 : Int(static_cast<long>(rng() % 7) - 3); // documented range [-3,3]
    return f;
}

namespace {

std::string elem_str(const RingElem &v) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < v.v.size(); ++i) os << (i ? "," : "") << v.v[i];
    os << "]";
    return os.str();
}

std::string cochain_str(const Cochain &f) {
    std::ostringstream os;
    os << "deg " << f.degree << " {";
    for (size_t i = 0; i < f.values.size(); ++i) os << (i ? "," : "") << elem_str(f.values[i]);
    os << "}";
    return os.str();
}

std::string tuple_str(const std::vector<int> &t) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
    os << ")";
    return os.str();
}

// Record the first differing entry plus everything needed to replay.
void record_failure(ProductReport &rep, const std::string &where, const Cochain &lhs, const Cochain &rhs,
                    const std::vector<const Cochain *> &inputs) {
    rep.pass = false;
    std::ostringstream os;
    os << where;
    for (std::size_t i = 0; i < lhs.values.size(); ++i)
        if (lhs.values[i] != rhs.values[i]) {
            os << " at tuple " << tuple_str(index_tuple(i, lhs.carrier, lhs.degree)) << ": lhs "
               << elem_str(lhs.values[i]) << " rhs " << elem_str(rhs.values[i]);
            break;
        }
    for (size_t i = 0; i < inputs.size(); ++i) os << "; f" << i + 1 << " = " << cochain_str(*inputs[i]);
    rep.counterexample = os.str();
}

std::vector<Cochain> basis_cochains(ComplexTag tag, int carrier, int degree, const Ring &ring) {
    std::vector<Cochain> out;
    const std::size_t tuples = power(carrier, degree);
    for (std::size_t t = 0; t < tuples; ++t)
        for (int c = 0; c < ring.value_len(); ++c) out.push_back(basis_cochain(tag, carrier, degree, ring, t, c));
    return out;
}

// Drive an identity over exhaustive-basis or random tuples of cochains.
template <typename Check>
void drive(ProductReport &rep, ComplexTag tag, int carrier, const Ring &ring,
           const std::vector<int> &degs, const ProductCheckOptions &opt, Check &&check) {
    rep.degrees.push_back(degs);
    std::vector<Cochain> fs(degs.size());
    if (opt.trials == 0) {
        std::vector<std::vector<Cochain>> basis;
        for (int d : degs) basis.push_back(basis_cochains(tag, carrier, d, ring));
        std::vector<size_t> pick(degs.size(), 0);
        for (;;) {
            for (size_t i = 0; i < degs.size(); ++i) fs[i] = basis[i][pick[i]];
            ++rep.cases;
            if (!check(fs)) return;
            size_t i = 0;
            while (i < pick.size() && pick[i] + 1 == basis[i].size()) pick[i++] = 0;
            if (i == pick.size()) break;
            ++pick[i];
        }
    } else {
        std::mt19937_64 rng(opt.seed);
        for (long trial = 0; trial < opt.trials; ++trial) {
            for (size_t i = 0; i < degs.size(); ++i) fs[i] = random_cochain(tag, carrier, degs[i], ring, rng);
            ++rep.cases;
            if (!check(fs)) return;
        }
    }
}

} // namespace

ProductReport check_dendriform(const FiniteRack &x, const Ring &ring, int max_total_degree,
                               const ProductCheckOptions &opt) {
    ProductReport rep{"dendriform", {}, 0, true, ""};
    auto prec_ = [&](const Cochain &a, const Cochain &b) {
        return shuffle_product(x, a, b, ShuffleClass::LeftMax, opt.corrupt_prec_sign ? -1 : 1);
    };
    for (int p1 = 0; p1 <= max_total_degree; ++p1)
        for (int p2 = 0; p1 + p2 <= max_total_degree; ++p2)
            for (int p3 = 0; p1 + p2 + p3 <= max_total_degree; ++p3) {
                // the dendriform identities hold on positive degrees only: with a
                // degree-0 factor no classification of the empty shuffle satisfies
                // all three (the structure has no unit), so those are skipped
                if (std::min({p1, p2, p3}) < std::max(1, opt.min_degree_each)) continue;
                drive(rep, ComplexTag::Rack, x.size, ring, {p1, p2, p3}, opt, [&](const std::vector<Cochain> &f) {
                    Cochain l1 = succ(x, f[0], succ(x, f[1], f[2]));
                    Cochain r1 = cochain_add(succ(x, succ(x, f[0], f[1]), f[2]), succ(x, prec_(f[0], f[1]), f[2]));
                    if (!(l1 == r1)) {
                        record_failure(rep, "x>(y>z) = (x>y)>z + (x<y)>z", l1, r1, {&f[0], &f[1], &f[2]});
                        return false;
                    }
                    Cochain l2 = prec_(succ(x, f[0], f[1]), f[2]);
                    Cochain r2 = succ(x, f[0], prec_(f[1], f[2]));
                    if (!(l2 == r2)) {
                        record_failure(rep, "(x>y)<z = x>(y<z)", l2, r2, {&f[0], &f[1], &f[2]});
                        return false;
                    }
                    Cochain l3 = prec_(prec_(f[0], f[1]), f[2]);
                    Cochain r3 = cochain_add(prec_(f[0], prec_(f[1], f[2])), prec_(f[0], succ(x, f[1], f[2])));
                    if (!(l3 == r3)) {
                        record_failure(rep, "(x<y)<z = x<(y<z) + x<(y>z)", l3, r3, {&f[0], &f[1], &f[2]});
                        return false;
                    }
                    return true;
                });
                if (!rep.pass) return rep;
            }
    return rep;
}

ProductReport check_star_associativity(const FiniteRack &x, const Ring &ring, int max_total_degree,
                                       const ProductCheckOptions &opt) {
    ProductReport rep{"star-associativity", {}, 0, true, ""};
    for (int p1 = 0; p1 <= max_total_degree; ++p1)
        for (int p2 = 0; p1 + p2 <= max_total_degree; ++p2)
            for (int p3 = 0; p1 + p2 + p3 <= max_total_degree; ++p3) {
                if (std::min({p1, p2, p3}) < opt.min_degree_each) continue;
                drive(rep, ComplexTag::Rack, x.size, ring, {p1, p2, p3}, opt, [&](const std::vector<Cochain> &f) {
                    Cochain l = star(x, star(x, f[0], f[1]), f[2]);
                    Cochain r = star(x, f[0], star(x, f[1], f[2]));
                    if (!(l == r)) {
                        record_failure(rep, "(x*y)*z = x*(y*z)", l, r, {&f[0], &f[1], &f[2]});
                        return false;
                    }
                    return true;
                });
                if (!rep.pass) return rep;
            }
    return rep;
}

ProductReport check_leibniz(const FiniteRack &x, const Ring &ring,
                            const std::vector<std::pair<int, int>> &degrees, const ProductCheckOptions &opt) {
    ProductReport rep{"graded-leibniz", {}, 0, true, ""};
    for (auto [p1, p2] : degrees) {
        drive(rep, ComplexTag::Rack, x.size, ring, {p1, p2}, opt, [&](const std::vector<Cochain> &f) {
            Cochain df1 = rack_diff(x, f[0]), df2 = rack_diff(x, f[1]);
            Cochain lhs = rack_diff(x, succ(x, f[0], f[1]));
            Cochain second = succ(x, f[0], df2);
            Cochain rhs = cochain_add(succ(x, df1, f[1]), p1 % 2 ? cochain_neg(second) : second);
            if (!(lhs == rhs)) {
                record_failure(rep, "d(f1>f2) = df1>f2 + (-1)^p1 f1>df2", lhs, rhs, {&f[0], &f[1]});
                return false;
            }
            lhs = rack_diff(x, prec(x, f[0], f[1]));
            second = prec(x, f[0], df2);
            rhs = cochain_add(prec(x, df1, f[1]), p1 % 2 ? cochain_neg(second) : second);
            if (!(lhs == rhs)) {
                record_failure(rep, "d(f1<f2) = df1<f2 + (-1)^p1 f1<df2", lhs, rhs, {&f[0], &f[1]});
                return false;
            }
            return true;
        });
        if (!rep.pass) return rep;
    }
    return rep;
}

ProductReport check_cup_leibniz(const FiniteGroup &g, const Ring &ring,
                                const std::vector<std::pair<int, int>> &degrees, const ProductCheckOptions &opt) {
    ProductReport rep{"cup-leibniz", {}, 0, true, ""};
    for (auto [p1, p2] : degrees) {
        drive(rep, ComplexTag::Group, g.size, ring, {p1, p2}, opt, [&](const std::vector<Cochain> &f) {
            Cochain lhs = group_diff(g, cup(g, f[0], f[1]));
            Cochain second = cup(g, f[0], group_diff(g, f[1]));
            Cochain rhs = cochain_add(cup(g, group_diff(g, f[0]), f[1]), p1 % 2 ? cochain_neg(second) : second);
            if (!(lhs == rhs)) {
                record_failure(rep, "d(f cup g) = df cup g + (-1)^p1 f cup dg", lhs, rhs, {&f[0], &f[1]});
                return false;
            }
            return true;
        });
        if (!rep.pass) return rep;
    }
    return rep;
}

} // namespace rackh
