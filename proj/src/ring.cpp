#include "rackh/ring.hpp"

#include <stdexcept>

namespace rackh {

std::string Ring::describe() const {
    switch (kind) {
    case Kind::Integers: return "Z";
    case Kind::IntegersMod: return "Z/" + std::to_string(modulus);
    case Kind::MatrixRing:
        return "mat" + std::to_string(dim) + "/" + (modulus ? "Z" + std::to_string(modulus) : std::string("Z"));
    case Kind::FreeModule:
        return (modulus ? "(Z/" + std::to_string(modulus) + ")" : std::string("Z")) + "^" + std::to_string(dim);
    }
    return "?";
}

RingElem ring_zero(const Ring &r) { return {std::vector<Int>(r.value_len())}; }

RingElem ring_one(const Ring &r) {
    if (!r.has_product()) throw std::invalid_argument("ring_one: module coefficients have no unit");
    RingElem e = ring_zero(r);
    if (r.kind == Ring::Kind::MatrixRing)
        for (int i = 0; i < r.dim; ++i) e.v[static_cast<size_t>(i) * r.dim + i] = 1;
    else
        e.v[0] = 1;
    return ring_reduce(r, std::move(e));
}

RingElem ring_reduce(const Ring &r, RingElem a) {
    if (r.modulus > 0)
        for (Int &x : a.v) {
            x %= r.modulus;
            if (x < 0) x += r.modulus;
        }
    return a;
}

RingElem ring_add(const Ring &r, const RingElem &a, const RingElem &b) {
    RingElem c = a;
    for (size_t i = 0; i < c.v.size(); ++i) c.v[i] += b.v[i];
    return ring_reduce(r, std::move(c));
}

RingElem ring_neg(const Ring &r, const RingElem &a) {
    RingElem c = a;
    for (Int &x : c.v) x = -x;
    return ring_reduce(r, std::move(c));
}

RingElem ring_mul(const Ring &r, const RingElem &a, const RingElem &b) {
    if (!r.has_product()) throw std::invalid_argument("ring_mul: module coefficients have no product");
    if (r.kind != Ring::Kind::MatrixRing) {
        RingElem c{{a.v[0] * b.v[0]}};
        return ring_reduce(r, std::move(c));
    }
    const int k = r.dim;
    RingElem c = ring_zero(r);
    for (int i = 0; i < k; ++i)
        for (int l = 0; l < k; ++l) {
            const Int &x = a.v[static_cast<size_t>(i) * k + l];
            if (x == 0) continue;
            for (int j = 0; j < k; ++j) c.v[static_cast<size_t>(i) * k + j] += x * b.v[static_cast<size_t>(l) * k + j];
        }
    return ring_reduce(r, std::move(c));
}

bool ring_is_zero(const RingElem &a) {
    for (const Int &x : a.v)
        if (x != 0) return false;
    return true;
}

} // namespace rackh
