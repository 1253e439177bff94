#pragma once

#include "rackh/matrix.hpp"

#include <string>
#include <vector>

namespace rackh {

// Coefficient descriptor: Z, Z/m, the ring of dim x dim matrices over Z or Z/m,
// or the free module Z^dim / (Z/m)^dim (module coefficients carry no product).
struct Ring {
    enum class Kind { Integers, IntegersMod, MatrixRing, FreeModule };

    Kind kind = Kind::Integers;
    long modulus = 0; // 0 means Z
    int dim = 1;

    static Ring integers() { return {}; }
    static Ring integers_mod(long m) { return {Kind::IntegersMod, m, 1}; }
    static Ring matrix_ring(int k, long m) { return {Kind::MatrixRing, m, k}; }
    static Ring free_module(int k, long m) { return {Kind::FreeModule, m, k}; }

    int value_len() const { return kind == Kind::MatrixRing ? dim * dim : kind == Kind::FreeModule ? dim : 1; }
    bool has_product() const { return kind != Kind::FreeModule; }
    bool snf_amenable() const { return kind == Kind::Integers || kind == Kind::IntegersMod; }

    bool operator==(const Ring &) const = default;
    std::string describe() const;
};

// Element of the ring/module: flat value vector (row-major for matrices).
struct RingElem {
    std::vector<Int> v;
    bool operator==(const RingElem &) const = default;
};

RingElem ring_zero(const Ring &r);
RingElem ring_one(const Ring &r); // identity matrix / 1; invalid for FreeModule
RingElem ring_reduce(const Ring &r, RingElem a);
RingElem ring_add(const Ring &r, const RingElem &a, const RingElem &b);
RingElem ring_neg(const Ring &r, const RingElem &a);
RingElem ring_mul(const Ring &r, const RingElem &a, const RingElem &b);
bool ring_is_zero(const RingElem &a);

} // namespace rackh
