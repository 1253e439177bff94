#pragma once

#include "rackh/matrix.hpp"

namespace rackh {

// U * M * V = D with U, V unimodular and D diagonal, d1 | d2 | ..., entries >= 0.
struct SnfResult {
    IntMatrix U, D, V;
};

SnfResult snf(const IntMatrix &m);

struct AbelianInvariants {
    long betti = 0;
    std::vector<Int> torsion; // entries > 1, divisibility chain
    bool operator==(const AbelianInvariants &) const = default;
};

// Columns form a basis of the integer kernel of m.
IntMatrix kernel_basis(const IntMatrix &m);

// Invariants of ker(d_out) / im(d_in); throws if d_out * d_in != 0.
AbelianInvariants cohomology_invariants(const IntMatrix &d_out, const IntMatrix &d_in);

// Same quotient with entries taken mod m (m = 0 means over Z).
// For m > 0 the kernel is {x : d_out x = 0 mod m} and the image gains m*Z^k.
AbelianInvariants quotient_invariants_mod(const IntMatrix &d_out, const IntMatrix &d_in, long m);

// Rank over F_p; rejects non-prime p.
int rank_mod_p(const IntMatrix &m, long p);

// Basis of the nullspace over F_p, entries normalized to 0..p-1.
IntMatrix nullspace_mod_p(const IntMatrix &m, long p);

} // namespace rackh
