#pragma once

#include "rackh/ring.hpp"
#include "rackh/snf.hpp"
#include "rackh/structures.hpp"

#include <span>

namespace rackh {

enum class ComplexTag { Rack, Group, CubicalGroup };

// Mixed-radix tuple index, leftmost argument most significant.
std::size_t tuple_index(std::span<const int> tuple, int base);
std::vector<int> index_tuple(std::size_t index, int base, int len);
std::size_t power(int base, int exp);

// Dense table of coefficient values indexed by n-tuples of elements.
struct Cochain {
    ComplexTag tag = ComplexTag::Rack;
    int carrier = 0;
    int degree = 0;
    Ring ring;
    std::vector<RingElem> values; // carrier^degree entries

    const RingElem &at(std::span<const int> tuple) const { return values[tuple_index(tuple, carrier)]; }
    RingElem &at(std::span<const int> tuple) { return values[tuple_index(tuple, carrier)]; }
    bool operator==(const Cochain &) const = default;
};

Cochain zero_cochain(ComplexTag tag, int carrier, int degree, const Ring &ring);
// Delta cochain: value has a 1 in the given component at the given tuple.
Cochain basis_cochain(ComplexTag tag, int carrier, int degree, const Ring &ring,
                      std::size_t tuple, int component = 0);

// d_R: alternating sum over i of f(face_{i,0}) minus (x_1|>...|>x_i) . f(face_{i,1});
// trivial action unless a module action is supplied.
Cochain rack_diff(const FiniteRack &x, const Cochain &f, const RackModuleAction *action = nullptr);
// Simplicial group differential with trivial coefficients.
Cochain group_diff(const FiniteGroup &g, const Cochain &f);
// Cubical group differential, evaluated through extend_group_functor / lambda_tuple.
Cochain cubical_group_diff(const FiniteGroup &g, const Cochain &f);

// Matrix of d^{n+1} in the delta-cochain basis (column j = d of basis cochain j).
// With a module action the matrix is built from rank x rank blocks.
IntMatrix rack_diff_matrix(const FiniteRack &x, int n, const RackModuleAction *action = nullptr);
IntMatrix group_diff_matrix(const FiniteGroup &g, int n);
IntMatrix cubical_group_diff_matrix(const FiniteGroup &g, int n);

// Invariants of ker d^{n+1} / im d^n; coefficients must be Z or Z/m
// (or a module action, whose modulus is taken from the action).
AbelianInvariants rack_cohomology(const FiniteRack &x, int n, const Ring &ring,
                                  const RackModuleAction *action = nullptr);
AbelianInvariants group_cohomology(const FiniteGroup &g, int n, const Ring &ring);
AbelianInvariants cubical_group_cohomology(const FiniteGroup &g, int n, const Ring &ring);

// Differential restricted to cochains vanishing when any argument is the unit
// (rows/columns indexed by unit-free tuples); closure under d_R is verified
// mod the given modulus (0 = over Z), and a failure throws.  Requires n >= 1.
IntMatrix pointed_diff_matrix(const FiniteRack &x, int n, long modulus = 0);

// Cohomology of the subcomplex of cochains vanishing when any argument is the
// unit; closure under d_R is verified, not assumed.  Degree 0 space is zero.
AbelianInvariants pointed_cohomology(const FiniteRack &x, int n, const Ring &ring);

} // namespace rackh
