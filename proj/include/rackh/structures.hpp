#pragma once

#include "rackh/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rackh {

// Binary operation table, row x column y -> x |> y.  Rack-ness is a property
// checked by validate(), not a separate representation.
struct FiniteShelf {
    int size = 0;
    std::vector<int> op; // row-major size*size
    std::optional<int> unit;

    int apply(int x, int y) const { return op[static_cast<size_t>(x) * size + y]; }
    // right-bracketed x1 |> (x2 |> (... |> y))
    int apply_chain(const std::vector<int> &xs, int y) const {
        int r = y;
        for (auto it = xs.rbegin(); it != xs.rend(); ++it) r = apply(*it, r);
        return r;
    }
};

using FiniteRack = FiniteShelf;

struct FiniteGroup {
    int size = 0;
    std::vector<int> mul;
    int identity = 0;
    std::vector<int> inv;

    int apply(int x, int y) const { return mul[static_cast<size_t>(x) * size + y]; }
};

// Matrix action of a rack on Z^k or (Z/m)^k (modulus 0 means Z).
struct RackModuleAction {
    int rank = 1;
    long modulus = 0;
    std::vector<IntMatrix> mats; // one invertible rank x rank matrix per rack element
};

enum class StructureKind { Shelf, Rack, PointedRack, Group, ModuleAction };

struct ValidationReport {
    bool ok = true;
    std::string axiom;        // first violated axiom, empty if ok
    std::vector<int> witness; // elements witnessing the violation
    std::string message;
};

ValidationReport validate(const FiniteShelf &x, StructureKind kind);
ValidationReport validate(const FiniteGroup &g);
ValidationReport validate(const RackModuleAction &a, const FiniteRack &x);

// x |> y = x y x^-1, pointed at the identity.
FiniteRack conj_rack(const FiniteGroup &g);

// x |> y = f(x) . y for a G-set (action table g*|X|+x -> gx) and equivariant f.
FiniteRack augmented_rack(const FiniteGroup &g, const std::vector<int> &action,
                          const std::vector<int> &f, std::optional<int> point = std::nullopt);

FiniteRack trivial_rack(int n);
FiniteRack dihedral_quandle(int n); // x |> y = 2x - y mod n
FiniteGroup cyclic_group(int n);
FiniteGroup klein_four();
FiniteGroup symmetric_group_s3(); // order: e,(12),(13),(23),(123),(132)
FiniteGroup product_group(const FiniteGroup &a, const FiniteGroup &b);

struct NamedRack {
    std::string name;
    FiniteRack rack;
};
struct NamedGroup {
    std::string name;
    FiniteGroup group;
};

// Validated fixture library: trivial racks 1-4, Conj of the fixture groups,
// dihedral quandles n = 3,4,5.
const std::vector<NamedRack> &rack_fixtures();
// Z/2..Z/6, Z/2 x Z/2, S3.
const std::vector<NamedGroup> &group_fixtures();

} // namespace rackh
