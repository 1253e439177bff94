#pragma once

#include "rackh/ring.hpp"
#include "rackh/structures.hpp"

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace rackh {

// Raised on unparsable or invalid input; the CLI maps it to exit code 2.
struct MalformedInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LoadedStructure {
    std::string kind; // "rack" or "group"
    FiniteRack rack;  // filled when kind == "rack"
    FiniteGroup group; // filled when kind == "group"
    std::vector<std::string> labels;
};

// Read { "kind", "size", "table", "unit"?, "labels"? } from a JSON file,
// validate the axioms, and throw MalformedInput with the defect otherwise.
LoadedStructure load_structure(const std::string &path);
LoadedStructure parse_structure(const std::string &text, const std::string &origin);

// Coefficient descriptors: "Z", "Z/m", "matK/ZM" (e.g. "mat2/Z2"), "matK/Z".
Ring parse_ring(const std::string &spec);

} // namespace rackh
