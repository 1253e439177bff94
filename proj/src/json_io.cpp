#include "rackh/json_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace rackh {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string &origin, const std::string &what) {
    throw MalformedInput(origin + ": " + what);
}

} // namespace

LoadedStructure parse_structure(const std::string &text, const std::string &origin) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        fail(origin, std::string("not valid JSON (") + e.what() + ")");
    }
    if (!j.is_object()) fail(origin, "top level is not an object");
    if (j.contains("schema") && (!j["schema"].is_number_integer() || j["schema"].get<int>() != 1))
        fail(origin, "unsupported schema version (expected 1)");
    if (!j.contains("kind") || !j["kind"].is_string()) fail(origin, "missing string field \"kind\"");
    std::string kind = j["kind"].get<std::string>();
    if (kind != "rack" && kind != "group") fail(origin, "kind must be \"rack\" or \"group\", got \"" + kind + "\"");
    if (!j.contains("size") || !j["size"].is_number_integer()) fail(origin, "missing integer field \"size\"");
    int size = j["size"].get<int>();
    if (size <= 0) fail(origin, "size must be positive");
    if (!j.contains("table") || !j["table"].is_array()) fail(origin, "missing array field \"table\"");
    const json &table = j["table"];
    if (static_cast<int>(table.size()) != size)
        fail(origin, "table has " + std::to_string(table.size()) + " rows, expected " + std::to_string(size));
    std::vector<int> op(static_cast<size_t>(size) * size);
    for (int i = 0; i < size; ++i) {
        const json &row = table[i];
        if (!row.is_array() || static_cast<int>(row.size()) != size)
            fail(origin, "table row " + std::to_string(i) + " has " +
                             std::to_string(row.is_array() ? row.size() : 0) + " entries, expected " +
                             std::to_string(size));
        for (int k = 0; k < size; ++k) {
            if (!row[k].is_number_integer()) fail(origin, "table entry (" + std::to_string(i) + "," + std::to_string(k) + ") is not an integer");
            int v = row[k].get<int>();
            if (v < 0 || v >= size)
                fail(origin, "table entry (" + std::to_string(i) + "," + std::to_string(k) + ") = " +
                                 std::to_string(v) + " out of range 0.." + std::to_string(size - 1));
            op[static_cast<size_t>(i) * size + k] = v;
        }
    }

    LoadedStructure out;
    out.kind = kind;
    if (j.contains("labels")) {
        if (!j["labels"].is_array() || static_cast<int>(j["labels"].size()) != size)
            fail(origin, "labels must be an array of length size");
        for (const json &l : j["labels"]) {
            if (!l.is_string()) fail(origin, "labels entries must be strings");
            out.labels.push_back(l.get<std::string>());
        }
    }

    if (kind == "rack") {
        out.rack.size = size;
        out.rack.op = std::move(op);
        if (j.contains("unit")) {
            if (!j["unit"].is_number_integer()) fail(origin, "unit must be an integer");
            int u = j["unit"].get<int>();
            if (u < 0 || u >= size) fail(origin, "unit out of range");
            out.rack.unit = u;
        }
        ValidationReport r = validate(out.rack, out.rack.unit ? StructureKind::PointedRack : StructureKind::Rack);
        if (!r.ok) fail(origin, "not a rack: " + r.message);
    } else {
        out.group.size = size;
        out.group.mul = std::move(op);
        // locate the two-sided identity before the full validation pass
        int id = -1;
        for (int e = 0; e < size; ++e) {
            bool ok = true;
            for (int x = 0; x < size && ok; ++x)
                ok = out.group.apply(e, x) == x && out.group.apply(x, e) == x;
            if (ok) { id = e; break; }
        }
        if (id < 0) fail(origin, "not a group: no two-sided identity element");
        out.group.identity = id;
        out.group.inv.assign(size, -1);
        for (int x = 0; x < size; ++x)
            for (int y = 0; y < size; ++y)
                if (out.group.apply(x, y) == id && out.group.apply(y, x) == id) out.group.inv[x] = y;
        for (int x = 0; x < size; ++x)
            if (out.group.inv[x] < 0) fail(origin, "not a group: element " + std::to_string(x) + " has no inverse");
        ValidationReport r = validate(out.group);
        if (!r.ok) fail(origin, "not a group: " + r.message);
    }
    return out;
}

LoadedStructure load_structure(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw MalformedInput(path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_structure(buf.str(), path);
}

Ring parse_ring(const std::string &spec) {
    auto mod_of = [&](const std::string &s) -> long {
        if (s == "Z") return 0;
        if (s.size() < 3 || s[0] != 'Z' || s[1] != '/') throw MalformedInput("bad coefficient spec: " + spec);
        long m = 0;
        for (size_t i = 2; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw MalformedInput("bad coefficient spec: " + spec);
            m = m * 10 + (s[i] - '0');
        }
        if (m < 2) throw MalformedInput("bad coefficient spec (modulus must be >= 2): " + spec);
        return m;
    };
    if (spec.rfind("mat", 0) == 0) {
        size_t slash = spec.find('/');
        if (slash == std::string::npos || slash <= 3) throw MalformedInput("bad coefficient spec: " + spec);
        int k = 0;
        for (size_t i = 3; i < slash; ++i) {
            if (spec[i] < '0' || spec[i] > '9') throw MalformedInput("bad coefficient spec: " + spec);
            k = k * 10 + (spec[i] - '0');
        }
        if (k < 1 || k > 8) throw MalformedInput("bad coefficient spec (matrix dim 1..8): " + spec);
        // "Z2" shorthand in matNN/Z2 means Z/2
        std::string tail = spec.substr(slash + 1);
        if (tail.size() > 1 && tail[0] == 'Z' && tail[1] != '/') tail = "Z/" + tail.substr(1);
        return Ring::matrix_ring(k, mod_of(tail));
    }
    return mod_of(spec) == 0 ? Ring::integers() : Ring::integers_mod(mod_of(spec));
}

} // namespace rackh
