// Batch front end: ingestion, subcommands, JSON reports.
// Exit codes: 0 all checks pass, 1 a verified identity failed, 2 malformed input.

#include "rackh/acceptance.hpp"
#include "rackh/cochain.hpp"
#include "rackh/cubical.hpp"
#include "rackh/json_io.hpp"
#include "rackh/morphism.hpp"
#include "rackh/products.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

namespace {

using nlohmann::ordered_json;
using namespace rackh;

void emit(const ordered_json &j, const std::string &out, const std::string &format) {
    std::string text;
    if (format == "text") {
        std::ostringstream os;
        for (const auto &[k, v] : j.items()) os << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        text = os.str();
    } else {
        text = j.dump(2) + "\n";
    }
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out);
        if (!f) throw MalformedInput("cannot write " + out);
        f << text;
    }
}

ordered_json invariants_json(const AbelianInvariants &inv) {
    ordered_json t = ordered_json::array();
    for (const Int &x : inv.torsion) t.push_back(x.convert_to<long long>());
    return {{"betti", inv.betti}, {"torsion", t}};
}

ordered_json matrix_json(const IntMatrix &m) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).convert_to<long long>());
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json product_report_json(const ProductReport &r) {
    return {{"identity", r.identity}, {"degrees", r.degrees},  {"cases", r.cases},
            {"pass", r.pass},         {"counterexample", r.counterexample}};
}

int run(int argc, char **argv) {
    CLI::App app{"Exact rack/group cohomology workbench"};
    app.require_subcommand(1);

    std::string structure_path, group_path, coeff = "Z", out, format = "json";
    int degree = 1, max_degree = 2;
    long trials = 0;
    std::uint64_t seed = 1;

    auto add_io = [&](CLI::App *c) {
        c->add_option("--out", out, "report file (default: stdout)");
        c->add_option("--format", format, "json|text")->check(CLI::IsMember({"json", "text"}));
    };

    CLI::App *coh = app.add_subcommand("cohomology", "betti numbers and torsion of one degree");
    std::string complex_kind = "rack";
    bool with_matrices = false;
    coh->add_option("--structure,--group", structure_path, "input JSON table")->required();
    coh->add_option("--complex", complex_kind, "rack|pointed|group|cubical")
        ->check(CLI::IsMember({"rack", "pointed", "group", "cubical"}));
    coh->add_option("--degree", degree, "cohomological degree")->required();
    coh->add_option("--coeff", coeff, "Z or Z/m");
    coh->add_flag("--matrices", with_matrices, "include the two differential matrices");
    add_io(coh);

    CLI::App *pc = app.add_subcommand("products-check", "dendriform, associativity and Leibniz identities");
    pc->add_option("--structure", structure_path, "rack JSON table")->required();
    pc->add_option("--coeff", coeff, "Z, Z/m or matK/Zm");
    pc->add_option("--max-degree", max_degree, "total degree bound");
    pc->add_option("--trials", trials, "random cochains per degree tuple (0 = exhaustive basis)");
    pc->add_option("--seed", seed, "random seed");
    add_io(pc);

    CLI::App *mc = app.add_subcommand("morphism-check", "group-to-rack morphism S");
    mc->add_option("--group", group_path, "group JSON table")->required();
    mc->add_option("--coeff", coeff, "Z/p for the induced degree-1 map");
    mc->add_option("--max-degree", max_degree, "chain-map degree bound");
    mc->add_option("--trials", trials, "random cochains for the algebra identity (0 = exhaustive)");
    mc->add_option("--seed", seed, "random seed");
    add_io(mc);

    CLI::App *nc = app.add_subcommand("nerve-check", "trunk-map enumeration against tuples");
    nc->add_option("--structure", structure_path, "rack JSON table")->required();
    nc->add_option("--max-degree", max_degree, "cube dimension bound (enumeration needs |X| <= 3)");
    add_io(nc);

    CLI::App *sh = app.add_subcommand("shuffle", "print a shuffle class with signs");
    int p1 = 1, p2 = 1;
    std::string cls = "all";
    sh->add_option("--p1", p1, "first block")->required();
    sh->add_option("--p2", p2, "second block")->required();
    sh->add_option("--class", cls, "all|top|left")->check(CLI::IsMember({"all", "top", "left"}));
    add_io(sh);

    CLI::App *vp = app.add_subcommand("verify-paper", "full acceptance suite");
    vp->add_option("--seed", seed, "random seed");
    add_io(vp);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e); // prints help or the parse error
        return code == 0 ? 0 : 2;
    }

    if (coh->parsed()) {
        LoadedStructure s = load_structure(structure_path);
        Ring ring = parse_ring(coeff);
        if (!ring.snf_amenable()) throw MalformedInput("cohomology needs Z or Z/m coefficients, got " + coeff);
        AbelianInvariants inv;
        IntMatrix d_out, d_in;
        if (complex_kind == "rack" || complex_kind == "pointed") {
            if (s.kind != "rack") throw MalformedInput(structure_path + ": expected a rack table");
            if (complex_kind == "pointed") {
                inv = pointed_cohomology(s.rack, degree, ring);
                d_out = pointed_diff_matrix(s.rack, degree, ring.modulus);
                d_in = degree > 1 ? pointed_diff_matrix(s.rack, degree - 1, ring.modulus) : IntMatrix(d_out.cols(), 0);
            } else {
                inv = rack_cohomology(s.rack, degree, ring);
                d_out = rack_diff_matrix(s.rack, degree);
                d_in = degree > 0 ? rack_diff_matrix(s.rack, degree - 1) : IntMatrix(d_out.cols(), 0);
            }
        } else {
            if (s.kind != "group") throw MalformedInput(structure_path + ": expected a group table");
            if (complex_kind == "group") {
                inv = group_cohomology(s.group, degree, ring);
                d_out = group_diff_matrix(s.group, degree);
                d_in = degree > 0 ? group_diff_matrix(s.group, degree - 1) : IntMatrix(d_out.cols(), 0);
            } else {
                inv = cubical_group_cohomology(s.group, degree, ring);
                d_out = cubical_group_diff_matrix(s.group, degree);
                d_in = degree > 0 ? cubical_group_diff_matrix(s.group, degree - 1) : IntMatrix(d_out.cols(), 0);
            }
        }
        ordered_json j{{"schema", 1},         {"subcommand", "cohomology"}, {"input", structure_path},
                       {"complex", complex_kind}, {"degree", degree},       {"coeff", ring.describe()}};
        j.update(invariants_json(inv));
        if (with_matrices) {
            j["d_out"] = matrix_json(d_out);
            j["d_in"] = matrix_json(d_in);
        }
        emit(j, out, format);
        return 0;
    }

    if (pc->parsed()) {
        LoadedStructure s = load_structure(structure_path);
        if (s.kind != "rack") throw MalformedInput(structure_path + ": expected a rack table");
        Ring ring = parse_ring(coeff);
        ProductCheckOptions opt{trials, seed, 0, false};
        std::vector<ProductReport> reports;
        reports.push_back(check_dendriform(s.rack, ring, max_degree, opt));
        reports.push_back(check_star_associativity(s.rack, ring, max_degree, opt));
        std::vector<std::pair<int, int>> degs;
        for (int a = 1; a < max_degree; ++a)
            for (int b = 1; a + b <= max_degree; ++b) degs.emplace_back(a, b);
        if (!degs.empty()) reports.push_back(check_leibniz(s.rack, ring, degs, opt));
        ordered_json j{{"schema", 1},  {"subcommand", "products-check"}, {"input", structure_path},
                       {"coeff", ring.describe()}, {"max_degree", max_degree}, {"seed", seed}};
        bool pass = true;
        j["reports"] = ordered_json::array();
        for (const ProductReport &r : reports) {
            pass = pass && r.pass;
            j["reports"].push_back(product_report_json(r));
        }
        j["pass"] = pass;
        emit(j, out, format);
        return pass ? 0 : 1;
    }

    if (mc->parsed()) {
        LoadedStructure s = load_structure(group_path);
        if (s.kind != "group") throw MalformedInput(group_path + ": expected a group table");
        Ring ring = parse_ring(coeff);
        MorphismReport chain = verify_chain_map(s.group, max_degree);
        MorphismReport alg =
            verify_algebra_morphism(s.group, ring.kind == Ring::Kind::Integers ? Ring::integers() : ring,
                                    std::min(max_degree, 3), {trials, seed, 0, false});
        ordered_json j{{"schema", 1}, {"subcommand", "morphism-check"}, {"input", group_path},
                       {"coeff", ring.describe()}, {"max_degree", max_degree}, {"seed", seed}};
        j["chain_map"] = {{"pass", chain.chain_map_pass}, {"cases", chain.cases}, {"detail", chain.detail}};
        j["algebra"] = {{"pass", alg.algebra_pass}, {"cases", alg.cases}, {"detail", alg.detail}};
        bool pass = chain.chain_map_pass && alg.algebra_pass;
        if (ring.kind == Ring::Kind::IntegersMod) {
            InducedH1 h = induced_H1(s.group, ring.modulus);
            j["induced_h1"] = {{"dim_h1_group", h.dim_h1_group},
                               {"dim_h1_rack", h.dim_h1_rack},
                               {"rank_s1", h.rank_s1},
                               {"injective", h.injective}};
            pass = pass && h.injective;
        }
        if (s.group.size <= 4) {
            bool comp = true;
            std::string why;
            for (int n = 0; n <= std::min(max_degree, 2) && comp; ++n) comp = composite_S_check(s.group, n, &why);
            j["composite"] = {{"pass", comp}, {"detail", why}};
            pass = pass && comp;
        }
        j["pass"] = pass;
        emit(j, out, format);
        return pass ? 0 : 1;
    }

    if (nc->parsed()) {
        LoadedStructure s = load_structure(structure_path);
        if (s.kind != "rack") throw MalformedInput(structure_path + ": expected a rack table");
        if (s.rack.size > 3) throw MalformedInput("nerve-check enumerates trunk maps only for |X| <= 3");
        bool pass = true;
        std::string why;
        long labelings = 0;
        for (int n = 0; n <= max_degree && pass; ++n) {
            std::vector<EdgeLabeling> maps = enumerate_trunk_maps(s.rack, n);
            if (maps.size() != power(s.rack.size, n)) {
                pass = false;
                why = "degree " + std::to_string(n) + ": wrong trunk-map count";
                break;
            }
            for (const EdgeLabeling &m : maps) {
                if (!(labeling_from_tuple(s.rack, generator_edges(m)) == m)) {
                    pass = false;
                    why = "degree " + std::to_string(n) + ": a trunk map is not induced by its tuple";
                    break;
                }
                ++labelings;
            }
        }
        ordered_json j{{"schema", 1}, {"subcommand", "nerve-check"}, {"input", structure_path},
                       {"max_degree", max_degree}, {"labelings", labelings}, {"pass", pass}, {"detail", why}};
        emit(j, out, format);
        return pass ? 0 : 1;
    }

    if (sh->parsed()) {
        ShuffleClass c = cls == "all" ? ShuffleClass::All : cls == "top" ? ShuffleClass::TopFixed : ShuffleClass::LeftMax;
        ordered_json j{{"schema", 1}, {"subcommand", "shuffle"}, {"p1", p1}, {"p2", p2}, {"class", cls}};
        j["shuffles"] = ordered_json::array();
        for (const Permutation &s : shuffles(p1, p2, c))
            j["shuffles"].push_back({{"images", s.images()}, {"sign", s.sign()}});
        emit(j, out, format);
        return 0;
    }

    // verify-paper
    AcceptanceReport rep = run_acceptance(seed);
    for (const CriterionResult &r : rep.results)
        std::cerr << (r.pass ? "[PASS] " : "[FAIL] ") << "criterion " << r.id << ": " << r.name << " ("
                  << r.seconds << "s)\n";
    if (out.empty()) {
        std::cout << rep.canonical_json;
    } else {
        std::ofstream f(out);
        if (!f) throw MalformedInput("cannot write " + out);
        f << rep.canonical_json;
    }
    return rep.all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
    try {
        return run(argc, argv);
    } catch (const MalformedInput &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
