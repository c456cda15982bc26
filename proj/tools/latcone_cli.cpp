// latcone command line front end: parses a JSON problem description,
// dispatches one subcommand, and prints a machine readable report.
//
// Exit codes: 0 success, 2 invariant violation, 64 unknown subcommand,
// 65 malformed input.

#include "latcone/bounds.hpp"
#include "latcone/cohomology.hpp"
#include "latcone/cone.hpp"
#include "latcone/coxeter.hpp"
#include "latcone/enumerate.hpp"
#include "latcone/lattice.hpp"
#include "latcone/reflect.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

using json = nlohmann::json;
using namespace latcone;

namespace {

struct MalformedInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require_keys(const json& obj, const std::string& where,
                  const std::vector<std::string>& allowed) {
    if (!obj.is_object()) throw MalformedInput(where + ": expected an object");
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
            throw MalformedInput(where + ": unknown field '" + it.key() + "'");
    }
}

const json& require_field(const json& obj, const std::string& where, const std::string& key) {
    auto it = obj.find(key);
    if (it == obj.end()) throw MalformedInput(where + ": missing field '" + key + "'");
    return *it;
}

Int parse_int(const json& v, const std::string& where) {
    if (v.is_number_integer()) return Int(v.get<long long>());
    if (v.is_string()) {
        try {
            return Int(v.get<std::string>());
        } catch (const std::exception&) {
            throw MalformedInput(where + ": not an integer");
        }
    }
    throw MalformedInput(where + ": not an integer");
}

IntVec parse_vector(const json& v, const std::string& where) {
    if (!v.is_array()) throw MalformedInput(where + ": expected an array");
    IntVec out;
    for (const json& x : v) out.push_back(parse_int(x, where));
    return out;
}

std::vector<IntVec> parse_vector_list(const json& v, const std::string& where) {
    if (!v.is_array()) throw MalformedInput(where + ": expected an array of vectors");
    std::vector<IntVec> out;
    for (const json& x : v) out.push_back(parse_vector(x, where));
    return out;
}

IntMat parse_matrix(const json& v, const std::string& where) {
    std::vector<IntVec> rows = parse_vector_list(v, where);
    if (rows.empty()) throw MalformedInput(where + ": empty matrix");
    IntMat m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols) throw MalformedInput(where + ": ragged matrix");
        for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::vector<IntMat> parse_matrix_list(const json& v, const std::string& where) {
    if (!v.is_array()) throw MalformedInput(where + ": expected an array of matrices");
    std::vector<IntMat> out;
    for (const json& x : v) out.push_back(parse_matrix(x, where));
    return out;
}

std::vector<std::size_t> parse_index_row(const json& v, const std::string& where) {
    if (!v.is_array()) throw MalformedInput(where + ": expected an array of indices");
    std::vector<std::size_t> out;
    for (const json& x : v) {
        if (!x.is_number_unsigned() && !x.is_number_integer())
            throw MalformedInput(where + ": index entries must be nonnegative integers");
        long long n = x.get<long long>();
        if (n < 0) throw MalformedInput(where + ": index entries must be nonnegative");
        out.push_back(static_cast<std::size_t>(n));
    }
    return out;
}

std::vector<std::vector<std::size_t>> parse_index_table(const json& v, const std::string& where) {
    if (!v.is_array()) throw MalformedInput(where + ": expected a table");
    std::vector<std::vector<std::size_t>> out;
    for (const json& x : v) out.push_back(parse_index_row(x, where));
    return out;
}

FiniteGroup parse_group(const json& v, const std::string& where) {
    require_keys(v, where, {"table"});
    return FiniteGroup(parse_index_table(require_field(v, where, "table"), where + ".table"));
}

Lattice parse_lattice(const json& obj) {
    require_keys(obj, "lattice", {"rank", "gram"});
    IntMat gram = parse_matrix(require_field(obj, "lattice", "gram"), "lattice.gram");
    Int rank = parse_int(require_field(obj, "lattice", "rank"), "lattice.rank");
    if (rank != Int(gram.rows))
        throw MalformedInput("lattice: rank does not match the Gram matrix");
    return Lattice(gram);
}

json int_to_json(const Int& x) {
    static const Int lo = -(Int(1) << 53), hi = Int(1) << 53;
    if (x > lo && x < hi) return json(x.convert_to<long long>());
    return json(x.str());
}

json vec_to_json(const IntVec& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(int_to_json(x));
    return a;
}

json vecs_to_json(const std::vector<IntVec>& vs) {
    json a = json::array();
    for (const IntVec& v : vs) a.push_back(vec_to_json(v));
    return a;
}

json mat_to_json(const IntMat& m) {
    json a = json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols; ++j) row.push_back(int_to_json(m.at(i, j)));
        a.push_back(row);
    }
    return a;
}

struct Parameters {
    Int square = 0;
    Int wall_bound = 0;
    std::size_t word_radius = 4;
    std::size_t iteration_cap = 10000;
    unsigned jobs = 1;
    bool square_set = false;
    bool wall_bound_set = false;
};

struct Problem {
    json root;
    Parameters params;

    bool has(const std::string& key) const { return root.contains(key); }
    const json& field(const std::string& key) const {
        return require_field(root, "problem", key);
    }
};

Problem load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open input file: " + path);
    json root;
    try {
        in >> root;
    } catch (const json::exception& e) {
        throw MalformedInput(std::string("JSON parse error: ") + e.what());
    }
    require_keys(root, "problem",
                 {"lattice", "reference", "vector", "roots", "cone", "group", "action", "h1",
                  "parameters"});
    Problem p;
    p.root = std::move(root);
    if (p.root.contains("parameters")) {
        const json& pr = p.root["parameters"];
        require_keys(pr, "parameters",
                     {"square", "wall_bound", "word_radius", "iteration_cap", "jobs"});
        if (pr.contains("square")) {
            p.params.square = parse_int(pr["square"], "parameters.square");
            p.params.square_set = true;
        }
        if (pr.contains("wall_bound")) {
            p.params.wall_bound = parse_int(pr["wall_bound"], "parameters.wall_bound");
            p.params.wall_bound_set = true;
        }
        if (pr.contains("word_radius"))
            p.params.word_radius =
                static_cast<std::size_t>(parse_int(pr["word_radius"], "parameters.word_radius")
                                             .convert_to<unsigned long long>());
        if (pr.contains("iteration_cap"))
            p.params.iteration_cap = static_cast<std::size_t>(
                parse_int(pr["iteration_cap"], "parameters.iteration_cap")
                    .convert_to<unsigned long long>());
        if (pr.contains("jobs"))
            p.params.jobs = static_cast<unsigned>(
                parse_int(pr["jobs"], "parameters.jobs").convert_to<unsigned long long>());
    }
    return p;
}

RationalCone parse_cone(const Problem& p, const Lattice& lattice) {
    const json& c = p.field("cone");
    require_keys(c, "cone", {"generators"});
    return RationalCone::from_generators(
        lattice.rank(), parse_vector_list(require_field(c, "cone", "generators"),
                                          "cone.generators"));
}

PositiveConeRef parse_reference(const Problem& p, const Lattice& lattice) {
    return PositiveConeRef(lattice, parse_vector(p.field("reference"), "reference"));
}

// ---------------------------------------------------------------------------
// Subcommand handlers

json run_info(const Problem& p) {
    Lattice lattice = parse_lattice(p.field("lattice"));
    json out;
    out["rank"] = lattice.rank();
    out["signature"] = {lattice.positive_index(), lattice.negative_index()};
    out["det"] = int_to_json(lattice.discriminant());
    return out;
}

json run_walk(const Problem& p) {
    Lattice lattice = parse_lattice(p.field("lattice"));
    PositiveConeRef ref = parse_reference(p, lattice);
    WallSystem walls(lattice, parse_vector_list(p.field("roots"), "roots"));
    IntVec x = parse_vector(p.field("vector"), "vector");
    WalkResult r = chamber_walk(ref, x, walls, p.params.iteration_cap);
    json out;
    out["image"] = vec_to_json(r.image);
    json word = json::array();
    for (std::size_t w : r.word) word.push_back(w);
    out["word"] = word;
    json pairings = json::array();
    for (const Root& root : walls.roots()) {
        json entry;
        entry["root"] = vec_to_json(root.vector());
        entry["pairing"] = int_to_json(lattice.inner(r.image, root.vector()));
        pairings.push_back(entry);
    }
    out["pairings"] = pairings;
    return out;
}

json run_enumerate(const Problem& p) {
    Lattice lattice = parse_lattice(p.field("lattice"));
    RationalCone cone = parse_cone(p, lattice);
    if (!p.params.square_set) throw MalformedInput("enumerate: missing square parameter");
    std::vector<IntVec> vs =
        vectors_of_square_in_cone(cone, p.params.square, lattice, p.params.jobs);
    json out;
    out["representatives"] = vecs_to_json(vs);
    return out;
}

GeneratedGroup parse_generated_group(const Problem& p, const Lattice& lattice) {
    const json& g = p.field("group");
    require_keys(g, "group", {"generators"});
    return GeneratedGroup(lattice,
                          parse_matrix_list(require_field(g, "group", "generators"),
                                            "group.generators"),
                          p.params.word_radius);
}

json run_domain(const Problem& p) {
    Lattice lattice = parse_lattice(p.field("lattice"));
    PositiveConeRef ref = parse_reference(p, lattice);
    GeneratedGroup group = parse_generated_group(p, lattice);
    IntVec y = parse_vector(p.field("vector"), "vector");
    DirichletDomain dom = dirichlet_domain(group, y, ref);
    json out;
    out["generators"] = vecs_to_json(dom.cone.generators());
    out["certified_radius"] = dom.certified_radius;
    out["ball_size"] = dom.ball_size;
    return out;
}

json run_orbits(const Problem& p) {
    Lattice lattice = parse_lattice(p.field("lattice"));
    PositiveConeRef ref = parse_reference(p, lattice);
    GeneratedGroup group = parse_generated_group(p, lattice);
    IntVec y = parse_vector(p.field("vector"), "vector");
    if (!p.params.square_set) throw MalformedInput("orbits: missing square parameter");
    std::vector<IntVec> reps =
        orbit_representatives(p.params.square, group, y, ref, p.params.jobs);
    json out;
    out["representatives"] = vecs_to_json(reps);
    return out;
}

json run_walls(const Problem& p) {
    Lattice lattice = parse_lattice(p.field("lattice"));
    RationalCone cone = parse_cone(p, lattice);
    if (!p.params.wall_bound_set) throw MalformedInput("walls: missing wall_bound parameter");
    std::vector<IntVec> walls = walls_meeting_cone(cone, p.params.wall_bound, lattice);
    json out;
    out["walls"] = vecs_to_json(walls);
    return out;
}

json run_coxeter(const Problem& p) {
    Lattice lattice = parse_lattice(p.field("lattice"));
    const json& a = p.field("action");
    require_keys(a, "action", {"generators"});
    LatticeAction action = LatticeAction::from_generators(
        lattice,
        parse_matrix_list(require_field(a, "action", "generators"), "action.generators"));
    std::vector<RootOrbit> orbits =
        root_orbits(lattice, parse_vector_list(p.field("roots"), "roots"), action);
    json out;
    json jorbits = json::array();
    for (const RootOrbit& orbit : orbits) {
        OrbitReport report = analyze_orbit(lattice, orbit);
        json jo;
        json roots = json::array();
        for (const Root& r : orbit.roots) roots.push_back(vec_to_json(r.vector()));
        jo["roots"] = roots;
        jo["beta"] = int_to_json(orbit.beta);
        jo["finite"] = report.finite;
        jo["case"] = report.kase == OrbitCase::A       ? "A"
                     : report.kase == OrbitCase::B     ? "B"
                                                       : "infinite";
        if (report.finite) {
            jo["composite_root"] = vec_to_json(*report.composite_root);
            jo["longest_element"] = mat_to_json(*report.longest_element);
        }
        jorbits.push_back(jo);
    }
    out["orbits"] = jorbits;
    return out;
}

json run_h1(const Problem& p) {
    const json& h = p.field("h1");
    require_keys(h, "h1", {"gamma", "coefficients"});
    FiniteGroup gamma = parse_group(require_field(h, "h1", "gamma"), "h1.gamma");
    const json& co = require_field(h, "h1", "coefficients");
    std::string kind =
        require_field(co, "h1.coefficients", "kind").get<std::string>();
    json out;
    if (kind == "finite") {
        require_keys(co, "h1.coefficients", {"kind", "group", "action"});
        FiniteGroup g = parse_group(require_field(co, "h1.coefficients", "group"),
                                    "h1.coefficients.group");
        FiniteAction action(gamma, g,
                            parse_index_table(require_field(co, "h1.coefficients", "action"),
                                              "h1.coefficients.action"));
        std::vector<FiniteCocycle> reps = h1_finite(action);
        out["kind"] = "finite";
        out["classes"] = reps.size();
        json jr = json::array();
        for (const FiniteCocycle& c : reps) {
            json row = json::array();
            for (std::size_t v : c) row.push_back(v);
            jr.push_back(row);
        }
        out["representatives"] = jr;
    } else if (kind == "free_abelian") {
        require_keys(co, "h1.coefficients", {"kind", "rank", "action"});
        Int rank = parse_int(require_field(co, "h1.coefficients", "rank"), "rank");
        FreeAbelianAction action(
            gamma, static_cast<std::size_t>(rank.convert_to<unsigned long long>()),
            parse_matrix_list(require_field(co, "h1.coefficients", "action"),
                              "h1.coefficients.action"));
        H1FreeAbelian h1 = h1_free_abelian(action);
        out["kind"] = "free_abelian";
        json divisors = json::array();
        for (const Int& d : h1.elementary_divisors) divisors.push_back(int_to_json(d));
        out["elementary_divisors"] = divisors;
        json jr = json::array();
        for (const VectorCocycle& c : h1.representatives) {
            json row = json::array();
            for (const IntVec& v : c) row.push_back(vec_to_json(v));
            jr.push_back(row);
        }
        out["representatives"] = jr;
    } else if (kind == "almost_abelian") {
        require_keys(co, "h1.coefficients",
                     {"kind", "k", "rank", "q", "v_on_k", "q_on_k", "q_on_v", "tau", "action"});
        FiniteGroup k = parse_group(require_field(co, "h1.coefficients", "k"), "k");
        FiniteGroup q = parse_group(require_field(co, "h1.coefficients", "q"), "q");
        Int rank = parse_int(require_field(co, "h1.coefficients", "rank"), "rank");
        std::size_t r = static_cast<std::size_t>(rank.convert_to<unsigned long long>());
        auto parse_g0 = [&](const json& v, const std::string& where) {
            require_keys(v, where, {"k", "v"});
            AlmostAbelianGroup::G0Elem e;
            e.k = static_cast<std::size_t>(
                parse_int(require_field(v, where, "k"), where).convert_to<unsigned long long>());
            e.v = parse_vector(require_field(v, where, "v"), where);
            return e;
        };
        std::vector<std::vector<AlmostAbelianGroup::G0Elem>> tau;
        for (const json& row : require_field(co, "h1.coefficients", "tau")) {
            std::vector<AlmostAbelianGroup::G0Elem> trow;
            for (const json& cell : row) trow.push_back(parse_g0(cell, "tau"));
            tau.push_back(std::move(trow));
        }
        AlmostAbelianGroup g(
            k, r, q,
            parse_index_table(require_field(co, "h1.coefficients", "v_on_k"), "v_on_k"),
            parse_index_table(require_field(co, "h1.coefficients", "q_on_k"), "q_on_k"),
            parse_matrix_list(require_field(co, "h1.coefficients", "q_on_v"), "q_on_v"), tau);
        const json& act = require_field(co, "h1.coefficients", "action");
        require_keys(act, "h1.coefficients.action", {"k_maps", "v_maps", "q_maps", "corr"});
        std::vector<std::vector<std::size_t>> k_maps =
            parse_index_table(require_field(act, "action", "k_maps"), "k_maps");
        std::vector<IntMat> v_maps =
            parse_matrix_list(require_field(act, "action", "v_maps"), "v_maps");
        std::optional<AlmostAbelianAction> action;
        if (act.contains("q_maps") || act.contains("corr")) {
            std::vector<std::vector<std::size_t>> q_maps =
                parse_index_table(require_field(act, "action", "q_maps"), "q_maps");
            std::vector<std::vector<AlmostAbelianGroup::G0Elem>> corr;
            for (const json& row : require_field(act, "action", "corr")) {
                std::vector<AlmostAbelianGroup::G0Elem> crow;
                for (const json& cell : row) crow.push_back(parse_g0(cell, "corr"));
                corr.push_back(std::move(crow));
            }
            action.emplace(gamma, g, k_maps, v_maps, q_maps, corr);
        } else {
            action.emplace(AlmostAbelianAction::plain(gamma, g, k_maps, v_maps));
        }
        H1AlmostAbelian h1 = h1_almost_abelian(*action);
        out["kind"] = "almost_abelian";
        out["classes"] = h1.representatives.size();
        out["quotient_classes"] = h1.quotient_class_count;
        out["certified"] = h1.certified;
        out["caveats"] = h1.caveats;
        out["upper_bound"] = int_to_json(h1.upper_bound);
        json jr = json::array();
        for (const AACocycle& c : h1.representatives) {
            json row = json::array();
            for (const AAElem& e : c) {
                json je;
                je["q"] = e.q;
                je["k"] = e.k;
                je["v"] = vec_to_json(e.v);
                row.push_back(je);
            }
            jr.push_back(row);
        }
        out["representatives"] = jr;
    } else {
        throw MalformedInput("h1.coefficients.kind must be finite, free_abelian or almost_abelian");
    }
    return out;
}

json run_bounds(unsigned dimension, const Int& self_intersection, unsigned rank) {
    BoundReport report = bound_report(dimension, self_intersection, rank);
    json out;
    out["dimension"] = dimension;
    out["self_intersection"] = int_to_json(self_intersection);
    out["rank"] = rank;
    json entries = json::array();
    for (const BoundEntry& e : report.entries) {
        json je;
        je["name"] = e.name;
        je["value"] = int_to_json(e.value);
        je["provenance"] = e.provenance;
        entries.push_back(je);
    }
    out["entries"] = entries;
    return out;
}

void print_report(const json& out, const std::string& format) {
    if (format == "json") {
        std::cout << out.dump(2) << "\n";
        return;
    }
    // text: flat, deterministic key order (nlohmann sorts object keys).
    std::function<void(const json&, const std::string&)> walk =
        [&](const json& v, const std::string& prefix) {
            if (v.is_object()) {
                for (auto it = v.begin(); it != v.end(); ++it)
                    walk(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
            } else if (v.is_array()) {
                std::cout << prefix << " = " << v.dump() << "\n";
            } else {
                std::cout << prefix << " = " << v.dump() << "\n";
            }
        };
    walk(out, "");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact lattice cone, reflection group and cohomology toolkit"};
    app.require_subcommand(0, 1);
    app.allow_extras(false);

    std::string input_path;
    std::string format = "json";
    long long square = 0, wall_bound = 0, word_radius = -1, iteration_cap = -1, jobs = -1;
    bool square_given = false, wall_given = false;
    unsigned dimension = 1, rank = 1;
    std::string self_intersection = "1";

    auto add_common = [&](CLI::App* sub, bool needs_input) {
        if (needs_input)
            sub->add_option("--input", input_path, "problem file (JSON)")->required();
        sub->add_option("--format", format, "json|text")
            ->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--word-radius", word_radius, "word ball radius");
        sub->add_option("--iteration-cap", iteration_cap, "walk iteration cap");
        sub->add_option("--jobs", jobs, "parallel scan partitions");
    };

    CLI::App* info = app.add_subcommand("info", "lattice signature and discriminant");
    add_common(info, true);
    CLI::App* walk = app.add_subcommand("walk", "chamber walk into the fundamental chamber");
    add_common(walk, true);
    CLI::App* enumerate = app.add_subcommand("enumerate", "vectors of fixed square in a cone");
    add_common(enumerate, true);
    enumerate->add_option("--square", square, "target square")->each([&](const std::string&) {
        square_given = true;
    });
    CLI::App* domain = app.add_subcommand("domain", "Dirichlet fundamental domain");
    add_common(domain, true);
    CLI::App* orbits = app.add_subcommand("orbits", "orbit representatives of fixed square");
    add_common(orbits, true);
    orbits->add_option("--square", square, "target square")->each([&](const std::string&) {
        square_given = true;
    });
    CLI::App* walls = app.add_subcommand("walls", "negative-norm walls meeting a cone");
    add_common(walls, true);
    walls->add_option("--wall-bound", wall_bound, "norm bound N")->each([&](const std::string&) {
        wall_given = true;
    });
    CLI::App* coxeter = app.add_subcommand("coxeter", "Galois orbit Coxeter analysis");
    add_common(coxeter, true);
    CLI::App* h1 = app.add_subcommand("h1", "first nonabelian cohomology");
    add_common(h1, true);
    CLI::App* bounds = app.add_subcommand("bounds", "effective bound calculator");
    bounds->add_option("--format", format, "json|text")->check(CLI::IsMember({"json", "text"}));
    bounds->add_option("--dimension", dimension, "half complex dimension n");
    bounds->add_option("--self-intersection", self_intersection, "L^n");
    bounds->add_option("--rank", rank, "Picard rank rho");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    }
    if (app.get_subcommands().empty()) {
        std::cerr << app.help();
        return 64;
    }
    CLI::App* sub = app.get_subcommands().front();

    try {
        json out;
        if (sub == bounds) {
            Int ln;
            try {
                ln = Int(self_intersection);
            } catch (const std::exception&) {
                throw MalformedInput("--self-intersection must be an integer");
            }
            out = run_bounds(dimension, ln, rank);
        } else {
            Problem p = load_problem(input_path);
            if (square_given) {
                p.params.square = Int(square);
                p.params.square_set = true;
            }
            if (wall_given) {
                p.params.wall_bound = Int(wall_bound);
                p.params.wall_bound_set = true;
            }
            if (word_radius >= 0) p.params.word_radius = static_cast<std::size_t>(word_radius);
            if (iteration_cap >= 0) p.params.iteration_cap = static_cast<std::size_t>(iteration_cap);
            if (jobs >= 1) p.params.jobs = static_cast<unsigned>(jobs);
            if (sub == info) out = run_info(p);
            else if (sub == walk) out = run_walk(p);
            else if (sub == enumerate) out = run_enumerate(p);
            else if (sub == domain) out = run_domain(p);
            else if (sub == orbits) out = run_orbits(p);
            else if (sub == walls) out = run_walls(p);
            else if (sub == coxeter) out = run_coxeter(p);
            else if (sub == h1) out = run_h1(p);
        }
        print_report(out, format);
        return 0;
    } catch (const MalformedInput& e) {
        json err;
        err["error"] = "MalformedInput";
        err["detail"] = e.what();
        std::cerr << err.dump(2) << "\n";
        return 65;
    } catch (const Error& e) {
        json err;
        err["error"] = e.name();
        err["detail"] = e.what();
        std::cerr << err.dump(2) << "\n";
        return 2;
    } catch (const std::exception& e) {
        json err;
        err["error"] = "InternalError";
        err["detail"] = e.what();
        std::cerr << err.dump(2) << "\n";
        return 2;
    }
}
