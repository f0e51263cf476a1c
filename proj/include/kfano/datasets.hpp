#ifndef KFANO_DATASETS_HPP
#define KFANO_DATASETS_HPP

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "kfano/embedded_data.hpp"
#include "invariants.hpp"
#include "scaffolding.hpp"

namespace kfano {

using Json = nlohmann::json;

inline const Json& dataset(const std::string& name) {
    static std::map<std::string, Json> cache;
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;
    for (const auto& e : embedded::entries())
        if (name == e.name) return cache.emplace(name, Json::parse(e.json)).first->second;
    throw InputError("unknown embedded dataset " + name);
}

inline std::string dataset_checksum(const std::string& name) {
    for (const auto& e : embedded::entries())
        if (name == e.name) return e.sha256;
    throw InputError("unknown embedded dataset " + name);
}

namespace detail {

template <class F>
auto json_field(const std::string& where, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw InputError(where + ": " + e.what());
    }
}

inline IVec ivec_of(const Json& j) {
    IVec v;
    for (const auto& x : j) v.push_back(Int(x.get<long>()));
    return v;
}

inline std::vector<IVec> ivecs_of(const Json& j) {
    std::vector<IVec> out;
    for (const auto& r : j) out.push_back(ivec_of(r));
    return out;
}

inline Rat rat_of(const Json& j) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    Rat r;
    if (r.set_str(j.get<std::string>(), 10) != 0) throw InputError("bad rational " + j.get<std::string>());
    r.canonicalize();
    return r;
}

inline std::vector<std::string> strings_of(const Json& j) { return j.get<std::vector<std::string>>(); }

}  // namespace detail

// --- polytopes --------------------------------------------------------------------------

struct PolytopeRecord {
    std::string name;
    size_t lattice_rank = 0;
    std::vector<IVec> vertices;
    std::vector<std::string> labels;
    std::string source;
    std::vector<std::string> notes;

    Polytope polytope() const { return hull(vertices); }
};

inline PolytopeRecord polytope_record_from_json(const Json& j) {
    return detail::json_field("polytope", [&] {
        PolytopeRecord r;
        r.name = j.value("name", std::string("unnamed"));
        r.vertices = detail::ivecs_of(j.at("vertices"));
        if (r.vertices.empty()) throw InputError("polytope " + r.name + " has no vertices");
        r.lattice_rank = j.contains("lattice_rank") ? j.at("lattice_rank").get<size_t>() : r.vertices[0].size();
        for (const auto& v : r.vertices)
            if (v.size() != r.lattice_rank) throw InputError("polytope " + r.name + ": vertex of the wrong length");
        if (j.contains("labels")) r.labels = detail::strings_of(j.at("labels"));
        r.source = j.value("source", std::string());
        if (j.contains("notes")) r.notes = detail::strings_of(j.at("notes"));
        return r;
    });
}

inline std::vector<PolytopeRecord> builtin_polytopes() {
    std::vector<PolytopeRecord> out;
    for (const auto& p : dataset("polytopes").at("polytopes")) out.push_back(polytope_record_from_json(p));
    return out;
}

inline PolytopeRecord builtin_polytope(const std::string& name) {
    for (auto& r : builtin_polytopes())
        if (r.name == name) return r;
    throw InputError("unknown builtin polytope " + name);
}

inline PolytopeRecord load_polytope_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
    return polytope_record_from_json(j);
}

// --- catalogs ---------------------------------------------------------------------------

inline SingularityCatalog singularity_catalog() {
    return detail::json_field("singularity_catalog", [] {
        SingularityCatalog cat;
        for (const auto& j : dataset("singularity_catalog").at("entries")) {
            SingularityCatalogEntry e;
            e.key = j.at("key");
            e.t1_dim = j.value("t1_dim", 0L);
            e.var_multipliers = j.value("var_multipliers", std::vector<long>{});
            e.relations = j.value("relations", std::vector<std::string>{});
            e.qg_rigid = j.value("qg_rigid", false);
            e.reduced_base = j.value("reduced_base", true);
            if (j.contains("t2_dim") && !j.at("t2_dim").is_null()) e.t2_dim = j.at("t2_dim").get<long>();
            e.t2_multipliers = j.value("t2_multipliers", std::vector<long>{});
            for (const auto& c : j.value("components", Json::array())) {
                CatalogComponent cc;
                cc.name = c.at("name");
                cc.dim = c.at("dim");
                cc.ideal = detail::strings_of(c.at("ideal"));
                cc.smoothing = c.value("smoothing", false);
                if (c.contains("milnor") && !c.at("milnor").is_null())
                    cc.milnor = MilnorBetti{c.at("milnor").at("b2"), c.at("milnor").at("b3")};
                e.components.push_back(cc);
            }
            e.source = j.value("source", std::string());
            e.notes = j.value("notes", std::vector<std::string>{});
            cat.emplace(e.key, e);
        }
        validate_catalog(cat);
        return cat;
    });
}

inline std::vector<FanoCatalogRow> fano_catalog() {
    return detail::json_field("fano_catalog", [] {
        std::vector<FanoCatalogRow> rows;
        for (const auto& j : dataset("fano_catalog").at("rows")) {
            FanoCatalogRow r;
            r.family = j.at("family");
            r.picard_rank = j.at("picard_rank");
            r.degree = detail::rat_of(j.at("degree"));
            if (j.contains("euler") && !j.at("euler").is_null()) r.euler = j.at("euler").get<long>();
            r.very_ample = j.value("very_ample", true);
            r.source = j.value("source", std::string());
            rows.push_back(r);
        }
        return rows;
    });
}

// --- actions ----------------------------------------------------------------------------

struct SegreBlockData {
    std::vector<std::string> t_names, y_names, z_names;
    std::vector<Polynomial> t_relations, y_definitions, y_kernel, z_definitions, z_kernel;
    TorusAction torus;
    FiniteAction t_involution, y_involution;
    std::vector<std::vector<Polynomial>> z_primes;
    std::vector<long> z_prime_dimensions;
    std::string source;
    std::vector<std::string> notes;
};

inline SegreBlockData segre_block_data() {
    return detail::json_field("actions.segre_block", [] {
        const Json& j = dataset("actions").at("segre_block");
        SegreBlockData d;
        d.t_names = detail::strings_of(j.at("t_names"));
        d.y_names = detail::strings_of(j.at("y_names"));
        d.z_names = detail::strings_of(j.at("z_names"));
        d.t_relations = parse_polynomials(detail::strings_of(j.at("t_relations")), d.t_names);
        d.y_definitions = parse_polynomials(detail::strings_of(j.at("y_definitions")), d.t_names);
        d.y_kernel = parse_polynomials(detail::strings_of(j.at("y_kernel")), d.y_names);
        d.z_definitions = parse_polynomials(detail::strings_of(j.at("z_definitions")), d.y_names);
        d.z_kernel = parse_polynomials(detail::strings_of(j.at("z_kernel")), d.z_names);
        d.torus.weights = detail::ivecs_of(j.at("torus_weights"));
        d.t_involution = {d.t_names.size(), {j.at("t_involution").get<std::vector<size_t>>()}};
        d.y_involution = {d.y_names.size(), {j.at("y_involution").get<std::vector<size_t>>()}};
        for (const auto& p : j.at("z_primes")) d.z_primes.push_back(parse_polynomials(detail::strings_of(p), d.z_names));
        d.z_prime_dimensions = j.at("z_prime_dimensions").get<std::vector<long>>();
        d.source = j.value("source", std::string());
        d.notes = j.value("notes", std::vector<std::string>{});
        return d;
    });
}

struct FatPointData {
    std::vector<std::string> t_names;
    std::vector<Polynomial> relations;
    TorusAction torus;
    std::vector<std::pair<std::string, IntegerMatrix>> generators;
    std::vector<std::string> fixed_generators, fixed_presentation;
    size_t fixed_dimension = 0;
    std::string source;
};

inline FatPointData fat_point_data() {
    return detail::json_field("actions.fat_point", [] {
        const Json& j = dataset("actions").at("fat_point");
        FatPointData d;
        d.t_names = detail::strings_of(j.at("t_names"));
        d.relations = parse_polynomials(detail::strings_of(j.at("relations")), d.t_names);
        d.torus.weights = detail::ivecs_of(j.at("torus_weights"));
        for (const auto& g : j.at("generators")) {
            auto rows = detail::ivecs_of(g.at("matrix"));
            d.generators.push_back({g.at("name"), IntegerMatrix::from_rows(rows, rows.size())});
        }
        const Json& f = j.at("fixed_subring");
        d.fixed_generators = detail::strings_of(f.at("generators"));
        d.fixed_presentation = detail::strings_of(f.at("presentation"));
        d.fixed_dimension = f.at("dimension");
        d.source = j.value("source", std::string());
        return d;
    });
}

// --- scaffolding ------------------------------------------------------------------------

struct ScaffoldingRecord {
    std::string name, polytope, source;
    Scaffolding scaffolding;
    std::vector<std::string> ray_names, pic_names;
    std::vector<size_t> pic_basis;  // ray indices
    std::vector<IVec> equation_classes;
    std::vector<std::string> notes;
};

inline ScaffoldingRecord scaffolding_record(const std::string& name) {
    return detail::json_field("scaffolding", [&] {
        for (const auto& j : dataset("scaffolding").at("scaffoldings")) {
            if (j.at("name") != name) continue;
            ScaffoldingRecord r;
            r.name = name;
            r.polytope = j.at("polytope");
            r.source = j.value("source", std::string());
            r.scaffolding.shape_rays = detail::ivecs_of(j.at("shape_rays"));
            r.scaffolding.u_rank = j.at("u_rank");
            for (const auto& s : j.at("struts"))
                r.scaffolding.struts.push_back({s.at("name"), detail::ivec_of(s.at("divisor")), detail::ivec_of(s.at("chi"))});
            r.ray_names = detail::strings_of(j.at("ray_names"));
            r.pic_names = detail::strings_of(j.at("pic_names"));
            for (const auto& b : detail::strings_of(j.at("pic_basis"))) {
                auto it = std::find(r.ray_names.begin(), r.ray_names.end(), b);
                if (it == r.ray_names.end()) throw InputError("scaffolding " + name + ": unknown Pic basis ray " + b);
                r.pic_basis.push_back(static_cast<size_t>(it - r.ray_names.begin()));
            }
            r.equation_classes = detail::ivecs_of(j.at("equation_classes"));
            r.notes = j.value("notes", std::vector<std::string>{});
            return r;
        }
        throw InputError("unknown scaffolding " + name);
    });
}

inline const Json& expected_values(const std::string& case_id) {
    const Json& c = dataset("expected").at("cases");
    if (!c.contains(case_id)) throw InputError("no expected values for case " + case_id);
    return c.at(case_id);
}

}  // namespace kfano

#endif
