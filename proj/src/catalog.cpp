#include "dmcyl/catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dmcyl/expr.hpp"

namespace dmcyl {

namespace {

using nlohmann::json;

CompactGroupData parse_group(const std::string& name, const json& j) {
    CompactGroupData g;
    g.name = name;
    g.rank = j.at("rank").get<int>();
    std::vector<Generator> gens;
    for (const auto& item : j.at("generators"))
        gens.push_back({item.at("name").get<std::string>(), item.at("degree").get<int>()});
    g.bg = make_algebra(std::move(gens));
    g.weyl_order = j.at("weyl_order").get<int>();
    if (j.contains("dim"))
        g.dim = j.at("dim").get<int>();
    if (j.contains("connected"))
        g.connected = j.at("connected").get<bool>();
    if (j.contains("note"))
        g.note = j.at("note").get<std::string>();
    validate_group(g);
    return g;
}

}  // namespace

Catalog Catalog::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw error("cannot open catalog file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_json(buf.str(), path);
}

Catalog Catalog::load_json(const std::string& text, const std::string& origin) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw error(origin + ": " + e.what());
    }
    Catalog cat;
    try {
        for (const auto& [name, val] : j.at("groups").items())
            cat.groups_.emplace(name, parse_group(name, val));
        for (const auto& [name, val] : j.at("fibers").items()) {
            CatalogFiber f{name,
                           cat.group(val.at("K").get<std::string>()),
                           cat.group(val.at("H").get<std::string>()),
                           AlgebraMorphism::identity(cat.group(val.at("K").get<std::string>()).bg),
                           val.at("dim").get<int>(),
                           val.at("type").get<std::string>(),
                           true,
                           ""};
            std::vector<Polynomial> images(f.K.bg->size(), Polynomial(f.H.bg));
            for (const auto& [gen, expr] : val.at("iota").items()) {
                const auto idx = f.K.bg->find(gen);
                if (!idx)
                    throw error("fiber '" + name + "': unknown generator '" + gen + "'");
                images[*idx] = parse_polynomial(f.H.bg, expr.get<std::string>());
            }
            f.iota = AlgebraMorphism(f.K.bg, f.H.bg, std::move(images));
            if (val.contains("sullivan"))
                f.sullivan = val.at("sullivan").get<bool>();
            if (val.contains("note"))
                f.note = val.at("note").get<std::string>();
            cat.fibers_.emplace(name, std::move(f));
        }
    } catch (const json::exception& e) {
        throw error(origin + ": " + e.what());
    }
    return cat;
}

const CompactGroupData& Catalog::group(const std::string& name) const {
    const auto it = groups_.find(name);
    if (it == groups_.end())
        throw error("group '" + name + "' not in catalog");
    return it->second;
}

const CatalogFiber& Catalog::fiber(const std::string& name) const {
    const auto it = fibers_.find(name);
    if (it == fibers_.end())
        throw error("fiber '" + name + "' not in catalog");
    return it->second;
}

std::vector<std::string> Catalog::group_names() const {
    std::vector<std::string> out;
    for (const auto& [name, g] : groups_)
        out.push_back(name);
    return out;
}

std::vector<std::string> Catalog::fiber_names() const {
    std::vector<std::string> out;
    for (const auto& [name, f] : fibers_)
        out.push_back(name);
    return out;
}

HomogeneousPair Catalog::pair_of(const std::string& fiber_name) const {
    const CatalogFiber& f = fiber(fiber_name);
    return HomogeneousPair{f.K, f.H, f.iota};
}

GroupDiagram Catalog::suspension_of(const std::string& fiber_name) const {
    const CatalogFiber& f = fiber(fiber_name);
    GroupDiagram d = suspension_diagram(f.K, f.H, f.iota);
    d.fiber_minus_tag = f.annotated_type;
    d.fiber_plus_tag = f.annotated_type;
    return d;
}

std::string default_catalog_path() {
    if (const char* env = std::getenv("DMCYL_CATALOG"))
        return env;
#ifdef DMCYL_DEFAULT_CATALOG
    return DMCYL_DEFAULT_CATALOG;
#else
    return "data/catalog.json";
#endif
}

}  // namespace dmcyl
