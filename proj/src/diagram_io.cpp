#include "dmcyl/diagram_io.hpp"

#include <fstream>
#include <sstream>

#include "dmcyl/expr.hpp"

namespace dmcyl {

namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json parse_json(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw error(origin + ": " + e.what());
    }
}

AlgebraMorphism morphism_from_json(const json& j, const std::string& field,
                                   const CompactGroupData& src, const CompactGroupData& dst) {
    std::vector<Polynomial> images(src.bg->size(), Polynomial(dst.bg));
    for (const auto& [gen, expr] : j.items()) {
        const auto idx = src.bg->find(gen);
        if (!idx)
            throw error(field + ": unknown generator '" + gen + "' of " + src.name);
        try {
            images[*idx] = parse_polynomial(dst.bg, expr.get<std::string>());
        } catch (const error& e) {
            throw error(field + "." + gen + ": " + e.what());
        }
    }
    return AlgebraMorphism(src.bg, dst.bg, std::move(images));
}

}  // namespace

CompactGroupData group_from_json(const std::string& name, const json& j) {
    CompactGroupData g;
    g.name = j.contains("name") ? j.at("name").get<std::string>() : name;
    try {
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
    } catch (const json::exception& e) {
        throw error("group '" + g.name + "': " + e.what());
    }
    validate_group(g);
    return g;
}

ordered_json group_to_json(const CompactGroupData& g) {
    ordered_json j;
    j["name"] = g.name;
    j["rank"] = g.rank;
    ordered_json gens = ordered_json::array();
    for (const auto& gen : g.bg->gens())
        gens.push_back({{"name", gen.name}, {"degree", gen.degree}});
    j["generators"] = std::move(gens);
    j["weyl_order"] = g.weyl_order;
    if (g.dim)
        j["dim"] = *g.dim;
    if (!g.connected)
        j["connected"] = false;
    if (!g.note.empty())
        j["note"] = g.note;
    return j;
}

GroupDiagram parse_diagram(const std::string& text, const std::string& origin) {
    const json j = parse_json(text, origin);
    try {
        CompactGroupData G = group_from_json("G", j.at("G"));
        CompactGroupData H = group_from_json("H", j.at("H"));
        CompactGroupData Km = group_from_json("Kminus", j.at("Kminus"));
        CompactGroupData Kp = group_from_json("Kplus", j.at("Kplus"));
        AlgebraMorphism im = morphism_from_json(j.at("iota_minus"), "iota_minus", Km, H);
        AlgebraMorphism ip = morphism_from_json(j.at("iota_plus"), "iota_plus", Kp, H);
        GroupDiagram d = make_diagram(std::move(G), std::move(H), std::move(Km), std::move(Kp),
                                      std::move(im), std::move(ip));
        if (j.contains("fiber_tags")) {
            const auto& tags = j.at("fiber_tags");
            if (tags.contains("minus"))
                d.fiber_minus_tag = tags.at("minus").get<std::string>();
            if (tags.contains("plus"))
                d.fiber_plus_tag = tags.at("plus").get<std::string>();
        }
        if (j.contains("options") && j.at("options").contains("max_degree"))
            d.max_degree = j.at("options").at("max_degree").get<int>();
        return d;
    } catch (const json::exception& e) {
        throw error(origin + ": " + e.what());
    }
}

GroupDiagram read_diagram(const std::string& path) { return parse_diagram(slurp(path), path); }

ordered_json diagram_to_json(const GroupDiagram& d) {
    ordered_json j;
    j["G"] = group_to_json(d.G);
    j["H"] = group_to_json(d.H);
    j["Kminus"] = group_to_json(d.Kminus);
    j["Kplus"] = group_to_json(d.Kplus);
    ordered_json im, ip;
    for (std::size_t i = 0; i < d.Kminus.bg->size(); ++i)
        im[d.Kminus.bg->gen(i).name] = d.iota_minus.image(i).str();
    for (std::size_t i = 0; i < d.Kplus.bg->size(); ++i)
        ip[d.Kplus.bg->gen(i).name] = d.iota_plus.image(i).str();
    j["iota_minus"] = std::move(im);
    j["iota_plus"] = std::move(ip);
    if (d.fiber_minus_tag || d.fiber_plus_tag) {
        ordered_json tags;
        if (d.fiber_minus_tag)
            tags["minus"] = *d.fiber_minus_tag;
        if (d.fiber_plus_tag)
            tags["plus"] = *d.fiber_plus_tag;
        j["fiber_tags"] = std::move(tags);
    }
    if (d.max_degree)
        j["options"] = {{"max_degree", *d.max_degree}};
    return j;
}

void write_diagram(const GroupDiagram& d, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw error("cannot write '" + path + "'");
    out << diagram_to_json(d).dump(2) << "\n";
}

PairFile read_pair(const std::string& path) {
    const json j = parse_json(slurp(path), path);
    try {
        CompactGroupData K = group_from_json("K", j.at("K"));
        CompactGroupData H = group_from_json("H", j.at("H"));
        AlgebraMorphism iota = morphism_from_json(j.at("iota"), "iota", K, H);
        PairFile f{HomogeneousPair{std::move(K), std::move(H), std::move(iota)}, std::nullopt};
        if (j.contains("options") && j.at("options").contains("max_degree"))
            f.max_degree = j.at("options").at("max_degree").get<int>();
        return f;
    } catch (const json::exception& e) {
        throw error(path + ": " + e.what());
    }
}

bool looks_like_pair_file(const std::string& path) {
    const json j = parse_json(slurp(path), path);
    return j.is_object() && j.contains("K") && j.contains("iota");
}

}  // namespace dmcyl
