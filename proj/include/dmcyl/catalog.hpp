#pragma once

#include <map>
#include <string>
#include <vector>

#include "dmcyl/diagram.hpp"

namespace dmcyl {

// A positively curved homogeneous fiber K/H with its realizing pair and the
// induced map on classifying-space cohomology.
struct CatalogFiber {
    std::string name;
    CompactGroupData K, H;
    AlgebraMorphism iota;  // H*(BK) -> H*(BH)
    int dim = 0;
    std::string annotated_type;  // expected fiber_type tag
    bool sullivan = true;        // classifying spaces of the realizing pair are Sullivan
    std::string note;
};

class Catalog {
public:
    static Catalog load_file(const std::string& path);
    static Catalog load_json(const std::string& text, const std::string& origin = "<catalog>");

    const CompactGroupData& group(const std::string& name) const;
    bool has_fiber(const std::string& name) const { return fibers_.count(name) != 0; }
    const CatalogFiber& fiber(const std::string& name) const;
    std::vector<std::string> group_names() const;
    std::vector<std::string> fiber_names() const;

    HomogeneousPair pair_of(const std::string& fiber_name) const;
    GroupDiagram suspension_of(const std::string& fiber_name) const;

private:
    std::map<std::string, CompactGroupData> groups_;
    std::map<std::string, CatalogFiber> fibers_;
};

std::string default_catalog_path();

}  // namespace dmcyl
