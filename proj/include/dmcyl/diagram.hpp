#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dmcyl/cdga.hpp"
#include "dmcyl/morphism.hpp"

namespace dmcyl {

// Compact group through its rational classifying-space data. For a
// non-connected group the algebra is either the identity-component
// cohomology or a directly supplied invariant ring (connected = false);
// weyl_order is the effective divisor |W(K_0)| * |pi_0(K)| used for Euler
// characteristics.
struct CompactGroupData {
    std::string name;
    int rank = 0;
    AlgebraPtr bg;
    int weyl_order = 1;
    std::optional<int> dim;  // manifold dimension of the group
    bool connected = true;
    std::string note;
};

void validate_group(const CompactGroupData& g);

struct GroupDiagram {
    CompactGroupData G, H, Kminus, Kplus;
    AlgebraMorphism iota_minus, iota_plus;  // H*(BK-) -> H*(BH), H*(BK+) -> H*(BH)
    std::optional<std::string> fiber_minus_tag, fiber_plus_tag;
    std::optional<int> max_degree;  // per-file default truncation

    // dim K/H per side and dim X = dim G/H + 1, when group dims are present
    std::optional<int> fiber_minus_dim() const;
    std::optional<int> fiber_plus_dim() const;
    std::optional<int> space_dim() const;
};

GroupDiagram make_diagram(CompactGroupData G, CompactGroupData H, CompactGroupData Kminus,
                          CompactGroupData Kplus, AlgebraMorphism iota_minus,
                          AlgebraMorphism iota_plus);

// Default truncation: 2 x (sum of the H*(BH) generator degrees), at least 2.
int default_max_degree(const GroupDiagram& d);

// (G, H, G, G); both induced maps equal iota. Rejects H = G.
GroupDiagram suspension_diagram(const CompactGroupData& G, const CompactGroupData& H,
                                const AlgebraMorphism& iota);

struct HomogeneousPair {
    CompactGroupData K, H;
    AlgebraMorphism iota;
};

// (G1 x G2, H1 x H2, G1 x H2, H1 x G2); generator names are suffixed _1/_2.
GroupDiagram join_diagram(const HomogeneousPair& left, const HomogeneousPair& right);

enum class FiberType { RationalOddSphere, W7Type, B13Type, EvenType, Unknown };

std::string fiber_type_name(FiberType t);

struct FiberTypeResult {
    FiberType tag = FiberType::Unknown;
    int sphere_dim = 0;           // for RationalOddSphere
    std::vector<int> betti;       // of the homogeneous model through the fiber dimension
};

// Classifies K/H by the betti numbers of its homogeneous model through dim(K/H).
FiberTypeResult fiber_type(const AlgebraMorphism& iota, int fiber_dim);

// chi(X) = chi(G/K-) + chi(G/K+) - chi(G/H) with chi(G/K) = |W(G)|/|W(K)|
// at equal rank and 0 otherwise.
long euler_characteristic(const GroupDiagram& d);
long homogeneous_euler(const CompactGroupData& G, const CompactGroupData& K);

}  // namespace dmcyl
