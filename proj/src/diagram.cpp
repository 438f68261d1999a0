#include "dmcyl/diagram.hpp"

#include <algorithm>

namespace dmcyl {

void validate_group(const CompactGroupData& g) {
    if (g.rank < 0)
        throw error("group '" + g.name + "': negative rank");
    if (static_cast<int>(g.bg->size()) != g.rank)
        throw error("group '" + g.name + "': classifying-space generator count " +
                    std::to_string(g.bg->size()) + " differs from rank " + std::to_string(g.rank));
    for (const auto& gen : g.bg->gens())
        if (gen.degree < 2 || gen.degree % 2 != 0)
            throw error("group '" + g.name + "': generator '" + gen.name +
                        "' must have even degree >= 2");
    if (g.weyl_order < 1)
        throw error("group '" + g.name + "': weyl_order must be positive");
}

std::optional<int> GroupDiagram::fiber_minus_dim() const {
    if (Kminus.dim && H.dim)
        return *Kminus.dim - *H.dim;
    return std::nullopt;
}

std::optional<int> GroupDiagram::fiber_plus_dim() const {
    if (Kplus.dim && H.dim)
        return *Kplus.dim - *H.dim;
    return std::nullopt;
}

std::optional<int> GroupDiagram::space_dim() const {
    if (G.dim && H.dim)
        return *G.dim - *H.dim + 1;
    return std::nullopt;
}

GroupDiagram make_diagram(CompactGroupData G, CompactGroupData H, CompactGroupData Kminus,
                          CompactGroupData Kplus, AlgebraMorphism iota_minus,
                          AlgebraMorphism iota_plus) {
    validate_group(G);
    validate_group(H);
    validate_group(Kminus);
    validate_group(Kplus);
    if (H.rank > Kminus.rank || H.rank > Kplus.rank)
        throw error("rank H must not exceed rank K-");
    if (Kminus.rank > G.rank || Kplus.rank > G.rank)
        throw error("rank K must not exceed rank G");
    if (*iota_minus.source() != *Kminus.bg || *iota_minus.target() != *H.bg)
        throw error("iota_minus must map H*(BK-) to H*(BH)");
    if (*iota_plus.source() != *Kplus.bg || *iota_plus.target() != *H.bg)
        throw error("iota_plus must map H*(BK+) to H*(BH)");
    return GroupDiagram{std::move(G),          std::move(H),         std::move(Kminus),
                        std::move(Kplus),      std::move(iota_minus), std::move(iota_plus),
                        std::nullopt,          std::nullopt,          std::nullopt};
}

int default_max_degree(const GroupDiagram& d) {
    int sum = 0;
    for (const auto& g : d.H.bg->gens())
        sum += g.degree;
    return std::max(2, 2 * sum);
}

GroupDiagram suspension_diagram(const CompactGroupData& G, const CompactGroupData& H,
                                const AlgebraMorphism& iota) {
    if (G.name == H.name || (G.rank == H.rank && G.dim && H.dim && *G.dim == *H.dim))
        throw error("suspension requires H to be a proper subgroup of G");
    return make_diagram(G, H, G, G, iota, iota);
}

namespace {

AlgebraPtr product_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
    std::vector<Generator> gens;
    for (const auto& g : a->gens())
        gens.push_back({g.name + "_1", g.degree});
    for (const auto& g : b->gens())
        gens.push_back({g.name + "_2", g.degree});
    return make_algebra(std::move(gens));
}

// re-root a polynomial of one factor into the product algebra
Polynomial into_product(const AlgebraPtr& prod, const Polynomial& p, std::size_t offset,
                        std::size_t factor_size) {
    Polynomial out(prod);
    for (const auto& [m, c] : p.terms()) {
        std::vector<int> exp(prod->size(), 0);
        for (std::size_t i = 0; i < factor_size; ++i)
            exp[offset + i] = m.exp[i];
        out.add_term(Monomial{m.degree, std::move(exp)}, c);
    }
    return out;
}

CompactGroupData product_group(const CompactGroupData& a, const CompactGroupData& b) {
    CompactGroupData g;
    g.name = a.name + "x" + b.name;
    g.rank = a.rank + b.rank;
    g.bg = product_algebra(a.bg, b.bg);
    g.weyl_order = a.weyl_order * b.weyl_order;
    if (a.dim && b.dim)
        g.dim = *a.dim + *b.dim;
    g.connected = a.connected && b.connected;
    return g;
}

}  // namespace

GroupDiagram join_diagram(const HomogeneousPair& left, const HomogeneousPair& right) {
    for (const auto* p : {&left, &right})
        if (p->K.name == p->H.name ||
            (p->K.rank == p->H.rank && p->K.dim && p->H.dim && *p->K.dim == *p->H.dim))
            throw error("join requires proper subgroups on both sides");

    const CompactGroupData G = product_group(left.K, right.K);
    const CompactGroupData H = product_group(left.H, right.H);
    const CompactGroupData Km = product_group(left.K, right.H);
    const CompactGroupData Kp = product_group(left.H, right.K);

    const std::size_t lH = left.H.bg->size();

    auto tensor = [&](const CompactGroupData& src, bool left_is_iota) {
        std::vector<Polynomial> images;
        const std::size_t nl = left_is_iota ? left.K.bg->size() : left.H.bg->size();
        for (std::size_t i = 0; i < src.bg->size(); ++i) {
            if (i < nl) {
                const Polynomial img = left_is_iota ? left.iota.image(i)
                                                    : Polynomial::generator(left.H.bg, i);
                images.push_back(into_product(H.bg, img, 0, left.H.bg->size()));
            } else {
                const std::size_t j = i - nl;
                const Polynomial img = left_is_iota ? Polynomial::generator(right.H.bg, j)
                                                    : right.iota.image(j);
                images.push_back(into_product(H.bg, img, lH, right.H.bg->size()));
            }
        }
        return AlgebraMorphism(src.bg, H.bg, std::move(images));
    };

    GroupDiagram d = make_diagram(G, H, Km, Kp, tensor(Km, true), tensor(Kp, false));
    return d;
}

std::string fiber_type_name(FiberType t) {
    switch (t) {
        case FiberType::RationalOddSphere: return "rational-odd-sphere";
        case FiberType::W7Type: return "w7";
        case FiberType::B13Type: return "b13";
        case FiberType::EvenType: return "even";
        case FiberType::Unknown: return "unknown";
    }
    return "unknown";
}

FiberTypeResult fiber_type(const AlgebraMorphism& iota, int fiber_dim) {
    if (fiber_dim < 0)
        throw error("fiber dimension must be non-negative");
    FiberTypeResult r;
    r.betti = cohomology_betti(homogeneous_model(iota), fiber_dim);

    auto matches = [&r](const std::vector<int>& pattern) {
        return r.betti == pattern;
    };

    if (fiber_dim % 2 == 1) {
        std::vector<int> sphere(fiber_dim + 1, 0);
        sphere[0] = 1;
        sphere[fiber_dim] = 1;
        if (matches(sphere)) {
            r.tag = FiberType::RationalOddSphere;
            r.sphere_dim = fiber_dim;
            return r;
        }
        if (fiber_dim == 7 && matches({1, 0, 1, 0, 0, 1, 0, 1})) {
            r.tag = FiberType::W7Type;
            return r;
        }
        if (fiber_dim == 13 && matches({1, 0, 1, 0, 1, 0, 0, 0, 0, 1, 0, 1, 0, 1})) {
            r.tag = FiberType::B13Type;
            return r;
        }
    } else {
        bool even_concentrated = true;
        for (int d = 1; d <= fiber_dim; d += 2)
            if (r.betti[d] != 0)
                even_concentrated = false;
        if (even_concentrated) {
            r.tag = FiberType::EvenType;
            return r;
        }
    }
    r.tag = FiberType::Unknown;
    return r;
}

long homogeneous_euler(const CompactGroupData& G, const CompactGroupData& K) {
    if (K.rank < G.rank)
        return 0;
    if (G.weyl_order % K.weyl_order != 0)
        throw error("inconsistent catalog data: |W(" + G.name + ")| = " +
                    std::to_string(G.weyl_order) + " is not divisible by |W(" + K.name +
                    ")| = " + std::to_string(K.weyl_order));
    return G.weyl_order / K.weyl_order;
}

long euler_characteristic(const GroupDiagram& d) {
    return homogeneous_euler(d.G, d.Kminus) + homogeneous_euler(d.G, d.Kplus) -
           homogeneous_euler(d.G, d.H);
}

}  // namespace dmcyl
