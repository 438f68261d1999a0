#include "dmcyl/decide.hpp"

#include <algorithm>

namespace dmcyl {

namespace {

void note_assumptions(const GroupDiagram& d, CMVerdict& v) {
    v.assumptions.push_back(
        "fibers K/H connected and of positive dimension; classifying spaces Sullivan");
    for (const CompactGroupData* g : {&d.H, &d.Kminus, &d.Kplus})
        if (!g->connected)
            v.assumptions.push_back("non-connected group '" + g->name + "': " +
                                    (g->note.empty() ? "cohomology data supplied directly"
                                                     : g->note));
}

}  // namespace

CMVerdict cm_decide(const GroupDiagram& diagram, int D, std::uint64_t seed) {
    const int rH = diagram.H.rank;
    const int rm = diagram.Kminus.rank;
    const int rp = diagram.Kplus.rank;

    if (rH == rm && rH == rp) {
        CMVerdict v;
        v.decision = CMVerdict::Decision::CohenMacaulay;
        v.basis = CMVerdict::Basis::RankEquality;
        v.exact = true;
        v.bound = D;
        v.krull_dim = krull_dimension(diagram);
        note_assumptions(diagram, v);
        return v;
    }

    if (std::max(rm, rp) <= rH + 1) {
        const auto rep = sum_image_report(diagram.iota_minus, diagram.iota_plus, D);
        CMVerdict v;
        v.bound = D;
        v.krull_dim = krull_dimension(diagram);
        if (!rep.surjective) {
            v.decision = CMVerdict::Decision::NotCohenMacaulay;
            v.basis = CMVerdict::Basis::SumImageFails;
            v.exact = true;  // a missed class stays missed in every larger bound
            v.fail_degree = rep.fail_degree;
            v.missing_class = rep.missing.str();
        } else {
            v.decision = CMVerdict::Decision::CohenMacaulay;
            v.basis = CMVerdict::Basis::SumSurjective;
            v.exact = false;
        }
        note_assumptions(diagram, v);
        return v;
    }

    // corank >= 2: outside the rank window; decide directly on the Borel model
    const auto cyl = std::make_shared<CylinderAlgebra>(borel_model(diagram, D));
    const TruncatedRing ring = ring_truncation(cyl, D);
    CMVerdict v = cm_from_invariants(ring, *cyl, diagram, seed);
    v.hilbert = hilbert_growth_dimension(ring);
    note_assumptions(diagram, v);
    return v;
}

JoinOutcome noncm_join_generator(const Catalog& catalog, const std::string& left_fiber,
                                 const std::string& right_fiber) {
    const CatalogFiber& fl = catalog.fiber(left_fiber);
    const CatalogFiber& fr = catalog.fiber(right_fiber);

    const auto menu = [](FiberType t) {
        return t == FiberType::W7Type || t == FiberType::B13Type || t == FiberType::EvenType;
    };
    const FiberTypeResult tl = fiber_type(fl.iota, fl.dim);
    const FiberTypeResult tr = fiber_type(fr.iota, fr.dim);

    for (const auto* side : {&fl, &fr}) {
        const FiberTypeResult& t = side == &fl ? tl : tr;
        if (t.tag == FiberType::RationalOddSphere)
            return JoinRefusal{"fiber '" + side->name +
                               "' is rationally an odd sphere: its induced map is surjective, "
                               "which forces the join to be Cohen-Macaulay"};
        if (!menu(t.tag))
            return JoinRefusal{"fiber '" + side->name + "' has type '" +
                               fiber_type_name(t.tag) + "', outside the non-CM menu"};
        if (!side->sullivan)
            return JoinRefusal{"fiber '" + side->name +
                               "' has no realizing pair with Sullivan classifying spaces"};
    }
    if (tl.tag == FiberType::EvenType && tr.tag == FiberType::EvenType)
        return JoinRefusal{
            "both fibers are even-dimensional: all ranks coincide in the join diagram and the "
            "rank-equality case forces Cohen-Macaulay"};

    GroupDiagram d = join_diagram(catalog.pair_of(left_fiber), catalog.pair_of(right_fiber));
    d.fiber_minus_tag = fl.annotated_type;
    d.fiber_plus_tag = fr.annotated_type;
    return d;
}

CMVerdict orbifold_check(const GroupDiagram& diagram, int D) {
    const auto dim_m = diagram.fiber_minus_dim();
    const auto dim_p = diagram.fiber_plus_dim();
    if (!dim_m || !dim_p)
        throw error("orbifold check needs group dimensions to classify the fibers");

    auto space_form = [](const FiberTypeResult& t, int dim) {
        if (t.tag == FiberType::RationalOddSphere)
            return true;
        if (t.tag != FiberType::EvenType)
            return false;
        // even space forms are rationally even spheres or trivial
        std::vector<int> sphere(dim + 1, 0);
        sphere[0] = 1;
        if (t.betti == sphere)
            return true;
        sphere[dim] = 1;
        return t.betti == sphere;
    };

    const FiberTypeResult tm = fiber_type(diagram.iota_minus, *dim_m);
    const FiberTypeResult tp = fiber_type(diagram.iota_plus, *dim_p);
    for (const auto* side : {&tm, &tp}) {
        const int dim = side == &tm ? *dim_m : *dim_p;
        if (!space_form(*side, dim))
            throw error("fiber of type '" + fiber_type_name(side->tag) +
                        "' is not a spherical space form: not an orbifold input");
    }
    for (const auto& [tag, computed] :
         {std::pair{diagram.fiber_minus_tag, tm}, std::pair{diagram.fiber_plus_tag, tp}}) {
        if (tag && *tag != fiber_type_name(computed.tag))
            throw error("fiber annotation '" + *tag + "' is inconsistent with the computed type '" +
                        fiber_type_name(computed.tag) + "'");
    }

    CMVerdict v;
    v.bound = D;
    v.krull_dim = krull_dimension(diagram);
    v.exact = true;
    note_assumptions(diagram, v);
    if (diagram.H.rank == diagram.Kminus.rank && diagram.H.rank == diagram.Kplus.rank) {
        v.decision = CMVerdict::Decision::CohenMacaulay;
        v.basis = CMVerdict::Basis::RankEquality;
        return v;
    }
    // a corank-one side is an odd space form; its induced map must certify
    const bool minus_odd = tm.tag == FiberType::RationalOddSphere;
    const AlgebraMorphism& iota = minus_odd ? diagram.iota_minus : diagram.iota_plus;
    const auto rep = surjectivity_report(iota, D);
    if (!rep.surjective)
        throw error("odd space-form side fails surjectivity; inconsistent diagram data");
    v.decision = CMVerdict::Decision::CohenMacaulay;
    v.basis = CMVerdict::Basis::SumSurjective;
    v.exact = false;  // bounded certificate through D
    return v;
}

}  // namespace dmcyl
