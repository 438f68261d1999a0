#include "dmcyl/report.hpp"

#include <sstream>

namespace dmcyl {

ordered_json report_header(const ReportMeta& meta) {
    ordered_json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["monomial_order"] = kMonomialOrderTag;
    j["command"] = meta.command;
    if (!meta.input.empty())
        j["input"] = meta.input;
    j["max_degree"] = meta.max_degree;
    j["seed"] = meta.seed;
    return j;
}

ordered_json ring_element_json(const TruncatedRing& ring, const RingElement& e) {
    ordered_json j;
    j["degree"] = e.degree;
    ordered_json coords = ordered_json::array();
    for (const auto& c : e.coords)
        coords.push_back(rat_str(c));
    j["coords"] = std::move(coords);
    j["class"] = ring.describe(e);
    return j;
}

namespace {

ordered_json depth_to_json(const DepthReport& d) {
    ordered_json j;
    j["lower_bound"] = d.lower_bound;
    j["exact"] = d.exact;
    ordered_json seq = ordered_json::array();
    for (const auto& e : d.sequence) {
        ordered_json ej;
        ej["degree"] = e.degree;
        ordered_json coords = ordered_json::array();
        for (const auto& c : e.coords)
            coords.push_back(rat_str(c));
        ej["coords"] = std::move(coords);
        seq.push_back(std::move(ej));
    }
    j["sequence"] = std::move(seq);
    if (d.socle) {
        ordered_json s;
        s["degree"] = d.socle->socle.degree;
        ordered_json coords = ordered_json::array();
        for (const auto& c : d.socle->socle.coords)
            coords.push_back(rat_str(c));
        s["coords"] = std::move(coords);
        s["class"] = d.socle->describe;
        s["verified_through"] = d.socle->verified_through;
        j["socle"] = std::move(s);
    }
    j["seed"] = d.seed;
    if (!d.detail.empty())
        j["detail"] = d.detail;
    return j;
}

ordered_json witness_to_json(const ZeroDivisorWitness& w) {
    ordered_json j;
    j["even_degree"] = w.even_class.degree;
    j["even_class"] = w.even_describe;
    j["odd_degree"] = w.odd_annihilator.degree;
    j["odd_annihilator"] = w.odd_describe;
    j["trick_degree"] = w.trick_degree;
    j["trick_value"] = w.trick_value;
    ordered_json even = ordered_json::array(), odd = ordered_json::array();
    for (const auto& c : w.even_class.coords)
        even.push_back(rat_str(c));
    for (const auto& c : w.odd_annihilator.coords)
        odd.push_back(rat_str(c));
    j["even_coords"] = std::move(even);
    j["odd_coords"] = std::move(odd);
    return j;
}

ordered_json hilbert_to_json(const HilbertGrowthEstimate& h) {
    ordered_json j;
    j["conclusive"] = h.conclusive;
    j["estimate"] = h.estimate;
    j["window"] = {h.lo, h.hi};
    j["verified_tail"] = h.verified_tail;
    j["detail"] = h.detail;
    return j;
}

}  // namespace

ordered_json verdict_to_json(const CMVerdict& v) {
    ordered_json j;
    j["decision"] = decision_name(v.decision);
    j["basis"] = basis_name(v.basis);
    j["exact"] = v.exact;
    j["bound"] = v.bound;
    j["krull_dimension"] = v.krull_dim;
    if (v.fail_degree >= 0) {
        j["fail_degree"] = v.fail_degree;
        j["missing_class"] = v.missing_class;
    }
    if (v.depth)
        j["depth"] = depth_to_json(*v.depth);
    if (v.witness)
        j["zero_divisor"] = witness_to_json(*v.witness);
    if (v.hilbert)
        j["hilbert_growth"] = hilbert_to_json(*v.hilbert);
    if (!v.assumptions.empty()) {
        ordered_json a = ordered_json::array();
        for (const auto& s : v.assumptions)
            a.push_back(s);
        j["assumptions"] = std::move(a);
    }
    return j;
}

std::string verdict_to_table(const CMVerdict& v) {
    std::ostringstream os;
    os << decision_name(v.decision);
    switch (v.basis) {
        case CMVerdict::Basis::RankEquality:
            os << ": rank H = rank K- = rank K+";
            break;
        case CMVerdict::Basis::SumSurjective:
            os << " (corank <= 1, sum of images surjective through " << v.bound << ")";
            break;
        case CMVerdict::Basis::SumImageFails:
            os << ": sum-of-images fails at degree " << v.fail_degree << ", missing class "
               << v.missing_class;
            break;
        case CMVerdict::Basis::ZeroDivisorGap:
            os << ": even-degree zero divisor " << (v.witness ? v.witness->even_describe : "?")
               << " annihilated by " << (v.witness ? v.witness->odd_describe : "?");
            break;
        case CMVerdict::Basis::DirectComputation:
            os << ": Krull dimension " << v.krull_dim << ", depth "
               << (v.depth ? std::to_string(v.depth->lower_bound) : "?")
               << (v.depth && v.depth->exact ? " (socle certificate)" : " (lower bound)");
            break;
    }
    os << "\n  krull_dimension: " << v.krull_dim;
    if (v.depth) {
        os << "\n  depth: " << v.depth->lower_bound
           << (v.depth->exact ? " exact through " : " lower bound through ") << v.bound;
        if (v.depth->socle)
            os << "\n  socle: " << v.depth->socle->describe;
    }
    if (v.hilbert)
        os << "\n  hilbert growth: estimate " << v.hilbert->estimate << " ["
           << v.hilbert->lo << "," << v.hilbert->hi << "] (" << v.hilbert->detail << ")";
    os << "\n  certificate: " << (v.exact ? "exact" : "bounded, through degree " +
                                                          std::to_string(v.bound));
    for (const auto& a : v.assumptions)
        os << "\n  assumes: " << a;
    return os.str();
}

ordered_json ring_to_json(const TruncatedRing& ring) {
    ordered_json j;
    j["bound"] = ring.bound();
    j["monomial_order"] = kMonomialOrderTag;
    ordered_json betti = ordered_json::array();
    for (int d = 0; d <= ring.bound(); ++d)
        betti.push_back(ring.betti(d));
    j["betti"] = std::move(betti);
    ordered_json reps;
    for (int d = 0; d <= ring.bound(); ++d) {
        if (ring.betti(d) == 0)
            continue;
        ordered_json list = ordered_json::array();
        for (int i = 0; i < ring.betti(d); ++i) {
            ordered_json r;
            r["label"] = ring.class_label(d, static_cast<std::size_t>(i));
            r["value"] = ring.model().describe(d, ring.reps(d)[static_cast<std::size_t>(i)]);
            list.push_back(std::move(r));
        }
        reps[std::to_string(d)] = std::move(list);
    }
    j["representatives"] = std::move(reps);
    ordered_json products = ordered_json::array();
    for (int d1 = 2; d1 <= ring.bound(); ++d1)
        for (int d2 = d1; d1 + d2 <= ring.bound(); ++d2)
            for (int i = 0; i < ring.betti(d1); ++i)
                for (int k = 0; k < ring.betti(d2); ++k) {
                    const QVec& p =
                        ring.product(d1, static_cast<std::size_t>(i), d2, static_cast<std::size_t>(k));
                    ordered_json e;
                    e["left"] = ring.class_label(d1, static_cast<std::size_t>(i));
                    e["right"] = ring.class_label(d2, static_cast<std::size_t>(k));
                    ordered_json coords = ordered_json::array();
                    for (const auto& c : p)
                        coords.push_back(rat_str(c));
                    e["value"] = std::move(coords);
                    products.push_back(std::move(e));
                }
    j["products"] = std::move(products);
    return j;
}

int verdict_exit_code(const CMVerdict& v) {
    return v.decision == CMVerdict::Decision::Unknown ? 2 : 0;
}

}  // namespace dmcyl
