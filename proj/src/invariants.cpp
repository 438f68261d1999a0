#include "dmcyl/invariants.hpp"

#include <algorithm>
#include <sstream>

namespace dmcyl {

int krull_dimension(const GroupDiagram& diagram) {
    return std::max(diagram.Kminus.rank, diagram.Kplus.rank);
}

// ---------------------------------------------------------------------------
// Hilbert growth

namespace {

int pole_order_deficit(std::vector<Rational> poly) {
    // multiplicity of the root t = 1
    int mult = 0;
    auto nonzero = [](const std::vector<Rational>& p) {
        for (const auto& c : p)
            if (c != 0)
                return true;
        return false;
    };
    while (nonzero(poly)) {
        Rational sum(0);
        for (const auto& c : poly)
            sum += c;
        if (sum != 0)
            break;
        // p(t) = (1 - t) q(t): q_i = p_i + q_{i-1}
        std::vector<Rational> q;
        Rational acc(0);
        for (std::size_t i = 0; i + 1 < poly.size(); ++i) {
            acc = poly[i] + acc;
            q.push_back(acc);
        }
        poly = std::move(q);
        ++mult;
        if (poly.empty())
            break;
    }
    return mult;
}

}  // namespace

HilbertGrowthEstimate hilbert_growth_dimension(const TruncatedRing& ring) {
    const int D = ring.bound();
    std::vector<long> h(D + 1, 0);
    for (int d = 0; d <= D; d += 2)
        h[d] = ring.betti(d);

    HilbertGrowthEstimate est;
    const std::vector<int> pool = {2, 4, 6, 8, 10, 12};
    const int rmax = 4;

    struct Fit {
        int k;
        std::vector<int> dens;
        int tail;
    };
    std::vector<Fit> fits;

    // all nondecreasing multisets of candidate denominator degrees, size <= rmax
    std::vector<std::vector<int>> multisets;
    std::vector<int> cur;
    auto gen = [&](auto&& self, std::size_t start) -> void {
        multisets.push_back(cur);
        if (cur.size() == static_cast<std::size_t>(rmax))
            return;
        for (std::size_t i = start; i < pool.size(); ++i) {
            cur.push_back(pool[i]);
            self(self, i);
            cur.pop_back();
        }
    };
    gen(gen, 0);

    for (const auto& ms : multisets) {
        std::vector<Rational> p(h.begin(), h.end());
        for (int dgen : ms)
            for (int i = D; i >= 0; --i)
                if (i >= dgen)
                    p[i] -= p[i - dgen];
        int n0 = 0;  // p[0] = betti(0) != 0
        for (int i = 0; i <= D; ++i)
            if (p[i] != 0)
                n0 = i;
        const int tail = D - n0;
        const int largest = ms.empty() ? 0 : ms.back();
        if (tail < 5 || tail < largest)
            continue;
        p.resize(n0 + 1);
        const int k = static_cast<int>(ms.size()) - pole_order_deficit(p);
        fits.push_back({k, ms, tail});
    }

    if (fits.empty()) {
        est.detail = "no verified rational fit; truncation window too small";
        return est;
    }
    est.lo = est.hi = fits.front().k;
    const Fit* best = &fits.front();
    for (const auto& f : fits) {
        est.lo = std::min(est.lo, f.k);
        est.hi = std::max(est.hi, f.k);
        if (f.k < best->k || (f.k == best->k && f.tail > best->tail))
            best = &f;
    }
    est.estimate = est.lo;
    est.verified_tail = best->tail;
    est.conclusive = est.lo == est.hi;
    std::ostringstream os;
    os << "denominator {";
    for (std::size_t i = 0; i < best->dens.size(); ++i)
        os << (i ? "," : "") << best->dens[i];
    os << "}, zero tail " << best->tail;
    if (!est.conclusive)
        os << "; window [" << est.lo << "," << est.hi << "]";
    est.detail = os.str();
    return est;
}

// ---------------------------------------------------------------------------
// Ideal slices and regular sequences

namespace {

// Degreewise slices of the ideal generated by fixed ring classes, with
// complement bases of the quotient. even_only restricts every multiplier,
// complement and check to even degrees (the even part as a subring).
class IdealSlices {
public:
    IdealSlices(const TruncatedRing& ring, std::vector<RingElement> gens, bool even_only)
        : ring_(ring), gens_(std::move(gens)), even_only_(even_only) {}

    const TruncatedRing& ring() const { return ring_; }
    bool even_only() const { return even_only_; }

    const RowSpan& slice(int d) const {
        auto it = slices_.find(d);
        if (it != slices_.end())
            return it->second;
        RowSpan span;
        for (const auto& g : gens_) {
            const int m = d - g.degree;
            if (m < 0)
                continue;
            if (even_only_ && m % 2 != 0)
                continue;
            for (int i = 0; i < ring_.betti(m); ++i) {
                const RingElement prod = ring_.mul(g, ring_.basis_class(m, i));
                if (!prod.zero())
                    span.insert(prod.coords);
            }
        }
        return slices_.emplace(d, std::move(span)).first->second;
    }

    // Unit-vector completion of the ideal slice inside the rep basis.
    std::vector<QVec> complement(int d) const {
        std::vector<QVec> out;
        RowSpan span = slice(d);
        const int n = ring_.betti(d);
        for (int j = 0; j < n; ++j) {
            QVec unit(n, Rational(0));
            unit[j] = 1;
            if (span.insert(unit))
                out.push_back(std::move(unit));
        }
        return out;
    }

    bool in_ideal(const RingElement& e) const { return slice(e.degree).contains(e.coords); }

private:
    const TruncatedRing& ring_;
    std::vector<RingElement> gens_;
    bool even_only_;
    mutable std::map<int, RowSpan> slices_;
};

// Injectivity of multiplication by x on the quotient, degree by degree.
// Returns a witness class (nonzero mod the ideal, x * witness in the ideal).
std::optional<RingElement> multiplication_witness(const IdealSlices& ideal, const RingElement& x,
                                                  int& checked_through) {
    const TruncatedRing& R = ideal.ring();
    const int D = R.bound();
    checked_through = D;
    for (int m = 0; m + x.degree <= D; ++m) {
        if (ideal.even_only() && m % 2 != 0)
            continue;
        const auto comp = ideal.complement(m);
        if (comp.empty())
            continue;
        const int dt = m + x.degree;
        const RowSpan& target_ideal = ideal.slice(dt);
        QMat rows;
        rows.reserve(comp.size());
        for (const auto& c : comp) {
            const RingElement prod = R.mul(x, RingElement{m, c});
            rows.push_back(target_ideal.reduce(prod.coords));
        }
        const QMat combos = kernel_of_rows(rows);
        if (!combos.empty()) {
            QVec w(static_cast<std::size_t>(R.betti(m)), Rational(0));
            for (std::size_t i = 0; i < comp.size(); ++i)
                for (std::size_t j = 0; j < w.size(); ++j)
                    w[j] += combos[0][i] * comp[i][j];
            return RingElement{m, std::move(w)};
        }
    }
    return std::nullopt;
}

}  // namespace

RegularSequenceCertificate is_regular_sequence(const TruncatedRing& ring,
                                               const std::vector<RingElement>& classes,
                                               bool even_part_only) {
    RegularSequenceCertificate cert;
    cert.bound = ring.bound();
    cert.all_regular = true;
    std::vector<RingElement> previous;
    for (const auto& x : classes) {
        if (x.degree % 2 != 0)
            throw error("regular-sequence candidates must have even degree (odd classes are "
                        "nilpotent)");
        IdealSlices ideal(ring, previous, even_part_only);
        RegSeqStatus st;
        auto witness = multiplication_witness(ideal, x, st.checked_through);
        st.regular = !witness.has_value();
        st.witness = std::move(witness);
        cert.all_regular = cert.all_regular && st.regular;
        cert.elements.push_back(x);
        cert.status.push_back(std::move(st));
        previous.push_back(x);
    }
    return cert;
}

namespace {

// Socle of H/(ideal): a nonzero class of the quotient annihilating every
// positive-degree class, with all products verified inside the truncation.
std::optional<SocleCertificate> find_socle(const TruncatedRing& ring, const IdealSlices& ideal) {
    const int D = ring.bound();
    int first_positive = -1;
    for (int p = 1; p <= D; ++p)
        if (!ideal.complement(p).empty()) {
            first_positive = p;
            break;
        }
    if (first_positive < 0)
        return std::nullopt;  // quotient has no positive part at all
    for (int k = 1; k + first_positive <= D; ++k) {
        const auto comp = ideal.complement(k);
        if (comp.empty())
            continue;
        // constraints: candidate * (every positive-degree class) in the ideal
        QMat rows(comp.size());
        bool any_constraint = false;
        for (int p = 1; k + p <= D; ++p) {
            if (ring.betti(p) == 0)
                continue;
            for (int j = 0; j < ring.betti(p); ++j) {
                any_constraint = true;
                const RingElement r = ring.basis_class(p, j);
                const RowSpan& tgt = ideal.slice(k + p);
                for (std::size_t i = 0; i < comp.size(); ++i) {
                    const QVec red = tgt.reduce(ring.mul(RingElement{k, comp[i]}, r).coords);
                    rows[i].insert(rows[i].end(), red.begin(), red.end());
                }
            }
        }
        if (!any_constraint)
            continue;
        const QMat combos = kernel_of_rows(rows);
        if (combos.empty())
            continue;
        QVec s(static_cast<std::size_t>(ring.betti(k)), Rational(0));
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (std::size_t j = 0; j < s.size(); ++j)
                s[j] += combos[0][i] * comp[i][j];
        SocleCertificate cert;
        cert.socle = RingElement{k, std::move(s)};
        cert.verified_through = D;
        cert.describe = ring.describe(cert.socle);
        return cert;
    }
    return std::nullopt;
}

struct SplitMix {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // uniform-ish in [lo, hi]; stable across platforms
    long pick(long lo, long hi) { return lo + static_cast<long>(next() % (hi - lo + 1)); }
};

}  // namespace

DepthReport depth_report(const TruncatedRing& ring, const GroupDiagram& diagram,
                         std::uint64_t seed) {
    DepthReport report;
    report.seed = seed;
    const int kdim = krull_dimension(diagram);
    const int D = ring.bound();
    const int degree_cap = D / 2;
    constexpr int kRandomTrials = 16;
    const std::vector<int> coeff_bounds = {2, 4, 8};
    std::ostringstream log;

    while (static_cast<int>(report.sequence.size()) < kdim) {
        IdealSlices ideal(ring, report.sequence, false);
        std::optional<RingElement> found;
        for (int delta = 2; delta <= degree_cap && !found; delta += 2) {
            const auto comp = ideal.complement(delta);
            if (comp.empty())
                continue;
            std::vector<RingElement> candidates;
            for (const auto& c : comp)
                candidates.push_back(RingElement{delta, c});
            // representatives first, then seeded randoms with widening bounds;
            // candidates are tried in order, so narrow coefficients win
            int widening = 0;
            for (const int bound : coeff_bounds) {
                SplitMix rng{seed * 0x100000001b3ull +
                             static_cast<std::uint64_t>(delta) * 1315423911ull +
                             static_cast<std::uint64_t>(report.sequence.size()) * 2654435761ull +
                             static_cast<std::uint64_t>(widening)};
                for (int t = 0; t < kRandomTrials; ++t) {
                    QVec coords(static_cast<std::size_t>(ring.betti(delta)), Rational(0));
                    bool nonzero = false;
                    for (auto& x : coords) {
                        const long c = rng.pick(-bound, bound);
                        x = c;
                        nonzero = nonzero || c != 0;
                    }
                    if (nonzero)
                        candidates.push_back(RingElement{delta, std::move(coords)});
                }
                ++widening;
            }
            for (const auto& cand : candidates) {
                if (ideal.in_ideal(cand))
                    continue;
                int through = 0;
                if (!multiplication_witness(ideal, cand, through)) {
                    found = cand;
                    break;
                }
            }
        }
        if (!found)
            break;
        log << "degree " << found->degree << " element " << ring.describe(*found) << "; ";
        report.sequence.push_back(std::move(*found));
    }
    report.lower_bound = static_cast<int>(report.sequence.size());
    if (report.lower_bound > kdim)
        throw error("depth lower bound exceeds the Krull dimension");

    if (report.lower_bound < kdim) {
        IdealSlices ideal(ring, report.sequence, false);
        report.socle = find_socle(ring, ideal);
        report.exact = report.socle.has_value();
        if (report.exact)
            log << "socle " << report.socle->describe << " in the quotient certifies depth "
                << report.lower_bound << " through " << D;
    } else {
        log << "reached the Krull dimension";
    }
    report.detail = log.str();
    return report;
}

// ---------------------------------------------------------------------------
// Zero-divisor witness

std::optional<ZeroDivisorWitness> zero_divisor_witness(const TruncatedRing& ring,
                                                       const CylinderAlgebra& cylinder,
                                                       const GroupDiagram& diagram) {
    const int rH = diagram.H.rank;
    const int rm = diagram.Kminus.rank;
    const int rp = diagram.Kplus.rank;
    if (rH >= std::max(rm, rp))
        return std::nullopt;  // the construction needs rank H < max rank K
    const int D = ring.bound();
    const AlgebraMorphism& phi = diagram.iota_minus;
    const AlgebraMorphism& psi = diagram.iota_plus;

    // even class: [(0, a2)], [(a1, 0)] or [(a1, a2)] from kernel elements per
    // the rank cases
    std::optional<RingElement> even_class;
    std::string even_desc;
    if (rm == rH) {
        const auto rep = injectivity_report(psi, D);
        if (rep.injective)
            return std::nullopt;
        auto coords = cylinder.from_pair(Polynomial::zero(cylinder.left().extended()),
                                         rep.kernel_element);
        if (!coords)
            return std::nullopt;
        even_class = RingElement{rep.kernel_degree, ring.reduce(rep.kernel_degree, *coords)};
        even_desc = "(0 | " + rep.kernel_element.str() + ")";
    } else if (rp == rH) {
        const auto rep = injectivity_report(phi, D);
        if (rep.injective)
            return std::nullopt;
        auto coords = cylinder.from_pair(cylinder.left().include(rep.kernel_element),
                                         Polynomial::zero(psi.source()));
        if (!coords)
            return std::nullopt;
        even_class = RingElement{rep.kernel_degree, ring.reduce(rep.kernel_degree, *coords)};
        even_desc = "(" + rep.kernel_element.str() + " | 0)";
    } else {
        // both coranks positive: kernel elements of a common degree
        for (int d = 2; d <= D; d += 2) {
            const auto k1 = kernel_slice(phi, d);
            if (k1.empty())
                continue;
            const auto k2 = kernel_slice(psi, d);
            if (k2.empty())
                continue;
            auto coords = cylinder.from_pair(cylinder.left().include(k1.front()), k2.front());
            if (!coords)
                continue;
            even_class = RingElement{d, ring.reduce(d, *coords)};
            even_desc = "(" + k1.front().str() + " | " + k2.front().str() + ")";
            break;
        }
        if (!even_class)
            return std::nullopt;
    }
    if (even_class->zero())
        return std::nullopt;

    // odd annihilator: [dw, 0] for a trick pair whose value z lies outside
    // im phi + im psi
    for (const auto& pair : cylinder.left().pairs()) {
        const auto zdeg = pair.value.homogeneous_degree();
        if (!zdeg)
            continue;
        const auto tgt = monomial_basis(*phi.target(), *zdeg);
        RowSpan span;
        for (const auto& p : image_slice(phi, *zdeg))
            span.insert(to_vec(p, tgt));
        for (const auto& p : image_slice(psi, *zdeg))
            span.insert(to_vec(p, tgt));
        if (span.contains(to_vec(pair.value, tgt)))
            continue;
        const int odd_deg = *zdeg + 1;
        if (even_class->degree + odd_deg > D)
            continue;  // product not verifiable inside the truncation
        const Polynomial dw = Polynomial::generator(cylinder.left().extended(), pair.du);
        auto coords = cylinder.from_pair(dw, Polynomial::zero(psi.source()));
        if (!coords)
            continue;
        RingElement odd{odd_deg, ring.reduce(odd_deg, *coords)};
        if (odd.zero())
            continue;
        const RingElement prod = ring.mul(*even_class, odd);
        if (!prod.zero())
            throw error("zero-divisor construction: product did not vanish in the truncation");
        ZeroDivisorWitness w;
        w.even_class = std::move(*even_class);
        w.odd_annihilator = std::move(odd);
        w.even_describe = even_desc;
        w.odd_describe = "(" + dw.str() + " | 0)";
        w.trick_degree = *zdeg;
        w.trick_value = pair.value.str();
        return w;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Verdicts

std::string decision_name(CMVerdict::Decision d) {
    switch (d) {
        case CMVerdict::Decision::CohenMacaulay: return "CohenMacaulay";
        case CMVerdict::Decision::NotCohenMacaulay: return "NotCohenMacaulay";
        case CMVerdict::Decision::Unknown: return "UnknownUpTo";
    }
    return "UnknownUpTo";
}

std::string basis_name(CMVerdict::Basis b) {
    switch (b) {
        case CMVerdict::Basis::RankEquality: return "RankEquality";
        case CMVerdict::Basis::SumSurjective: return "SumSurjective";
        case CMVerdict::Basis::SumImageFails: return "SumImageFails";
        case CMVerdict::Basis::ZeroDivisorGap: return "ZeroDivisorGap";
        case CMVerdict::Basis::DirectComputation: return "DirectComputation";
    }
    return "DirectComputation";
}

CMVerdict cm_from_invariants(const TruncatedRing& ring, const CylinderAlgebra& cylinder,
                             const GroupDiagram& diagram, std::uint64_t seed) {
    CMVerdict v;
    v.bound = ring.bound();
    v.krull_dim = krull_dimension(diagram);
    v.basis = CMVerdict::Basis::DirectComputation;
    v.depth = depth_report(ring, diagram, seed);
    v.witness = zero_divisor_witness(ring, cylinder, diagram);

    if (v.depth->exact && v.depth->lower_bound < v.krull_dim) {
        v.decision = CMVerdict::Decision::NotCohenMacaulay;
    } else if (v.witness && v.krull_dim >= 1) {
        v.decision = CMVerdict::Decision::NotCohenMacaulay;
        v.basis = CMVerdict::Basis::ZeroDivisorGap;
    } else if (v.depth->lower_bound == v.krull_dim) {
        v.decision = CMVerdict::Decision::CohenMacaulay;
    } else {
        v.decision = CMVerdict::Decision::Unknown;
    }
    return v;
}

}  // namespace dmcyl
