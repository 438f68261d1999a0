#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dmcyl/cylinder.hpp"
#include "dmcyl/diagram.hpp"
#include "dmcyl/truncated_ring.hpp"

namespace dmcyl {

// Kdim H(D~) = max(rank K-, rank K+); authoritative by the rank formula.
int krull_dimension(const GroupDiagram& diagram);

// Cross-check oracle: detects the polynomial growth order of the cumulative
// even-part dimension by exhibiting the truncated even Hilbert series as
// N(t) / prod(1 - t^{d_i}) with a verified zero tail; the growth exponent is
// the pole order at t = 1. Reports the window over all verified fits.
struct HilbertGrowthEstimate {
    bool conclusive = false;  // false: window too small, or ambiguous fits
    int estimate = -1;        // min over verified fits; -1 when none found
    int lo = -1, hi = -1;
    int verified_tail = 0;    // zero coefficients checked past the numerator
    std::string detail;
};

HilbertGrowthEstimate hilbert_growth_dimension(const TruncatedRing& ring);

struct ZeroDivisorWitness {
    RingElement even_class;       // zero divisor of even degree
    RingElement odd_annihilator;  // the class [dw, 0]
    std::string even_describe, odd_describe;
    int trick_degree = 0;         // degree of the trick value z outside im phi + im psi
    std::string trick_value;      // z as a target-algebra expression
};

// The even-degree zero-divisor construction; absent when im phi + im psi is
// surjective through the ring bound or the pieces exceed the truncation.
std::optional<ZeroDivisorWitness> zero_divisor_witness(const TruncatedRing& ring,
                                                       const CylinderAlgebra& cylinder,
                                                       const GroupDiagram& diagram);

struct RegSeqStatus {
    bool regular = false;
    int checked_through = 0;          // witness product verified within this bound
    std::optional<RingElement> witness;  // nonzero class with element * witness in the ideal
};

struct RegularSequenceCertificate {
    std::vector<RingElement> elements;
    std::vector<RegSeqStatus> status;
    int bound = 0;
    bool all_regular = false;
};

// Per element, multiplication-by-element injectivity on the quotient by its
// predecessors, degreewise through bound - degree(element). Errors on
// odd-degree input classes.
RegularSequenceCertificate is_regular_sequence(const TruncatedRing& ring,
                                               const std::vector<RingElement>& classes,
                                               bool even_part_only = false);

struct SocleCertificate {
    RingElement socle;       // annihilates every positive-degree class mod the ideal
    int verified_through = 0;
    std::string describe;
};

struct DepthReport {
    int lower_bound = 0;
    std::vector<RingElement> sequence;
    std::optional<SocleCertificate> socle;  // socle of H / (sequence)
    bool exact = false;  // socle found: depth equals lower_bound through the bound
    std::uint64_t seed = 0;
    std::string detail;
};

// Greedy regular-sequence search over even-degree classes (representatives
// first, then seeded random combinations with coefficients in {-2..2},
// widening on failure), then socle detection on the quotient.
DepthReport depth_report(const TruncatedRing& ring, const GroupDiagram& diagram,
                         std::uint64_t seed = 1);

struct CMVerdict {
    enum class Decision { CohenMacaulay, NotCohenMacaulay, Unknown };
    enum class Basis { RankEquality, SumSurjective, SumImageFails, ZeroDivisorGap,
                       DirectComputation };

    Decision decision = Decision::Unknown;
    Basis basis = Basis::DirectComputation;
    bool exact = false;  // bounded certificate when false
    int bound = 0;
    int krull_dim = -1;

    // SumImageFails
    int fail_degree = -1;
    std::string missing_class;

    std::optional<DepthReport> depth;
    std::optional<ZeroDivisorWitness> witness;
    std::optional<HilbertGrowthEstimate> hilbert;
    std::vector<std::string> assumptions;
};

std::string decision_name(CMVerdict::Decision d);
std::string basis_name(CMVerdict::Basis b);

// Direct route: depth/dimension data on the truncated Borel model.
CMVerdict cm_from_invariants(const TruncatedRing& ring, const CylinderAlgebra& cylinder,
                             const GroupDiagram& diagram, std::uint64_t seed = 1);

}  // namespace dmcyl
