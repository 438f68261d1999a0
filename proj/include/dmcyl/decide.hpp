#pragma once

#include <variant>

#include "dmcyl/catalog.hpp"
#include "dmcyl/invariants.hpp"

namespace dmcyl {

// Decision procedure for the Cohen-Macaulay property:
//   (1) rank H = rank K- = rank K+:                 CohenMacaulay, exact;
//   (2) corank <= 1: sum-image check; failure is exact, success is a bounded
//       certificate through D;
//   (3) corank >= 2: direct depth/dimension computation on the Borel model.
CMVerdict cm_decide(const GroupDiagram& diagram, int D, std::uint64_t seed = 1);

struct JoinRefusal {
    std::string reason;
};

using JoinOutcome = std::variant<GroupDiagram, JoinRefusal>;

// Join diagram that fails to be Cohen-Macaulay, built from catalog fibers.
// Accepts exactly the fiber menu with non-surjective induced maps on both
// sides and a rank drop; refuses otherwise with the reason.
JoinOutcome noncm_join_generator(const Catalog& catalog, const std::string& left_fiber,
                                 const std::string& right_fiber);

// Diagrams whose fibers are spherical space forms are always Cohen-Macaulay;
// records which branch applied. Rejects non-space-form fibers.
CMVerdict orbifold_check(const GroupDiagram& diagram, int D);

}  // namespace dmcyl
