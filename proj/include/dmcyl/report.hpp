#pragma once

#include <cstdint>
#include <string>

#include "dmcyl/diagram_io.hpp"
#include "dmcyl/invariants.hpp"
#include "dmcyl/truncated_ring.hpp"

namespace dmcyl {

inline constexpr const char* kToolName = "dmcyl";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kMonomialOrderTag = "grlex-desc-v1";

struct ReportMeta {
    std::string command;
    std::string input;
    int max_degree = 0;
    std::uint64_t seed = 0;
};

// Every report embeds the tool version, monomial-order tag, truncation degree
// and seed; identical inputs and seeds give byte-identical JSON.
ordered_json report_header(const ReportMeta& meta);

ordered_json verdict_to_json(const CMVerdict& v);
std::string verdict_to_table(const CMVerdict& v);

ordered_json ring_element_json(const TruncatedRing& ring, const RingElement& e);

// betti array + representative labels + product table
ordered_json ring_to_json(const TruncatedRing& ring);

int verdict_exit_code(const CMVerdict& v);  // 0 definite, 2 unknown

}  // namespace dmcyl
