#pragma once

#include <stdexcept>
#include <string>

namespace dmcyl {

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/* Product of two classes would land above the truncation degree. */
struct truncation_overflow : error {
    explicit truncation_overflow(const std::string& what) : error(what) {}
};

}  // namespace dmcyl
