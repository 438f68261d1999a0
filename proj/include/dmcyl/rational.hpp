#pragma once

#include <gmpxx.h>
#include <string>
#include <vector>

namespace dmcyl {

using Rational = mpq_class;
using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;

inline std::string rat_str(const Rational& x) { return x.get_str(); }

inline bool is_zero(const QVec& v) {
    for (const auto& x : v)
        if (x != 0)
            return false;
    return true;
}

}  // namespace dmcyl
