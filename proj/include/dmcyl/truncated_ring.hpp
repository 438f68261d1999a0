#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "dmcyl/cdga.hpp"
#include "dmcyl/linalg.hpp"

namespace dmcyl {

// A class of the truncated cohomology ring: coefficients over the
// representative basis of its degree.
struct RingElement {
    int degree = 0;
    QVec coords;

    bool zero() const { return is_zero(coords); }
};

// Truncated cohomology ring of a graded model. Representatives per degree are
// the lexicographically least cocycle-basis completion of the coboundary
// space; products are reduced back to representative coordinates. Slices are
// computed on demand and cached; tabulate() fills everything eagerly.
class TruncatedRing {
public:
    TruncatedRing(std::shared_ptr<const GradedModel> model, int bound);

    int bound() const { return bound_; }
    const GradedModel& model() const { return *model_; }
    std::shared_ptr<const GradedModel> model_ptr() const { return model_; }

    int betti(int d) const;
    std::vector<int> betti_through(int D) const;
    // Representative cocycles of degree d, in slice coordinates.
    const std::vector<QVec>& reps(int d) const;

    // Rep coordinates of a cocycle given in slice coordinates.
    QVec reduce(int d, const QVec& cocycle) const;
    RingElement mul(const RingElement& a, const RingElement& b) const;
    RingElement unit() const;
    RingElement basis_class(int d, std::size_t i) const;

    std::string class_label(int d, std::size_t i) const;
    std::string describe(const RingElement& e) const;

    void tabulate();  // force all slices and the product table through the bound
    // Product of representative classes, in rep coordinates of d1+d2.
    const QVec& product(int d1, std::size_t i, int d2, std::size_t j) const;

private:
    struct Degree {
        std::vector<QVec> reps;
        SolveBasis reducer;      // over [reps | coboundary basis]
        std::size_t rep_count = 0;
    };
    const Degree& at(int d) const;

    std::shared_ptr<const GradedModel> model_;
    int bound_;
    mutable std::map<int, Degree> degrees_;
    mutable std::map<std::tuple<int, std::size_t, int, std::size_t>, QVec> table_;
};

TruncatedRing ring_truncation(std::shared_ptr<const GradedModel> model, int D);

}  // namespace dmcyl
