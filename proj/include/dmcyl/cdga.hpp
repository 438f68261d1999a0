#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "dmcyl/morphism.hpp"

namespace dmcyl {

// Free graded-commutative algebra with a degree +1 derivation differential,
// d^2 = 0 checked on generators.
class CDGA {
public:
    CDGA(AlgebraPtr alg, std::vector<Polynomial> dgens);

    const AlgebraPtr& algebra() const { return alg_; }
    const Polynomial& d_gen(std::size_t i) const { return dgens_[i]; }
    Polynomial d(const Polynomial& p) const { return derivation_apply(alg_, dgens_, p); }

private:
    AlgebraPtr alg_;
    std::vector<Polynomial> dgens_;
};

// Validated constructor; reports the offending generator on failure.
CDGA make_cdga(AlgebraPtr alg, std::vector<Polynomial> dgens);

// Sullivan model of K/H from iota: H*(BK) -> H*(BH): the algebra
// BH tensor Lambda(v_i) with deg v_i = deg x_i - 1, d|BH = 0, d v_i = iota(x_i).
CDGA homogeneous_model(const AlgebraMorphism& iota);

// Cochain complex sliced by degree; basis and differential per slice.
class GradedModel {
public:
    virtual ~GradedModel() = default;
    virtual int bound() const = 0;  // slices are valid through bound()+1
    virtual int dim(int d) const = 0;
    // dim(d) x dim(d+1) matrix of the differential on the slice basis.
    virtual const QMat& d_matrix(int d) const = 0;
    // Product of slice-coordinate vectors; lands in degree da+db.
    virtual QVec multiply(int da, const QVec& a, int db, const QVec& b) const = 0;
    virtual std::string label(int d, std::size_t i) const = 0;
    virtual std::string describe(int d, const QVec& coords) const = 0;
};

// betti[d] = dim ker(d_d) - dim im(d_{d-1}) for d = 0..D, by exact rank.
std::vector<int> cohomology_betti(const GradedModel& model, int D);

class CdgaModel : public GradedModel {
public:
    CdgaModel(CDGA cdga, int bound) : cdga_(std::move(cdga)), bound_(bound) {}

    int bound() const override { return bound_; }
    int dim(int d) const override { return static_cast<int>(basis(d).size()); }
    const QMat& d_matrix(int d) const override;
    QVec multiply(int da, const QVec& a, int db, const QVec& b) const override;
    std::string label(int d, std::size_t i) const override;
    std::string describe(int d, const QVec& coords) const override;

    const CDGA& cdga() const { return cdga_; }
    const std::vector<Monomial>& basis(int d) const;

private:
    CDGA cdga_;
    int bound_;
    mutable std::map<int, std::vector<Monomial>> bases_;
    mutable std::map<int, QMat> dmats_;
};

std::vector<int> cohomology_betti(const CDGA& cdga, int D);

}  // namespace dmcyl
