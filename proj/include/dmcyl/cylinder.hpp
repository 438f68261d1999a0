#pragma once

#include <map>
#include <memory>
#include <utility>

#include "dmcyl/cdga.hpp"
#include "dmcyl/diagram.hpp"
#include "dmcyl/morphism.hpp"

namespace dmcyl {

// The double-mapping-cylinder algebra
//   D(A1 --phi--> A <--psi-- A2) = {(a1, a2) in A1C x A2 : Phi(a1) = psi(a2)}
// with Phi the surjectivized left map on A1C = A1 tensor Lambda(U + dU).
// Slices are solved lazily per degree by exact null space of Phi - psi on the
// direct sum and cached; the differential acts componentwise (and vanishes on
// the A2 side, which carries zero differential).
class CylinderAlgebra : public GradedModel {
public:
    CylinderAlgebra(ContractibleExtension left, AlgebraMorphism psi, int bound);

    const ContractibleExtension& left() const { return left_; }
    const AlgebraMorphism& psi() const { return psi_; }
    const AlgebraPtr& target() const { return psi_.target(); }

    int bound() const override { return bound_; }
    int dim(int d) const override;
    const QMat& d_matrix(int d) const override;
    QVec multiply(int da, const QVec& a, int db, const QVec& b) const override;
    std::string label(int d, std::size_t i) const override;
    std::string describe(int d, const QVec& coords) const override;

    // Slice coordinates <-> componentwise polynomials.
    std::pair<Polynomial, Polynomial> to_pair(int d, const QVec& coords) const;
    // Both components homogeneous of degree d; nullopt when Phi(a1) != psi(a2).
    std::optional<QVec> from_pair(const Polynomial& a1c, const Polynomial& a2) const;

private:
    struct Slice {
        std::vector<Monomial> b1, b2;  // monomial bases of A1C_d and A2_d
        QMat basis;                    // RREF rows over the direct-sum coordinates
        std::vector<std::size_t> pivots;
    };
    const Slice& slice(int d) const;
    QVec express(const Slice& s, const QVec& ambient, const char* where) const;

    ContractibleExtension left_;
    AlgebraMorphism psi_;
    int bound_;
    mutable std::map<int, Slice> slices_;
    mutable std::map<int, QMat> dmats_;
};

// Applies the surjective trick to phi through D+1, then solves the slices.
CylinderAlgebra build_cylinder(const AlgebraMorphism& phi, const AlgebraMorphism& psi, int D);

// The Borel model of the diagram: the cylinder of
//   H*(BK-_0) --> H*(BH_0) <-- H*(BK+_0).
CylinderAlgebra borel_model(const GroupDiagram& diagram, int D);

}  // namespace dmcyl
