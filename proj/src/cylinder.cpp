#include "dmcyl/cylinder.hpp"

#include <cassert>

namespace dmcyl {

CylinderAlgebra::CylinderAlgebra(ContractibleExtension left, AlgebraMorphism psi, int bound)
    : left_(std::move(left)), psi_(std::move(psi)), bound_(bound) {
    if (*left_.Phi().target() != *psi_.target())
        throw error("cylinder sides must share the target algebra");
    if (left_.bound() <= bound_)
        throw error("left extension must be surjective beyond the cylinder bound");
}

const CylinderAlgebra::Slice& CylinderAlgebra::slice(int d) const {
    auto it = slices_.find(d);
    if (it != slices_.end())
        return it->second;
    if (d > bound_ + 1)
        throw truncation_overflow("slice degree " + std::to_string(d) + " above bound " +
                                  std::to_string(bound_));
    Slice s;
    s.b1 = monomial_basis(*left_.extended(), d);
    s.b2 = monomial_basis(*psi_.source(), d);
    const auto bt = monomial_basis(*psi_.target(), d);
    QMat rows;
    rows.reserve(s.b1.size() + s.b2.size());
    for (const auto& m : s.b1)
        rows.push_back(to_vec(left_.Phi().apply(Polynomial::monomial(left_.extended(), m.exp)), bt));
    for (const auto& m : s.b2) {
        QVec v = to_vec(psi_.apply(Polynomial::monomial(psi_.source(), m.exp)), bt);
        for (auto& x : v)
            x = -x;
        rows.push_back(std::move(v));
    }
    s.basis = kernel_of_rows(rows);
    s.pivots.reserve(s.basis.size());
    for (const auto& row : s.basis) {
        std::size_t p = 0;
        while (p < row.size() && row[p] == 0)
            ++p;
        s.pivots.push_back(p);
    }
    return slices_.emplace(d, std::move(s)).first->second;
}

int CylinderAlgebra::dim(int d) const { return static_cast<int>(slice(d).basis.size()); }

QVec CylinderAlgebra::express(const Slice& s, const QVec& ambient, const char* where) const {
    // The slice basis is in echelon form: read off pivot coordinates, then
    // check the residual vanishes (the vector must lie in the slice).
    QVec r = ambient;
    QVec coeff(s.basis.size(), Rational(0));
    for (std::size_t i = 0; i < s.basis.size(); ++i) {
        const Rational f = r[s.pivots[i]] / s.basis[i][s.pivots[i]];
        if (f != 0) {
            coeff[i] = f;
            for (std::size_t j = s.pivots[i]; j < r.size(); ++j)
                r[j] -= f * s.basis[i][j];
        }
    }
    if (!is_zero(r))
        throw error(std::string(where) + ": vector does not satisfy the cylinder constraint");
    return coeff;
}

const QMat& CylinderAlgebra::d_matrix(int d) const {
    auto it = dmats_.find(d);
    if (it != dmats_.end())
        return it->second;
    const Slice& s = slice(d);
    const Slice& s1 = slice(d + 1);
    QMat mat;
    mat.reserve(s.basis.size());
    for (std::size_t i = 0; i < s.basis.size(); ++i) {
        QVec unit(s.basis.size(), Rational(0));
        unit[i] = 1;
        auto [p1, p2] = to_pair(d, unit);
        const Polynomial dp1 = left_.d(p1);
        QVec ambient(s1.b1.size() + s1.b2.size(), Rational(0));
        const QVec v1 = to_vec(dp1, s1.b1);
        std::copy(v1.begin(), v1.end(), ambient.begin());
        mat.push_back(express(s1, ambient, "d_matrix"));
    }
    return dmats_.emplace(d, std::move(mat)).first->second;
}

std::pair<Polynomial, Polynomial> CylinderAlgebra::to_pair(int d, const QVec& coords) const {
    const Slice& s = slice(d);
    QVec ambient(s.b1.size() + s.b2.size(), Rational(0));
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i] != 0)
            for (std::size_t j = 0; j < ambient.size(); ++j)
                ambient[j] += coords[i] * s.basis[i][j];
    const QVec v1(ambient.begin(), ambient.begin() + s.b1.size());
    const QVec v2(ambient.begin() + s.b1.size(), ambient.end());
    return {from_vec(left_.extended(), s.b1, v1), from_vec(psi_.source(), s.b2, v2)};
}

std::optional<QVec> CylinderAlgebra::from_pair(const Polynomial& a1c, const Polynomial& a2) const {
    std::optional<int> d;
    if (auto d1 = a1c.homogeneous_degree())
        d = d1;
    if (auto d2 = a2.homogeneous_degree()) {
        if (d && *d != *d2)
            throw error("from_pair: components have different degrees");
        d = d2;
    }
    if (!d)
        throw error("from_pair: cannot infer the degree of the zero pair");
    const Slice& s = slice(*d);
    QVec ambient(s.b1.size() + s.b2.size(), Rational(0));
    const QVec v1 = to_vec(a1c, s.b1);
    const QVec v2 = to_vec(a2, s.b2);
    std::copy(v1.begin(), v1.end(), ambient.begin());
    std::copy(v2.begin(), v2.end(), ambient.begin() + s.b1.size());
    try {
        return express(s, ambient, "from_pair");
    } catch (const error&) {
        return std::nullopt;
    }
}

QVec CylinderAlgebra::multiply(int da, const QVec& a, int db, const QVec& b) const {
    if (da + db > bound_)
        throw truncation_overflow("product degree " + std::to_string(da + db) +
                                  " exceeds truncation " + std::to_string(bound_));
    auto [a1, a2] = to_pair(da, a);
    auto [b1, b2] = to_pair(db, b);
    const Polynomial p1 = a1 * b1;
    const Polynomial p2 = a2 * b2;
    const Slice& s = slice(da + db);
    QVec ambient(s.b1.size() + s.b2.size(), Rational(0));
    const QVec v1 = to_vec(p1, s.b1);
    const QVec v2 = to_vec(p2, s.b2);
    std::copy(v1.begin(), v1.end(), ambient.begin());
    std::copy(v2.begin(), v2.end(), ambient.begin() + s.b1.size());
    return express(s, ambient, "multiply");
}

std::string CylinderAlgebra::label(int d, std::size_t i) const {
    const Slice& s = slice(d);
    QVec unit(s.basis.size(), Rational(0));
    unit[i] = 1;
    return describe(d, unit);
}

std::string CylinderAlgebra::describe(int d, const QVec& coords) const {
    auto [p1, p2] = to_pair(d, coords);
    return "(" + p1.str() + " | " + p2.str() + ")";
}

CylinderAlgebra build_cylinder(const AlgebraMorphism& phi, const AlgebraMorphism& psi, int D) {
    if (*phi.target() != *psi.target())
        throw error("build_cylinder: morphisms have different targets");
    if (D < 1)
        throw error("build_cylinder: bound must be at least 1");
    return CylinderAlgebra(surjective_trick(phi, D + 1), psi, D);
}

CylinderAlgebra borel_model(const GroupDiagram& diagram, int D) {
    return build_cylinder(diagram.iota_minus, diagram.iota_plus, D);
}

}  // namespace dmcyl
