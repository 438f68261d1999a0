#include "dmcyl/cdga.hpp"

namespace dmcyl {

CDGA::CDGA(AlgebraPtr alg, std::vector<Polynomial> dgens)
    : alg_(std::move(alg)), dgens_(std::move(dgens)) {}

CDGA make_cdga(AlgebraPtr alg, std::vector<Polynomial> dgens) {
    if (dgens.size() != alg->size())
        throw error("differential needs one image per generator");
    for (std::size_t i = 0; i < dgens.size(); ++i) {
        auto& dg = dgens[i];
        if (dg.is_zero()) {
            dg = Polynomial::zero(alg);
            continue;
        }
        if (*dg.algebra() != *alg)
            throw error("d(" + alg->gen(i).name + ") is not over the same algebra");
        if (!dg.homogeneous_of(alg->gen(i).degree + 1))
            throw error("d(" + alg->gen(i).name + ") must be homogeneous of degree " +
                        std::to_string(alg->gen(i).degree + 1));
    }
    CDGA cdga(alg, std::move(dgens));
    for (std::size_t i = 0; i < alg->size(); ++i) {
        const Polynomial dd = cdga.d(cdga.d_gen(i));
        if (!dd.is_zero())
            throw error("d^2 != 0 on generator '" + alg->gen(i).name + "'");
    }
    return cdga;
}

CDGA homogeneous_model(const AlgebraMorphism& iota) {
    const AlgebraPtr bh = iota.target();
    std::vector<Generator> gens = bh->gens();
    auto taken = [&gens](const std::string& n) {
        for (const auto& g : gens)
            if (g.name == n)
                return true;
        return false;
    };
    const std::size_t nb = gens.size();
    for (const auto& g : iota.source()->gens()) {
        if (g.degree < 2 || g.degree % 2 != 0)
            throw error("classifying-space generator '" + g.name + "' must have even degree >= 2");
        std::string name = "v_" + g.name;
        while (taken(name))
            name += "_";
        gens.push_back({name, g.degree - 1});
    }
    AlgebraPtr alg = make_algebra(std::move(gens));
    std::vector<Polynomial> dgens(alg->size(), Polynomial::zero(alg));
    for (std::size_t i = 0; i < iota.source()->size(); ++i) {
        // re-root iota(x_i) from BH into the model algebra
        Polynomial img(alg);
        for (const auto& [m, c] : iota.image(i).terms()) {
            std::vector<int> exp = m.exp;
            exp.resize(alg->size(), 0);
            img.add_term(Monomial{m.degree, std::move(exp)}, c);
        }
        dgens[nb + i] = std::move(img);
    }
    return make_cdga(std::move(alg), std::move(dgens));
}

std::vector<int> cohomology_betti(const GradedModel& model, int D) {
    std::vector<int> betti(D + 1, 0);
    std::vector<std::size_t> ranks(D + 1, 0);
    for (int d = 0; d <= D; ++d)
        ranks[d] = rank(model.d_matrix(d));
    for (int d = 0; d <= D; ++d) {
        const std::size_t below = d > 0 ? ranks[d - 1] : 0;
        betti[d] = model.dim(d) - static_cast<int>(ranks[d]) - static_cast<int>(below);
    }
    return betti;
}

const std::vector<Monomial>& CdgaModel::basis(int d) const {
    auto it = bases_.find(d);
    if (it == bases_.end())
        it = bases_.emplace(d, monomial_basis(*cdga_.algebra(), d)).first;
    return it->second;
}

const QMat& CdgaModel::d_matrix(int d) const {
    auto it = dmats_.find(d);
    if (it != dmats_.end())
        return it->second;
    const auto& b = basis(d);
    const auto& b1 = basis(d + 1);
    QMat mat;
    mat.reserve(b.size());
    for (const auto& m : b)
        mat.push_back(to_vec(cdga_.d(Polynomial::monomial(cdga_.algebra(), m.exp)), b1));
    return dmats_.emplace(d, std::move(mat)).first->second;
}

QVec CdgaModel::multiply(int da, const QVec& a, int db, const QVec& b) const {
    const Polynomial pa = from_vec(cdga_.algebra(), basis(da), a);
    const Polynomial pb = from_vec(cdga_.algebra(), basis(db), b);
    return to_vec(pa * pb, basis(da + db));
}

std::string CdgaModel::label(int d, std::size_t i) const {
    return Polynomial::monomial(cdga_.algebra(), basis(d)[i].exp).str();
}

std::string CdgaModel::describe(int d, const QVec& coords) const {
    return from_vec(cdga_.algebra(), basis(d), coords).str();
}

std::vector<int> cohomology_betti(const CDGA& cdga, int D) {
    return cohomology_betti(CdgaModel(cdga, D), D);
}

}  // namespace dmcyl
