#include "dmcyl/morphism.hpp"

namespace dmcyl {

AlgebraMorphism::AlgebraMorphism(AlgebraPtr source, AlgebraPtr target,
                                 std::vector<Polynomial> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != source_->size())
        throw error("morphism needs one image per source generator");
    for (std::size_t i = 0; i < images_.size(); ++i) {
        const auto& img = images_[i];
        if (!img.is_zero() && *img.algebra() != *target_)
            throw error("image of '" + source_->gen(i).name + "' is not over the target algebra");
        if (!img.homogeneous_of(source_->gen(i).degree))
            throw error("image of '" + source_->gen(i).name + "' is not homogeneous of degree " +
                        std::to_string(source_->gen(i).degree));
    }
    for (auto& img : images_)
        if (img.is_zero())
            img = Polynomial::zero(target_);
}

AlgebraMorphism AlgebraMorphism::identity(const AlgebraPtr& alg) {
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < alg->size(); ++i)
        images.push_back(Polynomial::generator(alg, i));
    return AlgebraMorphism(alg, alg, std::move(images));
}

Polynomial AlgebraMorphism::apply(const Polynomial& p) const {
    if (!p.is_zero() && *p.algebra() != *source_)
        throw error("polynomial is not over the morphism source");
    Polynomial out(target_);
    for (const auto& [m, c] : p.terms()) {
        Polynomial term = Polynomial::one(target_) * c;
        for (std::size_t i = 0; i < m.exp.size() && !term.is_zero(); ++i)
            for (int e = 0; e < m.exp[i]; ++e)
                term = term * images_[i];
        out += term;
    }
    return out;
}

std::vector<Polynomial> image_slice(const AlgebraMorphism& m, int d) {
    const auto src = monomial_basis(*m.source(), d);
    const auto tgt = monomial_basis(*m.target(), d);
    RowSpan span;
    for (const auto& mu : src) {
        const Polynomial img = m.apply(Polynomial::monomial(m.source(), mu.exp));
        if (!img.is_zero())
            span.insert(to_vec(img, tgt));
    }
    std::vector<Polynomial> basis;
    for (const auto& row : span.rows())
        basis.push_back(from_vec(m.target(), tgt, row));
    return basis;
}

namespace {

// First unit monomial of the target slice outside `span`; nullopt if `span`
// fills the slice.
std::optional<Polynomial> first_missing(const AlgebraPtr& target,
                                        const std::vector<Monomial>& basis, const RowSpan& span) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
        QVec unit(basis.size(), Rational(0));
        unit[j] = 1;
        if (!span.contains(unit))
            return Polynomial::monomial(target, basis[j].exp);
    }
    return std::nullopt;
}

RowSpan image_span(const AlgebraMorphism& m, int d, const std::vector<Monomial>& tgt) {
    RowSpan span;
    for (const auto& mu : monomial_basis(*m.source(), d)) {
        const Polynomial img = m.apply(Polynomial::monomial(m.source(), mu.exp));
        if (!img.is_zero())
            span.insert(to_vec(img, tgt));
    }
    return span;
}

}  // namespace

SurjectivityReport surjectivity_report(const AlgebraMorphism& m, int D) {
    for (int d = 1; d <= D; ++d) {
        const auto tgt = monomial_basis(*m.target(), d);
        if (tgt.empty())
            continue;
        const RowSpan span = image_span(m, d, tgt);
        if (auto missing = first_missing(m.target(), tgt, span))
            return {false, D, d, std::move(*missing)};
    }
    return {true, D, -1, Polynomial(m.target())};
}

std::vector<Polynomial> kernel_slice(const AlgebraMorphism& m, int d) {
    const auto src = monomial_basis(*m.source(), d);
    const auto tgt = monomial_basis(*m.target(), d);
    QMat rows;
    for (const auto& mu : src)
        rows.push_back(to_vec(m.apply(Polynomial::monomial(m.source(), mu.exp)), tgt));
    std::vector<Polynomial> out;
    for (const auto& combo : kernel_of_rows(rows))
        out.push_back(from_vec(m.source(), src, combo));
    return out;
}

InjectivityReport injectivity_report(const AlgebraMorphism& m, int D) {
    for (int d = 1; d <= D; ++d) {
        auto kernel = kernel_slice(m, d);
        if (!kernel.empty())
            return {false, D, d, std::move(kernel.front())};
    }
    return {true, D, -1, Polynomial(m.source())};
}

SurjectivityReport sum_image_report(const AlgebraMorphism& phi, const AlgebraMorphism& psi,
                                    int D) {
    if (*phi.target() != *psi.target())
        throw error("sum_image_report: morphisms have different targets");
    for (int d = 1; d <= D; ++d) {
        const auto tgt = monomial_basis(*phi.target(), d);
        if (tgt.empty())
            continue;
        RowSpan span = image_span(phi, d, tgt);
        for (const auto& p : image_slice(psi, d))
            span.insert(to_vec(p, tgt));
        if (auto missing = first_missing(phi.target(), tgt, span))
            return {false, D, d, std::move(*missing)};
    }
    return {true, D, -1, Polynomial(phi.target())};
}

ContractibleExtension::ContractibleExtension(AlgebraPtr base, AlgebraPtr extended,
                                             std::vector<Pair> pairs, AlgebraMorphism phi_ext,
                                             int bound)
    : base_(std::move(base)),
      extended_(std::move(extended)),
      pairs_(std::move(pairs)),
      phi_(std::move(phi_ext)),
      bound_(bound) {
    dgens_.assign(extended_->size(), Polynomial::zero(extended_));
    for (const auto& p : pairs_)
        dgens_[p.u] = Polynomial::generator(extended_, p.du);
}

Polynomial ContractibleExtension::d(const Polynomial& p) const {
    return derivation_apply(extended_, dgens_, p);
}

Polynomial ContractibleExtension::include(const Polynomial& base_element) const {
    Polynomial out(extended_);
    for (const auto& [m, c] : base_element.terms()) {
        std::vector<int> exp = m.exp;
        exp.resize(extended_->size(), 0);
        out.add_term(Monomial{m.degree, std::move(exp)}, c);
    }
    return out;
}

Polynomial derivation_apply(const AlgebraPtr& alg, const std::vector<Polynomial>& dgens,
                            const Polynomial& p) {
    Polynomial out(alg);
    for (const auto& [m, c] : p.terms()) {
        int prefix_deg = 0;
        for (std::size_t i = 0; i < m.exp.size(); ++i) {
            const int e = m.exp[i];
            if (e > 0 && !dgens[i].is_zero()) {
                // d(A g^e B) = +/- e A g^{e-1} (dg) B with the sign of deg(A)
                std::vector<int> prefix(m.exp.size(), 0), suffix(m.exp.size(), 0);
                for (std::size_t j = 0; j < i; ++j)
                    prefix[j] = m.exp[j];
                prefix[i] = e - 1;
                for (std::size_t j = i + 1; j < m.exp.size(); ++j)
                    suffix[j] = m.exp[j];
                Rational coeff = c * e;
                if (prefix_deg % 2)
                    coeff = -coeff;
                out += Polynomial::monomial(alg, prefix, coeff) * dgens[i] *
                       Polynomial::monomial(alg, suffix);
            }
            prefix_deg += e * alg->gen(i).degree;
        }
    }
    return out;
}

ContractibleExtension surjective_trick(const AlgebraMorphism& phi, int D) {
    const AlgebraPtr target = phi.target();
    std::vector<Generator> gens = phi.source()->gens();
    std::vector<Polynomial> images = phi.images();
    struct Added {
        std::size_t u, du;
        Polynomial value;
    };
    std::vector<Added> added;

    auto unique_name = [&gens](std::string base) {
        auto taken = [&gens](const std::string& n) {
            for (const auto& g : gens)
                if (g.name == n)
                    return true;
            return false;
        };
        std::string name = base;
        while (taken(name))
            name += "_";
        return name;
    };

    for (int d = 1; d <= D; ++d) {
        const auto tgt = monomial_basis(*target, d);
        if (tgt.empty())
            continue;
        RowSpan span;
        for (const auto& p : image_slice(phi, d))
            span.insert(to_vec(p, tgt));
        int k = 0;
        for (std::size_t j = 0; j < tgt.size(); ++j) {
            QVec unit(tgt.size(), Rational(0));
            unit[j] = 1;
            if (span.contains(unit))
                continue;
            span.insert(unit);
            const std::string stem = "w" + std::to_string(d) + "_" + std::to_string(k++);
            const std::size_t u = gens.size();
            gens.push_back({unique_name(stem), d});
            gens.push_back({unique_name("d" + stem), d + 1});
            images.push_back(Polynomial::monomial(target, tgt[j].exp));
            images.push_back(Polynomial::zero(target));
            added.push_back({u, u + 1, images[u]});
        }
    }

    AlgebraPtr extended = make_algebra(std::move(gens));
    // re-root images over the extended source for the morphism object
    AlgebraMorphism phi_ext(extended, target, std::move(images));
    std::vector<ContractibleExtension::Pair> pairs;
    pairs.reserve(added.size());
    for (auto& a : added)
        pairs.push_back({a.u, a.du, std::move(a.value)});
    return ContractibleExtension(phi.source(), std::move(extended), std::move(pairs),
                                 std::move(phi_ext), D);
}

}  // namespace dmcyl
