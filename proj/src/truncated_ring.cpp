#include "dmcyl/truncated_ring.hpp"


#include "dmcyl/error.hpp"

namespace dmcyl {

TruncatedRing::TruncatedRing(std::shared_ptr<const GradedModel> model, int bound)
    : model_(std::move(model)), bound_(bound) {
    if (bound_ < 0)
        throw error("ring truncation bound must be non-negative");
    if (model_->bound() < bound_)
        throw error("model truncation is smaller than the requested ring bound");
}

const TruncatedRing::Degree& TruncatedRing::at(int d) const {
    auto it = degrees_.find(d);
    if (it != degrees_.end())
        return it->second;
    if (d > bound_)
        throw truncation_overflow("degree " + std::to_string(d) + " above ring bound " +
                                  std::to_string(bound_));
    Degree deg;
    const QMat cocycles = kernel_of_rows(model_->d_matrix(d));
    QMat coboundaries;
    if (d > 0)
        coboundaries = model_->d_matrix(d - 1);
    RowSpan accumulated;
    for (const auto& b : coboundaries)
        accumulated.insert(b);
    const std::size_t cob_dim = accumulated.dim();
    for (const auto& z : cocycles)
        if (accumulated.insert(z))
            deg.reps.push_back(z);
    deg.rep_count = deg.reps.size();
    if (deg.rep_count + cob_dim != cocycles.size())
        throw error("coboundaries escape the cocycle space in degree " + std::to_string(d));
    for (const auto& r : deg.reps)
        deg.reducer.add(r);
    RowSpan cob_span;
    for (const auto& b : coboundaries)
        if (cob_span.insert(b))
            deg.reducer.add(b);
    return degrees_.emplace(d, std::move(deg)).first->second;
}

int TruncatedRing::betti(int d) const { return static_cast<int>(at(d).rep_count); }

std::vector<int> TruncatedRing::betti_through(int D) const {
    std::vector<int> out;
    for (int d = 0; d <= D; ++d)
        out.push_back(betti(d));
    return out;
}

const std::vector<QVec>& TruncatedRing::reps(int d) const { return at(d).reps; }

QVec TruncatedRing::reduce(int d, const QVec& cocycle) const {
    const Degree& deg = at(d);
    const auto coeff = deg.reducer.express(cocycle);
    if (!coeff)
        throw error("reduce: vector is not a cocycle of degree " + std::to_string(d));
    return QVec(coeff->begin(), coeff->begin() + deg.rep_count);
}

RingElement TruncatedRing::unit() const {
    const Degree& deg = at(0);
    QVec c(deg.rep_count, Rational(0));
    // degree-0 slice of a connected model is spanned by the unit cocycle
    if (deg.rep_count != 1)
        throw error("degree-0 slice is not one-dimensional");
    const QVec& rep = deg.reps[0];
    std::size_t p = 0;
    while (p < rep.size() && rep[p] == 0)
        ++p;
    c[0] = Rational(1) / rep[p];
    return {0, std::move(c)};
}

RingElement TruncatedRing::basis_class(int d, std::size_t i) const {
    QVec c(at(d).rep_count, Rational(0));
    c.at(i) = 1;
    return {d, std::move(c)};
}

const QVec& TruncatedRing::product(int d1, std::size_t i, int d2, std::size_t j) const {
    const auto key = std::make_tuple(d1, i, d2, j);
    auto it = table_.find(key);
    if (it != table_.end())
        return it->second;
    const Degree& a = at(d1);
    const Degree& b = at(d2);
    const QVec prod = model_->multiply(d1, a.reps[i], d2, b.reps[j]);
    return table_.emplace(key, reduce(d1 + d2, prod)).first->second;
}

RingElement TruncatedRing::mul(const RingElement& a, const RingElement& b) const {
    const int d = a.degree + b.degree;
    if (d > bound_)
        throw truncation_overflow("product degree " + std::to_string(d) +
                                  " is not tabulated (bound " + std::to_string(bound_) + ")");
    QVec out(at(d).rep_count, Rational(0));
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
        if (a.coords[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coords.size(); ++j) {
            if (b.coords[j] == 0)
                continue;
            const QVec& p = product(a.degree, i, b.degree, j);
            const Rational f = a.coords[i] * b.coords[j];
            for (std::size_t k = 0; k < out.size(); ++k)
                out[k] += f * p[k];
        }
    }
    return {d, std::move(out)};
}

std::string TruncatedRing::class_label(int d, std::size_t i) const {
    return "h" + std::to_string(d) + "_" + std::to_string(i);
}

std::string TruncatedRing::describe(const RingElement& e) const {
    if (e.zero())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < e.coords.size(); ++i) {
        Rational c = e.coords[i];
        if (c == 0)
            continue;
        if (out.empty()) {
            if (c < 0) {
                out += "-";
                c = -c;
            }
        } else {
            out += c < 0 ? " - " : " + ";
            if (c < 0)
                c = -c;
        }
        if (c != 1)
            out += rat_str(c) + "*";
        out += class_label(e.degree, i);
    }
    return out;
}

void TruncatedRing::tabulate() {
    for (int d = 0; d <= bound_; ++d)
        at(d);
    for (int d1 = 0; d1 <= bound_; ++d1)
        for (int d2 = d1; d1 + d2 <= bound_; ++d2)
            for (std::size_t i = 0; i < at(d1).rep_count; ++i)
                for (std::size_t j = 0; j < at(d2).rep_count; ++j) {
                    product(d1, i, d2, j);
                    product(d2, j, d1, i);
                }
}

TruncatedRing ring_truncation(std::shared_ptr<const GradedModel> model, int D) {
    return TruncatedRing(std::move(model), D);
}

}  // namespace dmcyl
