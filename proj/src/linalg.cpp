#include "dmcyl/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace dmcyl {

namespace {

std::size_t first_nonzero(const QVec& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0)
            return i;
    return v.size();
}

}  // namespace

std::size_t rank(QMat mat) {
    if (mat.empty() || mat[0].empty())
        return 0;
    const std::size_t rows = mat.size(), cols = mat[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && mat[piv][c] == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(mat[r], mat[piv]);
        const Rational inv = Rational(1) / mat[r][c];
        for (std::size_t j = c; j < cols; ++j)
            mat[r][j] *= inv;
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (mat[i][c] == 0)
                continue;
            const Rational f = mat[i][c];
            for (std::size_t j = c; j < cols; ++j)
                mat[i][j] -= f * mat[r][j];
        }
        ++r;
    }
    return r;
}

void normalize_primitive(QVec& v) {
    mpz_class den(1);
    for (const auto& x : v)
        den = den / gcd(den, x.get_den()) * x.get_den();
    mpz_class num(0);
    for (const auto& x : v)
        num = gcd(num, mpz_class(x.get_num() * (den / x.get_den())));
    if (num == 0)
        return;
    const Rational scale(den, num);
    for (auto& x : v)
        x *= scale;
    const std::size_t lead = first_nonzero(v);
    if (lead < v.size() && v[lead] < 0)
        for (auto& x : v)
            x = -x;
}

QMat kernel_of_rows(const QMat& mat) {
    const std::size_t m = mat.size();
    if (m == 0)
        return {};
    const std::size_t n = mat[0].size();
    // Augment with the identity and eliminate the left block.
    QMat aug(m, QVec(n + m, Rational(0)));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug[i][j] = mat[i][j];
        aug[i][n + i] = 1;
    }
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t piv = r;
        while (piv < m && aug[piv][c] == 0)
            ++piv;
        if (piv == m)
            continue;
        std::swap(aug[r], aug[piv]);
        const Rational inv = Rational(1) / aug[r][c];
        for (auto& x : aug[r])
            x *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || aug[i][c] == 0)
                continue;
            const Rational f = aug[i][c];
            for (std::size_t j = c; j < n + m; ++j)
                aug[i][j] -= f * aug[r][j];
        }
        ++r;
    }
    QMat kernel;
    for (std::size_t i = r; i < m; ++i)
        kernel.emplace_back(aug[i].begin() + n, aug[i].end());
    // Canonicalize: RREF the combo block, primitive entries.
    RowSpan span;
    for (auto& row : kernel)
        span.insert(row);
    QMat out = span.rows();
    for (auto& row : out)
        normalize_primitive(row);
    return out;
}

QVec RowSpan::reduce(const QVec& v) const {
    QVec r = v;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const std::size_t p = pivots_[i];
        if (p < r.size() && r[p] != 0) {
            const Rational f = r[p];
            for (std::size_t j = p; j < r.size(); ++j)
                r[j] -= f * rows_[i][j];
        }
    }
    return r;
}

bool RowSpan::insert(const QVec& v) {
    QVec r = reduce(v);
    const std::size_t p = first_nonzero(r);
    if (p == r.size())
        return false;
    const Rational inv = Rational(1) / r[p];
    for (auto& x : r)
        x *= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][p] == 0)
            continue;
        const Rational f = rows_[i][p];
        for (std::size_t j = p; j < rows_[i].size(); ++j)
            rows_[i][j] -= f * r[j];
    }
    const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(r));
    return true;
}

void SolveBasis::add(const QVec& v) {
    QVec r = v;
    QVec t(rref_.size() + 1, Rational(0));
    for (auto& row : transform_)
        row.resize(rref_.size() + 1, Rational(0));
    t[rref_.size()] = 1;
    for (std::size_t i = 0; i < rref_.size(); ++i) {
        const std::size_t p = pivots_[i];
        if (r[p] != 0) {
            const Rational f = r[p];
            for (std::size_t j = 0; j < r.size(); ++j)
                r[j] -= f * rref_[i][j];
            for (std::size_t j = 0; j < t.size(); ++j)
                t[j] -= f * transform_[i][j];
        }
    }
    const std::size_t p = first_nonzero(r);
    assert(p < r.size() && "SolveBasis::add: dependent vector");
    const Rational inv = Rational(1) / r[p];
    for (auto& x : r)
        x *= inv;
    for (auto& x : t)
        x *= inv;
    rref_.push_back(std::move(r));
    transform_.push_back(std::move(t));
    pivots_.push_back(p);
}

std::optional<QVec> SolveBasis::express(const QVec& target) const {
    QVec r = target;
    QVec coeff(rref_.size(), Rational(0));
    for (std::size_t i = 0; i < rref_.size(); ++i) {
        const std::size_t p = pivots_[i];
        if (r[p] != 0) {
            const Rational f = r[p];
            for (std::size_t j = 0; j < r.size(); ++j)
                r[j] -= f * rref_[i][j];
            for (std::size_t j = 0; j < rref_.size(); ++j)
                coeff[j] += f * transform_[i][j];
        }
    }
    if (!is_zero(r))
        return std::nullopt;
    return coeff;
}

}  // namespace dmcyl
