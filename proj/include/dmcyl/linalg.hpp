#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dmcyl/rational.hpp"

namespace dmcyl {

// Exact dense linear algebra over Q. Matrices are lists of rows; a matrix
// represents the map sending the i-th domain basis vector to row i.

std::size_t rank(QMat mat);

// Combos c (one per basis vector) with sum_i c_i * row_i = 0, as a canonical
// RREF basis with primitive integer entries.
QMat kernel_of_rows(const QMat& mat);

// Scale to integer entries with gcd 1 and positive leading coefficient.
void normalize_primitive(QVec& v);

// Incrementally maintained row space in reduced echelon form.
class RowSpan {
public:
    // Residue of v after elimination by the stored rows.
    QVec reduce(const QVec& v) const;
    // Insert v if independent; returns false when v is already in the span.
    bool insert(const QVec& v);
    bool contains(const QVec& v) const { return is_zero(reduce(v)); }
    std::size_t dim() const { return rows_.size(); }
    const QMat& rows() const { return rows_; }

private:
    QMat rows_;                       // sorted by pivot column, fully reduced
    std::vector<std::size_t> pivots_;
};

// Expresses vectors in a fixed independent spanning set.
class SolveBasis {
public:
    void add(const QVec& v);  // v must be independent of previous adds
    std::size_t dim() const { return rref_.size(); }
    // Coefficients c with sum c_i * v_i = target, or nullopt if outside the span.
    std::optional<QVec> express(const QVec& target) const;

private:
    QMat rref_;
    QMat transform_;                  // rref_[i] = sum_j transform_[i][j] * added_j
    std::vector<std::size_t> pivots_;
};

}  // namespace dmcyl
