#pragma once

#include "nilkahler/scalar.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace nilkahler {

class ScalarMatrix {
public:
    ScalarMatrix() = default;
    ScalarMatrix(int rows, int cols);
    static ScalarMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Scalar& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Scalar& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    ScalarMatrix conj() const;
    ScalarMatrix transpose() const;
    ScalarMatrix adjoint() const { return conj().transpose(); }
    bool isHermitian() const;
    bool isZero() const;

    friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);
    friend ScalarMatrix operator+(const ScalarMatrix& a, const ScalarMatrix& b);
    friend ScalarMatrix operator-(const ScalarMatrix& a, const ScalarMatrix& b);
    friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b);

    // Throws when singular.
    ScalarMatrix inverse() const;
    Scalar determinant() const;
    int rank() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Scalar> data_;
};

// Sorted (index, value) pairs without zeros.
using SparseVector = std::vector<std::pair<int, Scalar>>;

void axpy(SparseVector& y, const Scalar& a, const SparseVector& x);
Scalar dot(const SparseVector& a, const SparseVector& b);

// Incrementally built echelon basis that remembers how each basis vector was
// combined from the inserted vectors.
class EchelonBasis {
public:
    // Reduces v against the basis.  Returns the residual and the combination
    // c of inserted vectors with v - residual = sum c_k inserted_k.
    std::pair<SparseVector, SparseVector> reduce(const SparseVector& v) const;
    // Inserts v under the given tag; returns false if v was dependent.
    // On dependence, `relation` (if given) receives a combination of inserted
    // tags that equals v.
    bool insert(const SparseVector& v, int tag, SparseVector* relation = nullptr);
    int rank() const { return static_cast<int>(rows_.size()); }

private:
    struct Row {
        SparseVector vec;
        SparseVector combo;
    };
    std::vector<Row> rows_;
    std::map<int, int> pivots_;
};

// A linear map given by the images of the source basis vectors.
struct LinearMap {
    int sourceDim = 0;
    int targetDim = 0;
    std::vector<SparseVector> columns;

    int rank() const;
    // Basis of {x : A x = 0}.
    std::vector<SparseVector> kernel() const;
    // x with A x = v, if it exists.
    std::optional<SparseVector> solve(const SparseVector& v) const;
    LinearMap transpose() const;
    // Columns of both maps side by side (same target).
    static LinearMap concat(const LinearMap& a, const LinearMap& b);
    // Rows of both maps stacked (same source).
    static LinearMap stack(const LinearMap& a, const LinearMap& b);
    SparseVector apply(const SparseVector& x) const;
};

// Vectors from `candidates` that extend span(base) independently, giving a
// basis of span(base + candidates) / span(base).
std::vector<SparseVector> quotientBasis(const std::vector<SparseVector>& base,
                                        const std::vector<SparseVector>& candidates);

// Positive definiteness of a Hermitian matrix by exact LDL^H.  On failure
// `witness` receives x with x^H A x <= 0.
bool isPositiveDefinite(const ScalarMatrix& a, std::vector<Scalar>* witness = nullptr);

}  // namespace nilkahler
