#include "nilkahler/linalg.hpp"

#include <algorithm>

namespace nilkahler {

ScalarMatrix::ScalarMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw Error("negative matrix size");
}

ScalarMatrix ScalarMatrix::identity(int n) {
    ScalarMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
}

ScalarMatrix ScalarMatrix::conj() const {
    ScalarMatrix m = *this;
    for (auto& s : m.data_) s = s.conj();
    return m;
}

ScalarMatrix ScalarMatrix::transpose() const {
    ScalarMatrix m(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
    return m;
}

bool ScalarMatrix::isHermitian() const { return rows_ == cols_ && adjoint() == *this; }

bool ScalarMatrix::isZero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.isZero(); });
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
    if (a.cols_ != b.rows_) throw Error("matrix size mismatch");
    ScalarMatrix m(a.rows_, b.cols_);
    for (int r = 0; r < a.rows_; ++r)
        for (int k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(r, k);
            if (x.isZero()) continue;
            for (int c = 0; c < b.cols_; ++c)
                if (!b(k, c).isZero()) m(r, c) += x * b(k, c);
        }
    return m;
}

ScalarMatrix operator+(const ScalarMatrix& a, const ScalarMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix size mismatch");
    ScalarMatrix m = a;
    for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
    return m;
}

ScalarMatrix operator-(const ScalarMatrix& a, const ScalarMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix size mismatch");
    ScalarMatrix m = a;
    for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
    return m;
}

bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

ScalarMatrix ScalarMatrix::inverse() const {
    if (rows_ != cols_) throw Error("inverse of a non-square matrix");
    int n = rows_;
    ScalarMatrix a = *this;
    ScalarMatrix inv = identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!a(r, col).isZero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw Error("matrix is singular");
        if (pivot != col)
            for (int c = 0; c < n; ++c) {
                std::swap(a(pivot, c), a(col, c));
                std::swap(inv(pivot, c), inv(col, c));
            }
        Scalar scale = a(col, col).inverse();
        for (int c = 0; c < n; ++c) {
            a(col, c) *= scale;
            inv(col, c) *= scale;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a(r, col).isZero()) continue;
            Scalar f = a(r, col);
            for (int c = 0; c < n; ++c) {
                if (!a(col, c).isZero()) a(r, c) -= f * a(col, c);
                if (!inv(col, c).isZero()) inv(r, c) -= f * inv(col, c);
            }
        }
    }
    return inv;
}

Scalar ScalarMatrix::determinant() const {
    if (rows_ != cols_) throw Error("determinant of a non-square matrix");
    int n = rows_;
    ScalarMatrix a = *this;
    Scalar det(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!a(r, col).isZero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return Scalar();
        if (pivot != col) {
            for (int c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
            det = -det;
        }
        det *= a(col, col);
        Scalar inv = a(col, col).inverse();
        for (int r = col + 1; r < n; ++r) {
            if (a(r, col).isZero()) continue;
            Scalar f = a(r, col) * inv;
            for (int c = col; c < n; ++c)
                if (!a(col, c).isZero()) a(r, c) -= f * a(col, c);
        }
    }
    return det;
}

int ScalarMatrix::rank() const {
    LinearMap m;
    m.sourceDim = cols_;
    m.targetDim = rows_;
    for (int c = 0; c < cols_; ++c) {
        SparseVector v;
        for (int r = 0; r < rows_; ++r)
            if (!(*this)(r, c).isZero()) v.emplace_back(r, (*this)(r, c));
        m.columns.push_back(std::move(v));
    }
    return m.rank();
}

void axpy(SparseVector& y, const Scalar& a, const SparseVector& x) {
    if (a.isZero() || x.empty()) return;
    SparseVector out;
    out.reserve(y.size() + x.size());
    auto iy = y.begin();
    auto ix = x.begin();
    while (iy != y.end() || ix != x.end()) {
        if (ix == x.end() || (iy != y.end() && iy->first < ix->first)) {
            out.push_back(std::move(*iy));
            ++iy;
        } else if (iy == y.end() || ix->first < iy->first) {
            out.emplace_back(ix->first, a * ix->second);
            ++ix;
        } else {
            Scalar v = iy->second + a * ix->second;
            if (!v.isZero()) out.emplace_back(iy->first, std::move(v));
            ++iy;
            ++ix;
        }
    }
    y = std::move(out);
}

Scalar dot(const SparseVector& a, const SparseVector& b) {
    Scalar s;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (ia->first < ib->first)
            ++ia;
        else if (ib->first < ia->first)
            ++ib;
        else {
            s += ia->second * ib->second;
            ++ia;
            ++ib;
        }
    }
    return s;
}

std::pair<SparseVector, SparseVector> EchelonBasis::reduce(const SparseVector& v) const {
    SparseVector residual = v;
    SparseVector combo;
    // Eliminate pivot coordinates in increasing order; pivot rows only touch
    // coordinates at or after their pivot, so one forward pass suffices.
    std::size_t pos = 0;
    while (pos < residual.size()) {
        int coord = residual[pos].first;
        auto it = pivots_.find(coord);
        if (it == pivots_.end()) {
            ++pos;
            continue;
        }
        const Row& row = rows_[it->second];
        Scalar f = -residual[pos].second;
        axpy(residual, f, row.vec);
        axpy(combo, -f, row.combo);
        // residual[pos] was cancelled; the entry now at pos has a larger index.
        pos = static_cast<std::size_t>(
            std::lower_bound(residual.begin(), residual.end(), std::make_pair(coord, Scalar()),
                             [](const auto& x, const auto& y) { return x.first < y.first; }) -
            residual.begin());
    }
    return {std::move(residual), std::move(combo)};
}

bool EchelonBasis::insert(const SparseVector& v, int tag, SparseVector* relation) {
    auto [residual, combo] = reduce(v);
    if (residual.empty()) {
        if (relation) *relation = std::move(combo);
        return false;
    }
    // residual = v - combo.inserted;  new row expresses residual via tags.
    SparseVector rowCombo;
    axpy(rowCombo, Scalar(-1), combo);
    axpy(rowCombo, Scalar(1), SparseVector{{tag, Scalar(1)}});
    // Normalize on the first coordinate that is not yet a pivot.
    std::size_t lead = 0;
    while (pivots_.count(residual[lead].first)) ++lead;
    Scalar inv = residual[lead].second.inverse();
    for (auto& [i, s] : residual) s *= inv;
    for (auto& [i, s] : rowCombo) s *= inv;
    pivots_[residual[lead].first] = static_cast<int>(rows_.size());
    rows_.push_back({std::move(residual), std::move(rowCombo)});
    return true;
}

int LinearMap::rank() const {
    EchelonBasis basis;
    for (int j = 0; j < static_cast<int>(columns.size()); ++j) basis.insert(columns[j], j);
    return basis.rank();
}

std::vector<SparseVector> LinearMap::kernel() const {
    EchelonBasis basis;
    std::vector<SparseVector> out;
    for (int j = 0; j < static_cast<int>(columns.size()); ++j) {
        SparseVector relation;
        if (!basis.insert(columns[j], j, &relation)) {
            // column_j = sum relation_k column_k  ->  e_j - relation is in ker
            SparseVector k;
            axpy(k, Scalar(-1), relation);
            axpy(k, Scalar(1), SparseVector{{j, Scalar(1)}});
            out.push_back(std::move(k));
        }
    }
    return out;
}

std::optional<SparseVector> LinearMap::solve(const SparseVector& v) const {
    EchelonBasis basis;
    for (int j = 0; j < static_cast<int>(columns.size()); ++j) basis.insert(columns[j], j);
    auto [residual, combo] = basis.reduce(v);
    if (!residual.empty()) return std::nullopt;
    return combo;
}

LinearMap LinearMap::transpose() const {
    LinearMap t;
    t.sourceDim = targetDim;
    t.targetDim = sourceDim;
    t.columns.assign(targetDim, {});
    for (int j = 0; j < static_cast<int>(columns.size()); ++j)
        for (const auto& [i, s] : columns[j]) t.columns[i].emplace_back(j, s);
    return t;
}

LinearMap LinearMap::concat(const LinearMap& a, const LinearMap& b) {
    if (a.targetDim != b.targetDim) throw Error("concat: target mismatch");
    LinearMap m;
    m.sourceDim = a.sourceDim + b.sourceDim;
    m.targetDim = a.targetDim;
    m.columns = a.columns;
    m.columns.insert(m.columns.end(), b.columns.begin(), b.columns.end());
    return m;
}

LinearMap LinearMap::stack(const LinearMap& a, const LinearMap& b) {
    if (a.sourceDim != b.sourceDim) throw Error("stack: source mismatch");
    LinearMap m;
    m.sourceDim = a.sourceDim;
    m.targetDim = a.targetDim + b.targetDim;
    for (int j = 0; j < a.sourceDim; ++j) {
        SparseVector v = a.columns[j];
        for (const auto& [i, s] : b.columns[j]) v.emplace_back(i + a.targetDim, s);
        m.columns.push_back(std::move(v));
    }
    return m;
}

SparseVector LinearMap::apply(const SparseVector& x) const {
    SparseVector out;
    for (const auto& [j, s] : x) axpy(out, s, columns.at(j));
    return out;
}

std::vector<SparseVector> quotientBasis(const std::vector<SparseVector>& base,
                                        const std::vector<SparseVector>& candidates) {
    EchelonBasis basis;
    int tag = 0;
    for (const auto& v : base) basis.insert(v, tag++);
    std::vector<SparseVector> out;
    for (const auto& v : candidates)
        if (basis.insert(v, tag++)) out.push_back(v);
    return out;
}

bool isPositiveDefinite(const ScalarMatrix& a, std::vector<Scalar>* witness) {
    if (!a.isHermitian()) throw Error("definiteness test needs a Hermitian matrix");
    int n = a.rows();
    // A = L D L^H with unit lower triangular L.
    ScalarMatrix l = ScalarMatrix::identity(n);
    std::vector<Scalar> diag(n);
    for (int j = 0; j < n; ++j) {
        Scalar dj = a(j, j);
        for (int k = 0; k < j; ++k)
            if (!l(j, k).isZero()) dj -= l(j, k) * l(j, k).conj() * diag[k];
        diag[j] = dj;
        if (dj.sign() <= 0) {
            if (witness) {
                // x = L^{-H} e_j gives x^H A x = D_j.
                std::vector<Scalar> x(n);
                x[j] = Scalar(1);
                for (int i = j - 1; i >= 0; --i) {
                    Scalar s;
                    for (int k = i + 1; k <= j; ++k)
                        if (!l(k, i).isZero()) s += l(k, i).conj() * x[k];
                    x[i] = -s;
                }
                *witness = std::move(x);
            }
            return false;
        }
        Scalar inv = dj.inverse();
        for (int i = j + 1; i < n; ++i) {
            Scalar s = a(i, j);
            for (int k = 0; k < j; ++k)
                if (!l(i, k).isZero() && !l(j, k).isZero()) s -= l(i, k) * l(j, k).conj() * diag[k];
            l(i, j) = s * inv;
        }
    }
    return true;
}

}  // namespace nilkahler
