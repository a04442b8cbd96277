#include "nrcn/linalg.hpp"

#include <algorithm>
#include <string>

#include "nrcn/error.hpp"

namespace nrcn {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, field_.zero()) {}

Matrix Matrix::from_indices(Field field, std::size_t rows, std::size_t cols, std::span<const std::uint32_t> indices) {
    if (indices.size() != rows * cols) {
        throw DomainError("expected " + std::to_string(rows * cols) + " entries, got " +
                          std::to_string(indices.size()));
    }
    Matrix m(std::move(field), rows, cols);
    for (std::size_t k = 0; k < indices.size(); ++k) {
        m.entries_[k] = m.field_.element(indices[k]);
    }
    return m;
}

Matrix Matrix::from_rows(Field field, std::size_t cols, const std::vector<std::vector<Element>>& rows) {
    Matrix m(std::move(field), rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) {
            throw DomainError("row " + std::to_string(r) + " has the wrong length");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            m.set(r, c, rows[r][c]);
        }
    }
    return m;
}

Matrix Matrix::identity(Field field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t k = 0; k < n; ++k) {
        m.entries_[k * n + k] = m.field_.one();
    }
    return m;
}

void Matrix::set(std::size_t r, std::size_t c, Element value) {
    if (!field_.contains(value)) {
        throw FieldMismatchError("matrix entry from a different field");
    }
    entries_[r * cols_ + c] = value;
}

std::vector<std::uint32_t> Matrix::indices() const {
    std::vector<std::uint32_t> out;
    out.reserve(entries_.size());
    for (auto e : entries_) {
        out.push_back(e.index());
    }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            t.entries_[c * rows_ + r] = entries_[r * cols_ + c];
        }
    }
    return t;
}

Matrix Matrix::multiply(const Matrix& rhs) const {
    if (!(field_ == rhs.field_)) {
        throw FieldMismatchError("matrix product over different fields");
    }
    if (cols_ != rhs.rows_) {
        throw DomainError("matrix product shape mismatch");
    }
    Matrix out(field_, rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < rhs.cols_; ++c) {
            Element acc = field_.zero();
            for (std::size_t k = 0; k < cols_; ++k) {
                acc = field_.add(acc, field_.mul((*this)(r, k), rhs(k, c)));
            }
            out.entries_[r * rhs.cols_ + c] = acc;
        }
    }
    return out;
}

Matrix Matrix::stack(const Matrix& below) const {
    if (!(field_ == below.field_)) {
        throw FieldMismatchError("stacking matrices over different fields");
    }
    if (cols_ != below.cols_) {
        throw DomainError("stacking matrices with different column counts");
    }
    Matrix out(field_, rows_ + below.rows_, cols_);
    std::copy(entries_.begin(), entries_.end(), out.entries_.begin());
    std::copy(below.entries_.begin(), below.entries_.end(),
              out.entries_.begin() + static_cast<std::ptrdiff_t>(entries_.size()));
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

RrefResult rref(const Matrix& m) {
    const Field& f = m.field();
    std::vector<std::vector<Element>> a(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        a[r].assign(m.row(r).begin(), m.row(r).end());
    }
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
        std::size_t sel = lead;
        while (sel < m.rows() && a[sel][c] == f.zero()) {
            ++sel;
        }
        if (sel == m.rows()) {
            continue;
        }
        std::swap(a[sel], a[lead]);
        const Element scale = f.inv(a[lead][c]);
        for (auto& x : a[lead]) {
            x = f.mul(x, scale);
        }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead || a[r][c] == f.zero()) {
                continue;
            }
            const Element factor = a[r][c];
            for (std::size_t k = c; k < m.cols(); ++k) {
                a[r][k] = f.sub(a[r][k], f.mul(factor, a[lead][k]));
            }
        }
        pivots.push_back(c);
        ++lead;
    }
    Matrix out(f, m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out.set(r, c, a[r][c]);
        }
    }
    const std::size_t rank = pivots.size();
    return RrefResult{std::move(out), rank, std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

EchelonAccumulator::EchelonAccumulator(Field field, std::size_t cols) : field_(std::move(field)), cols_(cols) {}

bool EchelonAccumulator::add_row(std::span<const Element> row) {
    if (row.size() != cols_) {
        throw DomainError("row length does not match the accumulator width");
    }
    const Field& f = field_;
    std::vector<Element> v(row.begin(), row.end());
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const Element factor = v[pivots_[i]];
        if (factor == f.zero()) {
            continue;
        }
        for (std::size_t k = pivots_[i]; k < cols_; ++k) {
            v[k] = f.sub(v[k], f.mul(factor, basis_[i][k]));
        }
    }
    std::size_t pc = 0;
    while (pc < cols_ && v[pc] == f.zero()) {
        ++pc;
    }
    if (pc == cols_) {
        return false;
    }
    const Element scale = f.inv(v[pc]);
    for (std::size_t k = pc; k < cols_; ++k) {
        v[k] = f.mul(v[k], scale);
    }
    for (auto& b : basis_) {
        const Element factor = b[pc];
        if (factor == f.zero()) {
            continue;
        }
        for (std::size_t k = pc; k < cols_; ++k) {
            b[k] = f.sub(b[k], f.mul(factor, v[k]));
        }
    }
    const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pc) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, pc);
    basis_.insert(basis_.begin() + pos, std::move(v));
    return true;
}

Matrix EchelonAccumulator::matrix() const { return Matrix::from_rows(field_, cols_, basis_); }

namespace {

Matrix nonzero_rows(const RrefResult& r) {
    const Matrix& m = r.matrix;
    Matrix out(m.field(), r.rank, m.cols());
    for (std::size_t i = 0; i < r.rank; ++i) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out.set(i, c, m(i, c));
        }
    }
    return out;
}

} // namespace

Matrix nullspace_basis(const Matrix& m) {
    const Field& f = m.field();
    const RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : r.pivots) {
        is_pivot[c] = true;
    }
    std::vector<std::vector<Element>> vectors;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) {
            continue;
        }
        std::vector<Element> v(m.cols(), f.zero());
        v[free] = f.one();
        for (std::size_t i = 0; i < r.rank; ++i) {
            v[r.pivots[i]] = f.neg(r.matrix(i, free));
        }
        vectors.push_back(std::move(v));
    }
    return nonzero_rows(rref(Matrix::from_rows(f, m.cols(), vectors)));
}

Subspace Subspace::span(const Matrix& generators) {
    Matrix basis = nonzero_rows(rref(generators));
    Matrix annihilator = nullspace_basis(basis);
    return Subspace(std::move(basis), std::move(annihilator));
}

Subspace Subspace::empty(Field field, std::size_t ambient_dim) {
    return Subspace(Matrix(field, 0, ambient_dim), Matrix::identity(field, ambient_dim));
}

Subspace Subspace::full(Field field, std::size_t ambient_dim) {
    return Subspace(Matrix::identity(field, ambient_dim), Matrix(field, 0, ambient_dim));
}

bool Subspace::contains(std::span<const Element> v) const {
    if (v.size() != ambient_dim()) {
        throw DomainError("vector length does not match the ambient dimension");
    }
    const Field& f = field();
    for (std::size_t r = 0; r < annihilator_.rows(); ++r) {
        Element acc = f.zero();
        for (std::size_t c = 0; c < v.size(); ++c) {
            acc = f.add(acc, f.mul(annihilator_(r, c), v[c]));
        }
        if (!(acc == f.zero())) {
            return false;
        }
    }
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    for (std::size_t r = 0; r < other.rank(); ++r) {
        if (!contains(other.basis().row(r))) {
            return false;
        }
    }
    return true;
}

Subspace nullspace(const Matrix& m) { return Subspace::span(nullspace_basis(m)); }

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (!(a.field() == b.field())) {
        throw FieldMismatchError("intersecting subspaces over different fields");
    }
    if (a.ambient_dim() != b.ambient_dim()) {
        throw DomainError("intersecting subspaces of different ambient dimension");
    }
    return nullspace(a.annihilator().stack(b.annihilator()));
}

} // namespace nrcn
