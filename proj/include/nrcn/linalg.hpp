#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "nrcn/gf.hpp"

namespace nrcn {

// Dense row-major matrix over GF(q).
class Matrix {
public:
    Matrix(Field field, std::size_t rows, std::size_t cols);

    // Entries given as enumeration indices, row-major.
    static Matrix from_indices(Field field, std::size_t rows, std::size_t cols,
                               std::span<const std::uint32_t> indices);
    static Matrix from_indices(Field field, std::size_t rows, std::size_t cols,
                               std::initializer_list<std::uint32_t> indices) {
        return from_indices(std::move(field), rows, cols, std::span<const std::uint32_t>(indices.begin(), indices.size()));
    }
    static Matrix from_rows(Field field, std::size_t cols, const std::vector<std::vector<Element>>& rows);
    static Matrix identity(Field field, std::size_t n);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Element operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, Element value);

    std::span<const Element> row(std::size_t r) const {
        return std::span<const Element>(entries_).subspan(r * cols_, cols_);
    }

    std::vector<std::uint32_t> indices() const;

    Matrix transpose() const;
    Matrix multiply(const Matrix& rhs) const;
    // Rows of *this followed by rows of below.
    Matrix stack(const Matrix& below) const;

    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Element> entries_;
};

struct RrefResult {
    Matrix matrix;
    std::size_t rank;
    std::vector<std::size_t> pivots;
};

// Canonical reduced row echelon form by Gauss-Jordan elimination.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

// Builds the RREF of a row space one row at a time, so that very tall
// coefficient systems never have to be materialised.
class EchelonAccumulator {
public:
    EchelonAccumulator(Field field, std::size_t cols);

    // Returns true when the row enlarged the row space.
    bool add_row(std::span<const Element> row);

    std::size_t rank() const noexcept { return basis_.size(); }
    std::size_t cols() const noexcept { return cols_; }
    // Basis rows in canonical RREF, sorted by pivot column.
    Matrix matrix() const;

private:
    Field field_;
    std::size_t cols_;
    std::vector<std::vector<Element>> basis_;
    std::vector<std::size_t> pivots_;
};

// A linear subspace of GF(q)^ambient (a projective subspace of
// PG(ambient - 1, q)), held as an RREF basis together with its annihilator.
class Subspace {
public:
    // Row space of `generators` (cols == ambient dimension).
    static Subspace span(const Matrix& generators);
    static Subspace empty(Field field, std::size_t ambient_dim);
    static Subspace full(Field field, std::size_t ambient_dim);

    const Field& field() const noexcept { return basis_.field(); }
    std::size_t ambient_dim() const noexcept { return basis_.cols(); }
    const Matrix& basis() const noexcept { return basis_; }
    // Rows spanning the linear forms vanishing on the subspace, in RREF.
    const Matrix& annihilator() const noexcept { return annihilator_; }
    std::size_t rank() const noexcept { return basis_.rows(); }
    std::int64_t projective_dim() const noexcept { return static_cast<std::int64_t>(rank()) - 1; }

    bool contains(std::span<const Element> v) const;
    bool contains(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

private:
    Subspace(Matrix basis, Matrix annihilator)
        : basis_(std::move(basis)), annihilator_(std::move(annihilator)) {}

    Matrix basis_;
    Matrix annihilator_;
};

// Canonical basis (as matrix rows, in RREF) of {x : m x = 0}.
Matrix nullspace_basis(const Matrix& m);
Subspace nullspace(const Matrix& m);
Subspace intersect(const Subspace& a, const Subspace& b);

} // namespace nrcn
