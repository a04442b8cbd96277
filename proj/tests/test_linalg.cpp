#include "nrcn/linalg.hpp"

#include <random>

#include <gtest/gtest.h>

#include "nrcn/error.hpp"

using namespace nrcn;

namespace {

Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> pick(0, f.order() - 1);
    std::vector<std::uint32_t> idx(rows * cols);
    for (auto& v : idx) {
        v = pick(rng);
    }
    return Matrix::from_indices(f, rows, cols, idx);
}

// Low-rank matrices make the canonicity checks meaningful.
Matrix random_low_rank(const Field& f, std::size_t rows, std::size_t cols, std::size_t r, std::mt19937_64& rng) {
    return random_matrix(f, rows, r, rng).multiply(random_matrix(f, r, cols, rng));
}

} // namespace

TEST(Linalg, RrefExamples) {
    const Field f2 = make_field(2, 1);
    const auto id = Matrix::identity(f2, 3);
    const auto r = rref(id);
    EXPECT_EQ(r.matrix, id);
    EXPECT_EQ(r.rank, 3u);

    const Matrix zero(f2, 3, 4);
    EXPECT_EQ(rref(zero).matrix, zero);
    EXPECT_EQ(rref(zero).rank, 0u);

    const auto ones = Matrix::from_indices(f2, 2, 2, {1, 1, 1, 1});
    const auto r2 = rref(ones);
    EXPECT_EQ(r2.matrix, Matrix::from_indices(f2, 2, 2, {1, 1, 0, 0}));
    EXPECT_EQ(r2.rank, 1u);
}

TEST(Linalg, NullspaceExamples) {
    const Field f3 = make_field(3, 1);
    EXPECT_EQ(nullspace(Matrix::identity(f3, 4)).projective_dim(), -1);
    EXPECT_EQ(nullspace(Matrix(f3, 1, 4)).projective_dim(), 3);
    const auto line = nullspace(Matrix::from_indices(f3, 1, 2, {1, 1}));
    EXPECT_EQ(line.basis(), Matrix::from_indices(f3, 1, 2, {1, 2}));
}

TEST(Linalg, IntersectExamples) {
    const Field f3 = make_field(3, 1);
    // Planes x0 = 0 and x1 = 0 in GF(3)^3 meet in the line spanned by e2.
    const auto a = Subspace::span(Matrix::from_indices(f3, 2, 3, {0, 1, 0, 0, 0, 1}));
    const auto b = Subspace::span(Matrix::from_indices(f3, 2, 3, {1, 0, 0, 0, 0, 1}));
    const auto ab = intersect(a, b);
    EXPECT_EQ(ab.basis(), Matrix::from_indices(f3, 1, 3, {0, 0, 1}));
    // Two distinct lines through the origin meet only in the zero vector.
    const auto l1 = Subspace::span(Matrix::from_indices(f3, 1, 3, {1, 2, 0}));
    const auto l2 = Subspace::span(Matrix::from_indices(f3, 1, 3, {1, 1, 1}));
    EXPECT_EQ(intersect(l1, l2).projective_dim(), -1);
    EXPECT_EQ(intersect(a, a), a);
    EXPECT_EQ(intersect(a, Subspace::full(f3, 3)), a);
    EXPECT_THROW(intersect(a, Subspace::full(f3, 4)), DomainError);
    EXPECT_THROW(intersect(a, Subspace::full(make_field(5, 1), 3)), FieldMismatchError);
}

TEST(Linalg, SubspaceContainment) {
    const Field f4 = make_field(2, 2);
    const auto s = Subspace::span(Matrix::from_indices(f4, 2, 4, {1, 2, 0, 3, 0, 1, 1, 1}));
    EXPECT_EQ(s.rank(), 2u);
    for (std::size_t r = 0; r < s.rank(); ++r) {
        EXPECT_TRUE(s.contains(s.basis().row(r)));
    }
    EXPECT_TRUE(Subspace::full(f4, 4).contains(s));
    EXPECT_TRUE(s.contains(Subspace::empty(f4, 4)));
    EXPECT_FALSE(Subspace::empty(f4, 4).contains(s));
}

TEST(Linalg, AccumulatorMatchesStackedRref) {
    std::mt19937_64 rng(7);
    for (std::uint64_t e : {1, 2, 3}) {
        const Field f = make_field(2, e);
        for (int t = 0; t < 50; ++t) {
            const Matrix m = random_low_rank(f, 9, 6, 1 + t % 5, rng);
            EchelonAccumulator acc(f, 6);
            for (std::size_t r = 0; r < m.rows(); ++r) {
                acc.add_row(m.row(r));
            }
            EXPECT_EQ(acc.matrix(), Subspace::span(m).basis());
            EXPECT_EQ(acc.rank(), rank(m));
        }
    }
}

TEST(LinalgProperty, RankOfTransposeAndRankNullity) {
    std::mt19937_64 rng(42);
    for (const auto& f : {make_field(2, 1), make_field(3, 1), make_field(2, 2)}) {
        for (int t = 0; t < 100; ++t) {
            const Matrix m = t % 3 == 0 ? random_low_rank(f, 6, 8, 1 + t % 6, rng) : random_matrix(f, 6, 8, rng);
            const std::size_t r = rank(m);
            EXPECT_EQ(r, rank(m.transpose()));
            const Subspace kernel = nullspace(m);
            EXPECT_EQ(r + kernel.rank(), m.cols());
            EXPECT_EQ(m.multiply(kernel.basis().transpose()), Matrix(f, 6, kernel.rank()));
            const auto once = rref(m).matrix;
            EXPECT_EQ(rref(once).matrix, once);
        }
    }
}

TEST(LinalgProperty, EqualRowSpacesGiveIdenticalRref) {
    std::mt19937_64 rng(99);
    const Field f = make_field(3, 2);
    for (int t = 0; t < 100; ++t) {
        const Matrix m = random_low_rank(f, 5, 7, 1 + t % 4, rng);
        // Left-multiplying by an invertible matrix keeps the row space.
        Matrix g = random_matrix(f, 5, 5, rng);
        while (rank(g) != 5) {
            g = random_matrix(f, 5, 5, rng);
        }
        EXPECT_EQ(rref(g.multiply(m)).matrix, rref(m).matrix);
        EXPECT_EQ(Subspace::span(g.multiply(m)), Subspace::span(m));
    }
}

TEST(LinalgProperty, IntersectionDimensionBound) {
    std::mt19937_64 rng(5);
    const Field f = make_field(2, 2);
    for (int t = 0; t < 100; ++t) {
        const auto a = Subspace::span(random_matrix(f, 1 + t % 5, 6, rng));
        const auto b = Subspace::span(random_matrix(f, 1 + (t / 5) % 5, 6, rng));
        const auto ab = intersect(a, b);
        EXPECT_GE(static_cast<std::int64_t>(ab.rank()),
                  static_cast<std::int64_t>(a.rank() + b.rank()) - 6);
        EXPECT_TRUE(a.contains(ab));
        EXPECT_TRUE(b.contains(ab));
    }
}
