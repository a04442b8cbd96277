#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "nrcn/basep.hpp"

namespace nrcn {

// One block of the nucleus chain: dim N^k = dim for k_low <= k <= k_high,
// i.e. lower <= k+1 < upper with lower = T(N+1, b), upper = T(N, b) for a
// non-zero digit position N of b = n + 1, and R = N + 1.
struct NucleusInterval {
    std::int64_t k_low;
    std::int64_t k_high;
    Natural lower;
    Natural upper;
    std::size_t R;
    std::int64_t dim;

    friend bool operator==(const NucleusInterval&, const NucleusInterval&) = default;
};

struct NucleusReport {
    std::uint32_t p;
    Natural n;
    Natural b;
    // Increasing in k; covers -1..n-1 exactly once.
    std::vector<NucleusInterval> rows;

    std::size_t d() const noexcept { return rows.size(); }
};

struct PointNucleus {
    Natural i;
    Natural point_index;

    friend bool operator==(const PointNucleus&, const PointNucleus&) = default;
};

// Largest n accepted by nucleus_basis_indices, which scans all j <= n.
inline constexpr Natural kMaxBasisScan = 1'000'000;

// Dimension of the k-nucleus (-1 = empty) from the digits of n + 1.
std::int64_t nucleus_dim(std::int64_t k, Natural n, std::uint64_t p);

// All j in 0..n with binom(m, j) = 0 mod p for every m in k+1..n.
std::vector<Natural> nucleus_basis_indices(std::int64_t k, Natural n, std::uint64_t p);

NucleusReport nuclei_table(Natural n, std::uint64_t p);

// Number of non-zero base-p digits of n + 1.
std::size_t distinct_nuclei_count(Natural n, std::uint64_t p);

// b_J p^J - 2 for the leading digit b_J of b = n + 1; every k-nucleus with
// k at most this value is empty.
std::int64_t empty_threshold(Natural n, std::uint64_t p);

// n - prod (n_lambda + 1), the dimension of the (n-1)-nucleus.
std::int64_t timmermann_dim(Natural n, std::uint64_t p);

// (i, p^i - 1) when n = 2 p^i - 2 for some i >= 1.
std::optional<PointNucleus> point_nucleus(Natural n, std::uint64_t p);

} // namespace nrcn
