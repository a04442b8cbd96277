#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "nrcn/gf.hpp"
#include "nrcn/linalg.hpp"

namespace nrcn {

// The parameter value t = infinity of the curve (1, t, ..., t^n).
struct AtInfinity {
    friend bool operator==(AtInfinity, AtInfinity) = default;
};
inline constexpr AtInfinity kInfinity{};

using CurveParameter = std::variant<Element, AtInfinity>;

// The normal rational curve {(1, t, ..., t^n) : t in GF(q) u {inf}} in
// PG(n, q), with binomial coefficients mod p tabulated up to row n.
class CurveContext {
public:
    CurveContext(Field field, std::size_t n);

    const Field& field() const noexcept { return field_; }
    std::size_t n() const noexcept { return n_; }
    std::uint32_t p() const noexcept { return field_.characteristic(); }

    // binom(m, j) as an element of the prime subfield; zero for j > m.
    Element binom(std::size_t m, std::size_t j) const;

    // All osculating parameters t in GF(q) followed by infinity.
    std::vector<CurveParameter> parameters() const;

private:
    Field field_;
    std::size_t n_;
    std::vector<std::vector<Element>> binom_;
};

std::vector<Element> curve_point(const CurveContext& ctx, const CurveParameter& t);

// (n+1) x (n+1) matrix with entry (r, c) = binom(r, c) t^(r-c) for c <= r;
// its columns are the Hasse derivative points at t.
Matrix derivative_matrix(const CurveContext& ctx, Element t);

// Unit vector with a one in position n - k, 0 <= k <= n.
std::vector<Element> derivative_point_at_infinity(const CurveContext& ctx, std::size_t k);

// Span of the first k+1 derivative points at t, -1 <= k <= n-1.
Subspace osculating_subspace(const CurveContext& ctx, std::int64_t k, const CurveParameter& t);

// The linear system cutting out the osculating k-subspace at t: rows
// m = k+1..n with coefficients binom(m, j) (-t)^(m-j) for finite t, and
// x_0 = ... = x_{n-k-1} = 0 at infinity.
Matrix osculating_system(const CurveContext& ctx, std::int64_t k, const CurveParameter& t);

// Intersection of all osculating k-subspaces, as the null space of every
// osculating system stacked together.
Subspace geometric_nucleus(const CurveContext& ctx, std::int64_t k);

} // namespace nrcn
