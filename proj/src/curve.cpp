#include "nrcn/curve.hpp"

#include <algorithm>
#include <string>

#include "nrcn/basep.hpp"
#include "nrcn/error.hpp"

namespace nrcn {

namespace {

void require_k(const CurveContext& ctx, std::int64_t k) {
    if (k < -1 || k > static_cast<std::int64_t>(ctx.n()) - 1) {
        throw DomainError("k = " + std::to_string(k) + " outside -1.." + std::to_string(ctx.n() - 1));
    }
}

// 1, t, t^2, ..., t^n by repeated multiplication.
std::vector<Element> powers(const Field& f, Element t, std::size_t n) {
    std::vector<Element> out(n + 1, f.one());
    for (std::size_t k = 1; k <= n; ++k) {
        out[k] = f.mul(out[k - 1], t);
    }
    return out;
}

// Appends the osculating system rows at t to `sink`.
template <typename Sink>
void emit_system_rows(const CurveContext& ctx, std::int64_t k, const CurveParameter& t, Sink&& sink) {
    const Field& f = ctx.field();
    const std::size_t n = ctx.n();
    std::vector<Element> row(n + 1, f.zero());
    if (std::holds_alternative<AtInfinity>(t)) {
        const auto zero_count = static_cast<std::size_t>(static_cast<std::int64_t>(n) - k);
        for (std::size_t i = 0; i < zero_count; ++i) {
            std::fill(row.begin(), row.end(), f.zero());
            row[i] = f.one();
            sink(row);
        }
        return;
    }
    const auto pw = powers(f, f.neg(std::get<Element>(t)), n);
    for (auto m = static_cast<std::size_t>(k + 1); m <= n; ++m) {
        for (std::size_t j = 0; j <= n; ++j) {
            row[j] = j <= m ? f.mul(ctx.binom(m, j), pw[m - j]) : f.zero();
        }
        sink(row);
    }
}

} // namespace

CurveContext::CurveContext(Field field, std::size_t n) : field_(std::move(field)), n_(n) {
    if (n < 2) {
        throw DomainError("the curve needs n >= 2");
    }
    binom_.resize(n + 1);
    for (std::size_t m = 0; m <= n; ++m) {
        binom_[m].reserve(m + 1);
        for (std::size_t j = 0; j <= m; ++j) {
            binom_[m].push_back(field_.from_integer(lucas_binom(m, j, p())));
        }
    }
}

Element CurveContext::binom(std::size_t m, std::size_t j) const {
    if (m > n_) {
        throw DomainError("binomial row " + std::to_string(m) + " beyond n");
    }
    return j <= m ? binom_[m][j] : field_.zero();
}

std::vector<CurveParameter> CurveContext::parameters() const {
    std::vector<CurveParameter> out;
    out.reserve(field_.order() + 1);
    for (auto t : field_.enumerate()) {
        out.emplace_back(t);
    }
    out.emplace_back(kInfinity);
    return out;
}

std::vector<Element> curve_point(const CurveContext& ctx, const CurveParameter& t) {
    if (std::holds_alternative<AtInfinity>(t)) {
        return derivative_point_at_infinity(ctx, 0);
    }
    return powers(ctx.field(), std::get<Element>(t), ctx.n());
}

Matrix derivative_matrix(const CurveContext& ctx, Element t) {
    const Field& f = ctx.field();
    const std::size_t n = ctx.n();
    const auto pw = powers(f, t, n);
    Matrix c(f, n + 1, n + 1);
    for (std::size_t r = 0; r <= n; ++r) {
        for (std::size_t col = 0; col <= r; ++col) {
            c.set(r, col, f.mul(ctx.binom(r, col), pw[r - col]));
        }
    }
    return c;
}

std::vector<Element> derivative_point_at_infinity(const CurveContext& ctx, std::size_t k) {
    if (k > ctx.n()) {
        throw DomainError("derivative order " + std::to_string(k) + " exceeds n");
    }
    std::vector<Element> v(ctx.n() + 1, ctx.field().zero());
    v[ctx.n() - k] = ctx.field().one();
    return v;
}

Subspace osculating_subspace(const CurveContext& ctx, std::int64_t k, const CurveParameter& t) {
    require_k(ctx, k);
    const Field& f = ctx.field();
    const std::size_t n = ctx.n();
    const auto count = static_cast<std::size_t>(k + 1);
    Matrix gens(f, count, n + 1);
    if (std::holds_alternative<AtInfinity>(t)) {
        for (std::size_t i = 0; i < count; ++i) {
            const auto v = derivative_point_at_infinity(ctx, i);
            for (std::size_t c = 0; c <= n; ++c) {
                gens.set(i, c, v[c]);
            }
        }
    } else {
        // Columns of C_t become generator rows.
        const Matrix ct = derivative_matrix(ctx, std::get<Element>(t));
        for (std::size_t i = 0; i < count; ++i) {
            for (std::size_t c = 0; c <= n; ++c) {
                gens.set(i, c, ct(c, i));
            }
        }
    }
    return Subspace::span(gens);
}

Matrix osculating_system(const CurveContext& ctx, std::int64_t k, const CurveParameter& t) {
    require_k(ctx, k);
    std::vector<std::vector<Element>> rows;
    emit_system_rows(ctx, k, t, [&](const std::vector<Element>& row) { rows.push_back(row); });
    return Matrix::from_rows(ctx.field(), ctx.n() + 1, rows);
}

Subspace geometric_nucleus(const CurveContext& ctx, std::int64_t k) {
    require_k(ctx, k);
    const std::size_t width = ctx.n() + 1;
    EchelonAccumulator acc(ctx.field(), width);
    auto add = [&](const std::vector<Element>& row) { acc.add_row(row); };
    emit_system_rows(ctx, k, kInfinity, add);
    for (auto t : ctx.field().enumerate()) {
        if (acc.rank() == width) {
            break;
        }
        emit_system_rows(ctx, k, t, add);
    }
    return nullspace(acc.matrix());
}

} // namespace nrcn
