#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace nrcn {

using Natural = std::uint64_t;

// Inputs are exact only up to 2^63 - 1; anything larger is rejected.
inline constexpr Natural kMaxNatural = (Natural{1} << 63) - 1;
inline constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 31) - 1;
// Largest row the recurrence oracle will build.
inline constexpr Natural kMaxDirectRow = 10'000'000;

bool is_prime(std::uint64_t p);

// Throws InvalidPrimeError for composite p, RangeError for p > 2^31 - 1.
std::uint32_t require_prime(std::uint64_t p);

// Throws RangeError when n exceeds kMaxNatural.
Natural require_natural(Natural n);

// Little-endian base-p digits of a natural number. Index lambda is the
// coefficient of p^lambda; trailing zeros are stripped so zero is empty.
class Digits {
public:
    Digits(std::uint32_t p, std::vector<std::uint32_t> digits);

    std::uint32_t base() const noexcept { return p_; }
    std::size_t size() const noexcept { return digits_.size(); }
    bool empty() const noexcept { return digits_.empty(); }

    // Digit at position lambda; zero past the most significant digit.
    std::uint32_t operator[](std::size_t lambda) const noexcept {
        return lambda < digits_.size() ? digits_[lambda] : 0;
    }

    std::span<const std::uint32_t> digits() const noexcept { return digits_; }

    // "<1,0,2,0,2,2>" with the most significant digit first, left-padded
    // with zeros to at least `width` digits.
    std::string big_endian(std::size_t width = 0) const;

    friend bool operator==(const Digits&, const Digits&) = default;

private:
    std::uint32_t p_;
    std::vector<std::uint32_t> digits_;
};

Digits to_base_p(Natural n, std::uint64_t p);
Natural from_digits(const Digits& d);

// j_lambda <= n_lambda for every lambda.
bool preceq(Natural j, Natural n, std::uint64_t p);

// binom(n, j) mod p as the product of digit binomials.
std::uint32_t lucas_binom(Natural n, Natural j, std::uint64_t p);

// Rows of Pascal's triangle mod p produced by the additive recurrence,
// optionally truncated to the first `width` columns.
class PascalRowsModP {
public:
    explicit PascalRowsModP(std::uint64_t p, std::size_t width = SIZE_MAX);

    Natural index() const noexcept { return n_; }
    std::span<const std::uint32_t> row() const noexcept { return row_; }
    void advance();

private:
    std::uint32_t p_;
    std::size_t width_;
    Natural n_ = 0;
    std::vector<std::uint32_t> row_;
};

// binom(n, j) mod p by the row recurrence alone. Requires n <= kMaxDirectRow.
std::uint32_t binom_mod_p_direct(Natural n, Natural j, std::uint64_t p);

// Entries of rows 0..rows-1 of Pascal's triangle mod p.
std::vector<std::vector<std::uint32_t>> pascal_triangle_mod_p(std::uint64_t p, std::size_t rows);

} // namespace nrcn
