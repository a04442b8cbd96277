#include "nrcn/basep.hpp"

#include <algorithm>

#include "nrcn/error.hpp"

namespace nrcn {

bool is_prime(std::uint64_t p) {
    if (p < 2) {
        return false;
    }
    if (p < 4) {
        return true;
    }
    if (p % 2 == 0) {
        return false;
    }
    for (std::uint64_t d = 3; d <= p / d; d += 2) {
        if (p % d == 0) {
            return false;
        }
    }
    return true;
}

std::uint32_t require_prime(std::uint64_t p) {
    if (p > kMaxPrime) {
        throw RangeError("prime " + std::to_string(p) + " exceeds 2^31-1");
    }
    if (!is_prime(p)) {
        throw InvalidPrimeError(std::to_string(p) + " is not prime");
    }
    return static_cast<std::uint32_t>(p);
}

Natural require_natural(Natural n) {
    if (n > kMaxNatural) {
        throw RangeError(std::to_string(n) + " exceeds 2^63-1");
    }
    return n;
}

Digits::Digits(std::uint32_t p, std::vector<std::uint32_t> digits)
    : p_(require_prime(p)), digits_(std::move(digits)) {
    for (auto d : digits_) {
        if (d >= p_) {
            throw DomainError("digit " + std::to_string(d) + " out of range for base " + std::to_string(p_));
        }
    }
    while (!digits_.empty() && digits_.back() == 0) {
        digits_.pop_back();
    }
}

std::string Digits::big_endian(std::size_t width) const {
    std::string out = "<";
    const std::size_t len = std::max(width, std::max<std::size_t>(digits_.size(), 1));
    for (std::size_t k = len; k-- > 0;) {
        out += std::to_string((*this)[k]);
        if (k != 0) {
            out += ',';
        }
    }
    out += '>';
    return out;
}

Digits to_base_p(Natural n, std::uint64_t p) {
    const auto base = require_prime(p);
    require_natural(n);
    std::vector<std::uint32_t> digits;
    while (n != 0) {
        digits.push_back(static_cast<std::uint32_t>(n % base));
        n /= base;
    }
    return Digits(base, std::move(digits));
}

Natural from_digits(const Digits& d) {
    Natural value = 0;
    for (std::size_t k = d.size(); k-- > 0;) {
        value = value * d.base() + d[k];
    }
    return value;
}

bool preceq(Natural j, Natural n, std::uint64_t p) {
    const auto base = require_prime(p);
    require_natural(j);
    require_natural(n);
    while (j != 0) {
        if (j % base > n % base) {
            return false;
        }
        j /= base;
        n /= base;
    }
    return true;
}

namespace {

// binom(a, b) mod p for single digits a, b < p.
std::uint32_t small_binom(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    if (b > a) {
        return 0;
    }
    b = std::min(b, a - b);
    // numerator / denominator accumulated mod p; both are units since a < p.
    std::uint64_t num = 1;
    std::uint64_t den = 1;
    for (std::uint32_t k = 0; k < b; ++k) {
        num = num * (a - k) % p;
        den = den * (k + 1) % p;
    }
    std::uint64_t inv = 1;
    std::uint64_t base = den;
    for (std::uint64_t e = p - 2; e != 0; e >>= 1) {
        if (e & 1) {
            inv = inv * base % p;
        }
        base = base * base % p;
    }
    return static_cast<std::uint32_t>(num * inv % p);
}

} // namespace

std::uint32_t lucas_binom(Natural n, Natural j, std::uint64_t p) {
    const auto base = require_prime(p);
    require_natural(n);
    require_natural(j);
    if (j > n) {
        return 0;
    }
    std::uint64_t result = 1 % base;
    while (j != 0 || n != 0) {
        const auto nd = static_cast<std::uint32_t>(n % base);
        const auto jd = static_cast<std::uint32_t>(j % base);
        if (jd > nd) {
            return 0;
        }
        result = result * small_binom(nd, jd, base) % base;
        n /= base;
        j /= base;
    }
    return static_cast<std::uint32_t>(result);
}

PascalRowsModP::PascalRowsModP(std::uint64_t p, std::size_t width)
    : p_(require_prime(p)), width_(width) {
    if (width_ == 0) {
        throw DomainError("row width must be positive");
    }
    row_.push_back(1 % p_);
}

void PascalRowsModP::advance() {
    if (row_.size() < width_) {
        row_.push_back(0);
    }
    for (std::size_t k = row_.size() - 1; k > 0; --k) {
        const std::uint32_t s = row_[k] + row_[k - 1];
        row_[k] = s >= p_ ? s - p_ : s;
    }
    ++n_;
}

namespace {
constexpr Natural kDirectCacheRows = 2048;
}

std::uint32_t binom_mod_p_direct(Natural n, Natural j, std::uint64_t p) {
    require_prime(p);
    if (n > kMaxDirectRow) {
        throw ResourceLimitError("row " + std::to_string(n) + " exceeds the recurrence bound " +
                                 std::to_string(kMaxDirectRow));
    }
    if (j > n) {
        return 0;
    }
    if (n < kDirectCacheRows) {
        // Rows below the cache bound are kept per thread, one prime at a time.
        thread_local std::uint64_t cached_p = 0;
        thread_local std::vector<std::vector<std::uint32_t>> cached;
        if (cached_p != p) {
            cached.clear();
            cached_p = p;
        }
        if (cached.size() <= n) {
            PascalRowsModP gen(p);
            cached.clear();
            const Natural target = std::max<Natural>({n + 1, 2 * cached.size(), 256});
            for (Natural r = 0; r < std::min<Natural>(target, kDirectCacheRows); ++r) {
                if (r != 0) {
                    gen.advance();
                }
                cached.emplace_back(gen.row().begin(), gen.row().end());
            }
        }
        return cached[n][j];
    }
    const Natural col = std::min(j, n - j);
    PascalRowsModP rows(p, static_cast<std::size_t>(col) + 1);
    while (rows.index() < n) {
        rows.advance();
    }
    return rows.row()[col];
}

std::vector<std::vector<std::uint32_t>> pascal_triangle_mod_p(std::uint64_t p, std::size_t rows) {
    std::vector<std::vector<std::uint32_t>> out;
    if (rows == 0) {
        require_prime(p);
        return out;
    }
    out.reserve(rows);
    PascalRowsModP gen(p);
    for (std::size_t r = 0; r < rows; ++r) {
        if (r != 0) {
            gen.advance();
        }
        out.emplace_back(gen.row().begin(), gen.row().end());
    }
    return out;
}

} // namespace nrcn
