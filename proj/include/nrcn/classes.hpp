#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nrcn/basep.hpp"

namespace nrcn {

// A natural number or infinity. Class indices live in N+ u {inf}, and the
// top-line function accepts R in N u {inf}.
class ExtendedNatural {
public:
    constexpr ExtendedNatural(Natural value) noexcept : value_(value), infinite_(false) {}

    static constexpr ExtendedNatural infinity() noexcept { return ExtendedNatural(); }

    constexpr bool is_infinite() const noexcept { return infinite_; }

    // Throws DomainError when infinite.
    Natural value() const;

    std::string to_string() const;

    friend constexpr bool operator==(const ExtendedNatural&, const ExtendedNatural&) = default;
    friend constexpr std::strong_ordering operator<=>(const ExtendedNatural& a, const ExtendedNatural& b) noexcept {
        if (a.infinite_ || b.infinite_) {
            return a.infinite_ <=> b.infinite_;
        }
        return a.value_ <=> b.value_;
    }

private:
    constexpr ExtendedNatural() noexcept : value_(0), infinite_(true) {}

    Natural value_;
    bool infinite_;
};

// Class of a vanishing entry (n, j): L is the highest digit position with
// j_L > n_L, and i the first position above L with j_i < n_i.
struct ClassLabel {
    ExtendedNatural i;
    std::size_t L;

    friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

// Positions of the non-zero base-p digits of b = n + 1.
struct ClassProfile {
    Natural n;
    std::uint32_t p;
    Natural b;
    std::size_t M;
    std::size_t J;
    std::vector<std::size_t> nonzero_positions;

    std::size_t d() const noexcept { return nonzero_positions.size(); }
};

inline constexpr Natural kMaxClassEnumeration = 1'000'000;

// nullopt when binom(n, j) is non-zero mod p.
std::optional<ClassLabel> class_of(Natural n, Natural j, std::uint64_t p);

// Number of j in row n that belong to class i (i >= 1).
Natural phi(Natural i, Natural n, std::uint64_t p);

// Brute-force enumeration of the j <= bound with (n, j) in class i, checked
// directly against the digit conditions. bound <= kMaxClassEnumeration.
std::vector<Natural> class_members(ExtendedNatural i, Natural n, std::uint64_t p, Natural bound);

// Emptiness of class i in row n, decided from the digits of b = n + 1 only.
bool is_class_empty(Natural i, Natural n, std::uint64_t p);

// T(R, b) = b - sum_{lambda < R} b_lambda p^lambda; T(inf, b) = 0.
Natural top_line(ExtendedNatural R, Natural b, std::uint64_t p);

// Number of j in row n belonging to classes i, i+1, ... (i >= 1).
Natural sigma(Natural i, Natural n, std::uint64_t p);

std::optional<Natural> max_class_member(Natural i, Natural n, std::uint64_t p);

ClassProfile class_profile(Natural n, std::uint64_t p);

} // namespace nrcn
