#include "nrcn/classes.hpp"

#include "nrcn/error.hpp"

namespace nrcn {

namespace {

using u128 = unsigned __int128;

// Unchecked little-endian digits; b = n + 1 may equal 2^63.
std::vector<std::uint32_t> raw_digits(Natural x, std::uint32_t p) {
    std::vector<std::uint32_t> out;
    while (x != 0) {
        out.push_back(static_cast<std::uint32_t>(x % p));
        x /= p;
    }
    return out;
}

std::uint32_t digit(const std::vector<std::uint32_t>& d, std::size_t k) {
    return k < d.size() ? d[k] : 0;
}

// sum_{mu < i} d_mu p^mu, for i <= d.size().
Natural low_part(const std::vector<std::uint32_t>& d, std::size_t i, std::uint32_t p) {
    Natural v = 0;
    for (std::size_t k = i; k-- > 0;) {
        v = v * p + d[k];
    }
    return v;
}

void require_class_index(Natural i) {
    if (i == 0) {
        throw DomainError("class index must be at least 1");
    }
}

// The digit conditions characterising j in class i of row n, i finite.
bool in_finite_class(const std::vector<std::uint32_t>& nd, const std::vector<std::uint32_t>& jd, std::size_t i) {
    if (!(digit(jd, i) < digit(nd, i))) {
        return false;
    }
    const std::size_t len = std::max(nd.size(), jd.size());
    for (std::size_t k = i + 1; k < len; ++k) {
        if (digit(jd, k) > digit(nd, k)) {
            return false;
        }
    }
    // Some L < i with j_L > n_L and equality strictly between L and i.
    for (std::size_t k = i; k-- > 0;) {
        if (digit(jd, k) > digit(nd, k)) {
            return true;
        }
        if (digit(jd, k) != digit(nd, k)) {
            return false;
        }
    }
    return false;
}

} // namespace

Natural ExtendedNatural::value() const {
    if (infinite_) {
        throw DomainError("value of infinity requested");
    }
    return value_;
}

std::string ExtendedNatural::to_string() const {
    return infinite_ ? std::string("inf") : std::to_string(value_);
}

std::optional<ClassLabel> class_of(Natural n, Natural j, std::uint64_t p) {
    const auto base = require_prime(p);
    require_natural(n);
    require_natural(j);
    const auto nd = raw_digits(n, base);
    const auto jd = raw_digits(j, base);
    const std::size_t len = std::max(nd.size(), jd.size());

    std::optional<std::size_t> L;
    for (std::size_t k = len; k-- > 0;) {
        if (digit(jd, k) > digit(nd, k)) {
            L = k;
            break;
        }
    }
    if (!L) {
        return std::nullopt;
    }
    for (std::size_t k = *L + 1; k < nd.size(); ++k) {
        if (digit(jd, k) < nd[k]) {
            return ClassLabel{ExtendedNatural(k), *L};
        }
    }
    return ClassLabel{ExtendedNatural::infinity(), *L};
}

Natural phi(Natural i, Natural n, std::uint64_t p) {
    const auto base = require_prime(p);
    require_class_index(i);
    require_natural(n);
    const auto nd = raw_digits(n, base);
    if (i >= nd.size() || nd[i] == 0) {
        return 0;
    }
    // p^i <= n here, so every factor below stays within 64 bits.
    Natural pow = 1;
    for (Natural k = 0; k < i; ++k) {
        pow *= base;
    }
    u128 count = pow - 1 - low_part(nd, i, base);
    count *= nd[i];
    for (std::size_t k = i + 1; k < nd.size(); ++k) {
        count *= nd[k] + 1;
    }
    return static_cast<Natural>(count);
}

std::vector<Natural> class_members(ExtendedNatural i, Natural n, std::uint64_t p, Natural bound) {
    const auto base = require_prime(p);
    require_natural(n);
    if (!i.is_infinite()) {
        require_class_index(i.value());
    }
    if (bound > kMaxClassEnumeration) {
        throw ResourceLimitError("enumeration bound " + std::to_string(bound) + " exceeds " +
                                 std::to_string(kMaxClassEnumeration));
    }
    std::vector<Natural> out;
    const auto nd = raw_digits(n, base);
    for (Natural j = 0; j <= bound; ++j) {
        const bool member = i.is_infinite() ? j > n : in_finite_class(nd, raw_digits(j, base), i.value());
        if (member) {
            out.push_back(j);
        }
    }
    return out;
}

bool is_class_empty(Natural i, Natural n, std::uint64_t p) {
    const auto base = require_prime(p);
    require_class_index(i);
    require_natural(n);
    const auto bd = raw_digits(n + 1, base);
    std::size_t M = 0;
    while (bd[M] == 0) {
        ++M;
    }
    return i <= M ? digit(bd, i - 1) == 0 : digit(bd, i) == 0;
}

Natural top_line(ExtendedNatural R, Natural b, std::uint64_t p) {
    const auto base = require_prime(p);
    if (b == 0) {
        throw DomainError("top line needs b >= 1");
    }
    if (b > kMaxNatural + 1) {
        throw RangeError("b exceeds 2^63");
    }
    if (R.is_infinite()) {
        return 0;
    }
    const auto bd = raw_digits(b, base);
    if (R.value() >= bd.size()) {
        return 0;
    }
    return b - low_part(bd, R.value(), base);
}

Natural sigma(Natural i, Natural n, std::uint64_t p) {
    const auto base = require_prime(p);
    require_class_index(i);
    require_natural(n);
    const auto nd = raw_digits(n, base);
    if (i >= nd.size()) {
        return 0;
    }
    u128 kept = u128{1} + low_part(nd, i, base);
    for (std::size_t k = i; k < nd.size(); ++k) {
        kept *= nd[k] + 1;
    }
    return static_cast<Natural>(u128{n} + 1 - kept);
}

std::optional<Natural> max_class_member(Natural i, Natural n, std::uint64_t p) {
    if (is_class_empty(i, n, p)) {
        return std::nullopt;
    }
    return top_line(ExtendedNatural(i), n + 1, p) - 1;
}

ClassProfile class_profile(Natural n, std::uint64_t p) {
    const auto base = require_prime(p);
    require_natural(n);
    ClassProfile profile{n, base, n + 1, 0, 0, {}};
    const auto bd = raw_digits(profile.b, base);
    for (std::size_t k = 0; k < bd.size(); ++k) {
        if (bd[k] != 0) {
            profile.nonzero_positions.push_back(k);
        }
    }
    profile.M = profile.nonzero_positions.front();
    profile.J = profile.nonzero_positions.back();
    return profile;
}

} // namespace nrcn
