#include "nrcn/nuclei.hpp"

#include <string>

#include "nrcn/classes.hpp"
#include "nrcn/error.hpp"

namespace nrcn {

namespace {

void require_k(std::int64_t k, Natural n) {
    if (k < -1 || k > static_cast<std::int64_t>(n) - 1) {
        throw DomainError("k = " + std::to_string(k) + " outside -1.." + std::to_string(static_cast<std::int64_t>(n) - 1));
    }
}

} // namespace

NucleusReport nuclei_table(Natural n, std::uint64_t p) {
    const ClassProfile profile = class_profile(n, p);
    NucleusReport report{profile.p, n, profile.b, {}};
    // N_d first: its interval starts at T(N_d + 1, b) = 0, i.e. k = -1.
    for (std::size_t a = profile.d(); a-- > 0;) {
        const std::size_t N = profile.nonzero_positions[a];
        const Natural lower = top_line(ExtendedNatural(N + 1), profile.b, p);
        const Natural upper = top_line(ExtendedNatural(N), profile.b, p);
        const auto R = N + 1;
        report.rows.push_back(NucleusInterval{
            static_cast<std::int64_t>(lower) - 1,
            static_cast<std::int64_t>(upper) - 2,
            lower,
            upper,
            R,
            static_cast<std::int64_t>(sigma(R, n, p)) - 1,
        });
    }
    return report;
}

std::int64_t nucleus_dim(std::int64_t k, Natural n, std::uint64_t p) {
    require_natural(n);
    require_k(k, n);
    const ClassProfile profile = class_profile(n, p);
    const auto k1 = static_cast<Natural>(k + 1);
    for (auto N : profile.nonzero_positions) {
        if (top_line(ExtendedNatural(N + 1), profile.b, p) <= k1 && k1 < top_line(ExtendedNatural(N), profile.b, p)) {
            return static_cast<std::int64_t>(sigma(N + 1, n, p)) - 1;
        }
    }
    // The intervals partition 0..b-1, so this is unreachable for valid k.
    throw DomainError("k + 1 = " + std::to_string(k1) + " not covered by the interval decomposition");
}

std::vector<Natural> nucleus_basis_indices(std::int64_t k, Natural n, std::uint64_t p) {
    require_prime(p);
    require_k(k, n);
    if (n > kMaxBasisScan) {
        throw ResourceLimitError("basis scan over n = " + std::to_string(n) + " exceeds " +
                                 std::to_string(kMaxBasisScan));
    }
    std::vector<Natural> out;
    for (Natural j = 0; j <= n; ++j) {
        bool all_vanish = true;
        for (Natural m = n + 1; m-- > static_cast<Natural>(k + 1);) {
            if (lucas_binom(m, j, p) != 0) {
                all_vanish = false;
                break;
            }
        }
        if (all_vanish) {
            out.push_back(j);
        }
    }
    return out;
}

std::size_t distinct_nuclei_count(Natural n, std::uint64_t p) { return class_profile(n, p).d(); }

std::int64_t empty_threshold(Natural n, std::uint64_t p) {
    const ClassProfile profile = class_profile(n, p);
    Natural pow = 1;
    for (std::size_t k = 0; k < profile.J; ++k) {
        pow *= profile.p;
    }
    const Natural leading = profile.b / pow;
    return static_cast<std::int64_t>(leading * pow) - 2;
}

std::int64_t timmermann_dim(Natural n, std::uint64_t p) {
    const Digits digits = to_base_p(n, p);
    Natural product = 1;
    for (auto d : digits.digits()) {
        product *= d + 1;
    }
    return static_cast<std::int64_t>(n) - static_cast<std::int64_t>(product);
}

std::optional<PointNucleus> point_nucleus(Natural n, std::uint64_t p) {
    const auto base = require_prime(p);
    require_natural(n);
    // n = 2 p^i - 2  <=>  (n + 2) / 2 = p^i with i >= 1.
    if ((n + 2) % 2 != 0) {
        return std::nullopt;
    }
    Natural target = (n + 2) / 2;
    Natural i = 0;
    while (target % base == 0) {
        target /= base;
        ++i;
    }
    if (target != 1 || i == 0) {
        return std::nullopt;
    }
    return PointNucleus{i, (n + 2) / 2 - 1};
}

} // namespace nrcn
