#include "nrcn/gf.hpp"

#include <algorithm>
#include <string>

#include "nrcn/basep.hpp"
#include "nrcn/error.hpp"

namespace nrcn {

namespace {

using Poly = std::vector<std::uint32_t>;

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    std::uint64_t result = 1;
    std::uint64_t base = a % p;
    for (std::uint64_t e = p - 2; e != 0; e >>= 1) {
        if (e & 1) {
            result = result * base % p;
        }
        base = base * base % p;
    }
    return static_cast<std::uint32_t>(result);
}

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) {
        a.pop_back();
    }
}

// Remainder of a modulo m (m non-zero, any leading coefficient).
Poly poly_rem(Poly a, const Poly& m, std::uint32_t p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint64_t lead_inv = inv_mod(m.back(), p);
    while (a.size() > dm) {
        const std::size_t shift = a.size() - 1 - dm;
        const std::uint64_t factor = a.back() * lead_inv % p;
        for (std::size_t k = 0; k <= dm; ++k) {
            const std::uint64_t sub = factor * m[k] % p;
            a[k + shift] = static_cast<std::uint32_t>((a[k + shift] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly poly_powmod(Poly base, std::uint64_t exponent, const Poly& modulus, std::uint32_t p) {
    Poly result{1};
    base = poly_rem(std::move(base), modulus, p);
    while (exponent != 0) {
        if (exponent & 1) {
            result = detail::poly_mulmod(result, base, modulus, p);
        }
        base = detail::poly_mulmod(base, base, modulus, p);
        exponent >>= 1;
    }
    return result;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d <= m / d; ++d) {
        if (m % d == 0) {
            out.push_back(d);
            while (m % d == 0) {
                m /= d;
            }
        }
    }
    if (m > 1) {
        out.push_back(m);
    }
    return out;
}

} // namespace

namespace detail {

std::vector<std::uint32_t> poly_mulmod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                                       std::span<const std::uint32_t> modulus, std::uint32_t p) {
    if (a.empty() || b.empty()) {
        return {};
    }
    std::vector<std::uint64_t> prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
        }
    }
    Poly out(prod.begin(), prod.end());
    return poly_rem(std::move(out), Poly(modulus.begin(), modulus.end()), p);
}

} // namespace detail

bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p) {
    Poly f(poly.begin(), poly.end());
    trim(f);
    if (f.size() < 2) {
        return false;
    }
    const std::size_t deg = f.size() - 1;
    const std::uint64_t lead_inv = inv_mod(f.back(), p);
    for (auto& c : f) {
        c = static_cast<std::uint32_t>(c * lead_inv % p);
    }
    // x^{p^k} mod f for k = 1 .. deg/2; any common factor with x^{p^k} - x
    // is a factor of degree dividing k.
    Poly h{0, 1};
    for (std::size_t k = 1; k <= deg / 2; ++k) {
        h = poly_powmod(h, p, f, p);
        Poly diff = h;
        diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        trim(diff);
        if (diff.empty()) {
            return false;
        }
        if (poly_gcd(f, diff, p).size() > 1) {
            return false;
        }
    }
    return true;
}

struct Field::Tables {
    std::uint32_t p;
    std::uint32_t e;
    std::uint32_t q;
    Poly modulus;
    std::vector<std::uint32_t> exp;
    std::vector<std::uint32_t> log;

    Poly unpack(std::uint32_t index) const {
        Poly c(e, 0);
        for (std::uint32_t k = 0; k < e; ++k) {
            c[k] = index % p;
            index /= p;
        }
        return c;
    }

    std::uint32_t pack(const Poly& c) const {
        std::uint32_t index = 0;
        for (std::size_t k = c.size(); k-- > 0;) {
            index = index * p + c[k];
        }
        return index;
    }
};

namespace {

// Index of g * h where g is sparse; O(e * weight(g)).
std::uint32_t sparse_mul(const Poly& g, const Poly& h, const Poly& modulus, std::uint32_t p) {
    const std::size_t e = modulus.size() - 1;
    Poly acc(2 * e, 0);
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < h.size(); ++j) {
            acc[i + j] = static_cast<std::uint32_t>((acc[i + j] + std::uint64_t{g[i]} * h[j]) % p);
        }
    }
    // modulus is monic: reduce from the top.
    for (std::size_t d = acc.size(); d-- > e;) {
        const std::uint64_t c = acc[d];
        if (c == 0) {
            continue;
        }
        acc[d] = 0;
        for (std::size_t k = 0; k < e; ++k) {
            acc[d - e + k] = static_cast<std::uint32_t>((acc[d - e + k] + (p - c) * modulus[k]) % p);
        }
    }
    std::uint32_t index = 0;
    for (std::size_t k = e; k-- > 0;) {
        index = index * p + acc[k];
    }
    return index;
}

} // namespace

Field make_field(std::uint64_t p, std::uint64_t e) {
    const auto prime = require_prime(p);
    if (e == 0) {
        throw DomainError("field degree must be at least 1");
    }
    std::uint64_t q = 1;
    for (std::uint64_t k = 0; k < e; ++k) {
        q *= prime;
        if (q > kMaxFieldOrder) {
            throw ResourceLimitError("field order " + std::to_string(p) + "^" + std::to_string(e) +
                                     " exceeds 2^20");
        }
    }

    auto t = std::make_shared<Field::Tables>();
    t->p = prime;
    t->e = static_cast<std::uint32_t>(e);
    t->q = static_cast<std::uint32_t>(q);

    if (e == 1) {
        t->modulus = {0, 1};
    } else {
        // Candidate m enumerates (c_0, ..., c_{e-1}) with c_0 most significant.
        for (std::uint64_t m = 0; m < q; ++m) {
            Poly c(e + 1, 0);
            std::uint64_t rest = m;
            for (std::uint64_t k = e; k-- > 0;) {
                c[k] = static_cast<std::uint32_t>(rest % prime);
                rest /= prime;
            }
            c[e] = 1;
            if (is_irreducible(c, prime)) {
                t->modulus = std::move(c);
                break;
            }
        }
    }

    // Multiplicative generator and discrete log tables.
    const std::uint32_t order = t->q - 1;
    const auto factors = prime_factors(order);
    t->exp.assign(order, 0);
    t->log.assign(t->q, 0);
    for (std::uint32_t cand = 1; cand < t->q; ++cand) {
        const Poly g = t->unpack(cand);
        bool primitive = true;
        for (auto r : factors) {
            Poly pw = poly_powmod(g, order / r, t->modulus, prime);
            if (pw.size() == 1 && pw[0] == 1) {
                primitive = false;
                break;
            }
        }
        if (!primitive) {
            continue;
        }
        std::uint32_t cur = 1;
        for (std::uint32_t k = 0; k < order; ++k) {
            t->exp[k] = cur;
            t->log[cur] = k;
            cur = sparse_mul(g, t->unpack(cur), t->modulus, prime);
        }
        break;
    }
    return Field(std::move(t));
}

std::uint32_t Field::characteristic() const noexcept { return tables_->p; }
std::uint32_t Field::degree() const noexcept { return tables_->e; }
std::uint32_t Field::order() const noexcept { return tables_->q; }
std::span<const std::uint32_t> Field::modulus() const noexcept { return tables_->modulus; }

bool operator==(const Field& a, const Field& b) noexcept {
    return a.tables_ == b.tables_ || (a.characteristic() == b.characteristic() && a.degree() == b.degree());
}

void Field::check(Element a) const {
    if (!contains(a)) {
        throw FieldMismatchError("element does not belong to GF(" + std::to_string(order()) + ")");
    }
}

Element Field::element(std::uint64_t index) const {
    if (index >= order()) {
        throw DomainError("element index " + std::to_string(index) + " out of range for GF(" +
                          std::to_string(order()) + ")");
    }
    return Element(static_cast<std::uint32_t>(index), order());
}

Element Field::from_integer(std::int64_t value) const {
    const std::int64_t p = characteristic();
    return Element(static_cast<std::uint32_t>(((value % p) + p) % p), order());
}

Element Field::from_coefficients(std::span<const std::uint32_t> coefficients) const {
    if (coefficients.size() > degree()) {
        throw DomainError("too many coefficients for GF(" + std::to_string(order()) + ")");
    }
    Poly c(coefficients.begin(), coefficients.end());
    for (auto v : c) {
        if (v >= characteristic()) {
            throw DomainError("coefficient " + std::to_string(v) + " not reduced mod p");
        }
    }
    return Element(tables_->pack(c), order());
}

std::vector<std::uint32_t> Field::coefficients(Element a) const {
    check(a);
    return tables_->unpack(a.index_);
}

Element Field::add(Element a, Element b) const {
    check(a);
    check(b);
    const auto& t = *tables_;
    if (t.p == 2) {
        return Element(a.index_ ^ b.index_, t.q);
    }
    if (t.e == 1) {
        const std::uint32_t s = a.index_ + b.index_;
        return Element(s >= t.p ? s - t.p : s, t.q);
    }
    std::uint32_t x = a.index_;
    std::uint32_t y = b.index_;
    std::uint32_t out = 0;
    std::uint32_t scale = 1;
    for (std::uint32_t k = 0; k < t.e; ++k) {
        const std::uint32_t s = (x % t.p + y % t.p) % t.p;
        out += s * scale;
        scale *= t.p;
        x /= t.p;
        y /= t.p;
    }
    return Element(out, t.q);
}

Element Field::neg(Element a) const {
    check(a);
    const auto& t = *tables_;
    if (t.p == 2) {
        return a;
    }
    std::uint32_t x = a.index_;
    std::uint32_t out = 0;
    std::uint32_t scale = 1;
    for (std::uint32_t k = 0; k < t.e; ++k) {
        const std::uint32_t d = x % t.p;
        out += (d == 0 ? 0 : t.p - d) * scale;
        scale *= t.p;
        x /= t.p;
    }
    return Element(out, t.q);
}

Element Field::sub(Element a, Element b) const { return add(a, neg(b)); }

Element Field::mul(Element a, Element b) const {
    check(a);
    check(b);
    if (a.index_ == 0 || b.index_ == 0) {
        return zero();
    }
    const auto& t = *tables_;
    std::uint32_t s = t.log[a.index_] + t.log[b.index_];
    if (s >= t.q - 1) {
        s -= t.q - 1;
    }
    return Element(t.exp[s], t.q);
}

Element Field::inv(Element a) const {
    check(a);
    if (a.index_ == 0) {
        throw DivisionByZeroError("inverse of zero in GF(" + std::to_string(order()) + ")");
    }
    const auto& t = *tables_;
    const std::uint32_t l = t.log[a.index_];
    return Element(t.exp[l == 0 ? 0 : t.q - 1 - l], t.q);
}

Element Field::pow(Element a, std::uint64_t exponent) const {
    check(a);
    if (exponent == 0) {
        return one();
    }
    if (a.index_ == 0) {
        return zero();
    }
    const auto& t = *tables_;
    const std::uint64_t l = (std::uint64_t{t.log[a.index_]} * (exponent % (t.q - 1))) % (t.q - 1);
    return Element(t.exp[l], t.q);
}

std::vector<Element> Field::enumerate() const {
    std::vector<Element> out;
    out.reserve(order());
    for (std::uint32_t k = 0; k < order(); ++k) {
        out.push_back(Element(k, order()));
    }
    return out;
}

} // namespace nrcn
