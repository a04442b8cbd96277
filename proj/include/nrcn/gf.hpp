#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace nrcn {

// Enumeration guard: the geometric oracle iterates over every field element.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 20;

// An element of GF(q), stored as the index sum_k c_k p^k of its coefficient
// vector (c_0, ..., c_{e-1}) modulo the field's defining polynomial. The
// field order travels with the value so that elements of different fields
// are caught at the point of use.
class Element {
public:
    Element() = default;

    std::uint32_t index() const noexcept { return index_; }
    std::uint32_t field_order() const noexcept { return order_; }

    friend bool operator==(const Element&, const Element&) = default;

private:
    friend class Field;
    Element(std::uint32_t index, std::uint32_t order) noexcept : index_(index), order_(order) {}

    std::uint32_t index_ = 0;
    std::uint32_t order_ = 0;
};

class Field {
public:
    std::uint32_t characteristic() const noexcept;
    std::uint32_t degree() const noexcept;
    std::uint32_t order() const noexcept;

    // Monic defining polynomial, little-endian, degree() + 1 coefficients.
    std::span<const std::uint32_t> modulus() const noexcept;

    Element zero() const noexcept { return Element(0, order()); }
    Element one() const noexcept { return Element(1, order()); }

    // Element with the given enumeration index (< order()).
    Element element(std::uint64_t index) const;
    // Image of an integer in the prime subfield.
    Element from_integer(std::int64_t value) const;
    Element from_coefficients(std::span<const std::uint32_t> coefficients) const;
    std::vector<std::uint32_t> coefficients(Element a) const;

    bool contains(Element a) const noexcept { return a.order_ == order() && a.index_ < order(); }

    Element add(Element a, Element b) const;
    Element sub(Element a, Element b) const;
    Element neg(Element a) const;
    Element mul(Element a, Element b) const;
    Element inv(Element a) const;
    Element div(Element a, Element b) const { return mul(a, inv(b)); }
    Element pow(Element a, std::uint64_t exponent) const;

    // All q elements, zero first, in increasing index order.
    std::vector<Element> enumerate() const;

    friend bool operator==(const Field& a, const Field& b) noexcept;

private:
    struct Tables;
    friend Field make_field(std::uint64_t p, std::uint64_t e);
    explicit Field(std::shared_ptr<const Tables> tables) : tables_(std::move(tables)) {}

    void check(Element a) const;

    std::shared_ptr<const Tables> tables_;
};

// GF(p^e) defined by the lexicographically least monic irreducible of degree
// e, comparing little-endian coefficient sequences (c_0 first).
Field make_field(std::uint64_t p, std::uint64_t e);

// Ben-Or test over GF(p); poly is little-endian with a non-zero leading term.
bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p);

namespace detail {

// Schoolbook product of a and b reduced modulo a monic polynomial over GF(p).
std::vector<std::uint32_t> poly_mulmod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                                       std::span<const std::uint32_t> modulus, std::uint32_t p);

} // namespace detail

} // namespace nrcn
