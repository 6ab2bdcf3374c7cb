#pragma once
// nat.hpp - Unbounded nonnegative integer.
//
// Limbs are base 2^32, stored least-significant first. Canonical form has
// no most-significant zero limb; zero is the empty limb vector. The
// in-place operators never release capacity, so a value that fluctuates
// inside a scan loop stops allocating once it has seen its peak size.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace munch {

class Nat {
public:
    Nat() = default;
    Nat(std::uint64_t v);  // implicit: lets tests and callers write Nat n = 3435

    // Strict decimal parse: nonempty, digits 0-9 only. Throws std::invalid_argument.
    static Nat from_decimal(std::string_view s);

    // base^exp by repeated multiplication; 0^0 here is 1 (empty product).
    static Nat pow(std::uint32_t base, std::uint32_t exp);

    bool is_zero() const noexcept { return limbs_.empty(); }
    std::optional<std::uint64_t> to_uint64() const noexcept;
    std::string to_decimal() const;

    bool operator==(const Nat& rhs) const noexcept = default;
    std::strong_ordering operator<=>(const Nat& rhs) const noexcept;

    Nat& operator+=(const Nat& rhs);
    Nat& operator-=(const Nat& rhs);  // throws std::domain_error if rhs > *this
    Nat& operator+=(std::uint32_t v);
    Nat& operator-=(std::uint32_t v);
    Nat& operator*=(std::uint32_t v);
    Nat& increment() { return *this += std::uint32_t{1}; }

    friend Nat operator+(Nat lhs, const Nat& rhs) { lhs += rhs; return lhs; }
    friend Nat operator-(Nat lhs, const Nat& rhs) { lhs -= rhs; return lhs; }
    friend Nat operator*(Nat lhs, std::uint32_t v) { lhs *= v; return lhs; }
    Nat operator*(const Nat& rhs) const;

    // Divides in place, returns the remainder. Throws std::invalid_argument on d = 0.
    std::uint32_t div_small(std::uint32_t d);

    std::size_t limb_count() const noexcept { return limbs_.size(); }

private:
    std::vector<std::uint32_t> limbs_;

    void trim() noexcept {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }
};

std::ostream& operator<<(std::ostream& os, const Nat& n);

}  // namespace munch
