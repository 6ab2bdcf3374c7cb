#pragma once
// radix.hpp - Base-b digit vectors and exact radix conversion.
//
// Digit vectors are most-significant first, so a value prints the way it
// reads: 3435 in base 10 is [3,4,3,5]_10. All conversions are exact
// integer arithmetic; digit counts come from repeated division, never
// floating-point logarithms, so powers of the base land on the right side
// of every boundary.

#include "munchausen/nat.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace munch {

// Radix in [2, 36]; 36 keeps every digit printable as 0-9/a-z.
class Base {
public:
    static constexpr std::uint32_t kMin = 2;
    static constexpr std::uint32_t kMax = 36;

    explicit Base(std::uint32_t value);  // throws std::invalid_argument outside [2, 36]

    std::uint32_t value() const noexcept { return value_; }
    auto operator<=>(const Base&) const = default;

private:
    std::uint32_t value_;
};

// Digit string of a natural number in some base, most-significant first.
// Canonical form: nonempty, every digit < base, and no leading zero
// except the single-digit vector [0].
struct DigitVec {
    std::vector<std::uint8_t> digits;
    Base base;

    bool operator==(const DigitVec&) const = default;
};

// Throws std::invalid_argument if d breaks a DigitVec invariant.
void validate(const DigitVec& d);

DigitVec to_digits(const Nat& n, Base b);

// Inverse of to_digits; validates its input first.
Nat from_digits(const DigitVec& d);

// Number of digits m, i.e. the m with b^(m-1) <= n < b^m. Throws on n = 0.
std::uint32_t digit_count(const Nat& n, Base b);

// Digit vector of n+1; the carry may lengthen the vector.
DigitVec increment(const DigitVec& d);

// "[3,4,3,5]_10"
std::string to_string(const DigitVec& d);

}  // namespace munch
