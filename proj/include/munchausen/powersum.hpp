#pragma once
// powersum.hpp - The digit power sum P_b(n) = sum of c^c over the base-b
// digits c of n. The only free choice in that formula is the value of the
// 0^0 term, which is pinned by a ZeroPowerConvention.

#include "munchausen/nat.hpp"
#include "munchausen/radix.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace munch {

// Value assigned to 0^0. One is the standard convention (matching
// 1^0 = 2^0 = 1); Zero is a variant that changes membership -- e.g. 2
// stops being a hit in base 2 -- so reproduction runs must never pick it
// up silently.
enum class ZeroPowerConvention { One, Zero };

std::string_view to_string(ZeroPowerConvention conv);
std::optional<ZeroPowerConvention> convention_from_string(std::string_view s);

// Per-base table of d^d for 0 <= d < base, entry 0 fixed by the
// convention. Built once, immutable afterwards, shared read-only by the
// search engines: the inner loop of a scan is table lookups plus adds.
class PowerTable {
public:
    PowerTable(Base base, ZeroPowerConvention conv);

    Base base() const noexcept { return base_; }
    ZeroPowerConvention convention() const noexcept { return conv_; }
    const std::vector<Nat>& entries() const noexcept { return entries_; }

    // Throws std::out_of_range when digit >= base.
    const Nat& term(std::uint32_t digit) const;

private:
    Base base_;
    ZeroPowerConvention conv_;
    std::vector<Nat> entries_;
};

inline PowerTable build_power_table(Base b, ZeroPowerConvention conv) {
    return PowerTable(b, conv);
}

Nat digit_power_sum(const Nat& n, Base b, ZeroPowerConvention conv);

// Same sum straight off a digit vector, the way a scan consumes it.
Nat digit_power_sum_of_digits(const DigitVec& d, const PowerTable& table);
Nat digit_power_sum_of_digits(const DigitVec& d, ZeroPowerConvention conv);

}  // namespace munch
