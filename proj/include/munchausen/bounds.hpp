#pragma once
// bounds.hpp - The finite search bound.
//
// Above 2*b^b a number always exceeds its digit power sum: with
// m = digit_count(n, b), P_b(n) <= m*(b-1)^(b-1) < n whenever n > 2*b^b.
// So every hit lies in [1, 2*b^b], inclusive at both ends, and the
// exhaustive engines only ever scan that interval. Everything here is
// exact integer arithmetic on digit counts.

#include "munchausen/nat.hpp"
#include "munchausen/radix.hpp"

#include <cstdint>

namespace munch {

struct SearchBound {
    Base base;
    Nat bound;                       // 2 * base^base exactly
    std::uint32_t max_digit_count;   // digit_count(bound, base)
};

SearchBound search_bound(Base b);

// digit_count(n, b) * (b-1)^(b-1), an upper bound for P_b(n). Attained
// exactly when every digit is b-1 (n = b^m - 1). Throws on n = 0.
Nat power_sum_bound(const Nat& n, Base b);

// True iff n lies strictly above the search interval.
bool exceeds_bound(const Nat& n, const SearchBound& sb);

}  // namespace munch
