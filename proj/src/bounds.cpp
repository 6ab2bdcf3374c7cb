#include "munchausen/bounds.hpp"

namespace munch {

SearchBound search_bound(Base b) {
    Nat bound = Nat::pow(b.value(), b.value());
    bound *= 2;
    std::uint32_t count = digit_count(bound, b);
    return SearchBound{b, std::move(bound), count};
}

Nat power_sum_bound(const Nat& n, Base b) {
    std::uint32_t m = digit_count(n, b);  // throws on n = 0
    Nat result = Nat::pow(b.value() - 1, b.value() - 1);
    result *= m;
    return result;
}

bool exceeds_bound(const Nat& n, const SearchBound& sb) {
    return n > sb.bound;
}

}  // namespace munch
