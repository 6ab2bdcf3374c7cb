#include "munchausen/powersum.hpp"

#include <stdexcept>

namespace munch {

std::string_view to_string(ZeroPowerConvention conv) {
    return conv == ZeroPowerConvention::One ? "one" : "zero";
}

std::optional<ZeroPowerConvention> convention_from_string(std::string_view s) {
    if (s == "one") return ZeroPowerConvention::One;
    if (s == "zero") return ZeroPowerConvention::Zero;
    return std::nullopt;
}

PowerTable::PowerTable(Base base, ZeroPowerConvention conv) : base_(base), conv_(conv) {
    entries_.reserve(base.value());
    entries_.push_back(conv == ZeroPowerConvention::One ? Nat{1} : Nat{0});
    for (std::uint32_t d = 1; d < base.value(); ++d)
        entries_.push_back(Nat::pow(d, d));
}

const Nat& PowerTable::term(std::uint32_t digit) const {
    if (digit >= entries_.size())
        throw std::out_of_range("PowerTable: digit " + std::to_string(digit) +
                                " out of range for base " + std::to_string(base_.value()));
    return entries_[digit];
}

Nat digit_power_sum(const Nat& n, Base b, ZeroPowerConvention conv) {
    return digit_power_sum_of_digits(to_digits(n, b), PowerTable(b, conv));
}

Nat digit_power_sum_of_digits(const DigitVec& d, const PowerTable& table) {
    if (d.base != table.base())
        throw std::invalid_argument("digit_power_sum_of_digits: digit vector base " +
                                    std::to_string(d.base.value()) +
                                    " does not match table base " +
                                    std::to_string(table.base().value()));
    Nat sum;
    for (std::uint8_t digit : d.digits) sum += table.term(digit);
    return sum;
}

Nat digit_power_sum_of_digits(const DigitVec& d, ZeroPowerConvention conv) {
    return digit_power_sum_of_digits(d, PowerTable(d.base, conv));
}

}  // namespace munch
