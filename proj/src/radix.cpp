#include "munchausen/radix.hpp"

#include <algorithm>
#include <stdexcept>

namespace munch {

Base::Base(std::uint32_t value) : value_(value) {
    if (value < kMin || value > kMax)
        throw std::invalid_argument("Base: radix must be in [2, 36], got " +
                                    std::to_string(value));
}

void validate(const DigitVec& d) {
    if (d.digits.empty())
        throw std::invalid_argument("DigitVec: empty digit vector");
    for (std::uint8_t digit : d.digits) {
        if (digit >= d.base.value())
            throw std::invalid_argument("DigitVec: digit " + std::to_string(digit) +
                                        " out of range for base " +
                                        std::to_string(d.base.value()));
    }
    if (d.digits.size() > 1 && d.digits.front() == 0)
        throw std::invalid_argument("DigitVec: leading zero");
}

DigitVec to_digits(const Nat& n, Base b) {
    DigitVec result{{}, b};
    if (n.is_zero()) {
        result.digits.push_back(0);
        return result;
    }
    Nat scratch = n;
    while (!scratch.is_zero())
        result.digits.push_back(static_cast<std::uint8_t>(scratch.div_small(b.value())));
    std::reverse(result.digits.begin(), result.digits.end());
    return result;
}

Nat from_digits(const DigitVec& d) {
    validate(d);
    Nat value;
    for (std::uint8_t digit : d.digits) {
        value *= d.base.value();
        value += digit;
    }
    return value;
}

std::uint32_t digit_count(const Nat& n, Base b) {
    if (n.is_zero())
        throw std::invalid_argument("digit_count: undefined for 0");
    Nat scratch = n;
    std::uint32_t count = 0;
    while (!scratch.is_zero()) {
        scratch.div_small(b.value());
        ++count;
    }
    return count;
}

DigitVec increment(const DigitVec& d) {
    validate(d);
    DigitVec result = d;
    const std::uint8_t top = static_cast<std::uint8_t>(d.base.value() - 1);
    std::size_t i = result.digits.size();
    while (i > 0 && result.digits[i - 1] == top) {
        result.digits[i - 1] = 0;
        --i;
    }
    if (i == 0)
        result.digits.insert(result.digits.begin(), 1);
    else
        ++result.digits[i - 1];
    // canonical zero [0] became [1]; any other input keeps a nonzero lead
    return result;
}

std::string to_string(const DigitVec& d) {
    std::string out = "[";
    for (std::size_t i = 0; i < d.digits.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(static_cast<unsigned>(d.digits[i]));
    }
    out += "]_";
    out += std::to_string(d.base.value());
    return out;
}

}  // namespace munch
