#include "munchausen/nat.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace munch {

namespace {
constexpr std::uint64_t kLimbBase = std::uint64_t{1} << 32;
constexpr std::uint32_t kDecChunk = 1'000'000'000;  // 10^9, largest power of 10 in a limb
constexpr int kDecChunkDigits = 9;
}  // namespace

Nat::Nat(std::uint64_t v) {
    if (v == 0) return;
    limbs_.push_back(static_cast<std::uint32_t>(v));
    if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
}

Nat Nat::from_decimal(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("Nat: empty decimal string");
    Nat result;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t take = std::min<std::size_t>(kDecChunkDigits, s.size() - pos);
        // keep chunk boundaries aligned so every chunk after the first is 9 digits
        if (pos == 0 && s.size() % kDecChunkDigits != 0) take = s.size() % kDecChunkDigits;
        std::uint32_t chunk = 0;
        for (std::size_t i = 0; i < take; ++i) {
            char c = s[pos + i];
            if (c < '0' || c > '9')
                throw std::invalid_argument("Nat: invalid decimal digit");
            chunk = chunk * 10 + static_cast<std::uint32_t>(c - '0');
        }
        std::uint32_t scale = 1;
        for (std::size_t i = 0; i < take; ++i) scale *= 10;
        result *= scale;
        result += chunk;
        pos += take;
    }
    return result;
}

Nat Nat::pow(std::uint32_t base, std::uint32_t exp) {
    Nat result{1};
    for (std::uint32_t i = 0; i < exp; ++i) result *= base;
    return result;
}

std::optional<std::uint64_t> Nat::to_uint64() const noexcept {
    if (limbs_.size() > 2) return std::nullopt;
    std::uint64_t v = 0;
    if (limbs_.size() == 2) v = static_cast<std::uint64_t>(limbs_[1]) << 32;
    if (!limbs_.empty()) v |= limbs_[0];
    return v;
}

std::string Nat::to_decimal() const {
    if (is_zero()) return "0";
    Nat scratch = *this;
    std::vector<std::uint32_t> chunks;
    while (!scratch.is_zero()) chunks.push_back(scratch.div_small(kDecChunk));
    std::string out = std::to_string(chunks.back());
    for (auto it = chunks.rbegin() + 1; it != chunks.rend(); ++it) {
        std::string part = std::to_string(*it);
        out.append(kDecChunkDigits - part.size(), '0');
        out += part;
    }
    return out;
}

std::strong_ordering Nat::operator<=>(const Nat& rhs) const noexcept {
    if (limbs_.size() != rhs.limbs_.size())
        return limbs_.size() <=> rhs.limbs_.size();
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] <=> rhs.limbs_[i];
    }
    return std::strong_ordering::equal;
}

Nat& Nat::operator+=(const Nat& rhs) {
    if (rhs.limbs_.size() > limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
    std::uint64_t carry = 0;
    std::size_t i = 0;
    for (; i < rhs.limbs_.size(); ++i) {
        std::uint64_t sum = carry + limbs_[i] + rhs.limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(sum);
        carry = sum >> 32;
    }
    for (; carry != 0 && i < limbs_.size(); ++i) {
        std::uint64_t sum = carry + limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(sum);
        carry = sum >> 32;
    }
    if (carry != 0) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

Nat& Nat::operator-=(const Nat& rhs) {
    if (rhs.limbs_.size() > limbs_.size())
        throw std::domain_error("Nat: subtraction would go negative");
    std::uint64_t borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t sub = borrow + (i < rhs.limbs_.size() ? rhs.limbs_[i] : 0);
        if (borrow != 0 || i < rhs.limbs_.size()) {
            std::uint64_t cur = limbs_[i];
            if (cur >= sub) {
                limbs_[i] = static_cast<std::uint32_t>(cur - sub);
                borrow = 0;
            } else {
                limbs_[i] = static_cast<std::uint32_t>(cur + kLimbBase - sub);
                borrow = 1;
            }
        } else {
            break;
        }
    }
    if (borrow != 0) throw std::domain_error("Nat: subtraction would go negative");
    trim();
    return *this;
}

Nat& Nat::operator+=(std::uint32_t v) {
    std::uint64_t carry = v;
    for (std::size_t i = 0; carry != 0 && i < limbs_.size(); ++i) {
        std::uint64_t sum = carry + limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(sum);
        carry = sum >> 32;
    }
    if (carry != 0) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

Nat& Nat::operator-=(std::uint32_t v) {
    if (v == 0) return *this;
    if (limbs_.empty()) throw std::domain_error("Nat: subtraction would go negative");
    std::uint64_t borrow = v;
    for (std::size_t i = 0; borrow != 0 && i < limbs_.size(); ++i) {
        std::uint64_t cur = limbs_[i];
        if (cur >= borrow) {
            limbs_[i] = static_cast<std::uint32_t>(cur - borrow);
            borrow = 0;
        } else {
            limbs_[i] = static_cast<std::uint32_t>(cur + kLimbBase - borrow);
            borrow = 1;
        }
    }
    if (borrow != 0) throw std::domain_error("Nat: subtraction would go negative");
    trim();
    return *this;
}

Nat& Nat::operator*=(std::uint32_t v) {
    if (v == 0) {
        limbs_.clear();
        return *this;
    }
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
        std::uint64_t prod = static_cast<std::uint64_t>(limb) * v + carry;
        limb = static_cast<std::uint32_t>(prod);
        carry = prod >> 32;
    }
    if (carry != 0) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

Nat Nat::operator*(const Nat& rhs) const {
    Nat result;
    if (is_zero() || rhs.is_zero()) return result;
    result.limbs_.assign(limbs_.size() + rhs.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
            std::uint64_t cur = result.limbs_[i + j] +
                                static_cast<std::uint64_t>(limbs_[i]) * rhs.limbs_[j] + carry;
            result.limbs_[i + j] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        result.limbs_[i + rhs.limbs_.size()] += static_cast<std::uint32_t>(carry);
    }
    result.trim();
    return result;
}

std::uint32_t Nat::div_small(std::uint32_t d) {
    if (d == 0) throw std::invalid_argument("Nat: division by zero");
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(cur / d);
        rem = cur % d;
    }
    trim();
    return static_cast<std::uint32_t>(rem);
}

std::ostream& operator<<(std::ostream& os, const Nat& n) {
    return os << n.to_decimal();
}

}  // namespace munch
