#pragma once
// search.hpp - Exhaustive Munchausen-number search over [1, 2*b^b].
//
// Two interchangeable engines:
//
//   Linear   - odometer scan of every candidate. A RunningScan keeps the
//              digit vector and the power sum in step with the increment,
//              so each step is a couple of table-entry adds. Cost is the
//              full interval, 2*b^b candidates.
//
//   Multiset - enumerates digit multisets instead of numbers. P_b only
//              depends on the multiset of digits, so a candidate multiset
//              of size m is a hit iff its sum S has exactly m digits and
//              the digit multiset of S is the candidate itself. Cost is
//              sum of C(m+b-1, b-1) over m, far below 2*b^b for b >= 3.
//
// Both return identical hit sets; the crosscheck command and the test
// suite hold them against each other.

#include "munchausen/bounds.hpp"
#include "munchausen/nat.hpp"
#include "munchausen/powersum.hpp"
#include "munchausen/radix.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace munch {

enum class EngineKind { Linear, Multiset, Auto };

std::string_view to_string(EngineKind kind);
std::optional<EngineKind> engine_from_string(std::string_view s);

// A number equal to its own digit power sum, with the per-digit terms in
// representation order. The terms sum back to the value.
struct Hit {
    Nat value;
    DigitVec representation;
    std::vector<std::pair<std::uint8_t, Nat>> term_breakdown;
    std::string annotation;  // nonempty only for extras outside [1, 2*b^b] (n = 0)
};

struct SearchReport {
    Base base;
    ZeroPowerConvention convention;
    EngineKind engine;  // resolved engine, never Auto
    Nat bound;
    std::vector<Hit> hits;  // strictly ascending by value
    std::uint64_t elapsed_ms = 0;
    Nat candidates_examined;
};

// Digit multiset of an m-digit candidate: counts[d] = multiplicity of
// digit d, counts sums to size, and at least one nonzero digit appears
// (an m-digit number has a nonzero leading digit).
struct DigitMultiset {
    std::vector<std::uint32_t> counts;  // length = base
    std::uint32_t size = 0;
};

struct SearchOptions {
    ZeroPowerConvention convention = ZeroPowerConvention::One;
    bool include_zero = false;
    unsigned jobs = 0;  // 0 = all hardware threads
    std::uint64_t linear_ceiling = 1'000'000'000;  // max linear candidates
    std::uint32_t multiset_base_cap = 16;
    bool override_caps = false;  // accept very long runtimes
};

// Thrown when an engine refuses a base its cap does not allow.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

SearchReport find_linear(Base b, const SearchOptions& opts = {});
SearchReport find_multiset(Base b, const SearchOptions& opts = {});

// Resolves Auto, then dispatches to the matching engine.
SearchReport find(Base b, EngineKind engine, const SearchOptions& opts = {});

// Accepts a candidate multiset: computes S = sum of counts[d] * d^d and
// returns S iff S has exactly ms.size digits whose multiset is ms itself.
// Every Munchausen number is accepted by exactly one multiset, its own.
std::optional<Nat> check_multiset(const DigitMultiset& ms, const PowerTable& table);
std::optional<Nat> check_multiset(const DigitMultiset& ms, Base b, ZeroPowerConvention conv);

struct VerifyResult {
    bool is_munchausen = false;
    Nat value;
    DigitVec representation;
    std::vector<std::pair<std::uint8_t, Nat>> term_breakdown;
    Nat power_sum;
};

VerifyResult verify(const Nat& n, Base b, ZeroPowerConvention conv);

// Candidate counts of the two engines; Auto picks whichever is smaller.
Nat linear_space(Base b);
Nat multiset_space(Base b);
EngineKind resolve_engine(EngineKind requested, Base b);

// Hit values present on exactly one side, for crosscheck mismatch reports.
struct HitSetDiff {
    std::vector<Nat> only_linear;
    std::vector<Nat> only_multiset;
    bool empty() const { return only_linear.empty() && only_multiset.empty(); }
};

HitSetDiff diff_hits(const SearchReport& linear, const SearchReport& multiset);

namespace detail {

// Odometer over consecutive integers, keeping the base-b digit vector and
// the running power sum in step: an increment only touches the digits the
// carry reaches, and the sum is patched per touched digit.
class RunningScan {
public:
    RunningScan(const Nat& start, const PowerTable& table);

    const Nat& value() const noexcept { return value_; }
    const Nat& power_sum() const noexcept { return sum_; }
    const std::vector<std::uint8_t>& digits() const noexcept { return digits_; }

    void advance();  // step to n+1

private:
    const PowerTable& table_;
    std::uint8_t top_;
    std::vector<std::uint8_t> digits_;  // most-significant first
    Nat value_;
    Nat sum_;
};

// Enumerates every digit multiset of exactly `size` digits with at least
// one nonzero digit, calling sink(counts, sum) per multiset with the
// power sum already accumulated. Returns the number of multisets visited,
// which is C(size + base - 1, base - 1) - 1.
template <class Sink>
class MultisetScanner {
public:
    MultisetScanner(const PowerTable& table, Sink sink)
        : table_(table),
          base_(table.base().value()),
          counts_(base_, 0),
          partial_(base_ + 1),
          sink_(std::move(sink)) {}

    std::uint64_t run(std::uint32_t size) {
        visited_ = 0;
        descend(base_ - 1, size, false);
        return visited_;
    }

private:
    void descend(std::uint32_t digit, std::uint32_t remaining, bool nonzero_used) {
        if (digit == 0) {
            counts_[0] = remaining;
            if (nonzero_used) {  // skip the all-zero multiset: no canonical owner
                ++visited_;
                leaf_sum_ = partial_[1];
                // term(0) is 0 or 1 by construction, so counts_[0] * term(0)
                // collapses to an optional small add
                if (!table_.term(0).is_zero()) leaf_sum_ += remaining;
                sink_(counts_, leaf_sum_);
            }
            counts_[0] = 0;
            return;
        }
        Nat& acc = partial_[digit];
        acc = partial_[digit + 1];
        for (std::uint32_t c = 0;; ++c) {
            counts_[digit] = c;
            descend(digit - 1, remaining - c, nonzero_used || c > 0);
            if (c == remaining) break;
            acc += table_.term(digit);
        }
        counts_[digit] = 0;
    }

    const PowerTable& table_;
    std::uint32_t base_;
    std::vector<std::uint32_t> counts_;
    std::vector<Nat> partial_;  // partial_[d] = sum over digits >= d as currently assigned
    Nat leaf_sum_;
    Sink sink_;
    std::uint64_t visited_ = 0;
};

}  // namespace detail

}  // namespace munch
