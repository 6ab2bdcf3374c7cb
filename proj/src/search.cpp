#include "munchausen/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <thread>

namespace munch {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t elapsed_ms_since(Clock::time_point start) {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count());
}

unsigned effective_jobs(unsigned requested) {
    if (requested != 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

Hit make_hit(const Nat& value, const PowerTable& table) {
    Hit hit{value, to_digits(value, table.base()), {}, {}};
    hit.term_breakdown.reserve(hit.representation.digits.size());
    for (std::uint8_t digit : hit.representation.digits)
        hit.term_breakdown.emplace_back(digit, table.term(digit));
    return hit;
}

// n = 0 sits outside [1, 2*b^b]; it is only a candidate on request, and
// only a hit when the convention makes P_b(0) = 0^0 = 0.
void append_zero_candidate(const PowerTable& table, std::vector<Hit>& hits) {
    if (!table.term(0).is_zero()) return;
    Hit hit = make_hit(Nat{0}, table);
    hit.annotation = "outside the search interval [1, 2*b^b]; included on request";
    hits.push_back(std::move(hit));
}

void sort_hits(std::vector<Hit>& hits) {
    std::sort(hits.begin(), hits.end(),
              [](const Hit& a, const Hit& b) { return a.value < b.value; });
}

// Contiguous spans [start, end] covering [1, bound], at most `parts` of
// them, sized within one candidate of each other.
std::vector<std::pair<Nat, Nat>> chunk_interval(const Nat& bound, unsigned parts) {
    Nat quot = bound;
    std::uint32_t rem = quot.div_small(parts);
    std::vector<std::pair<Nat, Nat>> spans;
    Nat start{1};
    for (unsigned i = 0; i < parts; ++i) {
        Nat size = quot;
        if (i < rem) size += 1u;
        if (size.is_zero()) continue;
        Nat end = start + size - Nat{1};
        spans.emplace_back(start, end);
        start = end + Nat{1};
    }
    return spans;
}

std::vector<Hit> scan_span(const Nat& start, const Nat& end, const PowerTable& table) {
    std::vector<Hit> hits;
    detail::RunningScan scan(start, table);
    while (true) {
        if (scan.power_sum() == scan.value()) hits.push_back(make_hit(scan.value(), table));
        if (scan.value() == end) break;
        scan.advance();
    }
    return hits;
}

Nat binomial(std::uint32_t n, std::uint32_t k) {
    if (k > n) return Nat{0};
    Nat result{1};
    for (std::uint32_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result.div_small(i);  // exact at every step
    }
    return result;
}

}  // namespace

std::string_view to_string(EngineKind kind) {
    switch (kind) {
        case EngineKind::Linear: return "linear";
        case EngineKind::Multiset: return "multiset";
        case EngineKind::Auto: return "auto";
    }
    return "auto";
}

std::optional<EngineKind> engine_from_string(std::string_view s) {
    if (s == "linear") return EngineKind::Linear;
    if (s == "multiset") return EngineKind::Multiset;
    if (s == "auto") return EngineKind::Auto;
    return std::nullopt;
}

namespace detail {

RunningScan::RunningScan(const Nat& start, const PowerTable& table)
    : table_(table),
      top_(static_cast<std::uint8_t>(table.base().value() - 1)),
      digits_(to_digits(start, table.base()).digits),
      value_(start),
      sum_(digit_power_sum_of_digits(DigitVec{digits_, table.base()}, table)) {}

void RunningScan::advance() {
    std::size_t i = digits_.size();
    while (i > 0 && digits_[i - 1] == top_) {
        digits_[i - 1] = 0;
        sum_ -= table_.term(top_);
        sum_ += table_.term(0);
        --i;
    }
    if (i == 0) {
        digits_.insert(digits_.begin(), 1);
        sum_ += table_.term(1);
    } else {
        std::uint8_t d = digits_[i - 1];
        digits_[i - 1] = static_cast<std::uint8_t>(d + 1);
        sum_ -= table_.term(d);
        sum_ += table_.term(d + 1u);
    }
    value_.increment();
}

}  // namespace detail

SearchReport find_linear(Base b, const SearchOptions& opts) {
    const auto started = Clock::now();
    SearchBound sb = search_bound(b);

    Nat candidates = sb.bound;
    if (opts.include_zero) candidates += 1u;
    if (!opts.override_caps && candidates > Nat{opts.linear_ceiling})
        throw CapExceeded("linear engine: base " + std::to_string(b.value()) + " has " +
                          candidates.to_decimal() + " candidates, above the ceiling of " +
                          std::to_string(opts.linear_ceiling) +
                          "; use the multiset engine, raise --linear-ceiling, or pass "
                          "--allow-slow");

    const PowerTable table(b, opts.convention);
    std::vector<Hit> hits;
    if (opts.include_zero) append_zero_candidate(table, hits);

    const unsigned jobs = effective_jobs(opts.jobs);
    const auto spans = chunk_interval(sb.bound, jobs);
    std::vector<std::vector<Hit>> found(spans.size());
    if (spans.size() <= 1) {
        if (!spans.empty()) found[0] = scan_span(spans[0].first, spans[0].second, table);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(spans.size());
        for (std::size_t i = 0; i < spans.size(); ++i)
            pool.emplace_back([&found, &spans, &table, i] {
                found[i] = scan_span(spans[i].first, spans[i].second, table);
            });
        for (auto& t : pool) t.join();
    }
    for (auto& part : found)
        for (auto& hit : part) hits.push_back(std::move(hit));
    sort_hits(hits);

    return SearchReport{b,
                        opts.convention,
                        EngineKind::Linear,
                        std::move(sb.bound),
                        std::move(hits),
                        elapsed_ms_since(started),
                        std::move(candidates)};
}

SearchReport find_multiset(Base b, const SearchOptions& opts) {
    const auto started = Clock::now();
    if (!opts.override_caps && b.value() > opts.multiset_base_cap)
        throw CapExceeded("multiset engine: base " + std::to_string(b.value()) +
                          " is above the default cap of " +
                          std::to_string(opts.multiset_base_cap) +
                          " (the multiset space grows roughly 4^b); pass --allow-slow to "
                          "run anyway");

    SearchBound sb = search_bound(b);
    const PowerTable table(b, opts.convention);

    std::vector<Hit> hits;
    Nat candidates;
    if (opts.include_zero) {
        candidates += 1u;
        append_zero_candidate(table, hits);
    }

    // b^m boundaries for the digit-count prefilter: S has exactly m digits
    // iff b^(m-1) <= S < b^m. Only survivors pay for the full check.
    const std::uint32_t max_size = sb.max_digit_count;
    std::vector<Nat> powers(max_size + 1);
    for (std::uint32_t m = 0; m <= max_size; ++m) powers[m] = Nat::pow(b.value(), m);

    std::vector<std::vector<Hit>> found(max_size);
    std::vector<std::uint64_t> visited(max_size, 0);

    auto run_size = [&](std::uint32_t m) {
        const Nat& low = powers[m - 1];
        const Nat& high = powers[m];
        std::vector<Hit>& out = found[m - 1];
        auto sink = [&](const std::vector<std::uint32_t>& counts, const Nat& sum) {
            if (sum < low || sum >= high) return;
            if (auto value = check_multiset(DigitMultiset{counts, m}, table))
                out.push_back(make_hit(*value, table));
        };
        detail::MultisetScanner scanner(table, sink);
        visited[m - 1] = scanner.run(m);
    };

    const unsigned jobs = std::min<unsigned>(effective_jobs(opts.jobs), max_size);
    if (jobs <= 1) {
        for (std::uint32_t m = 1; m <= max_size; ++m) run_size(m);
    } else {
        std::atomic<std::uint32_t> cursor{1};
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (unsigned j = 0; j < jobs; ++j)
            pool.emplace_back([&] {
                for (std::uint32_t m; (m = cursor.fetch_add(1)) <= max_size;) run_size(m);
            });
        for (auto& t : pool) t.join();
    }

    for (auto& part : found)
        for (auto& hit : part) hits.push_back(std::move(hit));
    sort_hits(hits);
    for (std::uint64_t v : visited) candidates += Nat{v};

    return SearchReport{b,
                        opts.convention,
                        EngineKind::Multiset,
                        std::move(sb.bound),
                        std::move(hits),
                        elapsed_ms_since(started),
                        std::move(candidates)};
}

SearchReport find(Base b, EngineKind engine, const SearchOptions& opts) {
    switch (resolve_engine(engine, b)) {
        case EngineKind::Linear: return find_linear(b, opts);
        default: return find_multiset(b, opts);
    }
}

std::optional<Nat> check_multiset(const DigitMultiset& ms, const PowerTable& table) {
    const std::uint32_t base = table.base().value();
    if (ms.counts.size() != base)
        throw std::invalid_argument("check_multiset: counts length does not match base");
    std::uint32_t total = 0;
    bool nonzero_digit = false;
    for (std::uint32_t d = 0; d < base; ++d) {
        total += ms.counts[d];
        if (d > 0 && ms.counts[d] > 0) nonzero_digit = true;
    }
    if (total != ms.size || ms.size == 0)
        throw std::invalid_argument("check_multiset: size does not match counts");
    if (!nonzero_digit)
        throw std::invalid_argument("check_multiset: all-zero digit multiset");

    Nat sum;
    for (std::uint32_t d = 0; d < base; ++d) {
        if (ms.counts[d] == 0) continue;
        Nat term = table.term(d);
        term *= ms.counts[d];
        sum += term;
    }
    if (digit_count(sum, table.base()) != ms.size) return std::nullopt;

    DigitVec rep = to_digits(sum, table.base());
    std::vector<std::uint32_t> tally(base, 0);
    for (std::uint8_t digit : rep.digits) ++tally[digit];
    if (tally != ms.counts) return std::nullopt;
    return sum;
}

std::optional<Nat> check_multiset(const DigitMultiset& ms, Base b, ZeroPowerConvention conv) {
    return check_multiset(ms, PowerTable(b, conv));
}

VerifyResult verify(const Nat& n, Base b, ZeroPowerConvention conv) {
    const PowerTable table(b, conv);
    VerifyResult result{false, n, to_digits(n, b), {}, {}};
    result.term_breakdown.reserve(result.representation.digits.size());
    for (std::uint8_t digit : result.representation.digits) {
        result.term_breakdown.emplace_back(digit, table.term(digit));
        result.power_sum += table.term(digit);
    }
    result.is_munchausen = (result.power_sum == n);
    return result;
}

Nat linear_space(Base b) {
    return search_bound(b).bound;
}

Nat multiset_space(Base b) {
    const std::uint32_t max_size = search_bound(b).max_digit_count;
    Nat total;
    for (std::uint32_t m = 1; m <= max_size; ++m) {
        total += binomial(m + b.value() - 1, b.value() - 1);
        total -= 1u;  // the all-zero multiset is never examined
    }
    return total;
}

EngineKind resolve_engine(EngineKind requested, Base b) {
    if (requested != EngineKind::Auto) return requested;
    return multiset_space(b) < linear_space(b) ? EngineKind::Multiset : EngineKind::Linear;
}

HitSetDiff diff_hits(const SearchReport& linear, const SearchReport& multiset) {
    HitSetDiff diff;
    std::size_t i = 0, j = 0;
    const auto& lhs = linear.hits;
    const auto& rhs = multiset.hits;
    while (i < lhs.size() || j < rhs.size()) {
        if (j == rhs.size() || (i < lhs.size() && lhs[i].value < rhs[j].value)) {
            diff.only_linear.push_back(lhs[i++].value);
        } else if (i == lhs.size() || rhs[j].value < lhs[i].value) {
            diff.only_multiset.push_back(rhs[j++].value);
        } else {
            ++i;
            ++j;
        }
    }
    return diff;
}

}  // namespace munch
