// munchausen_main.cpp - command-line front end.
//
// Subcommands:
//   find        search one base for Munchausen numbers
//   table       search a base range and print the classic three-column table
//   verify      check a single number, with its term breakdown
//   bound       print the search bound 2*b^b for a base
//   crosscheck  run both engines against each other over a base range
//
// Exit codes are a stable contract: 0 success / member, 1 non-member or
// engine mismatch, 2 usage error, 3 engine cap refusal.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "munchausen/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

unsigned default_jobs() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

struct BaseRange {
    std::uint32_t lo = 2;
    std::uint32_t hi = 10;
};

std::optional<BaseRange> parse_base_range(const std::string& text) {
    auto sep = text.find("..");
    if (sep == std::string::npos || sep == 0 || sep + 2 >= text.size()) return std::nullopt;
    BaseRange range;
    try {
        std::size_t used = 0;
        range.lo = static_cast<std::uint32_t>(std::stoul(text.substr(0, sep), &used));
        if (used != sep) return std::nullopt;
        std::string rest = text.substr(sep + 2);
        range.hi = static_cast<std::uint32_t>(std::stoul(rest, &used));
        if (used != rest.size()) return std::nullopt;
    } catch (const std::exception&) {
        return std::nullopt;
    }
    if (range.lo < munch::Base::kMin || range.hi > munch::Base::kMax || range.lo > range.hi)
        return std::nullopt;
    return range;
}

// "[1,3,1]" -> digit vector in the given base.
std::optional<munch::DigitVec> parse_digit_list(const std::string& text, munch::Base base) {
    if (text.size() < 3 || text.front() != '[' || text.back() != ']') return std::nullopt;
    munch::DigitVec result{{}, base};
    std::string body = text.substr(1, text.size() - 2);
    std::size_t pos = 0;
    while (pos <= body.size()) {
        auto comma = body.find(',', pos);
        std::string item = body.substr(pos, comma == std::string::npos ? std::string::npos
                                                                       : comma - pos);
        if (item.empty()) return std::nullopt;
        try {
            std::size_t used = 0;
            unsigned long digit = std::stoul(item, &used);
            if (used != item.size() || digit >= base.value()) return std::nullopt;
            result.digits.push_back(static_cast<std::uint8_t>(digit));
        } catch (const std::exception&) {
            return std::nullopt;
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (result.digits.empty()) return std::nullopt;
    return result;
}

bool write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return true;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open " << path << " for writing\n";
        return false;
    }
    out << text;
    return bool(out);
}

void print_rate_line(const munch::SearchReport& report) {
    std::cerr << "examined " << report.candidates_examined.to_decimal() << " candidates in "
              << report.elapsed_ms << " ms";
    auto count = report.candidates_examined.to_uint64();
    if (count && report.elapsed_ms > 0)
        std::cerr << " (" << (*count * 1000 / report.elapsed_ms) << " candidates/s)";
    std::cerr << '\n';
}

struct CommonFlags {
    std::string convention = "one";
    std::string engine = "auto";
    std::string format = "text";
    std::string out_path;
    bool include_zero = false;
    unsigned jobs = default_jobs();
    std::uint64_t linear_ceiling = 1'000'000'000;
    bool allow_slow = false;

    munch::SearchOptions to_options() const {
        munch::SearchOptions opts;
        opts.convention = *munch::convention_from_string(convention);
        opts.include_zero = include_zero;
        opts.jobs = jobs;
        opts.linear_ceiling = linear_ceiling;
        opts.override_caps = allow_slow;
        return opts;
    }
};

void add_search_flags(CLI::App& cmd, CommonFlags& flags, bool with_engine) {
    cmd.add_option("--convention", flags.convention,
                   "Value of the 0^0 term: one (standard) or zero (variant; changes membership)")
        ->check(CLI::IsMember({"one", "zero"}))
        ->capture_default_str();
    if (with_engine)
        cmd.add_option("--engine", flags.engine, "Search engine")
            ->check(CLI::IsMember({"auto", "linear", "multiset"}))
            ->capture_default_str();
    cmd.add_option("--out", flags.out_path, "Write output to a file instead of stdout");
    cmd.add_flag("--include-zero", flags.include_zero,
                 "Also test n = 0, outside the standard interval [1, 2*b^b]");
    cmd.add_option("--jobs", flags.jobs, "Worker thread count")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd.add_option("--linear-ceiling", flags.linear_ceiling,
                   "Candidate ceiling for the linear engine")
        ->capture_default_str();
    cmd.add_flag("--allow-slow", flags.allow_slow,
                 "Override engine caps, accepting a possibly enormous runtime");
}

int cmd_find(std::uint32_t base_value, const CommonFlags& flags) {
    munch::Base base{base_value};
    munch::SearchReport report = munch::find(base, *munch::engine_from_string(flags.engine),
                                             flags.to_options());
    print_rate_line(report);
    std::string text;
    if (flags.format == "text")
        text = munch::render_find_text(report);
    else if (flags.format == "json")
        text = munch::render_json(report);
    else if (flags.format == "csv")
        text = munch::render_csv(report);
    else
        text = munch::render_bfile(report);
    return write_output(flags.out_path, text) ? kExitOk : kExitUsage;
}

int cmd_table(const BaseRange& range, const CommonFlags& flags) {
    std::vector<munch::SearchReport> reports;
    for (std::uint32_t b = range.lo; b <= range.hi; ++b)
        reports.push_back(munch::find(munch::Base{b},
                                      *munch::engine_from_string(flags.engine),
                                      flags.to_options()));
    std::string text;
    if (flags.format == "text")
        text = munch::render_table(reports);
    else if (flags.format == "json")
        text = munch::render_json(reports);
    else
        text = munch::render_csv(reports);
    return write_output(flags.out_path, text) ? kExitOk : kExitUsage;
}

int cmd_verify(const std::string& number, std::uint32_t base_value, const std::string& convention,
               bool radix_input, const std::string& out_path) {
    munch::Base base{base_value};
    munch::Nat value;
    if (radix_input) {
        auto digits = parse_digit_list(number, base);
        if (!digits) {
            std::cerr << "error: expected a bracketed digit list like [1,3,1] with digits below "
                      << base.value() << "\n";
            return kExitUsage;
        }
        value = munch::from_digits(*digits);
    } else {
        try {
            value = munch::Nat::from_decimal(number);
        } catch (const std::invalid_argument&) {
            std::cerr << "error: '" << number << "' is not a decimal number\n";
            return kExitUsage;
        }
    }

    auto conv = *munch::convention_from_string(convention);
    munch::VerifyResult result = munch::verify(value, base, conv);
    std::ostringstream out;
    out << result.value << " = " << munch::to_string(result.representation) << '\n';
    out << munch::term_equation(result.term_breakdown) << " = " << result.power_sum << '\n';
    out << result.value << " is " << (result.is_munchausen ? "" : "not ")
        << "a Munchausen number in base " << base.value();
    if (conv == munch::ZeroPowerConvention::Zero) out << " under convention zero";
    out << '\n';
    if (!write_output(out_path, out.str())) return kExitUsage;
    return result.is_munchausen ? kExitOk : kExitNegative;
}

int cmd_bound(std::uint32_t base_value, const std::string& format, const std::string& out_path) {
    munch::SearchBound sb = munch::search_bound(munch::Base{base_value});
    std::ostringstream out;
    if (format == "json") {
        nlohmann::ordered_json j;
        j["base"] = sb.base.value();
        j["bound"] = sb.bound.to_decimal();
        j["max_digit_count"] = sb.max_digit_count;
        out << j.dump(2) << '\n';
    } else {
        out << "base: " << sb.base.value() << '\n';
        out << "bound: " << sb.bound << '\n';
        out << "max_digit_count: " << sb.max_digit_count << '\n';
    }
    return write_output(out_path, out.str()) ? kExitOk : kExitUsage;
}

int cmd_crosscheck(const BaseRange& range, const CommonFlags& flags) {
    bool mismatch = false;
    std::ostringstream out;
    for (std::uint32_t b = range.lo; b <= range.hi; ++b) {
        for (auto conv : {munch::ZeroPowerConvention::One, munch::ZeroPowerConvention::Zero}) {
            munch::SearchOptions opts = flags.to_options();
            opts.convention = conv;
            munch::SearchReport linear = munch::find_linear(munch::Base{b}, opts);
            munch::SearchReport multiset = munch::find_multiset(munch::Base{b}, opts);
            munch::HitSetDiff diff = munch::diff_hits(linear, multiset);
            out << "base " << b << " convention " << munch::to_string(conv) << ": linear "
                << linear.candidates_examined << " candidates, multiset "
                << multiset.candidates_examined << " candidates, " << linear.hits.size()
                << " hit" << (linear.hits.size() == 1 ? "" : "s") << " -- "
                << (diff.empty() ? "OK" : "MISMATCH") << '\n';
            if (!diff.empty()) {
                mismatch = true;
                auto print_side = [&out](const char* label, const std::vector<munch::Nat>& values) {
                    if (values.empty()) return;
                    out << "  " << label << ":";
                    for (const munch::Nat& v : values) out << ' ' << v;
                    out << '\n';
                };
                print_side("only linear", diff.only_linear);
                print_side("only multiset", diff.only_multiset);
            }
        }
    }
    if (!write_output(flags.out_path, out.str())) return kExitUsage;
    return mismatch ? kExitNegative : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Munchausen number search: numbers equal to the sum of their own base-b "
                 "digits each raised to itself"};
    app.require_subcommand(1);

    // find
    auto* find_cmd = app.add_subcommand("find", "Search one base exhaustively");
    std::uint32_t find_base = 0;
    CommonFlags find_flags;
    find_cmd->add_option("--base", find_base, "Radix to search")
        ->required()
        ->check(CLI::Range(munch::Base::kMin, munch::Base::kMax));
    find_cmd->add_option("--format", find_flags.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv", "bfile"}))
        ->capture_default_str();
    add_search_flags(*find_cmd, find_flags, true);

    // table
    auto* table_cmd = app.add_subcommand("table", "Search a base range, print the result table");
    std::string table_range = "2..10";
    CommonFlags table_flags;
    table_cmd->add_option("--bases", table_range, "Inclusive base range A..B")
        ->capture_default_str();
    table_cmd->add_option("--format", table_flags.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    add_search_flags(*table_cmd, table_flags, true);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Check whether one number is Munchausen");
    std::string verify_number;
    std::uint32_t verify_base = 0;
    std::string verify_convention = "one";
    std::string verify_out;
    bool verify_radix_input = false;
    verify_cmd->add_option("number", verify_number, "Number to check (decimal)")->required();
    verify_cmd->add_option("--base", verify_base, "Radix")
        ->required()
        ->check(CLI::Range(munch::Base::kMin, munch::Base::kMax));
    verify_cmd->add_option("--convention", verify_convention, "Value of the 0^0 term")
        ->check(CLI::IsMember({"one", "zero"}))
        ->capture_default_str();
    verify_cmd->add_flag("--radix-input", verify_radix_input,
                         "Interpret the number as a bracketed digit list like [1,3,1] in --base");
    verify_cmd->add_option("--out", verify_out, "Write output to a file instead of stdout");

    // bound
    auto* bound_cmd = app.add_subcommand("bound", "Print the search bound 2*b^b");
    std::uint32_t bound_base = 0;
    std::string bound_format = "text";
    std::string bound_out;
    bound_cmd->add_option("--base", bound_base, "Radix")
        ->required()
        ->check(CLI::Range(munch::Base::kMin, munch::Base::kMax));
    bound_cmd->add_option("--format", bound_format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    bound_cmd->add_option("--out", bound_out, "Write output to a file instead of stdout");

    // crosscheck
    auto* cross_cmd =
        app.add_subcommand("crosscheck", "Run both engines over a base range, compare hit sets");
    std::string cross_range = "2..8";
    CommonFlags cross_flags;
    cross_cmd->add_option("--bases", cross_range, "Inclusive base range A..B")
        ->capture_default_str();
    add_search_flags(*cross_cmd, cross_flags, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (find_cmd->parsed()) return cmd_find(find_base, find_flags);
        if (table_cmd->parsed()) {
            auto range = parse_base_range(table_range);
            if (!range) {
                std::cerr << "error: --bases expects an ascending range A..B within ["
                          << munch::Base::kMin << ", " << munch::Base::kMax << "]\n";
                return kExitUsage;
            }
            return cmd_table(*range, table_flags);
        }
        if (verify_cmd->parsed())
            return cmd_verify(verify_number, verify_base, verify_convention, verify_radix_input,
                              verify_out);
        if (bound_cmd->parsed()) return cmd_bound(bound_base, bound_format, bound_out);
        if (cross_cmd->parsed()) {
            auto range = parse_base_range(cross_range);
            if (!range) {
                std::cerr << "error: --bases expects an ascending range A..B within ["
                          << munch::Base::kMin << ", " << munch::Base::kMax << "]\n";
                return kExitUsage;
            }
            return cmd_crosscheck(*range, cross_flags);
        }
    } catch (const munch::CapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
