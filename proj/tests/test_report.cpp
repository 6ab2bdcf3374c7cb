#include <doctest.h>

#include <string>
#include <vector>

#include <json.hpp>

#include "munchausen/report.hpp"

using munch::Base;
using munch::EngineKind;
using munch::Nat;
using munch::SearchOptions;
using munch::SearchReport;
using munch::ZeroPowerConvention;

namespace {

SearchReport search(std::uint32_t base, ZeroPowerConvention conv = ZeroPowerConvention::One) {
    SearchOptions opts;
    opts.convention = conv;
    opts.jobs = 1;
    return munch::find(Base{base}, EngineKind::Auto, opts);
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string::npos) nl = text.size();
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    return lines;
}

std::string trim(const std::string& s) {
    auto first = s.find_first_not_of(' ');
    if (first == std::string::npos) return "";
    auto last = s.find_last_not_of(' ');
    return s.substr(first, last - first + 1);
}

std::vector<std::string> row_cells(const std::string& line) {
    std::vector<std::string> cells;
    std::size_t pos = 0;
    while (true) {
        std::size_t bar = line.find('|', pos);
        if (bar == std::string::npos) {
            cells.push_back(trim(line.substr(pos)));
            break;
        }
        cells.push_back(trim(line.substr(pos, bar - pos)));
        pos = bar + 1;
    }
    return cells;
}

}  // namespace

TEST_CASE("table rows carry the exact cell contents") {
    std::vector<SearchReport> reports;
    for (std::uint32_t b = 7; b <= 8; ++b) reports.push_back(search(b));
    auto lines = lines_of(munch::render_table(reports));
    REQUIRE(lines.size() == 4);  // header, rule, two data rows

    auto header = row_cells(lines[0]);
    CHECK(header == std::vector<std::string>{"Base", "Munchausen Numbers", "Representation"});

    auto base7 = row_cells(lines[2]);
    CHECK(base7[0] == "7");
    CHECK(base7[1] == "1, 3665");
    CHECK(base7[2] == "[1]_7, [1,3,4,5,4]_7");

    auto base8 = row_cells(lines[3]);
    CHECK(base8[0] == "8");
    CHECK(base8[1] == "1");
    CHECK(base8[2] == "[1]_8");
}

TEST_CASE("empty report list renders a header-only table") {
    auto lines = lines_of(munch::render_table({}));
    REQUIRE(lines.size() == 2);
    CHECK(row_cells(lines[0])[0] == "Base");
}

TEST_CASE("b-file output") {
    CHECK(munch::render_bfile(search(10)) == "1 1\n2 3435\n");
    CHECK(munch::render_bfile(search(5)) == "1 1\n");

    SearchReport empty = search(5);
    empty.hits.clear();
    CHECK(munch::render_bfile(empty).empty());
}

TEST_CASE("json fields") {
    auto j = nlohmann::json::parse(munch::render_json(search(2)));
    CHECK(j["base"] == 2);
    CHECK(j["convention"] == "one");
    REQUIRE(j["hits"].size() == 2);
    CHECK(j["hits"][0]["value"] == "1");
    CHECK(j["hits"][1]["value"] == "2");
    CHECK(j["hits"][1]["digits"] == nlohmann::json::array({1, 0}));

    auto j10 = nlohmann::json::parse(munch::render_json(search(10)));
    CHECK(j10["bound"] == "20000000000");
    CHECK(j10["hits"][1]["digits"] == nlohmann::json::array({3, 4, 3, 5}));
    CHECK(j10["hits"][1]["terms"] ==
          nlohmann::json::array({"27", "256", "27", "3125"}));
}

TEST_CASE("json round trip re-verifies") {
    for (std::uint32_t b : {2u, 6u, 9u, 10u}) {
        SearchReport original = search(b);
        SearchReport parsed = munch::parse_report_json(munch::render_json(original));
        CHECK(parsed.base == original.base);
        CHECK(parsed.convention == original.convention);
        CHECK(parsed.engine == original.engine);
        CHECK(parsed.bound == original.bound);
        CHECK(parsed.candidates_examined == original.candidates_examined);
        REQUIRE(parsed.hits.size() == original.hits.size());
        for (std::size_t i = 0; i < parsed.hits.size(); ++i) {
            const auto& hit = parsed.hits[i];
            CHECK(hit.value == original.hits[i].value);
            CHECK(munch::verify(hit.value, parsed.base, parsed.convention).is_munchausen);
            CHECK(munch::from_digits(hit.representation) == hit.value);
        }
        // rendering the parsed report reproduces the bytes
        CHECK(munch::render_json(parsed) == munch::render_json(original));
    }
}

TEST_CASE("parse rejects malformed reports") {
    CHECK_THROWS_AS(munch::parse_report_json("not json"), std::invalid_argument);
    CHECK_THROWS_AS(munch::parse_report_json("{}"), std::invalid_argument);
    CHECK_THROWS_AS(munch::parse_report_json(R"({"base": 2})"), std::invalid_argument);
}

TEST_CASE("csv rows quote embedded commas") {
    std::string csv = munch::render_csv(search(10));
    auto lines = lines_of(csv);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "base,value,representation,convention");
    CHECK(lines[1] == "10,1,[1]_10,one");
    CHECK(lines[2] == "10,3435,\"[3,4,3,5]_10\",one");

    std::vector<SearchReport> both = {search(5), search(10)};
    auto multi = lines_of(munch::render_csv(both));
    REQUIRE(multi.size() == 4);
    CHECK(multi[1] == "5,1,[1]_5,one");
}

TEST_CASE("find text includes the term equations") {
    std::string text = munch::render_find_text(search(10));
    CHECK(text.find("base: 10") != std::string::npos);
    CHECK(text.find("bound: 20000000000") != std::string::npos);
    CHECK(text.find("3435 = [3,4,3,5]_10 = 3^3 + 4^4 + 3^3 + 5^5") != std::string::npos);
}

TEST_CASE("term equation formatting") {
    CHECK(munch::term_equation({{3, Nat{27}}, {4, Nat{256}}, {3, Nat{27}}, {5, Nat{3125}}}) ==
          "3^3 + 4^4 + 3^3 + 5^5");
    CHECK(munch::term_equation({{0, Nat{1}}}) == "0^0");
    CHECK(munch::term_equation({}).empty());
}

TEST_CASE("annotated zero hit flows through the formats") {
    SearchOptions opts;
    opts.convention = ZeroPowerConvention::Zero;
    opts.include_zero = true;
    opts.jobs = 1;
    SearchReport report = munch::find(Base{4}, EngineKind::Multiset, opts);
    REQUIRE_FALSE(report.hits.empty());
    REQUIRE(report.hits.front().value == Nat{0});

    std::string table = munch::render_table({report});
    CHECK(table.find("note: base 4, 0:") != std::string::npos);

    SearchReport parsed = munch::parse_report_json(munch::render_json(report));
    CHECK(parsed.hits.front().annotation == report.hits.front().annotation);

    std::string text = munch::render_find_text(report);
    CHECK(text.find("0 = [0]_4 = 0^0") != std::string::npos);
}
