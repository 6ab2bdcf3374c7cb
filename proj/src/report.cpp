#include "munchausen/report.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace munch {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string join_values(const SearchReport& report) {
    std::string out;
    for (std::size_t i = 0; i < report.hits.size(); ++i) {
        if (i > 0) out += ", ";
        out += report.hits[i].value.to_decimal();
    }
    return out;
}

std::string join_representations(const SearchReport& report) {
    std::string out;
    for (std::size_t i = 0; i < report.hits.size(); ++i) {
        if (i > 0) out += ", ";
        out += to_string(report.hits[i].representation);
    }
    return out;
}

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

void append_csv_rows(std::string& out, const SearchReport& report) {
    for (const Hit& hit : report.hits) {
        out += std::to_string(report.base.value());
        out += ',';
        out += csv_field(hit.value.to_decimal());
        out += ',';
        out += csv_field(to_string(hit.representation));
        out += ',';
        out += to_string(report.convention);
        out += '\n';
    }
}

ordered_json report_to_json(const SearchReport& report) {
    ordered_json j;
    j["base"] = report.base.value();
    j["convention"] = to_string(report.convention);
    j["engine"] = to_string(report.engine);
    j["bound"] = report.bound.to_decimal();
    ordered_json hits = ordered_json::array();
    for (const Hit& hit : report.hits) {
        ordered_json h;
        h["value"] = hit.value.to_decimal();
        ordered_json digits = ordered_json::array();
        for (std::uint8_t d : hit.representation.digits) digits.push_back(d);
        h["digits"] = std::move(digits);
        ordered_json terms = ordered_json::array();
        for (const auto& [digit, term] : hit.term_breakdown) terms.push_back(term.to_decimal());
        h["terms"] = std::move(terms);
        if (!hit.annotation.empty()) h["annotation"] = hit.annotation;
        hits.push_back(std::move(h));
    }
    j["hits"] = std::move(hits);
    j["elapsed_ms"] = report.elapsed_ms;
    if (auto small = report.candidates_examined.to_uint64())
        j["candidates_examined"] = *small;
    else
        j["candidates_examined"] = report.candidates_examined.to_decimal();
    return j;
}

SearchReport report_from_json(const ordered_json& j) {
    Base base{j.at("base").get<std::uint32_t>()};
    auto conv = convention_from_string(j.at("convention").get<std::string>());
    auto engine = engine_from_string(j.at("engine").get<std::string>());
    if (!conv || !engine)
        throw std::invalid_argument("report: unknown convention or engine");

    SearchReport report{base, *conv, *engine, Nat::from_decimal(j.at("bound").get<std::string>()),
                        {},   0,     {}};
    for (const auto& h : j.at("hits")) {
        Hit hit{Nat::from_decimal(h.at("value").get<std::string>()), DigitVec{{}, base}, {}, {}};
        for (const auto& d : h.at("digits"))
            hit.representation.digits.push_back(d.get<std::uint8_t>());
        const auto& terms = h.at("terms");
        if (terms.size() != hit.representation.digits.size())
            throw std::invalid_argument("report: terms do not match digits");
        for (std::size_t i = 0; i < terms.size(); ++i)
            hit.term_breakdown.emplace_back(hit.representation.digits[i],
                                            Nat::from_decimal(terms[i].get<std::string>()));
        if (h.contains("annotation")) hit.annotation = h.at("annotation").get<std::string>();
        report.hits.push_back(std::move(hit));
    }
    report.elapsed_ms = j.at("elapsed_ms").get<std::uint64_t>();
    const auto& candidates = j.at("candidates_examined");
    report.candidates_examined = candidates.is_string()
                                     ? Nat::from_decimal(candidates.get<std::string>())
                                     : Nat{candidates.get<std::uint64_t>()};
    return report;
}

}  // namespace

std::string render_table(const std::vector<SearchReport>& reports) {
    static constexpr std::array<std::string_view, 3> kHeaders = {"Base", "Munchausen Numbers",
                                                                 "Representation"};
    std::vector<std::array<std::string, 3>> rows;
    std::vector<std::string> notes;
    rows.reserve(reports.size());
    for (const SearchReport& report : reports) {
        rows.push_back(
            {std::to_string(report.base.value()), join_values(report), join_representations(report)});
        for (const Hit& hit : report.hits) {
            if (!hit.annotation.empty())
                notes.push_back("note: base " + std::to_string(report.base.value()) + ", " +
                                hit.value.to_decimal() + ": " + hit.annotation);
        }
    }

    std::array<std::size_t, 3> widths{};
    for (std::size_t c = 0; c < 3; ++c) widths[c] = kHeaders[c].size();
    for (const auto& row : rows)
        for (std::size_t c = 0; c < 3; ++c) widths[c] = std::max(widths[c], row[c].size());

    std::string out;
    auto append_row = [&](std::string_view a, std::string_view b, std::string_view c) {
        std::string line;
        line.append(a);
        line.append(widths[0] - a.size(), ' ');
        line += " | ";
        line.append(b);
        line.append(widths[1] - b.size(), ' ');
        line += " | ";
        line.append(c);
        out += line;
        out += '\n';
    };
    append_row(kHeaders[0], kHeaders[1], kHeaders[2]);
    out.append(widths[0] + 1, '-');
    out += '+';
    out.append(widths[1] + 2, '-');
    out += '+';
    out.append(widths[2] + 1, '-');
    out += '\n';
    for (const auto& row : rows) append_row(row[0], row[1], row[2]);
    for (const auto& note : notes) {
        out += note;
        out += '\n';
    }
    return out;
}

std::string render_bfile(const SearchReport& report) {
    std::string out;
    std::size_t index = 1;
    for (const Hit& hit : report.hits) {
        out += std::to_string(index++);
        out += ' ';
        out += hit.value.to_decimal();
        out += '\n';
    }
    return out;
}

std::string render_json(const SearchReport& report) {
    return report_to_json(report).dump(2) + "\n";
}

std::string render_json(const std::vector<SearchReport>& reports) {
    ordered_json arr = ordered_json::array();
    for (const SearchReport& report : reports) arr.push_back(report_to_json(report));
    return arr.dump(2) + "\n";
}

SearchReport parse_report_json(std::string_view text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("report: bad JSON: ") + e.what());
    }
    try {
        return report_from_json(j);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("report: bad report JSON: ") + e.what());
    }
}

std::string render_csv(const SearchReport& report) {
    std::string out = "base,value,representation,convention\n";
    append_csv_rows(out, report);
    return out;
}

std::string render_csv(const std::vector<SearchReport>& reports) {
    std::string out = "base,value,representation,convention\n";
    for (const SearchReport& report : reports) append_csv_rows(out, report);
    return out;
}

std::string render_find_text(const SearchReport& report) {
    std::ostringstream out;
    out << "base: " << report.base.value() << '\n';
    out << "convention: " << to_string(report.convention) << '\n';
    out << "engine: " << to_string(report.engine) << '\n';
    out << "bound: " << report.bound << '\n';
    out << "candidates examined: " << report.candidates_examined << '\n';
    out << "elapsed: " << report.elapsed_ms << " ms\n";
    out << "hits (" << report.hits.size() << "):\n";
    for (const Hit& hit : report.hits) {
        out << "  " << hit.value << " = " << to_string(hit.representation) << " = "
            << term_equation(hit.term_breakdown);
        if (!hit.annotation.empty()) out << "  (" << hit.annotation << ")";
        out << '\n';
    }
    return out.str();
}

std::string term_equation(const std::vector<std::pair<std::uint8_t, Nat>>& breakdown) {
    std::string out;
    for (std::size_t i = 0; i < breakdown.size(); ++i) {
        if (i > 0) out += " + ";
        unsigned digit = breakdown[i].first;
        out += std::to_string(digit);
        out += '^';
        out += std::to_string(digit);
    }
    return out;
}

}  // namespace munch
