#include "output.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace gridcount::cli {

Cell Cell::number(std::uint64_t value) { return {Kind::Number, std::to_string(value)}; }

Cell Cell::number(gc_int128 value)
{
    std::array<char, 48> buffer{};
    if (gc_int128_format(value, buffer.data(), buffer.size()) != GC_OK)
        throw std::logic_error(gc_last_error());
    return {Kind::Number, buffer.data()};
}

Cell Cell::number(double value) { return {Kind::Number, format_real(value)}; }

Cell Cell::string(std::string value) { return {Kind::String, std::move(value)}; }

Cell Cell::null() { return {Kind::Null, {}}; }

std::string format_real(double value)
{
    std::array<char, 64> buffer{};
    std::snprintf(buffer.data(), buffer.size(), "%.15g", value);
    return buffer.data();
}

namespace {

std::string json_quote(const std::string& text)
{
    std::string out = "\"";
    for (const char c : text) {
        switch (c) {
        case '"':  out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        default:   out += c;
        }
    }
    out += '"';
    return out;
}

std::string csv_field(const Cell& cell)
{
    if (cell.kind != Cell::Kind::String || cell.text.find_first_of(",\"\n") == std::string::npos)
        return cell.text;
    std::string out = "\"";
    for (const char c : cell.text) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

void emit_csv(std::ostream& out, const Block& block)
{
    for (std::size_t i = 0; i < block.columns.size(); ++i)
        out << (i ? "," : "") << block.columns[i];
    out << '\n';
    for (const auto& row : block.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << csv_field(row[i]);
        out << '\n';
    }
}

void emit_json_lines(std::ostream& out, const Block& block)
{
    for (const auto& row : block.rows) {
        out << '{';
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << json_quote(block.columns[i]) << ':';
            switch (row[i].kind) {
            case Cell::Kind::Number: out << row[i].text; break;
            case Cell::Kind::String: out << json_quote(row[i].text); break;
            case Cell::Kind::Null:   out << "null"; break;
            }
        }
        out << "}\n";
    }
}

void emit_table(std::ostream& out, const Block& block)
{
    std::vector<std::size_t> widths(block.columns.size());
    for (std::size_t i = 0; i < widths.size(); ++i)
        widths[i] = block.columns[i].size();
    for (const auto& row : block.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            widths[i] = std::max(widths[i], row[i].text.size());
    }
    auto line = [&](auto&& text_of, auto&& right_align) {
        for (std::size_t i = 0; i < widths.size(); ++i) {
            const std::string text = text_of(i);
            const std::string pad(widths[i] - text.size(), ' ');
            out << (i ? "  " : "");
            if (right_align(i))
                out << pad << text;
            else
                out << text << (i + 1 < widths.size() ? pad : "");
        }
        out << '\n';
    };
    line([&](std::size_t i) { return block.columns[i]; }, [](std::size_t) { return false; });
    for (const auto& row : block.rows) {
        line([&](std::size_t i) { return row[i].text; },
             [&](std::size_t i) { return row[i].kind == Cell::Kind::Number; });
    }
}

} // namespace

void emit(std::ostream& out, Format format, const std::vector<Block>& blocks)
{
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        switch (format) {
        case Format::Csv:
            if (b)
                out << '\n';
            emit_csv(out, blocks[b]);
            break;
        case Format::JsonLines:
            emit_json_lines(out, blocks[b]);
            break;
        case Format::Table:
            if (b)
                out << '\n';
            emit_table(out, blocks[b]);
            break;
        }
    }
}

void emit_scalar(std::ostream& out, Format format, const Block& block)
{
    if (format == Format::Table && block.rows.size() == 1)
        out << block.rows.front().back().text << '\n';
    else
        emit(out, format, {block});
}

} // namespace gridcount::cli
