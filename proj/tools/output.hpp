#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gridcount/gridcount.h"

namespace gridcount::cli {

enum class Format { Table, Csv, JsonLines };

// One rendered value. Numbers are pre-formatted text; strings are quoted in
// json-lines; null renders empty in csv/table and as null in json-lines.
struct Cell {
    enum class Kind { Number, String, Null };
    Kind kind = Kind::Null;
    std::string text;

    static Cell number(std::uint64_t value);
    static Cell number(gc_int128 value);
    static Cell number(double value);
    static Cell string(std::string value);
    static Cell null();
};

struct Block {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

// 15 significant digits, C locale.
std::string format_real(double value);

// Writes blocks in order; csv and table separate blocks with a blank line.
void emit(std::ostream& out, Format format, const std::vector<Block>& blocks);

// Table format for a single scalar answer prints the bare value.
void emit_scalar(std::ostream& out, Format format, const Block& block);

} // namespace gridcount::cli
