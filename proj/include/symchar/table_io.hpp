#pragma once

// Plain-text persistence for the character / Kostka memo tables.
//
// Format (line-oriented, endianness-independent):
//   symchar-tables 1
//   chi 3,1|2,1,1 -1
//   kostka 2,1|1,1,1 2
// Partitions are comma-joined parts, `-` for the empty partition. Loading a
// file with a different version header fails; a missing file is not an error.

#include "symchar/char_table.hpp"

#include <iosfwd>
#include <string>

namespace symchar {

inline constexpr const char* kTableFormatHeader = "symchar-tables 1";

std::string partition_token(const Partition& p);       // "3,1" or "-"
Partition parse_partition_token(const std::string& t);  // throws on malformed input

void write_tables(std::ostream& os, const TableMap& chiTable, const TableMap& kostkaTable);
// throws std::runtime_error (with line number) on malformed content
void read_tables(std::istream& is, TableMap& chiTable, TableMap& kostkaTable);

// snapshot the in-process memo tables into <dir>/tables.txt (atomic rename)
void save_tables(const std::string& dir);
// merge <dir>/tables.txt into the in-process memo tables; returns false when
// the file does not exist, throws std::runtime_error when it is malformed
bool load_tables(const std::string& dir);

}  // namespace symchar
