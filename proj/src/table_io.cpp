#include "symchar/table_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace symchar {

namespace {

[[noreturn]] void malformed(std::size_t line, const std::string& what) {
    throw std::runtime_error("table cache: line " + std::to_string(line) + ": " + what);
}

std::filesystem::path tableFile(const std::string& dir) {
    return std::filesystem::path(dir) / "tables.txt";
}

}  // namespace

std::string partition_token(const Partition& p) {
    if (p.empty()) return "-";
    std::string s;
    for (int i = 0; i < p.length(); ++i) {
        if (i) s += ',';
        s += std::to_string(p.part(i));
    }
    return s;
}

Partition parse_partition_token(const std::string& t) {
    if (t == "-") return Partition();
    if (t.empty()) throw std::invalid_argument("empty partition token");
    std::vector<int> parts;
    std::size_t i = 0;
    while (i < t.size()) {
        std::size_t j = i;
        long long v = 0;
        while (j < t.size() && t[j] >= '0' && t[j] <= '9') {
            v = v * 10 + (t[j] - '0');
            if (v > 1000000) throw std::invalid_argument("partition part too large");
            ++j;
        }
        if (j == i) throw std::invalid_argument("expected digit in partition token");
        parts.push_back(static_cast<int>(v));
        i = j;
        if (i < t.size()) {
            if (t[i] != ',') throw std::invalid_argument("expected ',' in partition token");
            ++i;
            if (i == t.size()) throw std::invalid_argument("trailing ',' in partition token");
        }
    }
    return Partition(parts);  // validates weakly decreasing positive
}

void write_tables(std::ostream& os, const TableMap& chiTable, const TableMap& kostkaTable) {
    os << kTableFormatHeader << '\n';
    for (const auto& [key, value] : chiTable)
        os << "chi " << partition_token(key.first) << '|' << partition_token(key.second)
           << ' ' << value << '\n';
    for (const auto& [key, value] : kostkaTable)
        os << "kostka " << partition_token(key.first) << '|' << partition_token(key.second)
           << ' ' << value << '\n';
}

void read_tables(std::istream& is, TableMap& chiTable, TableMap& kostkaTable) {
    std::string line;
    std::size_t lineNo = 0;
    if (!std::getline(is, line)) malformed(1, "empty file");
    ++lineNo;
    if (line != kTableFormatHeader)
        malformed(lineNo, "unsupported format header '" + line + "' (expected '" +
                              std::string(kTableFormatHeader) + "')");
    while (std::getline(is, line)) {
        ++lineNo;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string kind, pair;
        long long value;
        if (!(ls >> kind >> pair >> value)) malformed(lineNo, "expected 'kind la|mu value'");
        std::string rest;
        if (ls >> rest) malformed(lineNo, "trailing content '" + rest + "'");
        auto bar = pair.find('|');
        if (bar == std::string::npos) malformed(lineNo, "missing '|' separator");
        TableKey key;
        try {
            key.first = parse_partition_token(pair.substr(0, bar));
            key.second = parse_partition_token(pair.substr(bar + 1));
        } catch (const std::invalid_argument& e) {
            malformed(lineNo, e.what());
        }
        if (kind == "chi") {
            if (key.first.size() != key.second.size())
                malformed(lineNo, "chi entry with mismatched partition sizes");
            chiTable[key] = value;
        } else if (kind == "kostka") {
            if (value < 0) malformed(lineNo, "negative Kostka value");
            kostkaTable[key] = value;
        } else {
            malformed(lineNo, "unknown record kind '" + kind + "'");
        }
    }
}

void save_tables(const std::string& dir) {
    std::filesystem::create_directories(dir);
    std::filesystem::path target = tableFile(dir);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream os(tmp);
        if (!os) throw std::runtime_error("table cache: cannot write " + tmp.string());
        write_tables(os, chi_table_snapshot(), kostka_table_snapshot());
        if (!os) throw std::runtime_error("table cache: write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
}

bool load_tables(const std::string& dir) {
    std::filesystem::path target = tableFile(dir);
    std::ifstream is(target);
    if (!is) return false;
    TableMap chiTable, kostkaTable;
    read_tables(is, chiTable, kostkaTable);
    chi_table_merge(chiTable);
    kostka_table_merge(kostkaTable);
    return true;
}

}  // namespace symchar
