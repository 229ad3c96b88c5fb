#pragma once

// Output formatting shared by the command-line tool and the validation
// driver: shortest round-trip float rendering, and a small fixed-order
// table type emitted as CSV (header row, comma separator, LF endings).

#include <charconv>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace balking_ps {

// Shortest decimal string that round-trips to the same double.
inline std::string to_shortest(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::vector<std::string> row) { rows.push_back(std::move(row)); }
};

namespace detail {

inline void csv_field(std::ostream& os, const std::string& f) {
    if (f.find_first_of(",\"\n") == std::string::npos) {
        os << f;
        return;
    }
    os << '"';
    for (char c : f) {
        if (c == '"') os << '"';
        os << c;
    }
    os << '"';
}

}  // namespace detail

inline void write_csv(std::ostream& os, const Table& t) {
    for (std::size_t i = 0; i < t.header.size(); ++i) {
        if (i) os << ',';
        detail::csv_field(os, t.header[i]);
    }
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            detail::csv_field(os, row[i]);
        }
        os << '\n';
    }
}

}  // namespace balking_ps
