#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jointrank::csv {

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    // Index of a header column; throws SchemaError when absent.
    std::size_t column(const std::string& name) const;
};

// Comma-delimited, double-quote quoting with "" escapes, CR/LF tolerant.
Table read(std::istream& in);

std::string escape(const std::string& field);
void write_row(std::ostream& out, const std::vector<std::string>& fields);

}  // namespace jointrank::csv
