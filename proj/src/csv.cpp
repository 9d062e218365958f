#include "jointrank/csv.hpp"

#include <istream>
#include <ostream>

#include "jointrank/errors.hpp"

namespace jointrank::csv {

std::size_t Table::column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return i;
    throw SchemaError("missing column '" + name + "' in CSV header");
}

Table read(std::istream& in) {
    Table table;
    std::vector<std::string> fields;
    std::string field;
    bool in_quotes = false;
    bool any = false;
    auto end_field = [&] {
        fields.push_back(field);
        field.clear();
    };
    auto end_row = [&] {
        end_field();
        if (table.header.empty())
            table.header = fields;
        else
            table.rows.push_back(fields);
        fields.clear();
        any = false;
    };
    char c;
    while (in.get(c)) {
        if (in_quotes) {
            if (c == '"') {
                if (in.peek() == '"') {
                    in.get(c);
                    field.push_back('"');
                } else {
                    in_quotes = false;
                }
            } else {
                field.push_back(c);
            }
            any = true;
            continue;
        }
        switch (c) {
            case '"': in_quotes = true; any = true; break;
            case ',': end_field(); any = true; break;
            case '\r': break;
            case '\n':
                if (any || !fields.empty() || !field.empty()) end_row();
                break;
            default: field.push_back(c); any = true;
        }
    }
    if (in_quotes) throw ParseError("unterminated quoted field", table.rows.size() + 1);
    if (any || !fields.empty() || !field.empty()) end_row();
    if (table.header.empty()) throw SchemaError("empty CSV input: no header row");
    for (std::size_t r = 0; r < table.rows.size(); ++r)
        if (table.rows[r].size() != table.header.size())
            throw ParseError("row has " + std::to_string(table.rows[r].size()) +
                                 " fields, header has " + std::to_string(table.header.size()),
                             r + 1);
    return table;
}

std::string escape(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += '"';
    return out;
}

void write_row(std::ostream& out, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out << ',';
        out << escape(fields[i]);
    }
    out << '\n';
}

}  // namespace jointrank::csv
