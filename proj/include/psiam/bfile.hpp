#pragma once

/** OEIS b-file text: one "index value" line per term, no header. */

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "checked.hpp"

namespace psiam {

inline std::string export_bfile(const std::vector<u64> &values, u64 offset = 1) {
    if (values.empty())
        throw domain_error("export_bfile: empty sequence");
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        out += std::to_string(offset + i);
        out += ' ';
        out += std::to_string(values[i]);
        out += '\n';
    }
    return out;
}

/// Values of a b-file in file order. Blank lines and '#' comments are skipped.
inline std::vector<u64> parse_bfile(std::string_view text) {
    std::vector<u64> values;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream fields(line);
        u64 index, value;
        if (!(fields >> index >> value))
            throw domain_error("parse_bfile: malformed line '" + line + "'");
        values.push_back(value);
    }
    return values;
}

} // namespace psiam
