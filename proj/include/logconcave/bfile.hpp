#pragma once

// OEIS-style b-files: one "index value" pair per line, '#' comments,
// consecutive indices starting anywhere, arbitrarily large values.

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "logconcave/integer.hpp"
#include "logconcave/sequence.hpp"

namespace logconcave {

struct BFile {
    long long offset = 0;  // index of the first value
    std::vector<Integer> values;

    friend bool operator==(const BFile& a, const BFile& b) {
        return a.offset == b.offset && a.values == b.values;
    }
};

class bfile_parse_error : public std::runtime_error {
  public:
    bfile_parse_error(int line, const std::string& message)
        : std::runtime_error("b-file line " + std::to_string(line) + ": " + message),
          line_(line) {}

    int line() const { return line_; }

  private:
    int line_;
};

inline BFile parse_bfile(std::istream& in) {
    BFile out;
    std::string line;
    int lineno = 0;
    bool have_any = false;
    long long expected = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        const std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        std::istringstream fields(line);
        std::string index_text;
        std::string value_text;
        std::string extra;
        fields >> index_text >> value_text;
        if (value_text.empty()) {
            throw bfile_parse_error(lineno, "expected 'index value'");
        }
        if (fields >> extra) {
            throw bfile_parse_error(lineno, "trailing content '" + extra + "'");
        }
        Integer index;
        try {
            index = parse_integer(index_text);
        } catch (const std::invalid_argument&) {
            throw bfile_parse_error(lineno, "bad index '" + index_text + "'");
        }
        Integer value;
        try {
            value = parse_integer(value_text);
        } catch (const std::invalid_argument&) {
            throw bfile_parse_error(lineno, "bad value '" + value_text + "'");
        }
        if (!index.fits_slong_p()) {
            throw bfile_parse_error(lineno, "index " + index.get_str() + " out of range");
        }
        const long long n = index.get_si();
        if (!have_any) {
            out.offset = n;
            expected = n;
            have_any = true;
        }
        if (n != expected) {
            throw bfile_parse_error(lineno, "index " + std::to_string(n) +
                                                " not consecutive (expected " +
                                                std::to_string(expected) + ")");
        }
        out.values.push_back(std::move(value));
        ++expected;
    }
    if (!have_any) {
        throw bfile_parse_error(lineno, "no data lines");
    }
    return out;
}

// Canonical form: optional '#'-prefixed header lines, then one
// "index value" line per entry. parse(emit(b)) == b, and emitting a
// parse is byte-identical to a canonical input modulo comments.
inline void emit_bfile(std::ostream& out, const BFile& bfile,
                       const std::vector<std::string>& comments = {}) {
    for (const std::string& comment : comments) {
        out << "# " << comment << "\n";
    }
    for (std::size_t i = 0; i < bfile.values.size(); ++i) {
        out << (bfile.offset + static_cast<long long>(i)) << " " << bfile.values[i].get_str()
            << "\n";
    }
}

// Adopts the values as an explicit sequence re-based to index 0; callers
// that surface the result should note the shift when offset != 0.
inline Explicit to_explicit(const BFile& bfile) { return Explicit{bfile.values}; }

}  // namespace logconcave
