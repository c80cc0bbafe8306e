#pragma once

#include "plscape/diagram.hpp"
#include "plscape/landscape.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace plscape {

// Diagram file: one "birth,death" per line; literals are decimals ("-3.25")
// or fractions ("-13/4"); '#' starts a comment; blank lines are ignored.
//
// Landscape file: a "PLSC 1" header, then one line per level in order,
// "<k>: t1:v1 t2:v2 ...". Same comment rules.
//
// Parse errors throw ParseError with the 1-based line number.

PersistenceDiagram parse_diagram(std::istream& in);
PersistenceDiagram parse_diagram(std::string_view text);
void write_diagram(std::ostream& out, const PersistenceDiagram& d);
std::string serialize(const PersistenceDiagram& d);

Landscape parse_landscape(std::istream& in);
Landscape parse_landscape(std::string_view text);
void write_landscape(std::ostream& out, const Landscape& l);
std::string serialize(const Landscape& l);

/// One nonnegative rational per line (level weights w_1, w_2, ...).
std::vector<Rational> parse_weights(std::istream& in);

/// One path per line; relative paths resolve against `base`.
std::vector<std::filesystem::path> parse_manifest(std::istream& in, const std::filesystem::path& base);

/// Whole-file helpers; throw IoError when the file cannot be opened.
PersistenceDiagram read_diagram_file(const std::filesystem::path& path);
Landscape read_landscape_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& contents);

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace plscape
