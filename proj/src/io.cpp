#include "plscape/io.hpp"

#include "plscape/errors.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace plscape {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Strips comments and whitespace; empty result means "skip this line".
std::string_view content(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  return trim(line);
}

std::pair<Rational, Rational> parse_pair(std::string_view text, std::size_t line_no) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos) {
    throw ParseError(line_no, "expected two comma-separated numbers, got '" + std::string(text) + "'");
  }
  try {
    return {parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
  } catch (const std::invalid_argument& e) {
    throw ParseError(line_no, e.what());
  }
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  return in;
}

}  // namespace

PersistenceDiagram parse_diagram(std::istream& in) {
  std::vector<Interval> points;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    const auto text = content(line);
    if (text.empty()) continue;
    auto [birth, death] = parse_pair(text, line_no);
    if (!(birth < death)) {
      throw ParseError(line_no, "birth >= death (" + to_string(birth) + "," + to_string(death) + ")");
    }
    points.push_back({std::move(birth), std::move(death)});
  }
  return PersistenceDiagram(std::move(points));
}

PersistenceDiagram parse_diagram(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_diagram(in);
}

void write_diagram(std::ostream& out, const PersistenceDiagram& d) {
  for (const auto& p : d) out << to_string(p.birth) << ',' << to_string(p.death) << '\n';
}

std::string serialize(const PersistenceDiagram& d) {
  std::ostringstream out;
  write_diagram(out, d);
  return out.str();
}

Landscape parse_landscape(std::istream& in) {
  std::vector<PiecewiseLinearFunction> functions;
  std::string line;
  std::size_t line_no = 1;
  bool seen_header = false;
  for (; std::getline(in, line); ++line_no) {
    const auto text = content(line);
    if (text.empty()) continue;
    if (!seen_header) {
      if (text != "PLSC 1") throw ParseError(line_no, "expected 'PLSC 1' header, got '" + std::string(text) + "'");
      seen_header = true;
      continue;
    }
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError(line_no, "expected '<k>: t:v ...', got '" + std::string(text) + "'");
    }
    std::size_t k = 0;
    const auto label = trim(text.substr(0, colon));
    const auto [end, ec] = std::from_chars(label.data(), label.data() + label.size(), k);
    if (ec != std::errc() || end != label.data() + label.size() || label.empty()) {
      throw ParseError(line_no, "malformed level number '" + std::string(label) + "'");
    }
    if (k != functions.size() + 1) throw ParseError(line_no, "expected level " + std::to_string(functions.size() + 1));

    std::vector<Breakpoint> points;
    std::istringstream tokens{std::string(text.substr(colon + 1))};
    for (std::string token; tokens >> token;) {
      const auto sep = token.find(':');
      if (sep == std::string::npos) throw ParseError(line_no, "expected t:v, got '" + token + "'");
      try {
        points.push_back({parse_rational(std::string_view(token).substr(0, sep)),
                          parse_rational(std::string_view(token).substr(sep + 1))});
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
      }
    }
    try {
      functions.emplace_back(std::move(points));
    } catch (const InputError& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (!seen_header) throw ParseError(line_no, "missing 'PLSC 1' header");
  try {
    return Landscape(std::move(functions));
  } catch (const InputError& e) {
    throw ParseError(line_no, e.what());
  }
}

Landscape parse_landscape(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_landscape(in);
}

void write_landscape(std::ostream& out, const Landscape& l) {
  out << "PLSC 1\n";
  for (std::size_t k = 1; k <= l.depth(); ++k) {
    out << k << ':';
    for (const auto& p : l.level(k).breakpoints()) out << ' ' << to_string(p.t) << ':' << to_string(p.v);
    out << '\n';
  }
}

std::string serialize(const Landscape& l) {
  std::ostringstream out;
  write_landscape(out, l);
  return out.str();
}

std::vector<Rational> parse_weights(std::istream& in) {
  std::vector<Rational> weights;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    const auto text = content(line);
    if (text.empty()) continue;
    try {
      weights.push_back(parse_rational(text));
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
    if (weights.back() < 0) throw ParseError(line_no, "negative weight");
  }
  return weights;
}

std::vector<std::filesystem::path> parse_manifest(std::istream& in, const std::filesystem::path& base) {
  std::vector<std::filesystem::path> paths;
  std::string line;
  while (std::getline(in, line)) {
    const auto text = content(line);
    if (text.empty()) continue;
    std::filesystem::path p{std::string(text)};
    paths.push_back(p.is_absolute() ? p : base / p);
  }
  return paths;
}

PersistenceDiagram read_diagram_file(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_diagram(in);
}

Landscape read_landscape_file(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_landscape(in);
}

void write_text_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << contents;
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace plscape
