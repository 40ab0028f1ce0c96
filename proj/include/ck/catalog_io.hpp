#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ck/classify.hpp"

namespace ck {

// Line-oriented catalog format, one entry per line:
//   rank|omega1|omega2|name|space|coset|curvature|foliation|base|fiber
// '#' starts a comment line. See docs/catalog-format.md.

inline std::string catalog_line(const CatalogEntry& e) {
  std::ostringstream os;
  os << e.rank << '|' << e.omega1_sign << '|' << e.omega2_sign << '|' << e.name << '|' << e.space
     << '|' << e.coset << '|' << e.curvature << '|' << (e.foliated ? "foliated" : "none") << '|'
     << e.base << '|' << e.fiber;
  return os.str();
}

/// Canonical full text of the catalog file (the shipped data file must
/// match this byte for byte).
inline std::string catalog_file_text() {
  std::ostringstream os;
  os << "# ck-catalog v1\n";
  os << "# rank|omega1|omega2|name|space|coset|curvature|foliation|base|fiber\n";
  for (const auto& e : catalog_entries()) os << catalog_line(e) << "\n";
  return os.str();
}

inline std::vector<std::string> split_fields(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

inline std::vector<CatalogEntry> parse_catalog(std::istream& in) {
  std::vector<CatalogEntry> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto f = split_fields(line, '|');
    if (f.size() != 10) throw std::runtime_error("malformed catalog line: " + line);
    CatalogEntry e;
    e.rank = std::stoi(f[0]);
    e.omega1_sign = f[1].at(0);
    e.omega2_sign = f[2].at(0);
    e.name = f[3];
    e.space = f[4];
    e.coset = f[5];
    e.curvature = f[6];
    e.foliated = (f[7] == "foliated");
    e.base = f[8];
    e.fiber = f[9];
    out.push_back(e);
  }
  return out;
}

inline std::vector<CatalogEntry> load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open catalog file: " + path);
  return parse_catalog(in);
}

inline std::string read_file_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace ck
