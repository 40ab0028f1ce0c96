#pragma once

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ck/linalg.hpp"

namespace ck {

inline constexpr const char* kReportVersion = "1.0.0";

/// Machine-readable result of one CLI command. Serialization is
/// deterministic: object keys in sorted order, every float as %.12e.
struct Report {
  std::string command;
  std::vector<double> signature;
  nlohmann::json payload;
  std::string version = kReportVersion;
};

namespace detail {

inline std::string format_double(double v) {
  if (std::isnan(v)) return "null";
  if (std::isinf(v)) return v > 0 ? "1e999" : "-1e999";  // not expected in reports
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12e", v);
  return buf;
}

inline void dump_json(std::ostream& os, const nlohmann::json& j, int depth) {
  const std::string pad(static_cast<std::size_t>(2 * depth), ' ');
  const std::string pad_in(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ",\n";
        first = false;
        os << pad_in << nlohmann::json(it.key()).dump() << ": ";
        dump_json(os, it.value(), depth + 1);
      }
      os << "\n" << pad << "}";
      return;
    }
    case nlohmann::json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      os << "[\n";
      bool first = true;
      for (const auto& item : j) {
        if (!first) os << ",\n";
        first = false;
        os << pad_in;
        dump_json(os, item, depth + 1);
      }
      os << "\n" << pad << "]";
      return;
    }
    case nlohmann::json::value_t::number_float:
      os << format_double(j.get<double>());
      return;
    default:
      os << j.dump();
      return;
  }
}

}  // namespace detail

inline nlohmann::json json_vector(const Vector& v) {
  nlohmann::json a = nlohmann::json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

inline nlohmann::json json_matrix(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

inline std::string to_json_text(const Report& r) {
  nlohmann::json envelope;
  envelope["command"] = r.command;
  envelope["signature"] = r.signature;
  envelope["payload"] = r.payload;
  envelope["version"] = r.version;
  std::ostringstream os;
  detail::dump_json(os, envelope, 0);
  os << "\n";
  return os.str();
}

}  // namespace ck
