#pragma once

// The .loop text format:
//
//   # optional comment lines
//   order N
//   N lines of N space-separated integers
//   alpha a0 a1 ... a(N-1)     (optional)
//   name STRING                (optional)

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "loopkit/loop_table.hpp"
#include "loopkit/selfmap.hpp"

namespace loopkit {

struct LoopFile {
  LoopTable table;
  std::optional<SelfMap> alpha;
  std::optional<std::string> name;
};

namespace detail {

[[noreturn]] inline void format_error(std::size_t line, const std::string& msg) {
  Error err(Errc::FormatError, "line " + std::to_string(line) + ": " + msg);
  err.line = line;
  throw err;
}

inline std::vector<long long> parse_ints(const std::string& text, std::size_t line) {
  std::istringstream in(text);
  std::vector<long long> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      format_error(line, "expected an integer, got '" + tok + "'");
    }
    if (used != tok.size()) format_error(line, "expected an integer, got '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace detail

inline LoopFile parse_loop_file(std::istream& in) {
  std::vector<std::pair<std::size_t, std::string>> lines;
  {
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
      ++number;
      const std::string line = detail::trim(raw);
      if (line.empty() || line[0] == '#') continue;
      lines.emplace_back(number, line);
    }
  }
  std::size_t idx = 0;
  if (idx >= lines.size() || lines[idx].second.rfind("order", 0) != 0) {
    detail::format_error(idx < lines.size() ? lines[idx].first : 1, "expected 'order N'");
  }
  const auto order_vals = detail::parse_ints(lines[idx].second.substr(5), lines[idx].first);
  if (order_vals.size() != 1 || order_vals[0] < 1 || order_vals[0] > static_cast<long long>(kMaxTableOrder)) {
    detail::format_error(lines[idx].first, "expected 'order N' with 1 <= N <= " + std::to_string(kMaxTableOrder));
  }
  const auto n = static_cast<std::size_t>(order_vals[0]);
  ++idx;

  std::vector<std::vector<long long>> rows;
  std::vector<std::size_t> row_lines;
  for (std::size_t r = 0; r < n; ++r, ++idx) {
    if (idx >= lines.size()) detail::format_error(lines.back().first, "expected " + std::to_string(n) + " table rows");
    auto vals = detail::parse_ints(lines[idx].second, lines[idx].first);
    if (vals.size() != n) {
      detail::format_error(lines[idx].first, "expected " + std::to_string(n) + " entries, got " + std::to_string(vals.size()));
    }
    rows.push_back(std::move(vals));
    row_lines.push_back(lines[idx].first);
  }

  std::optional<LoopTable> table;
  try {
    table = build_loop(rows);
  } catch (Error& err) {
    const std::size_t line = err.row ? row_lines[*err.row] : row_lines.front();
    Error located(err.code(), "line " + std::to_string(line) + ": " + err.what());
    located.row = err.row;
    located.col = err.col;
    located.line = line;
    throw located;
  }

  LoopFile file{*table, std::nullopt, std::nullopt};
  for (; idx < lines.size(); ++idx) {
    const auto& [number, text] = lines[idx];
    if (text.rfind("alpha", 0) == 0 && !file.alpha) {
      const auto vals = detail::parse_ints(text.substr(5), number);
      if (vals.size() != n) detail::format_error(number, "alpha needs " + std::to_string(n) + " entries");
      std::vector<Element> img;
      for (long long v : vals) {
        if (v < 0 || static_cast<std::size_t>(v) >= n) detail::format_error(number, "alpha entry out of range");
        img.push_back(static_cast<Element>(v));
      }
      file.alpha = make_selfmap(std::move(img));
    } else if (text.rfind("name", 0) == 0 && !file.name && (text.size() == 4 || text[4] == ' ' || text[4] == '\t')) {
      file.name = detail::trim(text.substr(4));
    } else {
      detail::format_error(number, "unexpected line '" + text + "'");
    }
  }
  return file;
}

inline LoopFile load_loop_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoError, "cannot open '" + path.string() + "'");
  return parse_loop_file(in);
}

/// Returns the table and alpha, as the file stored them (not normalized).
inline std::pair<LoopTable, std::optional<SelfMap>> load_table(const std::filesystem::path& path) {
  LoopFile f = load_loop_file(path);
  return {std::move(f.table), std::move(f.alpha)};
}

inline void write_loop_file(std::ostream& out, const LoopTable& t, const std::optional<SelfMap>& alpha,
                            const std::optional<std::string>& name = std::nullopt) {
  const std::size_t n = t.order();
  out << "order " << n << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j) out << ' ';
      out << t.mul(static_cast<Element>(i), static_cast<Element>(j));
    }
    out << '\n';
  }
  if (alpha) out << "alpha " << format_selfmap(*alpha) << '\n';
  if (name) out << "name " << *name << '\n';
}

inline void save_table(const LoopTable& t, const std::optional<SelfMap>& alpha, const std::filesystem::path& path,
                       const std::optional<std::string>& name = std::nullopt) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::IoError, "cannot write '" + path.string() + "'");
  write_loop_file(out, t, alpha, name);
  out.flush();
  if (!out) throw Error(Errc::IoError, "write failed for '" + path.string() + "'");
}

}  // namespace loopkit
