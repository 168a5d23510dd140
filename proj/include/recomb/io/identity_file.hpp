#ifndef RECOMB_IO_IDENTITY_FILE_HPP
#define RECOMB_IO_IDENTITY_FILE_HPP

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "recomb/core/identity.hpp"
#include "recomb/core/monomial.hpp"

namespace recomb {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline std::optional<int> header_value(std::string_view line, std::string_view key) {
  const auto at = line.find(key);
  if (at == std::string_view::npos) return std::nullopt;
  auto rest = line.substr(at + key.size());
  int v = 0;
  auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), v);
  if (ec != std::errc()) return std::nullopt;
  return v;
}

}  // namespace detail

/// Reads "<coefficient> <bracket monomial>" lines. A "# arity=n degree=d"
/// header fixes the shape; without it both are taken from the first term.
/// Other '#' lines are comments.
inline IdentityCombination parse_identity(std::istream& in, const std::string& source = "<input>") {
  std::optional<int> arity, degree;
  std::vector<std::pair<std::int64_t, Monomial>> terms;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto line = detail::trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (auto a = detail::header_value(line, "arity=")) arity = *a;
      if (auto d = detail::header_value(line, "degree=")) degree = *d;
      continue;
    }
    std::int64_t c = 0;
    const char* first = line.data();
    const char* last = line.data() + line.size();
    if (*first == '+') ++first;
    auto [p, ec] = std::from_chars(first, last, c);
    if (ec != std::errc() || p == last || (*p != ' ' && *p != '\t')) {
      throw ParseError(source, lineno, "expected '<integer> <monomial>'");
    }
    try {
      terms.emplace_back(c, parse_monomial(detail::trim(std::string_view(p, static_cast<std::size_t>(last - p)))));
    } catch (const std::invalid_argument& e) {
      throw ParseError(source, lineno, e.what());
    }
  }
  if (!arity || !degree) {
    if (terms.empty()) throw ParseError(source, lineno, "no header and no terms");
    if (!arity) arity = terms.front().second.arity();
    if (!degree) degree = terms.front().second.degree();
  }
  try {
    IdentityCombination id(*arity, *degree);
    for (const auto& [c, m] : terms) id.add(m, c);
    return id;
  } catch (const std::invalid_argument& e) {
    throw ParseError(source, lineno, e.what());
  }
}

inline IdentityCombination parse_identity(const std::string& text) {
  std::istringstream in(text);
  return parse_identity(in);
}

inline IdentityCombination read_identity_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return parse_identity(in, path.string());
}

inline void write_identity(std::ostream& out, const IdentityCombination& id) {
  out << "# arity=" << id.arity() << " degree=" << id.degree() << "\n";
  for (const auto& [m, c] : id.terms()) out << c << " " << m.to_string() << "\n";
}

inline std::string identity_text(const IdentityCombination& id) {
  std::ostringstream out;
  write_identity(out, id);
  return out.str();
}

inline void write_identity_file(const std::filesystem::path& path, const IdentityCombination& id) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  write_identity(out, id);
  if (!out) throw IoError("error writing " + path.string());
}

}  // namespace recomb

#endif  // RECOMB_IO_IDENTITY_FILE_HPP
