#include "atlas/notation.hpp"

#include <cctype>
#include <charconv>

#include "atlas/error.hpp"

namespace atlas {
namespace {

// Pulls every unsigned integer out of `text`, in order.
std::vector<std::uint64_t> numbers(std::string_view text) {
  std::vector<std::uint64_t> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc()) throw Error(Errc::ParseError, "number out of range in '" + std::string(text) + "'");
    out.push_back(v);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string format_spectrum(const Spectrum& s, bool compact) {
  std::string out = "(" + std::to_string(s.lines) + (compact ? ";" : "; ");
  bool first = true;
  for (const auto& [size, count] : s.sizes) {
    if (!first) out += compact ? "," : ", ";
    first = false;
    out += std::to_string(size);
  }
  return out + ")";
}

std::string format_vstar(const VStar& v) {
  std::string out = "{";
  bool first = true;
  for (const auto& [mult, count] : v.histogram) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(mult) + "^" + std::to_string(count);
  }
  return out + "}";
}

std::string format_line(const RotationLine& line) {
  std::string out = "[";
  for (std::size_t i = 0; i < line.entries.size(); ++i) {
    if (i) out += ";";
    out += std::to_string(line.entries[i].first.index) + "," +
           std::to_string(line.entries[i].second.index);
  }
  return out + "]";
}

std::string format_coset(std::uint64_t t) { return "C*_" + std::to_string(t); }

ReducedSpectrum reduce(const Spectrum& s) { return {s.lines, s.reduced()}; }

ReducedSpectrum parse_spectrum(std::string_view text) {
  text = trim(text);
  if (text.size() < 3 || text.front() != '(' || text.back() != ')' ||
      text.find(';') == std::string_view::npos) {
    throw Error(Errc::ParseError, "bad spectrum '" + std::string(text) + "'");
  }
  auto n = numbers(text);
  if (n.empty()) throw Error(Errc::ParseError, "empty spectrum");
  return {n.front(), std::vector<std::uint64_t>(n.begin() + 1, n.end())};
}

VStar parse_vstar(std::string_view text) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
    throw Error(Errc::ParseError, "bad multiplicity histogram '" + std::string(text) + "'");
  }
  const auto n = numbers(text);
  if (n.size() % 2) throw Error(Errc::ParseError, "unpaired histogram entry");
  VStar v;
  for (std::size_t i = 0; i < n.size(); i += 2) v.histogram[n[i]] += n[i + 1];
  return v;
}

std::uint64_t parse_coset(std::string_view text) {
  text = trim(text);
  if (text.rfind("C*_", 0) == 0) text.remove_prefix(3);
  std::uint64_t t = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), t);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(Errc::ParseError, "bad coset label '" + std::string(text) + "'");
  }
  return t;
}

}  // namespace atlas
