#include "cy2/rational.hpp"

namespace cy2 {

std::string to_string(const Rat& r) {
  Int n = numerator(r), d = denominator(r);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

std::optional<Rat> parse_rational(std::string_view text) {
  if (text.empty()) return std::nullopt;
  auto slash = text.find('/');
  auto parse_int = [](std::string_view s) -> std::optional<Int> {
    if (s.empty()) return std::nullopt;
    size_t i = 0;
    if (s[0] == '+' || s[0] == '-') i = 1;
    if (i == s.size()) return std::nullopt;
    for (size_t j = i; j < s.size(); ++j)
      if (s[j] < '0' || s[j] > '9') return std::nullopt;
    return Int(std::string(s));
  };
  if (slash == std::string_view::npos) {
    auto n = parse_int(text);
    if (!n) return std::nullopt;
    return Rat(*n);
  }
  auto n = parse_int(text.substr(0, slash));
  auto d = parse_int(text.substr(slash + 1));
  if (!n || !d || *d == 0) return std::nullopt;
  return Rat(*n, *d);
}

}  // namespace cy2
