#include "cperm/cli/parse.hpp"

#include <cctype>
#include <charconv>
#include <vector>

namespace cperm::cli {

Permutation parse_permutation(std::string_view text) {
  std::vector<int> values;
  std::vector<std::size_t> offsets;
  std::size_t i = 0;
  bool after_comma = false;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == ',') {
      if (values.empty() || after_comma) throw ParseError(i, "unexpected ','");
      after_comma = true;
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError(i, std::string("unexpected character '") + c + "'");
    }
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    int v = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + i, v);
    if (ec != std::errc() || ptr != text.data() + i) throw ParseError(start, "integer out of range");
    values.push_back(v);
    offsets.push_back(start);
    after_comma = false;
  }
  if (after_comma) throw ParseError(text.size(), "trailing ','");
  if (values.empty()) throw ParseError(0, "empty permutation");

  const int n = static_cast<int>(values.size());
  std::vector<bool> seen(n + 1, false);
  for (std::size_t k = 0; k < values.size(); ++k) {
    const int v = values[k];
    if (v < 1 || v > n) {
      throw ParseError(offsets[k], "value " + std::to_string(v) + " outside 1.." + std::to_string(n));
    }
    if (seen[v]) throw ParseError(offsets[k], "value " + std::to_string(v) + " repeated");
    seen[v] = true;
  }
  return Permutation(std::move(values));
}

}  // namespace cperm::cli
