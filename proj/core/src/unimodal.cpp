#include "cperm/unimodal.hpp"

#include <algorithm>

#include "cperm/error.hpp"

namespace cperm {

IndexedSubsequence::IndexedSubsequence(std::vector<IndexedEntry> entries)
    : entries_(std::move(entries)) {}

std::vector<int> IndexedSubsequence::values() const {
  std::vector<int> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.value);
  return out;
}

std::vector<int> IndexedSubsequence::positions() const {
  std::vector<int> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.position);
  return out;
}

bool IndexedSubsequence::contains_position(int position) const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [&](const IndexedEntry& e) { return e.position == position; });
}

IndexedSubsequence extrema(const Permutation& p, ExtremaKind kind) {
  const int n = p.size();
  std::vector<IndexedEntry> out;
  switch (kind) {
    case ExtremaKind::kLeftRightMax: {
      int best = 0;
      for (int i = 1; i <= n; ++i) {
        if (p(i) > best) out.push_back({i, best = p(i)});
      }
      break;
    }
    case ExtremaKind::kLeftRightMin: {
      int best = n + 1;
      for (int i = 1; i <= n; ++i) {
        if (p(i) < best) out.push_back({i, best = p(i)});
      }
      break;
    }
    case ExtremaKind::kRightLeftMax: {
      int best = 0;
      for (int i = n; i >= 1; --i) {
        if (p(i) > best) out.push_back({i, best = p(i)});
      }
      std::reverse(out.begin(), out.end());
      break;
    }
    case ExtremaKind::kRightLeftMin: {
      int best = n + 1;
      for (int i = n; i >= 1; --i) {
        if (p(i) < best) out.push_back({i, best = p(i)});
      }
      std::reverse(out.begin(), out.end());
      break;
    }
  }
  return IndexedSubsequence(std::move(out));
}

std::size_t MuSigma::mu_peak() const {
  auto e = mu.entries();
  auto it = std::max_element(e.begin(), e.end(),
                             [](const auto& a, const auto& b) { return a.value < b.value; });
  return static_cast<std::size_t>(it - e.begin());
}

MuSigma mu_sigma(const Permutation& p) {
  const int n = p.size();
  const IndexedSubsequence lr_seq = extrema(p, ExtremaKind::kLeftRightMax);
  const IndexedSubsequence rl_seq = extrema(p, ExtremaKind::kRightLeftMax);
  auto lr = lr_seq.entries();
  auto rl = rl_seq.entries();

  std::vector<IndexedEntry> mu(lr.begin(), lr.end());
  mu.insert(mu.end(), rl.begin() + 1, rl.end());  // rl.front() is n

  std::vector<bool> in_mu(n + 1, false);
  for (const auto& e : mu) in_mu[e.position] = true;

  std::vector<IndexedEntry> sigma;
  for (int i = 1; i <= n; ++i) {
    if (i == 1 || i == n || !in_mu[i]) sigma.push_back({i, p(i)});
  }
  return {IndexedSubsequence(std::move(mu)), IndexedSubsequence(std::move(sigma))};
}

std::optional<std::array<std::size_t, 3>> lower_unimodal_violation(
    std::span<const int> s) {
  // Valley = the global minimum; a violation is an ascent followed later by a
  // descent. Report the first ascent start, the peak after it, and the drop.
  const std::size_t m = s.size();
  std::size_t i = 0;
  while (i + 1 < m && s[i + 1] < s[i]) ++i;
  // s[0..i] strictly decreasing; from i onward must strictly increase.
  for (std::size_t j = i + 1; j + 1 < m; ++j) {
    if (s[j + 1] < s[j]) return std::array<std::size_t, 3>{j - 1, j, j + 1};
  }
  return std::nullopt;
}

bool is_lower_unimodal(std::span<const int> s) {
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] == s[i - 1]) return false;
  }
  return !lower_unimodal_violation(s).has_value();
}

bool is_upper_unimodal(std::span<const int> s) {
  std::vector<int> negated(s.begin(), s.end());
  for (int& v : negated) v = -v;
  return is_lower_unimodal(negated);
}

namespace {

// Extend a partial embedding of pattern[0..depth) into p; `chosen` holds the
// matched positions (0-based). Each new entry must order against every
// earlier match exactly as in the pattern.
bool embed(std::span<const int> p, std::span<const int> pattern,
           std::vector<int>& chosen, int next_start) {
  const std::size_t depth = chosen.size();
  if (depth == pattern.size()) return true;
  const int remaining = static_cast<int>(pattern.size() - depth);
  for (int pos = next_start; pos + remaining <= static_cast<int>(p.size()); ++pos) {
    bool ok = true;
    for (std::size_t k = 0; k < depth && ok; ++k) {
      ok = (p[chosen[k]] < p[pos]) == (pattern[k] < pattern[depth]);
    }
    if (!ok) continue;
    chosen.push_back(pos);
    if (embed(p, pattern, chosen, pos + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

bool contains_pattern(const Permutation& p, const Permutation& pattern) {
  if (pattern.size() > p.size()) return false;
  std::vector<int> chosen;
  chosen.reserve(pattern.size());
  return embed(p.values(), pattern.values(), chosen, 0);
}

const std::array<Permutation, 16>& square_forbidden_patterns() {
  static const std::array<Permutation, 16> patterns = {
      Permutation{5, 2, 3, 4, 1}, Permutation{5, 2, 3, 1, 4},
      Permutation{5, 1, 3, 4, 2}, Permutation{5, 1, 3, 2, 4},
      Permutation{4, 2, 3, 5, 1}, Permutation{4, 2, 3, 1, 5},
      Permutation{4, 1, 3, 5, 2}, Permutation{4, 1, 3, 2, 5},
      Permutation{2, 5, 3, 4, 1}, Permutation{2, 5, 3, 1, 4},
      Permutation{1, 5, 3, 4, 2}, Permutation{1, 5, 3, 2, 4},
      Permutation{2, 4, 3, 5, 1}, Permutation{2, 4, 3, 1, 5},
      Permutation{1, 4, 3, 5, 2}, Permutation{1, 4, 3, 2, 5},
  };
  return patterns;
}

bool is_square_by_sigma(const Permutation& p) {
  const auto sigma = mu_sigma(p).sigma.values();
  return is_lower_unimodal(sigma);
}

bool is_square_by_patterns(const Permutation& p) {
  for (const auto& pattern : square_forbidden_patterns()) {
    if (contains_pattern(p, pattern)) return false;
  }
  return true;
}

bool is_square(const Permutation& p) { return is_square_by_sigma(p); }

}  // namespace cperm
