#include "cperm/permutomino.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cperm/error.hpp"

namespace cperm {
namespace {

Point step(Point p, char letter) {
  switch (letter) {
    case 'N': return {p.x, p.y + 1};
    case 'S': return {p.x, p.y - 1};
    case 'E': return {p.x + 1, p.y};
    default: return {p.x - 1, p.y};
  }
}

bool is_vertical(char letter) { return letter == 'N' || letter == 'S'; }

std::string point_text(Point p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

// Points p_0..p_{m-1} of a closed word starting at the origin.
std::vector<Point> trace(std::string_view word) {
  std::vector<Point> pts;
  pts.reserve(word.size());
  Point p{0, 0};
  for (char c : word) {
    pts.push_back(p);
    p = step(p, c);
  }
  return pts;
}

}  // namespace

BoundaryWord::BoundaryWord(std::string letters) : letters_(std::move(letters)) {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    const char c = letters_[i];
    if (c != 'N' && c != 'E' && c != 'S' && c != 'W') {
      throw Error(ErrorKind::kNotPermutomino,
                  std::string("letter '") + c + "' at index " + std::to_string(i) +
                      " is not one of N,E,S,W");
    }
  }
}

CellGrid::CellGrid(int width, int height)
    : width_(width), height_(height),
      cells_(static_cast<std::size_t>(width) * height, 0) {}

bool CellGrid::contains(int column, int row) const noexcept {
  if (column < 1 || column > width_ || row < 1 || row > height_) return false;
  return cells_[static_cast<std::size_t>(row - 1) * width_ + (column - 1)] != 0;
}

void CellGrid::set(int column, int row, bool filled) {
  cells_.at(static_cast<std::size_t>(row - 1) * width_ + (column - 1)) = filled ? 1 : 0;
}

std::size_t CellGrid::area() const {
  return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), 1));
}

CellGrid CellGrid::transposed() const {
  CellGrid t(height_, width_);
  for (int c = 1; c <= width_; ++c) {
    for (int r = 1; r <= height_; ++r) {
      if (contains(c, r)) t.set(r, c);
    }
  }
  return t;
}

char label_letter(ReentrantLabel label) {
  switch (label) {
    case ReentrantLabel::kAlpha: return 'a';
    case ReentrantLabel::kBeta: return 'b';
    case ReentrantLabel::kGamma: return 'g';
    case ReentrantLabel::kDelta: return 'd';
  }
  return '?';
}

const char* label_name(ReentrantLabel label) {
  switch (label) {
    case ReentrantLabel::kAlpha: return "alpha";
    case ReentrantLabel::kBeta: return "beta";
    case ReentrantLabel::kGamma: return "gamma";
    case ReentrantLabel::kDelta: return "delta";
  }
  return "?";
}

std::optional<ReentrantLabel> parse_label(std::string_view text) {
  for (auto l : {ReentrantLabel::kAlpha, ReentrantLabel::kBeta, ReentrantLabel::kGamma,
                 ReentrantLabel::kDelta}) {
    if (text == label_name(l) || (text.size() == 1 && text[0] == label_letter(l))) {
      return l;
    }
  }
  return std::nullopt;
}

std::string canonical_rotation(std::string_view word) {
  const auto pts = trace(word);
  std::size_t best = 0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const Point a = pts[i], b = pts[best];
    if (a.y < b.y || (a.y == b.y && a.x < b.x)) best = i;
  }
  std::string out(word.substr(best));
  out.append(word.substr(0, best));
  return out;
}

Permutomino::Permutomino(int size, BoundaryWord boundary, std::vector<Point> vertices,
                         CellGrid cells, Permutation pi1, Permutation pi2)
    : size_(size), boundary_(std::move(boundary)), vertices_(std::move(vertices)),
      cells_(std::move(cells)), pi1_(std::move(pi1)), pi2_(std::move(pi2)) {}

Permutomino Permutomino::empty() {
  return Permutomino(1, BoundaryWord{}, {}, CellGrid{}, Permutation{1}, Permutation{1});
}

Permutomino Permutomino::from_boundary_word(const BoundaryWord& word) {
  const std::string& w = word.letters();
  if (w.empty()) {
    throw Error(ErrorKind::kNotClosed, "empty boundary word");
  }
  const auto count = [&](char c) { return std::count(w.begin(), w.end(), c); };
  if (count('N') != count('S') || count('E') != count('W')) {
    throw Error(ErrorKind::kNotClosed,
                "unbalanced word: N=" + std::to_string(count('N')) +
                    " S=" + std::to_string(count('S')) + " E=" + std::to_string(count('E')) +
                    " W=" + std::to_string(count('W')));
  }
  // A balanced word shorter than 4 is "NS" or "EW" and retraces its edge.
  if (w.size() < 4) {
    throw Error(ErrorKind::kSelfIntersecting, "word retraces its own edge");
  }

  auto pts = trace(w);
  {
    std::set<Point> seen;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (!seen.insert(pts[i]).second) {
        throw Error(ErrorKind::kSelfIntersecting,
                    "lattice point " + point_text(pts[i]) + " revisited at step " +
                        std::to_string(i));
      }
    }
  }

  int min_x = pts[0].x, max_x = pts[0].x, min_y = pts[0].y, max_y = pts[0].y;
  for (const Point& p : pts) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  if (canonical_rotation(w) != w || w.front() != 'N') {
    throw Error(ErrorKind::kNotCanonical,
                "word must start at the leftmost point of minimal ordinate with N");
  }
  for (Point& p : pts) {
    p.x -= min_x - 1;
    p.y -= min_y - 1;
  }
  const int width = max_x - min_x;
  const int height = max_y - min_y;

  // Maximal sides run between consecutive turning points.
  const std::size_t m = w.size();
  std::vector<std::size_t> turns;
  for (std::size_t i = 0; i < m; ++i) {
    if (w[(i + m - 1) % m] != w[i]) turns.push_back(i);
  }
  std::map<int, int> vertical_sides, horizontal_sides;
  for (std::size_t t = 0; t < turns.size(); ++t) {
    const Point p = pts[turns[t]];
    if (is_vertical(w[turns[t]])) {
      ++vertical_sides[p.x];
    } else {
      ++horizontal_sides[p.y];
    }
  }
  const int n = std::max(width, height) + 1;
  for (int x = 1; x <= n; ++x) {
    const int c = vertical_sides.count(x) ? vertical_sides[x] : 0;
    if (c != 1) {
      throw Error(ErrorKind::kNotPermutomino,
                  std::to_string(c) + " vertical sides at abscissa " + std::to_string(x));
    }
  }
  for (int y = 1; y <= n; ++y) {
    const int c = horizontal_sides.count(y) ? horizontal_sides[y] : 0;
    if (c != 1) {
      throw Error(ErrorKind::kNotPermutomino,
                  std::to_string(c) + " horizontal sides at ordinate " + std::to_string(y));
    }
  }

  // Vertices from the lowest vertex on abscissa 1, clockwise. A vertex entered
  // horizontally and left vertically belongs to pi1, the others to pi2.
  std::size_t first = 0;
  for (std::size_t t = 0; t < turns.size(); ++t) {
    const Point p = pts[turns[t]], q = pts[turns[first]];
    if (p.x < q.x || (p.x == q.x && p.y < q.y)) first = t;
  }
  std::vector<Point> vertices;
  std::vector<int> pi1(n), pi2(n);
  for (std::size_t k = 0; k < turns.size(); ++k) {
    const std::size_t i = turns[(first + k) % turns.size()];
    const Point p = pts[i];
    vertices.push_back(p);
    (is_vertical(w[i]) ? pi1 : pi2)[p.x - 1] = p.y;
  }

  // Even-odd fill, one row at a time, using the vertical unit edges.
  CellGrid cells(n - 1, n - 1);
  for (int row = 1; row < n; ++row) {
    std::vector<int> xs;
    for (std::size_t i = 0; i < m; ++i) {
      if (!is_vertical(w[i])) continue;
      const int lo = std::min(pts[i].y, step(pts[i], w[i]).y);
      if (lo == row) xs.push_back(pts[i].x);
    }
    std::sort(xs.begin(), xs.end());
    for (std::size_t k = 0; k + 1 < xs.size(); k += 2) {
      for (int c = xs[k]; c < xs[k + 1]; ++c) cells.set(c, row);
    }
  }

  return Permutomino(n, word, std::move(vertices), std::move(cells),
                     Permutation(std::move(pi1)), Permutation(std::move(pi2)));
}

Permutomino Permutomino::from_cells(const CellGrid& cells) {
  // Clockwise unit edges with the interior on the right.
  std::map<Point, std::vector<char>> outgoing;
  std::size_t edges = 0;
  for (int r = 1; r <= cells.height(); ++r) {
    for (int c = 1; c <= cells.width(); ++c) {
      if (!cells.contains(c, r)) continue;
      if (!cells.contains(c - 1, r)) outgoing[{c, r}].push_back('N');
      if (!cells.contains(c, r + 1)) outgoing[{c, r + 1}].push_back('E');
      if (!cells.contains(c + 1, r)) outgoing[{c + 1, r + 1}].push_back('S');
      if (!cells.contains(c, r - 1)) outgoing[{c + 1, r}].push_back('W');
    }
  }
  for (const auto& [p, dirs] : outgoing) {
    edges += dirs.size();
    if (dirs.size() > 1) {
      throw Error(ErrorKind::kSelfIntersecting, "cut point at " + point_text(p));
    }
  }
  if (outgoing.empty()) throw Error(ErrorKind::kNotPermutomino, "no cells");

  Point start = outgoing.begin()->first;
  for (const auto& [p, dirs] : outgoing) {
    if (p.y < start.y || (p.y == start.y && p.x < start.x)) start = p;
  }
  std::string word;
  Point p = start;
  do {
    const char d = outgoing.at(p).front();
    word.push_back(d);
    p = step(p, d);
  } while (p != start && word.size() <= edges);
  if (word.size() != edges) {
    throw Error(ErrorKind::kNotPermutomino,
                "cells are not bounded by a single closed path (holes or disconnected)");
  }
  Permutomino result = from_boundary_word(BoundaryWord(std::move(word)));
  CellGrid normalized = result.cells();
  // Compare against the input after removing any empty margin.
  int min_c = cells.width() + 1, min_r = cells.height() + 1;
  for (int r = 1; r <= cells.height(); ++r) {
    for (int c = 1; c <= cells.width(); ++c) {
      if (cells.contains(c, r)) {
        min_c = std::min(min_c, c);
        min_r = std::min(min_r, r);
      }
    }
  }
  for (int r = 1; r <= cells.height(); ++r) {
    for (int c = 1; c <= cells.width(); ++c) {
      if (cells.contains(c, r) != normalized.contains(c - min_c + 1, r - min_r + 1)) {
        throw Error(ErrorKind::kNotPermutomino, "cell set does not match its boundary");
      }
    }
  }
  return result;
}

Permutomino Permutomino::from_anchor_cycle(std::span<const Point> anchors) {
  if (anchors.size() < 2) {
    throw Error(ErrorKind::kNotPermutomino, "anchor cycle needs at least two points");
  }
  std::string word;
  for (std::size_t i = 0; i < anchors.size(); ++i) {
    const Point p = anchors[i];
    const Point q = anchors[(i + 1) % anchors.size()];
    if (p.x == q.x || p.y == q.y) {
      throw Error(ErrorKind::kNotPermutomino,
                  "anchors " + point_text(p) + " and " + point_text(q) + " share a coordinate");
    }
    word.append(static_cast<std::size_t>(std::abs(q.y - p.y)), q.y > p.y ? 'N' : 'S');
    word.append(static_cast<std::size_t>(std::abs(q.x - p.x)), q.x > p.x ? 'E' : 'W');
  }
  return from_boundary_word(BoundaryWord(canonical_rotation(word)));
}

std::vector<Point> Permutomino::path() const {
  if (is_empty()) return {};
  auto pts = trace(boundary_.letters());
  int min_x = 0, min_y = 0;
  for (const Point& p : pts) {
    min_x = std::min(min_x, p.x);
    min_y = std::min(min_y, p.y);
  }
  for (Point& p : pts) {
    p.x -= min_x - 1;
    p.y -= min_y - 1;
  }
  return pts;
}

std::optional<std::vector<RowInterval>> Permutomino::column_intervals() const {
  std::vector<RowInterval> out;
  for (int c = 1; c <= cells_.width(); ++c) {
    int bottom = 0, top = 0, runs = 0;
    for (int r = 1; r <= cells_.height(); ++r) {
      if (cells_.contains(c, r)) {
        if (!cells_.contains(c, r - 1)) {
          ++runs;
          bottom = r;
        }
        top = r;
      }
    }
    if (runs != 1) return std::nullopt;
    out.push_back({bottom, top});
  }
  return out;
}

std::strong_ordering operator<=>(const Permutomino& a, const Permutomino& b) {
  if (auto c = a.pi1_ <=> b.pi1_; c != 0) return c;
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  return a.boundary_ <=> b.boundary_;
}

std::pair<Permutation, Permutation> vertex_permutations(const Permutomino& p) {
  return {p.pi1(), p.pi2()};
}

BoundaryPoints boundary_points(const Permutomino& p) {
  BoundaryPoints out;
  if (p.is_empty()) return out;
  const std::string& w = p.boundary().letters();
  const auto pts = p.path();
  const std::size_t m = w.size();
  for (std::size_t i = 0; i < m; ++i) {
    const char in = w[(i + m - 1) % m];
    const char outl = w[i];
    const std::string pair{in, outl};
    if (pair == "NE" || pair == "ES" || pair == "SW" || pair == "WN") {
      out.salient.push_back(pts[i]);
    } else if (pair == "EN") {
      out.reentrant.push_back({pts[i], ReentrantLabel::kAlpha});
    } else if (pair == "SE") {
      out.reentrant.push_back({pts[i], ReentrantLabel::kBeta});
    } else if (pair == "WS") {
      out.reentrant.push_back({pts[i], ReentrantLabel::kGamma});
    } else if (pair == "NW") {
      out.reentrant.push_back({pts[i], ReentrantLabel::kDelta});
    }
  }
  return out;
}

ClassFlags classify(const Permutomino& p) {
  if (p.is_empty()) return {true, true, true, true, true, true};
  const CellGrid& g = p.cells();
  const int w = g.width(), h = g.height();

  const auto connected_runs = [&](bool by_column, int index) {
    int runs = 0;
    const int len = by_column ? h : w;
    bool prev = false;
    for (int k = 1; k <= len; ++k) {
      const bool here = by_column ? g.contains(index, k) : g.contains(k, index);
      if (here && !prev) ++runs;
      prev = here;
    }
    return runs;
  };

  ClassFlags f;
  f.column_convex = true;
  for (int c = 1; c <= w; ++c) f.column_convex &= connected_runs(true, c) == 1;
  f.row_convex = true;
  for (int r = 1; r <= h; ++r) f.row_convex &= connected_runs(false, r) == 1;
  f.convex = f.column_convex && f.row_convex;

  if (f.convex && g.contains(1, 1)) {
    std::vector<std::vector<bool>> reach(w + 2, std::vector<bool>(h + 2, false));
    bool all = true;
    for (int c = 1; c <= w; ++c) {
      for (int r = 1; r <= h; ++r) {
        if (!g.contains(c, r)) continue;
        reach[c][r] = (c == 1 && r == 1) || reach[c - 1][r] || reach[c][r - 1];
        all &= reach[c][r];
      }
    }
    f.directed = all;
  }
  if (f.directed) {
    const auto cols = p.column_intervals();
    bool monotone = true;
    for (std::size_t i = 1; i < cols->size(); ++i) {
      monotone &= (*cols)[i].bottom >= (*cols)[i - 1].bottom &&
                  (*cols)[i].top >= (*cols)[i - 1].top;
    }
    f.parallelogram = monotone;
  }
  f.symmetric_xy = g == g.transposed();
  return f;
}

Permutomino reflect_across_vertical(const Permutomino& p) {
  if (p.is_empty()) return p;
  std::string w(p.boundary().letters().rbegin(), p.boundary().letters().rend());
  for (char& c : w) {
    if (c == 'N') c = 'S';
    else if (c == 'S') c = 'N';
  }
  return Permutomino::from_boundary_word(BoundaryWord(canonical_rotation(w)));
}

Permutomino reflect_across_horizontal(const Permutomino& p) {
  if (p.is_empty()) return p;
  std::string w(p.boundary().letters().rbegin(), p.boundary().letters().rend());
  for (char& c : w) {
    if (c == 'E') c = 'W';
    else if (c == 'W') c = 'E';
  }
  return Permutomino::from_boundary_word(BoundaryWord(canonical_rotation(w)));
}

}  // namespace cperm
