#include "cperm/labeled_matrix.hpp"

#include <algorithm>

#include "cperm/error.hpp"

namespace cperm {
namespace {

std::vector<Point> of_label(const LabeledMatrix& m, ReentrantLabel label) {
  std::vector<Point> out;
  for (const auto& lp : m.points) {
    if (lp.label == label) out.push_back(lp.point);
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <typename Pred>
bool all_pairs(const std::vector<Point>& a, const std::vector<Point>& b, Pred pred) {
  for (const Point& p : a) {
    for (const Point& q : b) {
      if (!pred(p, q)) return false;
    }
  }
  return true;
}

bool strictly_monotone(const std::vector<Point>& pts, bool increasing) {
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (increasing ? pts[i].y <= pts[i - 1].y : pts[i].y >= pts[i - 1].y) return false;
  }
  return true;
}

}  // namespace

std::optional<std::string> matrix_violation(const LabeledMatrix& m, int size) {
  const int n = size;
  if (m.dim != std::max(0, n - 2)) return "permutation-matrix";
  {
    std::vector<bool> xs(n + 1, false), ys(n + 1, false);
    for (const auto& lp : m.points) {
      const Point p = lp.point;
      if (p.x < 2 || p.x > n - 1 || p.y < 2 || p.y > n - 1) return "permutation-matrix";
      if (xs[p.x] || ys[p.y]) return "permutation-matrix";
      xs[p.x] = ys[p.y] = true;
    }
    if (static_cast<int>(m.points.size()) != m.dim) return "permutation-matrix";
  }
  const auto alpha = of_label(m, ReentrantLabel::kAlpha);
  const auto beta = of_label(m, ReentrantLabel::kBeta);
  const auto gamma = of_label(m, ReentrantLabel::kGamma);
  const auto delta = of_label(m, ReentrantLabel::kDelta);

  if (!all_pairs(alpha, beta, [](Point a, Point b) { return a.x < b.x; })) {
    return "x_alpha<x_beta";
  }
  if (!all_pairs(delta, gamma, [](Point d, Point c) { return d.x < c.x; })) {
    return "x_delta<x_gamma";
  }
  if (!all_pairs(alpha, delta, [](Point a, Point d) { return a.y > d.y; })) {
    return "y_alpha>y_delta";
  }
  if (!all_pairs(beta, gamma, [](Point b, Point c) { return b.y > c.y; })) {
    return "y_beta>y_gamma";
  }
  if (!all_pairs(alpha, gamma, [](Point a, Point c) { return !(a.x > c.x && a.y < c.y); })) {
    return "alpha-not-below-right-of-gamma";
  }
  if (!all_pairs(beta, delta, [](Point b, Point d) { return !(b.x < d.x && b.y < d.y); })) {
    return "beta-not-below-left-of-delta";
  }
  if (!strictly_monotone(alpha, true)) return "alpha-increasing";
  if (!strictly_monotone(gamma, true)) return "gamma-increasing";
  if (!strictly_monotone(beta, false)) return "beta-decreasing";
  if (!strictly_monotone(delta, false)) return "delta-decreasing";

  for (const Point& a : alpha) {
    if (a.y < a.x) return "z1-alpha";
  }
  for (const Point& c : gamma) {
    if (c.y > c.x) return "z1-gamma";
  }
  for (const Point& b : beta) {
    if (b.x + b.y < n + 1) return "z2-beta";
  }
  for (const Point& d : delta) {
    if (d.x + d.y > n + 1) return "z2-delta";
  }
  return std::nullopt;
}

LabeledMatrix reentrant_matrix(const Permutomino& p) {
  if (!classify(p).convex) {
    throw Error(ErrorKind::kNotConvex, "permutomino " + p.boundary().letters());
  }
  LabeledMatrix m;
  m.dim = std::max(0, p.size() - 2);
  m.points = boundary_points(p).reentrant;
  std::sort(m.points.begin(), m.points.end(),
            [](const LabeledPoint& a, const LabeledPoint& b) { return a.point < b.point; });
  return m;
}

Permutomino permutomino_from_matrix(const LabeledMatrix& m, int size) {
  if (size < 1) throw Error(ErrorKind::kInvalidMatrix, "size must be >= 1");
  if (size == 1) {
    if (!m.points.empty() || m.dim != 0) {
      throw Error(ErrorKind::kInvalidMatrix, "permutation-matrix");
    }
    return Permutomino::empty();
  }
  if (auto bad = matrix_violation(m, size)) {
    throw Error(ErrorKind::kInvalidMatrix, *bad);
  }
  const int n = size;
  const auto alpha = of_label(m, ReentrantLabel::kAlpha);
  const auto beta = of_label(m, ReentrantLabel::kBeta);
  auto gamma = of_label(m, ReentrantLabel::kGamma);
  auto delta = of_label(m, ReentrantLabel::kDelta);
  // The gamma and delta paths run from right to left.
  std::reverse(gamma.begin(), gamma.end());
  std::reverse(delta.begin(), delta.end());

  // pi1 anchors clockwise: A, alpha..., B, beta anchors..., C, gamma..., D,
  // delta anchors.... Beta and delta points are the corners (p.x, q.y)
  // between consecutive anchors p -> q.
  const Point a{1, delta.empty() ? 1 : delta.back().y};
  const Point b{beta.empty() ? n : beta.front().x, n};
  const Point c{n, beta.empty() ? n : beta.back().y};
  const Point d{delta.empty() ? 1 : delta.front().x, 1};

  std::vector<Point> anchors;
  anchors.push_back(a);
  anchors.insert(anchors.end(), alpha.begin(), alpha.end());
  anchors.push_back(b);
  for (std::size_t i = 0; i + 1 < beta.size(); ++i) {
    anchors.push_back({beta[i + 1].x, beta[i].y});
  }
  if (c != b) anchors.push_back(c);
  anchors.insert(anchors.end(), gamma.begin(), gamma.end());
  anchors.push_back(d);
  for (std::size_t i = 0; i + 1 < delta.size(); ++i) {
    anchors.push_back({delta[i + 1].x, delta[i].y});
  }
  if (a == d) anchors.pop_back();

  try {
    Permutomino result = Permutomino::from_anchor_cycle(anchors);
    LabeledMatrix sorted = m;
    std::sort(sorted.points.begin(), sorted.points.end(),
              [](const LabeledPoint& l, const LabeledPoint& r) { return l.point < r.point; });
    if (!(reentrant_matrix(result) == sorted)) {
      throw Error(ErrorKind::kInvalidMatrix, "points do not bound a convex permutomino");
    }
    return result;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kInvalidMatrix) throw;
    throw Error(ErrorKind::kInvalidMatrix,
                std::string("points do not bound a convex permutomino (") + e.what() + ")");
  }
}

}  // namespace cperm
