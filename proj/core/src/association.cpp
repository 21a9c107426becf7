#include "cperm/association.hpp"

#include <algorithm>

#include "cperm/error.hpp"
#include "cperm/unimodal.hpp"

namespace cperm {
namespace {

void require_member(const Permutation& p) {
  if (!is_associated(p).member()) {
    throw Error(ErrorKind::kNotAssociated, p.to_string());
  }
}

}  // namespace

MembershipVerdict is_associated(const Permutation& p) {
  if (p.size() == 1) return {MembershipOk{}};
  const MuSigma ms = mu_sigma(p);
  const auto sigma = ms.sigma.values();
  if (auto bad = lower_unimodal_violation(sigma)) {
    const auto& e = ms.sigma.entries();
    return {SigmaNotUnimodal{{e[(*bad)[0]].position, e[(*bad)[1]].position,
                              e[(*bad)[2]].position}}};
  }
  const auto splits = split_points(p);
  if (!splits.empty()) return {Decomposable{splits.front()}};
  return {MembershipOk{}};
}

bool is_associated_prime(const Permutation& p) {
  return is_associated(reversal(p)).member();
}

FreeFixedPoints free_fixed_points(const Permutation& p) {
  require_member(p);
  const MuSigma ms = mu_sigma(p);
  const std::size_t peak = ms.mu_peak();
  const int n = p.size();
  FreeFixedPoints out;
  for (std::size_t i = 0; i < peak; ++i) {
    const auto& e = ms.mu[i];
    if (e.position == e.value && e.value != 1 && e.value != n) {
      out.points.push_back(e.value);
    }
  }
  return out;
}

Permutomino build_canonical(const Permutation& p) {
  require_member(p);
  if (p.size() == 1) return Permutomino::empty();
  // Clockwise pi1 vertices: mu left to right (A ... B ... C), then the
  // interior of sigma right to left (C ... D ... A).
  const MuSigma ms = mu_sigma(p);
  std::vector<Point> anchors;
  for (const auto& e : ms.mu.entries()) anchors.push_back({e.position, e.value});
  const auto sigma = ms.sigma.entries();
  for (std::size_t i = sigma.size() - 1; i-- > 1;) {
    anchors.push_back({sigma[i].position, sigma[i].value});
  }
  return Permutomino::from_anchor_cycle(anchors);
}

std::vector<Permutomino> fiber(const Permutation& p) {
  const Permutomino canonical = build_canonical(p);
  if (p.size() <= 2) return {canonical};
  const auto free = free_fixed_points(p).points;
  const LabeledMatrix base = reentrant_matrix(canonical);

  std::vector<Permutomino> out;
  const std::size_t subsets = std::size_t{1} << free.size();
  out.reserve(subsets);
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    LabeledMatrix m = base;
    for (std::size_t bit = 0; bit < free.size(); ++bit) {
      if (!(mask >> bit & 1)) continue;
      const Point fixed{free[bit], free[bit]};
      auto it = std::find_if(m.points.begin(), m.points.end(),
                             [&](const LabeledPoint& lp) { return lp.point == fixed; });
      it->label = ReentrantLabel::kGamma;
    }
    out.push_back(permutomino_from_matrix(m, p.size()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cperm
