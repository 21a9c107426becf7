#include "cperm/bijection.hpp"

#include "cperm/association.hpp"
#include "cperm/error.hpp"
#include "cperm/unimodal.hpp"

namespace cperm {

PermutominoSequence::PermutominoSequence(std::vector<Permutomino> parts)
    : parts_(std::move(parts)) {
  if (parts_.size() < 2) {
    throw Error(ErrorKind::kInvalidSequence, "need at least two parts");
  }
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    const ClassFlags f = classify(parts_[i]);
    const bool end = i == 0 || i + 1 == parts_.size();
    if (end && !f.directed) {
      throw Error(ErrorKind::kInvalidSequence,
                  "part " + std::to_string(i + 1) + " is not directed convex");
    }
    if (!end && !f.parallelogram) {
      throw Error(ErrorKind::kInvalidSequence,
                  "part " + std::to_string(i + 1) + " is not a parallelogram");
    }
  }
}

int PermutominoSequence::total_size() const {
  int total = 0;
  for (const auto& p : parts_) total += p.size();
  return total;
}

Permutation component_of_part(const Permutomino& part, bool last) {
  if (part.is_empty()) return Permutation{1};
  return last ? complement(part.pi2()) : reversal(part.pi2());
}

Permutomino part_of_component(const Permutation& component, bool first, bool last) {
  if (component.size() == 1) return Permutomino::empty();
  // Exactly one member of the fiber reflects into the required class.
  std::vector<Permutomino> matches;
  for (const Permutomino& q : fiber(component)) {
    const Permutomino r = last ? reflect_across_horizontal(q) : reflect_across_vertical(q);
    const ClassFlags f = classify(r);
    if ((first || last) ? f.directed : f.parallelogram) matches.push_back(r);
  }
  if (matches.size() != 1) {
    throw Error(ErrorKind::kInvalidSequence,
                std::to_string(matches.size()) + " candidate parts for component " +
                    component.to_string());
  }
  return matches.front();
}

Permutation sequence_to_permutation(const PermutominoSequence& s) {
  std::vector<Permutation> deltas;
  const auto& parts = s.parts();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    deltas.push_back(component_of_part(parts[i], i + 1 == parts.size()));
  }
  return direct_difference_fold(deltas);
}

PermutominoSequence permutation_to_sequence(const Permutation& p) {
  if (!is_square(p)) throw Error(ErrorKind::kNotSquare, p.to_string());
  const auto deltas = decompose(p);
  if (deltas.size() < 2) throw Error(ErrorKind::kIndecomposable, p.to_string());
  std::vector<Permutomino> parts;
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    parts.push_back(part_of_component(deltas[i], i == 0, i + 1 == deltas.size()));
  }
  return PermutominoSequence(std::move(parts));
}

}  // namespace cperm
