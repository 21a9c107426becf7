#pragma once

#include <map>
#include <string>
#include <vector>

#include "cperm/enumeration.hpp"

namespace cperm {

// Everything the identity checks need from one pass over S_n.
struct PermutationCensus {
  int n = 0;
  BigInt ctilde;                        // |C~_n|
  BigInt ctilde_prime;                  // |C~'_n|
  BigInt intersection;                  // |C~_n ∩ C~'_n|
  BigInt union_size;                    // |C~_n ∪ C~'_n|
  BigInt square;                        // Q_n
  BigInt decomposable_square;           // B_n
  std::map<int, BigInt> by_components;  // B_{n,k}
  std::map<int, BigInt> by_free_fixed;  // |C~_{n,k}|
  BigInt square_union_mismatches;       // p with is_square(p) != (p in union)
  BigInt ctilde_ascending_ends;         // p in C~_n with p(1) < p(n)
  BigInt ctilde_descending_ends;        // p in C~_n with p(1) > p(n)
};

PermutationCensus census(int n, int workers = 0);

enum class CheckStatus { kPass, kFail, kDiscrepant };

const char* to_string(CheckStatus s);

struct IdentityCheck {
  std::string name;
  int min_size = 0;
  int max_size = -1;  // empty range when max < min
  CheckStatus status = CheckStatus::kPass;
  std::vector<std::string> lines;  // one per size, "name: lhs=rhs pass"
  double elapsed_ms = 0;
};

struct VerificationReport {
  int max_size = 0;
  std::vector<IdentityCheck> entries;

  // Discrepant rows count as failures only in strict mode.
  bool passed(bool strict_paper) const;
  const IdentityCheck* find(const std::string& name) const;
};

struct VerifyOptions {
  int workers = 0;
  int oracle_max_size = 6;  // interval-oracle cross-checks
};

// Throws Error(kSizeTooLarge) above 9 and Error(kOutOfRange) below 2.
VerificationReport verify_identities(int n_max, const VerifyOptions& opts = {});

}  // namespace cperm
