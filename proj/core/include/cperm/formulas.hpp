#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cperm {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class Family {
  kConvexPolyomino,     // by semi-perimeter
  kCentralBinomial,     // b_n
  kCatalan,             // c_n
  kConvexPermutomino,   // C_n, by size
  kCtildeCount,         // |C~_n|
  kSquarePerms,         // Q_n
  kBSeq,                // B_n
  kDirectedConvex,      // D_n
  kParallelogram,       // P_n
  kSymmetric,           // S_n
  kCentered,
  kBiCentered,
  kStacks,
  kHalfDiff,            // closed form printed for Q_n/2 - B_n
  kIntersection,        // closed form printed for |C~_n ∩ C~'_n|
  kInterRelation,       // C_n - C~_n
};

std::span<const Family> all_families();
std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

// Smallest index the family is defined at.
int family_min_index(Family f);

// Exact value at index n (size, or semi-perimeter / plain index for the
// first three families). Below the closed form's range the listed initial
// terms are used. Throws Error(kOutOfRange) below family_min_index and
// Error(kNonIntegerResult) if the rational value is not an integer.
BigInt eval_closed_form(Family f, int n);

// Same value as an unreduced rational, with no integrality check.
Rational eval_closed_form_rational(Family f, int n);

// The printed closed forms as functions of their own parameter m, without
// any index shift: (m+1)4^(m-2) - (m/2)C(2m+1, m-1) and
// 2(m+1)4^(m-2) - C(2m-1, m-1).
Rational printed_half_difference(int m);
Rational printed_intersection(int m);

BigInt binomial(int n, int k);  // 0 outside 0 <= k <= n
BigInt central_binomial(int n);
BigInt catalan(int n);
Rational power_of_four(int exponent);  // exponent may be negative

}  // namespace cperm
