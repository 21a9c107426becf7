#include "cperm/verification.hpp"

#include <chrono>
#include <functional>
#include <set>
#include <sstream>

#include "cperm/association.hpp"
#include "cperm/bijection.hpp"
#include "cperm/error.hpp"
#include "cperm/formulas.hpp"
#include "cperm/unimodal.hpp"

namespace cperm {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kDiscrepant: return "discrepant";
  }
  return "?";
}

bool VerificationReport::passed(bool strict_paper) const {
  for (const auto& e : entries) {
    if (e.status == CheckStatus::kFail) return false;
    if (strict_paper && e.status == CheckStatus::kDiscrepant) return false;
  }
  return true;
}

const IdentityCheck* VerificationReport::find(const std::string& name) const {
  for (const auto& e : entries) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

namespace {

void merge_maps(std::map<int, BigInt>& into, const std::map<int, BigInt>& from) {
  for (const auto& [k, v] : from) into[k] += v;
}

}  // namespace

PermutationCensus census(int n, int workers) {
  auto total = reduce_permutations<PermutationCensus>(
      n, workers,
      [&](PermutationCensus& c, const Permutation& p) {
        const bool in = is_associated(p).member();
        const bool in_prime = is_associated_prime(p);
        const bool sq = is_square(p);
        if (in) {
          c.ctilde += 1;
          c.by_free_fixed[static_cast<int>(free_fixed_points(p).points.size())] += 1;
          if (n == 1 || p(1) < p(n)) c.ctilde_ascending_ends += 1;
          else c.ctilde_descending_ends += 1;
        }
        if (in_prime) c.ctilde_prime += 1;
        if (in && in_prime) c.intersection += 1;
        if (in || in_prime) c.union_size += 1;
        if (sq != (in || in_prime)) c.square_union_mismatches += 1;
        if (sq) {
          c.square += 1;
          const int k = static_cast<int>(split_points(p).size()) + 1;
          if (k >= 2) {
            c.decomposable_square += 1;
            c.by_components[k] += 1;
          }
        }
      },
      [](PermutationCensus& into, PermutationCensus&& from) {
        into.ctilde += from.ctilde;
        into.ctilde_prime += from.ctilde_prime;
        into.intersection += from.intersection;
        into.union_size += from.union_size;
        into.square += from.square;
        into.decomposable_square += from.decomposable_square;
        merge_maps(into.by_components, from.by_components);
        merge_maps(into.by_free_fixed, from.by_free_fixed);
        into.square_union_mismatches += from.square_union_mismatches;
        into.ctilde_ascending_ends += from.ctilde_ascending_ends;
        into.ctilde_descending_ends += from.ctilde_descending_ends;
      });
  total.n = n;
  return total;
}

namespace {

std::string str(const BigInt& v) { return v.str(); }

// Accumulates per-size results for one identity.
class Row {
 public:
  Row(std::string name, int lo, int hi) { check_.name = std::move(name), check_.min_size = lo, check_.max_size = hi; }

  void record(bool ok, const std::string& detail) {
    check_.lines.push_back(check_.name + ": " + detail + (ok ? " pass" : " fail"));
    if (!ok) check_.status = CheckStatus::kFail;
  }
  void note(const std::string& detail) { check_.lines.push_back(check_.name + ": " + detail); }
  void set_status(CheckStatus s) { check_.status = s; }

  IdentityCheck finish(std::chrono::steady_clock::time_point started) {
    check_.elapsed_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - started)
                            .count();
    if (check_.lines.empty()) check_.lines.push_back(check_.name + ": no sizes in range");
    return std::move(check_);
  }

 private:
  IdentityCheck check_;
};

struct SizeData {
  PermutationCensus census;
  BigInt convex_from_fibers;                 // sum over C~_n of |fiber(p)|, built
  std::vector<Permutomino> fiber_union;      // when within oracle range
  bool fibers_valid = true;                  // every built member convex, pi1 = p, distinct
};

BigInt pow2_sum(const std::map<int, BigInt>& by_k) {
  BigInt s;
  for (const auto& [k, c] : by_k) s += (BigInt(1) << k) * c;
  return s;
}

BigInt map_sum(const std::map<int, BigInt>& m) {
  BigInt s;
  for (const auto& [k, c] : m) s += c;
  return s;
}

// |T_{n,k}| by direct enumeration of part sequences whose sizes sum to n.
std::map<int, BigInt> count_sequences(int n, const std::vector<BigInt>& directed,
                                      const std::vector<BigInt>& parallelogram) {
  std::map<int, BigInt> out;
  // ways[j][s]: sequences of j parts of total size s, all of the given kind.
  std::function<void(int, int, BigInt, int)> rec = [&](int parts, int used, BigInt ways, int k) {
    if (parts == k - 1) {
      const int last = n - used;
      if (last >= 1 && last < static_cast<int>(directed.size())) {
        out[k] += ways * directed[last];
      }
      return;
    }
    for (int s = 1; used + s <= n - (k - parts - 1); ++s) {
      const auto& table = parts == 0 ? directed : parallelogram;
      if (s >= static_cast<int>(table.size())) break;
      rec(parts + 1, used + s, ways * table[s], k);
    }
  };
  for (int k = 2; k <= n; ++k) rec(0, 0, 1, k);
  return out;
}

}  // namespace

VerificationReport verify_identities(int n_max, const VerifyOptions& opts) {
  if (n_max < 2) throw Error(ErrorKind::kOutOfRange, "max size must be >= 2");
  if (n_max > 9) throw Error(ErrorKind::kSizeTooLarge, "max size for verification is 9");
  using clock = std::chrono::steady_clock;
  const int oracle_max = std::min(opts.oracle_max_size, n_max);

  auto started = clock::now();
  std::vector<SizeData> data(n_max + 1);
  for (int n = 1; n <= n_max; ++n) {
    SizeData& d = data[n];
    d.census = census(n, opts.workers);
    std::set<Permutomino> seen;
    for (const Permutation& p : all_permutations(n)) {
      if (!is_associated(p).member()) continue;
      for (Permutomino& q : fiber(p)) {
        if (!(q.pi1() == p) || !classify(q).convex) d.fibers_valid = false;
        if (!seen.insert(q).second) d.fibers_valid = false;
      }
    }
    d.convex_from_fibers = seen.size();
    if (n <= oracle_max) d.fiber_union.assign(seen.begin(), seen.end());
  }
  const auto setup_done = clock::now();

  VerificationReport report;
  report.max_size = n_max;
  auto add = [&](Row row, clock::time_point t) { report.entries.push_back(row.finish(t)); };

  const auto listed_row = [&](const std::string& name, int first_size,
                              const std::vector<long long>& terms,
                              const std::function<BigInt(int)>& actual) {
    const auto t = clock::now();
    const int last = std::min<int>(n_max, first_size + static_cast<int>(terms.size()) - 1);
    Row row(name, first_size, last);
    for (int n = first_size; n <= last; ++n) {
      const BigInt a = actual(n);
      const BigInt listed = terms[n - first_size];
      row.record(a == listed, "n=" + std::to_string(n) + ": " + str(a) + "=" + str(listed));
    }
    add(std::move(row), t);
  };

  // Listed sequences.
  listed_row("listed C_n", 1, {1, 1, 4, 18, 84, 394, 1836, 8468},
             [&](int n) { return data[n].convex_from_fibers; });
  listed_row("listed Ctilde_n", 1, {1, 1, 3, 13, 62, 301, 1450, 6882},
             [&](int n) { return data[n].census.ctilde; });
  listed_row("listed Q_n", 1, {1, 2, 6, 24, 104, 464, 2088, 9392},
             [&](int n) { return data[n].census.square; });
  listed_row("listed B_n", 2, {1, 3, 11, 42, 163, 638, 2510},
             [&](int n) { return data[n].census.decomposable_square; });
  listed_row("listed Q/2-B", 4, {1, 10, 69, 406, 2186, 11124}, [&](int n) {
    return data[n].census.square / 2 - data[n].census.decomposable_square;
  });

  // (xx) both halves, with the fiber sets actually built.
  {
    const auto t = clock::now();
    Row row("C=sum 2^k Ctilde_k", 1, n_max);
    for (int n = 1; n <= n_max; ++n) {
      const auto& d = data[n];
      const BigInt rhs = pow2_sum(d.census.by_free_fixed);
      const bool ok = d.fibers_valid && d.convex_from_fibers == rhs &&
                      map_sum(d.census.by_free_fixed) == d.census.ctilde;
      row.record(ok, "n=" + std::to_string(n) + ": " + str(d.convex_from_fibers) + "=" + str(rhs));
    }
    add(std::move(row), t);
  }
  {
    const auto t = clock::now();
    Row row("fibers=intervals", 1, oracle_max);
    for (int n = 1; n <= oracle_max; ++n) {
      const auto oracle = interval_permutominoes(n, IntervalFamily::kConvex);
      const bool ok = oracle == data[n].fiber_union;
      row.record(ok, "n=" + std::to_string(n) + ": " + std::to_string(data[n].fiber_union.size()) +
                         "=" + std::to_string(oracle.size()) + " (set equality)");
    }
    add(std::move(row), t);
  }
  {
    const auto t = clock::now();
    Row row("Ctilde=Q-B", 2, n_max);
    for (int n = 2; n <= n_max; ++n) {
      const auto& c = data[n].census;
      row.record(c.ctilde == c.square - c.decomposable_square,
                 str(c.ctilde) + "=" + str(c.square) + "-" + str(c.decomposable_square));
    }
    add(std::move(row), t);
  }
  {
    const auto t = clock::now();
    Row row("square=Ctilde|Ctilde'", 1, n_max);
    for (int n = 1; n <= n_max; ++n) {
      const auto& c = data[n].census;
      row.record(c.square_union_mismatches == 0 && c.square == c.union_size,
                 "n=" + std::to_string(n) + ": " + str(c.square) + "=" + str(c.union_size));
    }
    add(std::move(row), t);
  }
  {
    const auto t = clock::now();
    Row row("|Ctilde&Ctilde'|=Q-2B", 2, n_max);
    for (int n = 2; n <= n_max; ++n) {
      const auto& c = data[n].census;
      row.record(c.intersection == c.square - 2 * c.decomposable_square &&
                     c.intersection == c.ctilde - c.decomposable_square,
                 "n=" + std::to_string(n) + ": " + str(c.intersection) + "=" + str(c.square) +
                     "-2*" + str(c.decomposable_square));
    }
    add(std::move(row), t);
  }
  {
    const auto t = clock::now();
    Row row("Ctilde ascending ends=Q/2", 2, n_max);
    for (int n = 2; n <= n_max; ++n) {
      const auto& c = data[n].census;
      row.record(2 * c.ctilde_ascending_ends == c.square,
                 "n=" + std::to_string(n) + ": 2*" + str(c.ctilde_ascending_ends) + "=" +
                     str(c.square));
    }
    add(std::move(row), t);
  }
  {
    const auto t = clock::now();
    Row row("Ctilde descending ends=Ctilde-Q/2=Q/2-B", 2, n_max);
    for (int n = 2; n <= n_max; ++n) {
      const auto& c = data[n].census;
      const BigInt half_q = c.square / 2;
      row.record(c.ctilde_descending_ends == c.ctilde - half_q &&
                     c.ctilde_descending_ends == half_q - c.decomposable_square,
                 "n=" + std::to_string(n) + ": " + str(c.ctilde_descending_ends) + "=" +
                     str(c.ctilde - half_q));
    }
    add(std::move(row), t);
  }
  {
    const auto t = clock::now();
    Row row("Q=C+C(2(n-2),n-2)", 2, n_max);
    for (int n = 2; n <= n_max; ++n) {
      const auto& d = data[n];
      const BigInt rhs = d.convex_from_fibers + central_binomial(n - 2);
      row.record(d.census.square == rhs, "n=" + std::to_string(n) + ": " + str(d.census.square) +
                                             "=" + str(d.convex_from_fibers) + "+" +
                                             str(central_binomial(n - 2)));
    }
    add(std::move(row), t);
  }
  {
    const auto t = clock::now();
    Row row("C=Ctilde+(4^(n-2)-C(2(n-2),n-2))/2", 2, n_max);
    for (int n = 2; n <= n_max; ++n) {
      const auto& d = data[n];
      const BigInt extra = eval_closed_form(Family::kInterRelation, n);
      row.record(d.convex_from_fibers == d.census.ctilde + extra,
                 "n=" + std::to_string(n) + ": " + str(d.convex_from_fibers) + "=" +
                     str(d.census.ctilde) + "+" + str(extra));
    }
    add(std::move(row), t);
  }

  // Closed forms against enumerated counts.
  std::vector<std::vector<Permutomino>> oracle_directed(oracle_max + 1),
      oracle_parallelogram(oracle_max + 1);
  std::vector<BigInt> oracle_symmetric(oracle_max + 1);
  for (int n = 1; n <= oracle_max; ++n) {
    for (const auto& p : interval_permutominoes(n, IntervalFamily::kConvex)) {
      const ClassFlags f = classify(p);
      if (f.directed) oracle_directed[n].push_back(p);
      if (f.parallelogram) oracle_parallelogram[n].push_back(p);
      if (f.symmetric_xy) oracle_symmetric[n] += 1;
    }
  }
  const auto closed_row = [&](Family f, int lo, int hi, const std::function<BigInt(int)>& actual) {
    const auto t = clock::now();
    Row row("closed form " + std::string(family_name(f)), lo, hi);
    for (int n = lo; n <= hi; ++n) {
      try {
        const BigInt v = eval_closed_form(f, n);
        const BigInt a = actual(n);
        row.record(v == a, "n=" + std::to_string(n) + ": " + str(v) + "=" + str(a));
      } catch (const Error& e) {
        row.record(false, "n=" + std::to_string(n) + ": " + e.what());
      }
    }
    add(std::move(row), t);
  };
  closed_row(Family::kConvexPermutomino, 1, n_max, [&](int n) { return data[n].convex_from_fibers; });
  closed_row(Family::kCtildeCount, 1, n_max, [&](int n) { return data[n].census.ctilde; });
  closed_row(Family::kSquarePerms, 1, n_max, [&](int n) { return data[n].census.square; });
  closed_row(Family::kBSeq, 2, n_max, [&](int n) { return data[n].census.decomposable_square; });
  closed_row(Family::kInterRelation, 2, n_max,
             [&](int n) { return data[n].convex_from_fibers - data[n].census.ctilde; });
  closed_row(Family::kDirectedConvex, 1, oracle_max,
             [&](int n) { return BigInt(oracle_directed[n].size()); });
  closed_row(Family::kParallelogram, 1, oracle_max,
             [&](int n) { return BigInt(oracle_parallelogram[n].size()); });
  closed_row(Family::kSymmetric, 1, oracle_max, [&](int n) { return oracle_symmetric[n]; });
  closed_row(Family::kCentralBinomial, 1, oracle_max - 1,
             [&](int m) { return 2 * BigInt(oracle_directed[m + 1].size()); });
  closed_row(Family::kCatalan, 0, oracle_max - 1,
             [&](int m) { return BigInt(oracle_parallelogram[m + 1].size()); });

  // Evaluator-only families against their listed first terms.
  const auto terms_row = [&](Family f, int first, const std::vector<long long>& terms) {
    listed_row("listed " + std::string(family_name(f)), first, terms,
               [f](int n) { return eval_closed_form(f, n); });
  };
  terms_row(Family::kConvexPolyomino, 0, {1, 2, 7, 28, 120, 528, 2344, 10416});
  terms_row(Family::kCentered, 1, {1, 1, 4, 16, 64, 256});
  terms_row(Family::kBiCentered, 1, {1, 1, 4, 14, 48, 164});
  terms_row(Family::kStacks, 1, {1, 1, 2, 4, 8, 16, 32});

  // B_{n,k} = T_{n,k}, and the bijection round trip on every element.
  {
    const auto t = clock::now();
    Row row("|B_nk|=|T_nk|", 2, oracle_max);
    std::vector<BigInt> directed_counts(oracle_max + 1), parallelogram_counts(oracle_max + 1);
    for (int s = 1; s <= oracle_max; ++s) {
      directed_counts[s] = oracle_directed[s].size();
      parallelogram_counts[s] = oracle_parallelogram[s].size();
    }
    for (int n = 2; n <= oracle_max; ++n) {
      const auto t_counts = count_sequences(n, directed_counts, parallelogram_counts);
      bool ok = t_counts == data[n].census.by_components;
      std::size_t round_trips = 0;
      for (const Permutation& p : all_permutations(n)) {
        if (!is_square(p) || !is_decomposable(p)) continue;
        try {
          const auto seq = permutation_to_sequence(p);
          ok &= sequence_to_permutation(seq) == p;
          ++round_trips;
        } catch (const Error&) {
          ok = false;
        }
      }
      std::ostringstream detail;
      detail << "n=" << n << ":";
      for (const auto& [k, c] : data[n].census.by_components) {
        detail << " B_" << n << "," << k << "=" << c << "/T="
               << (t_counts.count(k) ? t_counts.at(k) : BigInt(0));
      }
      detail << " round trips " << round_trips;
      row.record(ok, detail.str());
    }
    add(std::move(row), t);
  }

  // The two printed closed forms, tried at every nearby index shift.
  const auto printed_row = [&](const std::string& name, Rational (*printed)(int),
                               const std::function<BigInt(int)>& definitional) {
    const auto t = clock::now();
    Row row(name, 3, n_max);
    bool any_shift_matches = false;
    for (int shift = -2; shift <= 2; ++shift) {
      bool match = true;
      std::ostringstream vals;
      for (int n = 3; n <= n_max; ++n) {
        const Rational v = printed(n + shift);
        const BigInt d = definitional(n);
        match &= v == Rational(d);
        vals << " n=" << n << ":" << v.str() << (v == Rational(d) ? "==" : "!=") << d;
      }
      any_shift_matches |= match;
      row.note("parameter=size" + std::string(shift >= 0 ? "+" : "") + std::to_string(shift) +
               (match ? " match" : " mismatch") + vals.str());
    }
    row.set_status(any_shift_matches ? CheckStatus::kPass : CheckStatus::kDiscrepant);
    add(std::move(row), t);
  };
  printed_row("printed half-difference form vs Q/2-B", &printed_half_difference, [&](int n) {
    return data[n].census.square / 2 - data[n].census.decomposable_square;
  });
  printed_row("printed intersection form vs Q-2B", &printed_intersection, [&](int n) {
    return data[n].census.square - 2 * data[n].census.decomposable_square;
  });

  // Shared setup time is charged to the first entry.
  if (!report.entries.empty()) {
    report.entries.front().elapsed_ms +=
        std::chrono::duration<double, std::milli>(setup_done - started).count();
  }
  return report;
}

}  // namespace cperm
