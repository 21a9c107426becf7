#include "cperm/cli/commands.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cperm/association.hpp"
#include "cperm/bijection.hpp"
#include "cperm/cli/parse.hpp"
#include "cperm/enumeration.hpp"
#include "cperm/error.hpp"
#include "cperm/unimodal.hpp"
#include "cperm/verification.hpp"

namespace cperm::cli {
namespace {

using nlohmann::json;

// Permutation-space classes walk S_n; oracle classes search cell stacks.
constexpr int kMaxPermutationSize = 10;
constexpr int kMaxOracleSize = 8;
constexpr int kMaxColumnConvexSize = 7;

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::kInvalidPermutation: return kExitParse;
    case ErrorKind::kNotAssociated: return kExitNotAssociated;
    case ErrorKind::kSizeTooLarge:
    case ErrorKind::kOutOfRange: return kExitSize;
    case ErrorKind::kNotSquare:
    case ErrorKind::kIndecomposable: return kExitBijectionDomain;
    default: return kExitVerifyFailed;
  }
}

std::vector<int> values_of(const Permutation& p) { return {p.values().begin(), p.values().end()}; }

std::vector<int> values_of(const IndexedSubsequence& s) { return s.values(); }

std::string join_values(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string set_of(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

json count_json(const BigInt& v) {
  if (v <= BigInt(std::numeric_limits<long long>::max())) return v.convert_to<long long>();
  return v.str();
}

std::string witness_text(const MembershipVerdict& v, const MuSigma& ms) {
  if (const auto* d = std::get_if<Decomposable>(&v.reason)) {
    return "decomposable at " + std::to_string(d->split);
  }
  const auto& s = std::get<SigmaNotUnimodal>(v.reason);
  std::string vals;
  for (int i = 0; i < 3; ++i) vals += (i ? "," : "") + std::to_string(ms.sigma[s.positions[i] - 1].value);
  return "sigma not lower unimodal at sigma positions " + std::to_string(s.positions[0]) + "," +
         std::to_string(s.positions[1]) + "," + std::to_string(s.positions[2]) + " (values " + vals +
         ")";
}

json witness_json(const MembershipVerdict& v) {
  if (v.member()) return nullptr;
  if (const auto* d = std::get_if<Decomposable>(&v.reason)) {
    return {{"kind", "decomposable"}, {"split", d->split}};
  }
  const auto& s = std::get<SigmaNotUnimodal>(v.reason);
  return {{"kind", "sigma-not-unimodal"},
          {"positions", {s.positions[0], s.positions[1], s.positions[2]}}};
}

json classify_json(const Permutation& p) {
  const MuSigma ms = mu_sigma(p);
  const MembershipVerdict in = is_associated(p);
  const MembershipVerdict in_prime = is_associated(reversal(p));
  json j = {{"v", kJsonSchemaVersion},
            {"permutation", values_of(p)},
            {"mu", values_of(ms.mu)},
            {"sigma", values_of(ms.sigma)},
            {"square", is_square(p)},
            {"ctilde", {{"member", in.member()}, {"witness", witness_json(in)}}},
            {"ctilde_prime", {{"member", in_prime.member()}, {"witness", witness_json(in_prime)}}}};
  if (in.member()) {
    const auto f = free_fixed_points(p).points;
    j["free_fixed_points"] = f;
    j["fiber_size"] = count_json(BigInt(1) << f.size());
  } else {
    j["free_fixed_points"] = nullptr;
    j["fiber_size"] = 0;
  }
  return j;
}

void classify_text(const Permutation& p, std::ostream& out) {
  const MuSigma ms = mu_sigma(p);
  const MembershipVerdict in = is_associated(p);
  const MembershipVerdict in_prime = is_associated(reversal(p));
  out << "permutation " << p << '\n'
      << "mu " << join_values(values_of(ms.mu)) << '\n'
      << "sigma " << join_values(values_of(ms.sigma)) << '\n'
      << "square " << (is_square(p) ? "yes" : "no") << '\n';
  out << "ctilde " << (in.member() ? "member" : "not member, " + witness_text(in, ms)) << '\n';
  out << "ctilde' "
      << (in_prime.member() ? "member"
                            : "not member, reversal " + witness_text(in_prime, mu_sigma(reversal(p))))
      << '\n';
  if (in.member()) {
    const auto f = free_fixed_points(p).points;
    out << "free fixed points " << set_of(f) << '\n'
        << "fiber " << (BigInt(1) << f.size()) << '\n';
  }
}

// Writes to --output when given, else to `out`.
void emit(const std::string& text, const RenderSpec& spec, std::ostream& out) {
  if (spec.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(spec.output, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + spec.output);
  f << text;
}

// Runs `body`, translating failures into exit statuses.
template <typename Body>
int guarded(std::ostream& err, Body body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
}

void list_permutominoes(const std::vector<Permutomino>& ps, bool as_json, json& j,
                        std::ostream& out) {
  if (as_json) {
    j["listing"] = json::array();
    for (const auto& p : ps) j["listing"].push_back(to_json(p));
    return;
  }
  for (const auto& p : ps) {
    out << p.pi1() << ' ' << (p.boundary().empty() ? "(empty)" : p.boundary().letters()) << '\n';
  }
}

void list_permutations(const std::vector<Permutation>& ps, bool as_json, json& j,
                       std::ostream& out) {
  if (as_json) {
    j["listing"] = json::array();
    for (const auto& p : ps) j["listing"].push_back(values_of(p));
    return;
  }
  for (const auto& p : ps) out << p << '\n';
}

void stratification(const std::map<int, BigInt>& by, const std::string& key, bool as_json, json& j,
                    std::ostream& out) {
  if (as_json) {
    json m = json::object();
    for (const auto& [k, v] : by) m[std::to_string(k)] = count_json(v);
    j["by_" + key] = m;
    return;
  }
  for (const auto& [k, v] : by) out << key << ' ' << k << ": " << v << '\n';
}

}  // namespace

int cmd_classify(const std::vector<std::string>& perms, bool as_json, Streams io) {
  return guarded(io.err, [&] {
    std::vector<Permutation> ps;
    for (const auto& text : perms) ps.push_back(parse_permutation(text));
    if (as_json) {
      if (ps.size() == 1) {
        io.out << classify_json(ps.front()).dump(2) << '\n';
      } else {
        json arr = json::array();
        for (const auto& p : ps) arr.push_back(classify_json(p));
        io.out << arr.dump(2) << '\n';
      }
    } else {
      for (std::size_t i = 0; i < ps.size(); ++i) {
        if (i) io.out << '\n';
        classify_text(ps[i], io.out);
      }
    }
    return int{kExitOk};
  });
}

int cmd_build(const std::string& perm, bool all, const RenderSpec& spec, Streams io) {
  return guarded(io.err, [&] {
    const Permutation p = parse_permutation(perm);
    std::vector<Permutomino> ps;
    if (all) ps = fiber(p);
    else ps.push_back(build_canonical(p));
    RenderSpec s = spec;
    s.json_array = all;
    emit(render(ps, s), s, io.out);
    return int{kExitOk};
  });
}

int cmd_enumerate(const EnumerateRequest& req, Streams io) {
  return guarded(io.err, [&] {
    const std::string& c = req.class_name;
    const bool permutation_space =
        c == "ctilde" || c == "square" || c == "decomposable" ||
        (c == "convex" && req.method == "fibers");
    const bool known = permutation_space || c == "convex" || c == "directed" ||
                       c == "parallelogram" || c == "symmetric" || c == "column-convex";
    if (!known) throw ParseError(0, "unknown class '" + c + "'");
    if (c == "convex" && req.method != "fibers" && req.method != "intervals") {
      throw ParseError(0, "unknown method '" + req.method + "'");
    }
    const int bound = permutation_space      ? kMaxPermutationSize
                      : c == "column-convex" ? kMaxColumnConvexSize
                                             : kMaxOracleSize;
    if (req.size < 1) throw Error(ErrorKind::kOutOfRange, "size must be >= 1");
    if (req.size > bound) {
      throw Error(ErrorKind::kSizeTooLarge,
                  c + " enumeration is limited to size " + std::to_string(bound));
    }
    const bool by_fixed = req.by == "fixed";
    const bool by_components = req.by == "components";
    if (!req.by.empty() && !by_fixed && !by_components) {
      throw ParseError(0, "unknown stratifier '" + req.by + "'");
    }
    if (by_fixed && c != "ctilde" && c != "convex") {
      throw ParseError(0, "--by fixed applies to ctilde and convex");
    }
    if (by_components && c != "square" && c != "decomposable") {
      throw ParseError(0, "--by components applies to square and decomposable");
    }

    const EnumerationOptions opts{req.workers, req.list};
    json j = {{"v", kJsonSchemaVersion}, {"class", c}, {"size", req.size}};
    std::ostringstream body;
    BigInt count;

    if (c == "ctilde" || (c == "convex" && by_fixed)) {
      const auto e = enumerate_ctilde(req.size, opts);
      std::map<int, BigInt> by = e.by_free_fixed_points;
      if (c == "convex") {
        count = 0;
        for (auto& [k, v] : by) count += (v <<= k);
      } else {
        count = e.total;
      }
      if (by_fixed) stratification(by, "fixed", req.json, j, body);
      if (req.list) {
        if (c == "ctilde") list_permutations(e.members, req.json, j, body);
        else list_permutominoes(enumerate_convex_permutominoes(req.size, ConvexMethod::kFibers, opts).listing,
                                req.json, j, body);
      }
    } else if (c == "convex") {
      const auto e = enumerate_convex_permutominoes(
          req.size, req.method == "fibers" ? ConvexMethod::kFibers : ConvexMethod::kIntervals, opts);
      count = e.count;
      if (req.list) list_permutominoes(e.listing, req.json, j, body);
    } else if (c == "square" || c == "decomposable") {
      const auto e = enumerate_square(req.size, opts);
      count = c == "square" ? e.square : e.decomposable;
      if (by_components) stratification(e.by_components, "components", req.json, j, body);
      if (req.list) {
        std::vector<Permutation> listing;
        for (const auto& p : e.listing) {
          if (c == "square" || is_decomposable(p)) listing.push_back(p);
        }
        list_permutations(listing, req.json, j, body);
      }
    } else {
      std::vector<Permutomino> ps;
      if (c == "directed") ps = directed_convex_permutominoes(req.size);
      else if (c == "parallelogram") ps = parallelogram_permutominoes(req.size);
      else if (c == "column-convex") ps = enumerate_column_convex_oracle(req.size, kMaxColumnConvexSize);
      else {
        for (auto& p : interval_permutominoes(req.size, IntervalFamily::kConvex)) {
          if (classify(p).symmetric_xy) ps.push_back(std::move(p));
        }
      }
      count = ps.size();
      if (req.list) list_permutominoes(ps, req.json, j, body);
    }

    if (req.json) {
      j["count"] = count_json(count);
      io.out << j.dump(2) << '\n';
    } else {
      io.out << count << '\n' << body.str();
    }
    return int{kExitOk};
  });
}

int cmd_verify(const VerifyRequest& req, Streams io) {
  return guarded(io.err, [&] {
    VerifyOptions opts;
    opts.workers = req.workers;
    const VerificationReport r = verify_identities(req.max_size, opts);
    const bool ok = r.passed(req.strict_paper);
    if (req.json) {
      json entries = json::array();
      for (const auto& e : r.entries) {
        entries.push_back({{"name", e.name},
                           {"status", to_string(e.status)},
                           {"min_size", e.min_size},
                           {"max_size", e.max_size},
                           {"lines", e.lines},
                           {"elapsed_ms", e.elapsed_ms}});
      }
      io.out << json{{"v", kJsonSchemaVersion},
                     {"max_size", r.max_size},
                     {"strict_paper", req.strict_paper},
                     {"passed", ok},
                     {"entries", entries}}
                    .dump(2)
             << '\n';
    } else {
      for (const auto& e : r.entries) {
        io.out << '[' << to_string(e.status) << "] " << e.name << '\n';
        const bool show = req.verbose || e.status != CheckStatus::kPass;
        if (show) {
          for (const auto& l : e.lines) io.out << "    " << l << '\n';
        }
      }
      io.out << (ok ? "all checks passed" : "verification failed")
             << (req.strict_paper ? " (discrepant rows count as failures)" : "") << '\n';
    }
    return int{ok ? kExitOk : kExitVerifyFailed};
  });
}

int cmd_decompose(const std::string& perm, const RenderSpec& spec, Streams io) {
  return guarded(io.err, [&] {
    const Permutation p = parse_permutation(perm);
    const PermutominoSequence seq = permutation_to_sequence(p);
    const Permutation back = sequence_to_permutation(seq);
    if (back != p) {
      throw std::logic_error("bijection round trip failed: " + back.to_string());
    }
    const auto components = decompose(p);
    if (spec.format == Format::kJson) {
      json parts = json::array();
      for (const auto& part : seq.parts()) parts.push_back(to_json(part));
      json comps = json::array();
      for (const auto& c : components) comps.push_back(values_of(c));
      emit(json{{"v", kJsonSchemaVersion},
                {"permutation", values_of(p)},
                {"components", comps},
                {"parts", parts},
                {"round_trip", true}}
                   .dump(2) +
               '\n',
           spec, io.out);
      return int{kExitOk};
    }
    if (spec.format == Format::kSvg) {
      emit(render(seq.parts(), spec), spec, io.out);
      return int{kExitOk};
    }
    std::ostringstream os;
    os << "permutation " << p << '\n' << "components " << components.size() << ':';
    for (const auto& c : components) os << ' ' << c;
    os << '\n';
    for (std::size_t i = 0; i < seq.parts().size(); ++i) {
      const Permutomino& part = seq.parts()[i];
      const bool end = i == 0 || i + 1 == seq.parts().size();
      os << "\npart " << i + 1 << " size " << part.size() << ' '
         << (end ? "directed convex" : "parallelogram") << " component " << components[i] << '\n';
      std::vector<Permutomino> one{part};
      os << render(one, RenderSpec{});
    }
    os << "\nround trip ok\n";
    emit(os.str(), spec, io.out);
    return int{kExitOk};
  });
}

int run(int argc, const char* const* argv, Streams io) {
  CLI::App app{"Convex permutominoes: classification, construction, enumeration and verification",
               "cperm"};
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{
      {"ascii", Format::kAscii}, {"svg", Format::kSvg}, {"json", Format::kJson}};

  std::vector<std::string> classify_perms;
  bool classify_json_flag = false;
  auto* classify = app.add_subcommand("classify", "mu, sigma, square verdict, membership, fiber size");
  classify->add_option("permutation", classify_perms, "one permutation per argument")->required();
  classify->add_flag("--json", classify_json_flag, "structured output");

  std::string build_perm;
  bool build_all = false;
  RenderSpec build_spec;
  auto* build = app.add_subcommand("build", "canonical permutomino or whole fiber of a permutation");
  build->add_option("permutation", build_perm)->required();
  build->add_flag("--all", build_all, "every permutomino in the fiber");
  build->add_option("--format", build_spec.format)->transform(CLI::CheckedTransformer(formats));
  build->add_option("--cell-size", build_spec.cell_size, "svg cell size in pixels")
      ->check(CLI::Range(4, 512));
  build->add_option("--output,-o", build_spec.output, "write to file instead of stdout");

  EnumerateRequest enum_req;
  auto* enumerate = app.add_subcommand("enumerate", "count (and list) a class at one size");
  enumerate->add_option("class", enum_req.class_name,
                        "convex, directed, parallelogram, symmetric, column-convex, ctilde, "
                        "square, decomposable")
      ->required();
  enumerate->add_option("size", enum_req.size)->required();
  enumerate->add_flag("--list", enum_req.list, "list members in stable order");
  enumerate->add_option("--by", enum_req.by, "stratify by 'fixed' or 'components'");
  enumerate->add_option("--method", enum_req.method, "convex: fibers or intervals");
  enumerate->add_flag("--json", enum_req.json);
  enumerate->add_option("--workers", enum_req.workers, "0: CPERM_WORKERS or all cores");

  VerifyRequest verify_req;
  auto* verify = app.add_subcommand("verify", "cross-check every identity and closed form");
  verify->add_option("--max-size", verify_req.max_size)->check(CLI::Range(2, 9));
  verify->add_flag("--json", verify_req.json);
  verify->add_flag("--strict-paper", verify_req.strict_paper,
                   "count discrepant printed formulas as failures");
  verify->add_flag("--verbose,-v", verify_req.verbose, "print every per-size line");
  verify->add_option("--workers", verify_req.workers);

  std::string decompose_perm;
  RenderSpec decompose_spec;
  auto* decompose_cmd = app.add_subcommand("decompose", "square decomposable permutation to parts");
  decompose_cmd->add_option("permutation", decompose_perm)->required();
  decompose_cmd->add_option("--format", decompose_spec.format)
      ->transform(CLI::CheckedTransformer(formats));
  decompose_cmd->add_option("--cell-size", decompose_spec.cell_size)->check(CLI::Range(4, 512));
  decompose_cmd->add_option("--output,-o", decompose_spec.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, io.out, io.err);
    return code == 0 ? kExitOk : kExitParse;
  }

  const Streams s = io;
  if (*classify) return cmd_classify(classify_perms, classify_json_flag, s);
  if (*build) return cmd_build(build_perm, build_all, build_spec, s);
  if (*enumerate) return cmd_enumerate(enum_req, s);
  if (*verify) return cmd_verify(verify_req, s);
  return cmd_decompose(decompose_perm, decompose_spec, s);
}

}  // namespace cperm::cli
