#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cperm/cli/render.hpp"

namespace cperm::cli {

// Process exit statuses.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitParse = 2,
  kExitNotAssociated = 3,
  kExitSize = 4,
  kExitBijectionDomain = 5,
};

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

int cmd_classify(const std::vector<std::string>& perms, bool json, Streams io);
int cmd_build(const std::string& perm, bool all, const RenderSpec& spec, Streams io);

struct EnumerateRequest {
  std::string class_name;
  int size = 0;
  bool list = false;
  std::string by;                // "", "fixed" or "components"
  std::string method = "fibers"; // convex only
  bool json = false;
  int workers = 0;
};
int cmd_enumerate(const EnumerateRequest& req, Streams io);

struct VerifyRequest {
  int max_size = 6;
  bool json = false;
  bool strict_paper = false;
  bool verbose = false;
  int workers = 0;
};
int cmd_verify(const VerifyRequest& req, Streams io);

int cmd_decompose(const std::string& perm, const RenderSpec& spec, Streams io);

// Full command line, argv[0] included.
int run(int argc, const char* const* argv, Streams io);

}  // namespace cperm::cli
