#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bethe/lie_algebra.hpp"

namespace bethe::cli {

// Exit statuses.
enum Exit : int {
  kOk = 0,
  kCertificateFailed = 1,
  kParse = 2,        // malformed flags, rationals or configs
  kBound = 3,        // parameters outside documented bounds or domains
  kTruncation = 4,   // computation reached the truncation bound
  kInternal = 5,
};

using Json = nlohmann::ordered_json;

constexpr const char* kSchema = "bethe-report";
constexpr int kSchemaVersion = 1;

struct Job {
  std::string command;
  std::string algebra;
  std::string config;
  std::string family;
  std::string c;       // comma-separated rationals
  std::string c0;
  std::string chi;
  std::string z;
  int n = 0;
  int max_deg = 4;
  int kmax = 2;
  int truncation = 3;
  int loop_truncation = -1;  // verify-gaudin; -1 picks 2 kmax + 2
  int max_z = 4;
  int cutoff = 4;
  int deg = 3;
  int max_m = -1;
  int max_order = 8;
  unsigned seed = 1;
  bool all_pairs = false;
  bool compare_bethe = false;
  std::string compare = "product";
};

/// Result of a command: JSON document plus the human-readable lines.
struct Report {
  Json doc;
  std::vector<std::string> lines;
  bool pass = true;
};

Report run(const Job& job);

std::vector<Rational> parse_list(const std::string& text);
LieAlgebra load_algebra(const Job& job);
/// n for "glN" algebras; BoundError otherwise.
int gl_size(const Job& job);

}  // namespace bethe::cli
