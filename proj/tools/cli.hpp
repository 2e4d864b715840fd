#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace idealgraph::cli {

enum class Format { json, text };

struct RunConfig {
  std::optional<std::string> graph_path;  // bundled example when empty
  std::optional<std::string> pair;        // "H=v1,v2;S=w1"
  bool all_pairs = false;
  std::size_t degree = 4;
  std::size_t trunc = 4;
  std::uint64_t omega_width = 2;
  std::string field = "rational";
  bool old = false;
  Format format = Format::json;
};

/// The example graph shipped with the tool (also data/example.json).
const std::string& bundled_example();

/// Exit codes: 0 all checks pass, 1 a verification failed, 2 usage or input error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

int cmd_analyze(const RunConfig& cfg, std::ostream& out);
int cmd_construct(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out);
int cmd_counterexample(const RunConfig& cfg, std::ostream& out);

}  // namespace idealgraph::cli
