#pragma once

#include <string>
#include <vector>

#include "ruledmmp/goodmodel.hpp"

namespace ruledmmp {

/// Canonical instance document: sorted keys, arrays in id order, two-space
/// indent, trailing newline. parse(serialize(sp)) reproduces sp exactly,
/// and serialize(parse(text)) reproduces canonical-form text byte for byte.
std::string serialize_instance(const SurfacePair& sp);
SurfacePair parse_instance(const std::string& text);

/// A trace embeds the instance it was computed from, so it replays on its
/// own: steps, stage boundaries, gamma, and the stage-1 class sum.
std::string serialize_trace(const SurfacePair& sp, const GoodModelPlan& plan);

struct TraceData {
  SurfacePair instance;
  std::vector<ContractionStep> steps;
  std::int64_t k1 = 0;
  std::int64_t k2 = 0;
  std::int64_t m = 0;
  std::int64_t gamma_value = 0;
  DivisorClass e_prime;
};
TraceData parse_trace(const std::string& text);

/// Canonical rendering of a live contraction state, used by the replay
/// determinism contract: replaying a trace twice gives identical bytes.
std::string serialize_state(const ContractionState& state);

bool looks_like_trace(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace ruledmmp
