#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spca/basis.hpp"

namespace spca {

struct RunConfig {
  Index k = 1;
  Index batch = 1;
  double b0 = 1e-5;
  std::uint64_t seed = 0;
  std::int64_t checkpoint_every = 1;  // blocks between recorded bases

  void validate() const;
};

struct Checkpoint {
  std::int64_t samples_seen = 0;
  Basis basis;
};

/// Outcome of one streaming run. The final basis is always also the last
/// checkpoint.
struct RunResult {
  std::string algorithm;
  RunConfig config;
  Basis final_basis;
  std::vector<Checkpoint> checkpoints;
  std::int64_t blocks_seen = 0;
  std::int64_t samples_seen = 0;
  std::uint64_t stream_checksum = 0;
  std::optional<AdaRateState> adarate;   // AdaOja only
  std::optional<Vector> eigval_estimates;  // HPCA only
};

}  // namespace spca
