#pragma once

#include <functional>
#include <optional>
#include <string>

#include "fid/decomposition.hpp"
#include "fid/partition.hpp"

namespace fid {

/// Largest |mu| + |a| accepted by oracle_sweep; character tables beyond this
/// get slow for a batch check.
inline constexpr int kOracleMaxSize = 9;

using PieriFunction = std::function<Decomposition(const Partition&, const Composition&)>;

struct OracleResult {
  bool pass = true;
  int cases = 0;
  std::optional<std::string> counterexample;
};

/// Compares `pieri` against character-theoretic induction for every mu and
/// every composition a of length 1..max_length with |mu| + |a| <= max_size.
/// Stops at the first disagreement.
OracleResult oracle_sweep(int max_size, int max_length = 3, const PieriFunction& pieri = {});

}  // namespace fid
