#pragma once

#include <vector>

#include "fid/decomposition.hpp"
#include "fid/partition.hpp"

namespace fid {

/// The free FI_d-module M(W) on an S_m-representation W.
struct FreeModuleSpec {
  int d = 1;
  int m = 0;
  Decomposition generator{0};

  /// M(m): W is the regular representation of S_m.
  static FreeModuleSpec regular(int m, int d);
  /// M(S^lambda).
  static FreeModuleSpec irreducible(const Partition& lambda, int d);

  /// Throws Error(InvalidArgument) unless d >= 1 and W is an S_m-representation.
  void validate() const;
  BigInt generator_dimension() const { return generator.total_dimension(); }
};

/// |Hom_{FI_d}([m], [n])| = n!/(n-m)! * d^(n-m).
BigInt hom_count(int d, int m, int n);

/// dim(W) * C(n, m) * d^(n-m).
BigInt dim_at(const FreeModuleSpec& spec, int n);

/// Irreducible decomposition of M(W)_n: the sum over length-d compositions a
/// of n - m of Ind(W # k), each term expanded by the Pieri rule.
Decomposition decompose_at(const FreeModuleSpec& spec, int n);

/// Multiplicity of S^target in M(W)_{|target|}, without expanding the whole level.
BigInt multiplicity_at(const FreeModuleSpec& spec, const Partition& target);

/// One round of greedy block removal: mu'_i = max(mu_{i+1}, lambda_i).
/// Throws Error(NotContained) if lambda is not inside mu.
Partition greedy_step(const Partition& mu, const Partition& lambda);

/// True iff `steps` greedy rounds take mu exactly to lambda.
bool is_constituent(const Partition& mu, const Partition& lambda, int steps);

/// Largest |lambda| over generator constituents. Also checks that the padding
/// (max(lambda_1,1)^d, lambda) occurs in M(W) and unpads back to that core;
/// throws Error(InvariantBreach) otherwise.
int d_weight(const FreeModuleSpec& spec);

/// Multiplicity of S(label.core)_{pads} in M(W); 0 when the label is the zero
/// representation. Requires exactly d pads.
BigInt padded_multiplicity(const FreeModuleSpec& spec, const PaddedLabel& label);

/// Degree of the symmetric group carrying S(core)_{pads}.
int padded_level(const PaddedLabel& label);

inline constexpr int kDefaultStabilizationHorizon = 50;

/// Consecutive equal values past the proven bound required to call a plateau.
inline constexpr int kPlateauConfirmation = 3;

struct Plateau {
  BigInt value;
  int onset = 0;
  /// Shift past which stability is guaranteed: max(0, max(gen_1 + m, |core| + core_1) - n_d),
  /// taking the largest gen_1 over generator constituents.
  int proven_bound = 0;
  /// Values c_{core, n + l} for l = 0 .. last examined shift.
  std::vector<BigInt> values;
};

/// Scans l = 0, 1, ... until the values have been constant for
/// kPlateauConfirmation shifts past both the proven bound and the last change.
/// Throws Error(NoStabilization) past `horizon`.
Plateau stabilized_padded_multiplicity(const FreeModuleSpec& spec, const Partition& core,
                                       const std::vector<int>& base_pads,
                                       int horizon = kDefaultStabilizationHorizon);

}  // namespace fid
