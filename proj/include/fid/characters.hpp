#pragma once

#include <map>

#include "fid/decomposition.hpp"
#include "fid/numeric.hpp"
#include "fid/partition.hpp"

// Character theory of the symmetric groups, computed independently of the
// Pieri machinery so it can serve as an oracle for it.

namespace fid {

/// A cycle type is a partition of n read as cycle lengths.
using CycleType = Partition;

/// Integer-valued class function on S_n, keyed by every cycle type of n.
struct ClassFunction {
  int n = 0;
  std::map<CycleType, BigInt, CanonicalOrder> values;

  const BigInt& operator()(const CycleType& rho) const { return values.at(rho); }
  bool operator==(const ClassFunction&) const = default;
};

/// z_rho = prod_k k^{m_k} m_k!, the centralizer order.
BigInt centralizer_order(const CycleType& rho);

/// n! / z_rho.
BigInt class_size(const CycleType& rho);

/// chi^lambda via Murnaghan-Nakayama (beta-set rim-hook removal).
ClassFunction irreducible_character(const Partition& lambda);

/// Character of Ind_{S_m x S_a1 x ... x S_ah}^{S_n} (S^mu # k # ... # k).
ClassFunction induce_trivial_product(const Partition& mu, const Composition& a);

/// <chi, chi> weighted by class sizes, divided by n!.
Rational inner_product(const ClassFunction& a, const ClassFunction& b);

/// Multiplicities <chi, chi^lambda>. Throws Error(NotACharacter) when any is
/// negative or non-integral.
Decomposition decompose(const ClassFunction& chi);

}  // namespace fid
