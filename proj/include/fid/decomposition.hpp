#pragma once

#include <map>

#include "fid/numeric.hpp"
#include "fid/partition.hpp"

namespace fid {

/// A semisimple S_n-representation up to isomorphism: partition -> multiplicity.
/// Zero multiplicities are never stored.
class Decomposition {
 public:
  using Terms = std::map<Partition, BigInt, CanonicalOrder>;

  explicit Decomposition(int degree = 0) : degree_(degree) {}

  int degree() const noexcept { return degree_; }
  const Terms& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  /// Throws Error(InvalidArgument) if |p| != degree or the result would be negative.
  void add(const Partition& p, const BigInt& multiplicity);
  void add(const Decomposition& other, const BigInt& scale = 1);

  BigInt multiplicity(const Partition& p) const;
  BigInt total_dimension() const;

  bool operator==(const Decomposition&) const = default;

 private:
  int degree_;
  Terms terms_;
};

/// The regular representation of S_m: each irreducible with multiplicity dim.
Decomposition regular_representation(int m);

std::string to_string(const Decomposition& d);

}  // namespace fid
