#include "fid/decomposition.hpp"

#include "fid/errors.hpp"

namespace fid {

void Decomposition::add(const Partition& p, const BigInt& multiplicity) {
  if (p.size() != degree_)
    throw Error(ErrorKind::InvalidArgument,
                format_partition(p) + " is not a partition of " + std::to_string(degree_));
  if (multiplicity == 0) return;
  auto [it, inserted] = terms_.try_emplace(p, 0);
  it->second += multiplicity;
  if (it->second < 0) throw Error(ErrorKind::InvalidArgument, "negative multiplicity");
  if (it->second == 0) terms_.erase(it);
}

void Decomposition::add(const Decomposition& other, const BigInt& scale) {
  for (const auto& [p, c] : other.terms_) add(p, c * scale);
}

BigInt Decomposition::multiplicity(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt Decomposition::total_dimension() const {
  BigInt total = 0;
  for (const auto& [p, c] : terms_) total += c * dim_irreducible(p);
  return total;
}

Decomposition regular_representation(int m) {
  Decomposition d(m);
  for (const auto& p : partitions_of(m)) d.add(p, dim_irreducible(p));
  return d;
}

std::string to_string(const Decomposition& d) {
  std::string s = "{";
  bool first = true;
  for (const auto& [p, c] : d.terms()) {
    if (!first) s += ", ";
    first = false;
    s += format_partition(p) + ":" + c.get_str();
  }
  return s + "}";
}

}  // namespace fid
