#include "fid/free_module.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "fid/errors.hpp"
#include "fid/pieri.hpp"

namespace fid {

FreeModuleSpec FreeModuleSpec::regular(int m, int d) {
  FreeModuleSpec spec{d, m, regular_representation(m)};
  spec.validate();
  return spec;
}

FreeModuleSpec FreeModuleSpec::irreducible(const Partition& lambda, int d) {
  FreeModuleSpec spec{d, lambda.size(), Decomposition(lambda.size())};
  spec.generator.add(lambda, 1);
  spec.validate();
  return spec;
}

void FreeModuleSpec::validate() const {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "color count d must be >= 1");
  if (m < 0) throw Error(ErrorKind::InvalidArgument, "generator degree must be >= 0");
  if (generator.degree() != m)
    throw Error(ErrorKind::InvalidArgument, "generator is not a representation of S_m");
}

BigInt hom_count(int d, int m, int n) {
  if (n < m || m < 0) return 0;
  return factorial(n) / factorial(n - m) * power(d, n - m);
}

BigInt dim_at(const FreeModuleSpec& spec, int n) {
  if (n < spec.m) return 0;
  return spec.generator_dimension() * binomial(n, spec.m) * power(spec.d, n - spec.m);
}

Decomposition decompose_at(const FreeModuleSpec& spec, int n) {
  spec.validate();
  Decomposition out(std::max(n, 0));
  if (n < spec.m) return out;
  // pieri_product is symmetric in the order of the composition, so each
  // sorted composition is expanded once and weighted by its orbit size.
  std::map<Composition, BigInt> orbits;
  for (auto a : compositions(n - spec.m, spec.d)) {
    std::sort(a.begin(), a.end(), std::greater<>());
    ++orbits[a];
  }
  for (const auto& [mu, mult] : spec.generator.terms())
    for (const auto& [a, count] : orbits) out.add(pieri_product(mu, a), mult * count);
  return out;
}

BigInt multiplicity_at(const FreeModuleSpec& spec, const Partition& target) {
  BigInt total = 0;
  for (const auto& [mu, mult] : spec.generator.terms())
    total += mult * strip_chain_count(mu, target, spec.d);
  return total;
}

Partition greedy_step(const Partition& mu, const Partition& lambda) {
  if (!contains(mu, lambda))
    throw Error(ErrorKind::NotContained,
                format_partition(lambda) + " is not contained in " + format_partition(mu));
  std::vector<int> rows;
  for (std::size_t i = 1; i <= mu.length(); ++i)
    rows.push_back(std::max(mu.row(i + 1), lambda.row(i)));
  return Partition::from_padded_rows(std::move(rows));
}

bool is_constituent(const Partition& mu, const Partition& lambda, int steps) {
  if (!contains(mu, lambda)) return false;
  Partition cur = mu;
  for (int s = 0; s < steps && cur != lambda; ++s) cur = greedy_step(cur, lambda);
  return cur == lambda;
}

int d_weight(const FreeModuleSpec& spec) {
  spec.validate();
  int weight = 0;
  for (const auto& [lambda, mult] : spec.generator.terms()) weight = std::max(weight, lambda.size());
  for (const auto& [lambda, mult] : spec.generator.terms()) {
    if (lambda.size() != weight) continue;
    std::vector<int> pads(spec.d, lambda.size() + std::max(lambda.first(), 1));
    auto witness = pad(lambda, pads);
    if (!witness || multiplicity_at(spec, *witness) <= 0 || unpad(*witness, spec.d).core != lambda)
      throw Error(ErrorKind::InvariantBreach,
                  "no d-row constituent of weight " + std::to_string(weight) + " found");
    break;
  }
  return weight;
}

int padded_level(const PaddedLabel& label) {
  int r = static_cast<int>(label.pads.size());
  int sum = std::accumulate(label.pads.begin(), label.pads.end(), 0);
  return sum - (r - 1) * label.core.size();
}

BigInt padded_multiplicity(const FreeModuleSpec& spec, const PaddedLabel& label) {
  spec.validate();
  if (static_cast<int>(label.pads.size()) != spec.d)
    throw Error(ErrorKind::InvalidArgument, "label needs exactly d pads");
  auto target = pad(label);
  if (!target) return 0;
  return multiplicity_at(spec, *target);
}

Plateau stabilized_padded_multiplicity(const FreeModuleSpec& spec, const Partition& core,
                                       const std::vector<int>& base_pads, int horizon) {
  spec.validate();
  if (static_cast<int>(base_pads.size()) != spec.d)
    throw Error(ErrorKind::InvalidArgument, "base pads need exactly d entries");
  if (!std::is_sorted(base_pads.begin(), base_pads.end(), std::greater<>()))
    throw Error(ErrorKind::UnsortedPads, "base pads must be weakly decreasing");

  int gen_reach = 0;
  for (const auto& [lambda, mult] : spec.generator.terms())
    gen_reach = std::max(gen_reach, lambda.first() + spec.m);
  int needed = std::max(gen_reach, core.size() + core.first());

  Plateau result;
  result.proven_bound = std::max(0, needed - base_pads.back());

  PaddedLabel label{core, base_pads};
  for (int l = 0; l <= horizon; ++l) {
    result.values.push_back(padded_multiplicity(spec, label));
    if (l > 0 && result.values[l] != result.values[l - 1]) result.onset = l;
    bool past_bound = l >= result.proven_bound + kPlateauConfirmation;
    bool settled = l - result.onset >= kPlateauConfirmation;
    if (past_bound && settled) {
      result.value = result.values.back();
      return result;
    }
    for (int& n : label.pads) ++n;
  }
  throw Error(ErrorKind::NoStabilization,
              "no plateau for " + format_partition(core) + " within horizon " + std::to_string(horizon));
}

}  // namespace fid
