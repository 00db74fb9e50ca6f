#include "fid/characters.hpp"

#include <algorithm>
#include <set>

#include "fid/errors.hpp"

namespace fid {

BigInt centralizer_order(const CycleType& rho) {
  std::map<int, unsigned long> mult;
  for (int k : rho.parts()) ++mult[k];
  BigInt z = 1;
  for (auto [k, mk] : mult) z *= power(static_cast<unsigned long>(k), mk) * factorial(mk);
  return z;
}

BigInt class_size(const CycleType& rho) { return factorial(rho.size()) / centralizer_order(rho); }

namespace {

using BetaSet = std::vector<int>;  // strictly decreasing

BetaSet beta_set(const Partition& p) {
  BetaSet b;
  int h = static_cast<int>(p.length());
  for (int i = 0; i < h; ++i) b.push_back(p.parts()[i] + (h - 1 - i));
  return b;
}

Partition from_beta_set(BetaSet b) {
  std::sort(b.begin(), b.end(), std::greater<>());
  int h = static_cast<int>(b.size());
  std::vector<int> rows;
  for (int i = 0; i < h; ++i) rows.push_back(b[i] - (h - 1 - i));
  return Partition::from_padded_rows(std::move(rows));
}

using Memo = std::map<std::pair<Partition, Partition>, BigInt>;

// chi^lambda at the class whose cycle lengths are `cycles`. Removing a rim
// hook of length k moves one bead from beta to beta - k; the sign is the
// parity of beads jumped over.
BigInt murnaghan_nakayama(const Partition& lambda, const Partition& cycles, Memo& memo) {
  if (cycles.empty()) return lambda.empty() ? 1 : 0;
  auto key = std::make_pair(lambda, cycles);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  int k = cycles.parts().front();
  Partition rest(std::vector<int>(cycles.parts().begin() + 1, cycles.parts().end()));
  BetaSet beta = beta_set(lambda);
  std::set<int> beads(beta.begin(), beta.end());

  BigInt value = 0;
  for (std::size_t idx = 0; idx < beta.size(); ++idx) {
    int from = beta[idx];
    int to = from - k;
    if (to < 0 || beads.count(to)) continue;
    int jumped = static_cast<int>(std::distance(beads.upper_bound(to), beads.lower_bound(from)));
    BetaSet moved = beta;
    moved[idx] = to;
    BigInt term = murnaghan_nakayama(from_beta_set(std::move(moved)), rest, memo);
    value += (jumped % 2 == 0) ? term : BigInt(-term);
  }
  memo.emplace(std::move(key), value);
  return value;
}

// Splits the multiset of cycle lengths into blocks of prescribed sizes.
// `assignment[j]` collects the cycles given to block j.
struct SplitState {
  std::vector<std::pair<int, int>> cycle_counts;  // (length, multiplicity)
  std::vector<int> block_sizes;
  std::vector<std::vector<int>> assignment;
  std::vector<int> filled;
};

template <class Visit>
void split_cycles(SplitState& s, std::size_t cycle_idx, std::size_t block, int left, Visit&& visit) {
  if (cycle_idx == s.cycle_counts.size()) {
    for (std::size_t j = 0; j < s.block_sizes.size(); ++j)
      if (s.filled[j] != s.block_sizes[j]) return;
    visit(s.assignment);
    return;
  }
  auto [len, count] = s.cycle_counts[cycle_idx];
  if (block + 1 == s.block_sizes.size()) {
    if (s.filled[block] + left * len > s.block_sizes[block]) return;
    s.filled[block] += left * len;
    s.assignment[block].insert(s.assignment[block].end(), left, len);
    split_cycles(s, cycle_idx + 1, 0, s.cycle_counts.size() > cycle_idx + 1
                                          ? s.cycle_counts[cycle_idx + 1].second : 0, visit);
    s.assignment[block].resize(s.assignment[block].size() - left);
    s.filled[block] -= left * len;
    return;
  }
  for (int take = 0; take <= left; ++take) {
    if (s.filled[block] + take * len > s.block_sizes[block]) break;
    s.filled[block] += take * len;
    s.assignment[block].insert(s.assignment[block].end(), take, len);
    split_cycles(s, cycle_idx, block + 1, left - take, visit);
    s.assignment[block].resize(s.assignment[block].size() - take);
    s.filled[block] -= take * len;
  }
}

Partition sorted_partition(std::vector<int> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return Partition(std::move(v));
}

}  // namespace

ClassFunction irreducible_character(const Partition& lambda) {
  ClassFunction chi;
  chi.n = lambda.size();
  Memo memo;
  for (const auto& rho : partitions_of(chi.n)) chi.values.emplace(rho, murnaghan_nakayama(lambda, rho, memo));
  return chi;
}

ClassFunction induce_trivial_product(const Partition& mu, const Composition& a) {
  int n = mu.size();
  std::vector<int> blocks{mu.size()};
  for (int ai : a) {
    if (ai < 0) throw Error(ErrorKind::InvalidArgument, "composition entries must be non-negative");
    n += ai;
    if (ai > 0) blocks.push_back(ai);
  }

  Memo memo;
  ClassFunction chi;
  chi.n = n;
  for (const auto& rho : partitions_of(n)) {
    SplitState s;
    for (int k : rho.parts()) {
      if (!s.cycle_counts.empty() && s.cycle_counts.back().first == k)
        ++s.cycle_counts.back().second;
      else
        s.cycle_counts.emplace_back(k, 1);
    }
    s.block_sizes = blocks;
    s.assignment.assign(blocks.size(), {});
    s.filled.assign(blocks.size(), 0);

    // Ind(psi)(rho) = z_rho * sum over H-classes c inside rho of psi(c) / z_H(c).
    Rational sum = 0;
    auto visit = [&](const std::vector<std::vector<int>>& parts) {
      Partition first = sorted_partition(parts[0]);
      BigInt psi = murnaghan_nakayama(mu, first, memo);
      if (psi == 0) return;
      BigInt z = centralizer_order(first);
      for (std::size_t j = 1; j < parts.size(); ++j) z *= centralizer_order(sorted_partition(parts[j]));
      sum += ratio(psi, z);
    };
    int first_count = s.cycle_counts.empty() ? 0 : s.cycle_counts[0].second;
    if (s.cycle_counts.empty()) {
      visit(s.assignment);
    } else {
      split_cycles(s, 0, 0, first_count, visit);
    }
    Rational value = sum * Rational(centralizer_order(rho));
    if (value.get_den() != 1)
      throw Error(ErrorKind::InvariantBreach, "induced character value is not an integer");
    chi.values.emplace(rho, value.get_num());
  }
  return chi;
}

Rational inner_product(const ClassFunction& a, const ClassFunction& b) {
  if (a.n != b.n) throw Error(ErrorKind::InvalidArgument, "class functions on different groups");
  Rational sum = 0;
  for (const auto& [rho, va] : a.values) sum += ratio(va * b(rho), centralizer_order(rho));
  return sum;
}

Decomposition decompose(const ClassFunction& chi) {
  Decomposition out(chi.n);
  for (const auto& lambda : partitions_of(chi.n)) {
    Rational m = inner_product(chi, irreducible_character(lambda));
    if (m.get_den() != 1 || m < 0)
      throw Error(ErrorKind::NotACharacter,
                  "multiplicity of " + format_partition(lambda) + " is " + m.get_str());
    out.add(lambda, m.get_num());
  }
  return out;
}

}  // namespace fid
