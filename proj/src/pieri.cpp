#include "fid/pieri.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "fid/errors.hpp"

namespace fid {

namespace {

// New row i ranges over [mu_i, mu_{i-1}] (row 1 unbounded above); one extra
// row below mu may start. `bound` caps each row.
void strip_rows(const Partition& mu, const std::optional<Partition>& bound, std::size_t row,
                int left, bool exact, std::vector<int>& rows, std::vector<Partition>& out) {
  std::size_t rows_available = mu.length() + 1;
  if (row == rows_available) {
    if (!exact || left == 0) out.push_back(Partition::from_padded_rows(rows));
    return;
  }
  int lo = mu.row(row + 1);
  int hi = row == 0 ? std::numeric_limits<int>::max() : mu.row(row);
  if (exact) hi = std::min(hi, lo + left);
  if (bound) hi = std::min(hi, bound->row(row + 1));
  for (int v = hi; v >= lo; --v) {
    rows.push_back(v);
    strip_rows(mu, bound, row + 1, exact ? left - (v - lo) : 0, exact, rows, out);
    rows.pop_back();
  }
}

// lambda/nu splits into `strips` horizontal strips iff no column holds more than `strips` boxes.
bool reachable(const Partition& nu, const Partition& lambda, int strips) {
  for (int j = 1; j <= lambda.first(); ++j)
    if (lambda.column(j) - nu.column(j) > strips) return false;
  return true;
}

}  // namespace

std::vector<Partition> add_horizontal_strip(const Partition& mu, int boxes,
                                            const std::optional<Partition>& bound) {
  std::vector<Partition> out;
  if (boxes < 0) return out;
  if (bound && !contains(*bound, mu)) return out;
  std::vector<int> rows;
  strip_rows(mu, bound, 0, boxes, true, rows, out);
  std::sort(out.begin(), out.end(), CanonicalOrder{});
  return out;
}

std::vector<Partition> add_any_horizontal_strip(const Partition& mu, const Partition& bound) {
  std::vector<Partition> out;
  if (!contains(bound, mu)) return out;
  std::vector<int> rows;
  strip_rows(mu, bound, 0, 0, false, rows, out);
  std::sort(out.begin(), out.end(), CanonicalOrder{});
  return out;
}

Decomposition pieri_product(const Partition& mu, const Composition& a) {
  // Forward accumulation over the stages: partition -> number of chains so far.
  std::map<Partition, BigInt> layer{{mu, 1}};
  int n = mu.size();
  for (int boxes : a) {
    if (boxes < 0) throw Error(ErrorKind::InvalidArgument, "composition entries must be non-negative");
    n += boxes;
    if (boxes == 0) continue;
    std::map<Partition, BigInt> next;
    for (const auto& [nu, count] : layer)
      for (auto& lambda : add_horizontal_strip(nu, boxes)) next[std::move(lambda)] += count;
    layer = std::move(next);
  }
  Decomposition out(n);
  for (const auto& [lambda, count] : layer) out.add(lambda, count);
  return out;
}

BigInt chain_multiplicity(const Partition& mu, const Composition& a, const Partition& lambda) {
  int n = mu.size();
  for (int boxes : a) n += boxes;
  if (n != lambda.size() || !contains(lambda, mu)) return 0;
  std::map<Partition, BigInt> layer{{mu, 1}};
  for (int boxes : a) {
    if (boxes == 0) continue;
    std::map<Partition, BigInt> next;
    for (const auto& [nu, count] : layer)
      for (auto& p : add_horizontal_strip(nu, boxes, lambda)) next[std::move(p)] += count;
    layer = std::move(next);
  }
  auto it = layer.find(lambda);
  return it == layer.end() ? BigInt(0) : it->second;
}

BigInt strip_chain_count(const Partition& mu, const Partition& lambda, int steps) {
  if (!contains(lambda, mu) || !reachable(mu, lambda, steps)) return 0;
  std::map<Partition, BigInt> layer{{mu, 1}};
  for (int s = 0; s < steps; ++s) {
    std::map<Partition, BigInt> next;
    for (const auto& [nu, count] : layer)
      for (auto& p : add_any_horizontal_strip(nu, lambda))
        if (reachable(p, lambda, steps - s - 1)) next[std::move(p)] += count;
    layer = std::move(next);
  }
  auto it = layer.find(lambda);
  return it == layer.end() ? BigInt(0) : it->second;
}

}  // namespace fid
