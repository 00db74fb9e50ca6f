#include "fid/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "fid/errors.hpp"

namespace fid {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw Error(ErrorKind::InvalidPartition, "entries must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw Error(ErrorKind::InvalidPartition, "entries must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_padded_rows(std::vector<int> rows) {
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  return Partition(std::move(rows));
}

int Partition::column(int j) const noexcept {
  int c = 0;
  for (int p : parts_) {
    if (p < j) break;
    ++c;
  }
  return c;
}

Partition Partition::conjugate() const {
  std::vector<int> cols;
  for (int j = 1; j <= first(); ++j) cols.push_back(column(j));
  return Partition(std::move(cols));
}

Partition parse_partition(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw Error(ErrorKind::InvalidPartition, "expected [a,b,...], got '" + std::string(text) + "'");
  text = trim(text.substr(1, text.size() - 2));
  std::vector<int> parts;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto tok = trim(text.substr(0, comma));
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw Error(ErrorKind::InvalidPartition, "bad entry '" + std::string(tok) + "'");
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
    if (trim(text).empty()) throw Error(ErrorKind::InvalidPartition, "trailing comma");
  }
  return Partition(std::move(parts));
}

std::string format_partition(const Partition& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i) s += ',';
    s += std::to_string(p.parts()[i]);
  }
  return s + "]";
}

bool contains(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length()) return false;
  for (std::size_t i = 0; i < inner.length(); ++i)
    if (inner.parts()[i] > outer.parts()[i]) return false;
  return true;
}

int hook_length(const Partition& p, int row, int col) {
  if (row < 1 || col < 1 || col > p.row(row))
    throw Error(ErrorKind::BoxOutOfDiagram,
                "(" + std::to_string(row) + "," + std::to_string(col) + ") not in " +
                    format_partition(p));
  return (p.row(row) - col) + (p.column(col) - row) + 1;
}

BigInt dim_irreducible(const Partition& p) {
  BigInt hooks = 1;
  for (int i = 1; i <= static_cast<int>(p.length()); ++i)
    for (int j = 1; j <= p.row(i); ++j) hooks *= hook_length(p, i, j);
  return factorial(p.size()) / hooks;
}

namespace {

// Places the next label in every addable box of `filled` whose row is not
// yet complete; each standard filling is visited exactly once.
void extend_filling(const Partition& shape, std::vector<int>& filled, int placed, BigInt& count) {
  if (placed == shape.size()) {
    ++count;
    return;
  }
  for (std::size_t i = 0; i < filled.size(); ++i) {
    bool row_open = filled[i] < shape.parts()[i];
    bool column_ready = i == 0 || filled[i - 1] > filled[i];
    if (row_open && column_ready) {
      ++filled[i];
      extend_filling(shape, filled, placed + 1, count);
      --filled[i];
    }
  }
}

}  // namespace

BigInt count_standard_tableaux(const Partition& p) {
  if (p.size() > kMaxTableauxBoxes)
    throw Error(ErrorKind::TooLarge, "exhaustive count limited to " +
                                         std::to_string(kMaxTableauxBoxes) + " boxes");
  std::vector<int> filled(p.length(), 0);
  BigInt count = 0;
  extend_filling(p, filled, 0, count);
  return count;
}

std::optional<Partition> pad(const Partition& core, std::span<const int> pads) {
  if (!std::is_sorted(pads.begin(), pads.end(), std::greater<>()))
    throw Error(ErrorKind::UnsortedPads, "pads must be weakly decreasing");
  if (pads.empty()) return core;
  if (pads.back() < core.size() + core.first()) return std::nullopt;
  std::vector<int> rows;
  for (int n : pads) rows.push_back(n - core.size());
  rows.insert(rows.end(), core.parts().begin(), core.parts().end());
  // lambda = empty with n_r = 0 yields zero-length padded rows; they vanish.
  rows.erase(std::remove(rows.begin(), rows.end(), 0), rows.end());
  return Partition(std::move(rows));
}

std::optional<Partition> pad(const PaddedLabel& label) { return pad(label.core, label.pads); }

PaddedLabel unpad(const Partition& mu, int r) {
  if (r < 1 || static_cast<int>(mu.length()) < r)
    throw Error(ErrorKind::TooFewRows,
                format_partition(mu) + " has fewer than " + std::to_string(r) + " rows");
  Partition core(std::vector<int>(mu.parts().begin() + r, mu.parts().end()));
  std::vector<int> pads;
  for (int i = 0; i < r; ++i) pads.push_back(mu.parts()[i] + core.size());
  if (pads.back() < core.size() + core.first())
    throw Error(ErrorKind::NotPaddable, format_partition(mu));
  return {std::move(core), std::move(pads)};
}

namespace {

void compositions_rec(int remaining, int slots, Composition& cur, std::vector<Composition>& out) {
  if (slots == 1) {
    cur.push_back(remaining);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    cur.push_back(v);
    compositions_rec(remaining - v, slots - 1, cur, out);
    cur.pop_back();
  }
}

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int v = std::min(remaining, max_part); v >= 1; --v) {
    cur.push_back(v);
    partitions_rec(remaining - v, v, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Composition> compositions(int total, int length) {
  std::vector<Composition> out;
  if (total < 0 || length < 1) return out;
  Composition cur;
  compositions_rec(total, length, cur, out);
  return out;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  for (int n = 0; n <= rows * cols; ++n)
    for (auto& p : partitions_of(n))
      if (static_cast<int>(p.length()) <= rows && p.first() <= cols) out.push_back(std::move(p));
  return out;
}

}  // namespace fid
