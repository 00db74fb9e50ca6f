#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fid/numeric.hpp"

namespace fid {

/// A weakly decreasing tuple of positive integers. The empty tuple is the
/// empty partition. Trailing zeros are never stored.
class Partition {
 public:
  Partition() = default;

  /// Throws Error(InvalidPartition) on non-positive or increasing entries.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Drops trailing zeros, then validates.
  static Partition from_padded_rows(std::vector<int> rows);

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  int size() const noexcept { return size_; }
  bool empty() const noexcept { return parts_.empty(); }

  /// 1-based row access; rows past the length are 0.
  int row(std::size_t i) const noexcept {
    return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0;
  }
  /// Number of boxes in column j (1-based).
  int column(int j) const noexcept;
  int first() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

  Partition conjugate() const;

  bool operator==(const Partition&) const = default;
  /// Lexicographic on parts; canonical output order is the reverse.
  std::strong_ordering operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Descending lexicographic order: (3) before (2,1) before (1,1,1).
struct CanonicalOrder {
  bool operator()(const Partition& a, const Partition& b) const { return b < a; }
};

/// Fixed-length tuple of non-negative integers.
using Composition = std::vector<int>;

/// r-padded label lambda[n_1, ..., n_r].
struct PaddedLabel {
  Partition core;
  std::vector<int> pads;

  bool operator==(const PaddedLabel&) const = default;
};

Partition parse_partition(std::string_view text);
std::string format_partition(const Partition& p);

bool contains(const Partition& outer, const Partition& inner);

int hook_length(const Partition& p, int row, int col);

BigInt dim_irreducible(const Partition& p);

/// Largest size accepted by count_standard_tableaux.
inline constexpr int kMaxTableauxBoxes = 14;

/// Counts standard fillings by placing 1..n into the diagram one box at a
/// time. Throws Error(TooLarge) above kMaxTableauxBoxes boxes.
BigInt count_standard_tableaux(const Partition& p);

/// lambda[n_1, ..., n_r], or std::nullopt for the zero representation
/// (n_r < |lambda| + lambda_1). Throws Error(UnsortedPads).
std::optional<Partition> pad(const Partition& core, std::span<const int> pads);
std::optional<Partition> pad(const PaddedLabel& label);

/// Inverse of pad: core = (mu_{r+1}, ...), n_i = mu_i + |core|.
PaddedLabel unpad(const Partition& mu, int r);

/// All compositions of total into length parts, lexicographically descending.
std::vector<Composition> compositions(int total, int length);

/// All partitions of n in canonical (descending lexicographic) order.
std::vector<Partition> partitions_of(int n);

/// Partitions fitting in a rows x cols box, any size, canonical order within
/// each size, sizes ascending.
std::vector<Partition> partitions_in_box(int rows, int cols);

}  // namespace fid
