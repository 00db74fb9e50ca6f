#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "fid/characters.hpp"
#include "fid/errors.hpp"
#include "fid/free_module.hpp"
#include "fid/pieri.hpp"

using namespace fid;

namespace {

// Counts colored injections [m] -> [n] one by one.
long brute_hom_count(int d, int m, int n) {
  if (m > n) return 0;
  long injections = 0;
  std::vector<int> image(m, 0);
  auto rec = [&](auto&& self, int k) -> void {
    if (k == m) {
      ++injections;
      return;
    }
    for (int t = 0; t < n; ++t) {
      if (std::find(image.begin(), image.begin() + k, t) != image.begin() + k) continue;
      image[k] = t;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  long colorings = 1;
  for (int i = 0; i < n - m; ++i) colorings *= d;
  return injections * colorings;
}

// One greedy round on column heights: every column loses its bottom box
// unless that box belongs to lambda.
Partition greedy_by_columns(const Partition& mu, const Partition& lambda) {
  std::vector<int> cols;
  for (int j = 1; j <= mu.first(); ++j) cols.push_back(std::max(mu.column(j) - 1, lambda.column(j)));
  return Partition::from_padded_rows(std::move(cols)).conjugate();
}

Decomposition make(int n, std::initializer_list<std::pair<Partition, int>> terms) {
  Decomposition d(n);
  for (const auto& [p, c] : terms) d.add(p, c);
  return d;
}

std::vector<FreeModuleSpec> small_specs(int max_m, int max_d) {
  std::vector<FreeModuleSpec> specs;
  for (int d = 1; d <= max_d; ++d) {
    for (int m = 0; m <= max_m; ++m) {
      specs.push_back(FreeModuleSpec::regular(m, d));
      for (const auto& lambda : partitions_of(m)) specs.push_back(FreeModuleSpec::irreducible(lambda, d));
    }
  }
  return specs;
}

}  // namespace

TEST_CASE("hom-set sizes") {
  CHECK(hom_count(3, 4, 4) == 24);
  CHECK(hom_count(2, 0, 3) == 8);
  CHECK(hom_count(2, 1, 2) == 4);
  CHECK(hom_count(2, 3, 2) == 0);
  for (int d = 1; d <= 3; ++d)
    for (int m = 0; m <= 3; ++m)
      for (int n = 0; n <= 5; ++n) CHECK(hom_count(d, m, n) == brute_hom_count(d, m, n));
}

TEST_CASE("dimensions of free modules") {
  CHECK(dim_at(FreeModuleSpec::regular(0, 2), 3) == 8);
  CHECK(dim_at(FreeModuleSpec::irreducible(Partition{1}, 2), 3) == 12);
  CHECK(dim_at(FreeModuleSpec::irreducible(Partition{2, 1}, 3), 2) == 0);
  // M(m) is spanned by the hom-set.
  for (int d = 1; d <= 3; ++d)
    for (int m = 0; m <= 3; ++m)
      for (int n = 0; n <= 6; ++n) CHECK(dim_at(FreeModuleSpec::regular(m, d), n) == hom_count(d, m, n));
}

TEST_CASE("spec validation") {
  FreeModuleSpec bad{0, 0, Decomposition(0)};
  CHECK_THROWS_AS(bad.validate(), Error);
  FreeModuleSpec mismatched{2, 3, Decomposition(2)};
  CHECK_THROWS_AS(decompose_at(mismatched, 4), Error);
}

TEST_CASE("level decompositions: examples") {
  CHECK(decompose_at(FreeModuleSpec::regular(0, 2), 2) == make(2, {{Partition{2}, 3}, {Partition{1, 1}, 1}}));
  CHECK(decompose_at(FreeModuleSpec::irreducible(Partition{1}, 2), 2) ==
        make(2, {{Partition{2}, 2}, {Partition{1, 1}, 2}}));
  for (int n = 0; n <= 8; ++n)
    CHECK(decompose_at(FreeModuleSpec::regular(0, 1), n) == make(n, {{n ? Partition{n} : Partition{}, 1}}));
  CHECK(decompose_at(FreeModuleSpec::irreducible(Partition{2}, 2), 1).empty());
}

TEST_CASE("level decompositions: conservation, d = 1 and direct sums") {
  for (const auto& spec : small_specs(3, 3)) {
    for (int n = 0; n <= 7; ++n) {
      auto dec = decompose_at(spec, n);
      CHECK(dec.total_dimension() == dim_at(spec, n));
      if (spec.d == 1 && spec.generator.terms().size() == 1)
        for (const auto& [p, c] : dec.terms()) CHECK(c == 1);

      // Without reusing permuted compositions.
      Decomposition direct(n);
      if (n >= spec.m)
        for (const auto& [mu, mult] : spec.generator.terms())
          for (const auto& a : compositions(n - spec.m, spec.d)) direct.add(pieri_product(mu, a), mult);
      CHECK(dec == direct);

      for (const auto& lambda : partitions_of(n)) CHECK(multiplicity_at(spec, lambda) == dec.multiplicity(lambda));
    }
  }
}

TEST_CASE("level decompositions agree with induced characters") {
  for (const auto& spec : small_specs(2, 2)) {
    for (int n = spec.m; n <= 5; ++n) {
      Decomposition expected(n);
      for (const auto& [mu, mult] : spec.generator.terms())
        for (const auto& a : compositions(n - spec.m, spec.d))
          expected.add(decompose(induce_trivial_product(mu, a)), mult);
      CHECK(decompose_at(spec, n) == expected);
    }
  }
}

TEST_CASE("greedy block removal") {
  CHECK(greedy_step(Partition{3, 1}, Partition{}) == Partition{1});
  CHECK(greedy_step(Partition{2, 2}, Partition{1}) == Partition{2});
  CHECK(greedy_step(Partition{3, 2}, Partition{3, 2}) == Partition{3, 2});
  CHECK_THROWS_AS(greedy_step(Partition{2}, Partition{1, 1}), Error);
  for (const auto& mu : partitions_in_box(5, 5)) {
    // The empty core leaves (mu_2, ..., mu_h).
    CHECK(greedy_step(mu, Partition{}) ==
          Partition(std::vector<int>(mu.parts().begin() + std::min<std::size_t>(1, mu.length()), mu.parts().end())));
    for (const auto& lambda : partitions_in_box(5, 5)) {
      if (!contains(mu, lambda)) continue;
      auto step = greedy_step(mu, lambda);
      CHECK(step == greedy_by_columns(mu, lambda));
      CHECK(contains(step, lambda));
      CHECK(contains(mu, step));
    }
  }
}

TEST_CASE("constituency test") {
  CHECK(is_constituent(Partition{2, 2}, Partition{1}, 2));
  CHECK_FALSE(is_constituent(Partition{1, 1, 1}, Partition{}, 2));
  for (int d = 0; d <= 3; ++d) CHECK(is_constituent(Partition{3, 1}, Partition{3, 1}, d));
  CHECK_FALSE(is_constituent(Partition{2}, Partition{1, 1}, 3));
  CHECK(multiplicity_at(FreeModuleSpec::irreducible(Partition{1}, 2), Partition{2, 2}) == 2);
  CHECK(multiplicity_at(FreeModuleSpec::regular(0, 2), Partition{1, 1, 1}) == 0);
  for (const auto& mu : partitions_in_box(5, 5))
    for (const auto& lambda : partitions_in_box(5, 5))
      for (int d = 1; d <= 3; ++d)
        CHECK(is_constituent(mu, lambda, d) == (strip_chain_count(lambda, mu, d) > 0));
}

TEST_CASE("d-weight") {
  for (int d = 1; d <= 3; ++d) {
    CHECK(d_weight(FreeModuleSpec::irreducible(Partition{2}, d)) == 2);
    CHECK(d_weight(FreeModuleSpec::regular(0, d)) == 0);
    CHECK(d_weight(FreeModuleSpec::irreducible(Partition{2, 1, 1}, d)) == 4);
  }
  CHECK(d_weight(FreeModuleSpec::regular(2, 2)) == 2);
}

TEST_CASE("padded multiplicities") {
  auto m1 = FreeModuleSpec::irreducible(Partition{1}, 2);
  CHECK(padded_level({Partition{}, {2, 2}}) == 4);
  CHECK(padded_level({Partition{2, 1}, {6, 5}}) == 8);
  CHECK(padded_multiplicity(m1, {Partition{}, {2, 2}}) == 2);
  CHECK(padded_multiplicity(m1, {Partition{}, {2, 2}}) == decompose_at(m1, 4).multiplicity(Partition{2, 2}));
  // Zero label: n_2 = 3 < |core| + core_1 = 4.
  CHECK(padded_multiplicity(m1, {Partition{2}, {5, 3}}) == 0);
  CHECK_THROWS_AS(padded_multiplicity(m1, {Partition{}, {2}}), Error);

  // lambda = empty with n_2 = 0 pads to (n): multiplicity n + 1 in M(0), d = 2.
  auto m0 = FreeModuleSpec::regular(0, 2);
  for (int n = 0; n <= 6; ++n) CHECK(padded_multiplicity(m0, {Partition{}, {n, 0}}) == n + 1);

  auto trivial = FreeModuleSpec::regular(0, 1);
  for (int n = 3; n <= 12; ++n) {
    CHECK(padded_multiplicity(trivial, {Partition{1}, {n}}) == 0);
    CHECK(padded_multiplicity(trivial, {Partition{}, {n}}) == 1);
  }
}

TEST_CASE("stabilized padded multiplicities") {
  auto a = stabilized_padded_multiplicity(FreeModuleSpec::irreducible(Partition{1}, 2), Partition{}, {2, 2});
  CHECK(a.value == 2);
  CHECK(a.onset == 0);
  CHECK(a.proven_bound == 0);

  auto b = stabilized_padded_multiplicity(FreeModuleSpec::regular(0, 2), Partition{}, {1, 1});
  CHECK(b.value == 1);
  for (const auto& v : b.values) CHECK(v == 1);

  auto c = stabilized_padded_multiplicity(FreeModuleSpec::regular(0, 1), Partition{}, {0});
  CHECK(c.value == 1);
  CHECK(c.onset == 0);

  // Invalid base: the label is zero until n_d + l reaches |core| + core_1.
  auto d = stabilized_padded_multiplicity(FreeModuleSpec::irreducible(Partition{1, 1}, 2), Partition{2}, {3, 3});
  CHECK(d.values.front() == 0);
  CHECK(d.onset <= d.proven_bound);

  try {
    stabilized_padded_multiplicity(FreeModuleSpec::irreducible(Partition{2}, 2), Partition{}, {0, 0}, 1);
    FAIL("expected NoStabilization");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoStabilization);
  }
  CHECK_THROWS_AS(stabilized_padded_multiplicity(FreeModuleSpec::regular(0, 2), Partition{}, {1, 2}), Error);
}

TEST_CASE("weight bound on d-row constituents") {
  for (int d = 1; d <= 2; ++d) {
    for (int m = 0; m <= 3; ++m) {
      for (const auto& lambda : partitions_of(m)) {
        auto spec = FreeModuleSpec::irreducible(lambda, d);
        for (int n = m; n <= m + 4; ++n) {
          auto dec = decompose_at(spec, n);
          for (const auto& [mu, c] : dec.terms())
            if (static_cast<int>(mu.length()) >= d) CHECK(unpad(mu, d).core.size() <= m);
        }
      }
    }
  }
}
