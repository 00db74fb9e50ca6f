#include "fid/oracle.hpp"

#include "fid/characters.hpp"
#include "fid/errors.hpp"
#include "fid/pieri.hpp"

namespace fid {

OracleResult oracle_sweep(int max_size, int max_length, const PieriFunction& pieri) {
  if (max_size < 0 || max_size > kOracleMaxSize)
    throw Error(ErrorKind::InvalidArgument,
                "oracle size bound must be in [0, " + std::to_string(kOracleMaxSize) + "]");
  const PieriFunction& engine = pieri ? pieri : PieriFunction(pieri_product);
  OracleResult result;
  for (int n = 0; n <= max_size; ++n) {
    for (int m = 0; m <= n; ++m) {
      for (const auto& mu : partitions_of(m)) {
        for (int len = 1; len <= max_length; ++len) {
          for (const auto& a : compositions(n - m, len)) {
            ++result.cases;
            Decomposition expected = decompose(induce_trivial_product(mu, a));
            Decomposition got = engine(mu, a);
            if (got != expected) {
              std::string comp = "(";
              for (std::size_t i = 0; i < a.size(); ++i) comp += (i ? "," : "") + std::to_string(a[i]);
              result.pass = false;
              result.counterexample = "mu=" + format_partition(mu) + " a=" + comp + ")" +
                                      " pieri=" + to_string(got) + " characters=" + to_string(expected);
              return result;
            }
          }
        }
      }
    }
  }
  return result;
}

}  // namespace fid
