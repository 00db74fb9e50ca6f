#pragma once

#include <map>
#include <string>
#include <vector>

#include "fid/free_module.hpp"
#include "fid/numeric.hpp"
#include "fid/partition.hpp"

namespace fid {

/// Degree -> value, e.g. a Hilbert function or a multiplicity sequence.
using Series = std::map<int, BigInt>;

struct DegreeRange {
  int first = 0;
  int last = 0;
  int count() const { return last - first + 1; }
  bool operator==(const DegreeRange&) const = default;
};

/// Polynomial with rational coefficients, stored in the binomial basis
/// p(n) = sum_k c_k C(n, k) so integer-valued polynomials have integer coordinates.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> binomial_coords);
  static Polynomial from_monomial(const std::vector<Rational>& coeffs);

  Rational operator()(const Rational& n) const;
  const std::vector<Rational>& binomial_coords() const { return coords_; }
  /// Coefficients of 1, n, n^2, ... (trailing zeros trimmed).
  std::vector<Rational> monomial_coeffs() const;
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coords_.size()) - 1; }
  bool is_zero() const { return coords_.empty(); }

  bool operator==(const Polynomial&) const = default;

 private:
  std::vector<Rational> coords_;  // trailing zeros trimmed
};

/// n -> sum_i p_i(n) * i^n, i = 1..bases.
struct ExponentialPolynomial {
  std::vector<Polynomial> parts;  // parts[i-1] multiplies i^n

  int bases() const { return static_cast<int>(parts.size()); }
  Rational operator()(int n) const;
};

struct ExponentialFit {
  ExponentialPolynomial function;
  DegreeRange fitted;
  DegreeRange validated;
};

struct PolynomialFit {
  Polynomial function;
  DegreeRange fitted;
  DegreeRange validated;
};

inline constexpr int kMinValidationPoints = 3;

/// Exact solve on the leading d*(degree_bound+1) degrees of `window`, exact
/// check on the rest. Throws Error(InsufficientPoints) / Error(NoExactFit).
ExponentialFit fit_exponential_polynomial(const Series& series, int bases, int degree_bound,
                                          DegreeRange window);

/// Interpolates on the leading degree_bound+1 degrees and validates the rest;
/// the window must hold at least degree_bound + 2 + kMinValidationPoints degrees.
PolynomialFit fit_polynomial(const Series& series, int degree_bound, DegreeRange window);

/// Default first degree of a fit window: m + d*(degree_bound+1).
int default_window_start(int m, int d, int degree_bound);
/// For multiplicity series: also no earlier than |lambda| + lambda_1, where lambda[n] first exists.
int default_window_start(int m, int d, int degree_bound, const Partition& lambda);

/// Hilbert function of R(-m), R a polynomial ring in d variables.
BigInt coinvariants_hilbert(int m, int d, int n);

struct MultiplicitySeries {
  Partition lambda;
  Series values;  // c_{lambda,n}: multiplicity of S(lambda)_n in V_n
};

MultiplicitySeries multiplicity_series(const FreeModuleSpec& spec, const Partition& lambda,
                                       DegreeRange range);
MultiplicitySeries trivial_multiplicity_series(const FreeModuleSpec& spec, DegreeRange range);

/// dim S(lambda)_{pads + l}; 0 for the zero representation.
BigInt padded_dimension(const Partition& lambda, const std::vector<int>& pads, int shift);

/// Dimension of the S_{n+1}-span of the images of the color maps phi^i_n in
/// M(W)_{n+1}: dim(W) times the number of colored injections [m] -> [n+1]
/// (modulo S_m) leaving at least one point uncovered.
BigInt spanned_dimension(const FreeModuleSpec& spec, int n);

struct ConditionVerdict {
  bool holds = false;
  DegreeRange tested;
  std::string witness;
};

struct ProbeVerdict {
  PaddedLabel probe;
  Plateau plateau;
  bool within_bound = false;  // onset <= proven bound
};

struct StabilityReport {
  ConditionVerdict injectivity;
  ConditionVerdict generation;
  std::vector<ProbeVerdict> probes;

  bool all_hold() const;
};

StabilityReport verify_theorem_A(const FreeModuleSpec& spec, const std::vector<PaddedLabel>& probes,
                                 DegreeRange degrees, int shift_horizon = kDefaultStabilizationHorizon);

}  // namespace fid
