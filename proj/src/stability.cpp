#include "fid/stability.hpp"

#include <algorithm>

#include "fid/errors.hpp"
#include "fid/pieri.hpp"

namespace fid {

namespace {

// C(n, k) for rational n: n (n-1) ... (n-k+1) / k!.
Rational binomial_basis(const Rational& n, int k) {
  Rational r = 1;
  for (int j = 0; j < k; ++j) r *= n - j;
  return r / Rational(factorial(k));
}

void trim(std::vector<Rational>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

/// Solves A x = b exactly; throws InvariantBreach on a singular system.
std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw Error(ErrorKind::InvariantBreach, "singular interpolation system");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      Rational f = a[row][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[row][k] -= f * a[col][k];
      b[row] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

ExponentialFit fit_exact(const Series& series, int bases, int degree_bound, DegreeRange window,
                         int min_points) {
  if (bases < 1 || degree_bound < 0)
    throw Error(ErrorKind::InvalidArgument, "need bases >= 1 and degree_bound >= 0");
  if (window.count() < min_points)
    throw Error(ErrorKind::InsufficientPoints,
                "window holds " + std::to_string(std::max(window.count(), 0)) + " degrees, need " +
                    std::to_string(min_points));
  for (int n = window.first; n <= window.last; ++n)
    if (!series.contains(n))
      throw Error(ErrorKind::InsufficientPoints, "series has no value at " + std::to_string(n));

  const int unknowns = bases * (degree_bound + 1);
  auto basis_row = [&](int n) {
    std::vector<Rational> row;
    for (int i = 1; i <= bases; ++i)
      for (int k = 0; k <= degree_bound; ++k)
        row.push_back(binomial_basis(n, k) * Rational(power(i, n)));
    return row;
  };

  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  for (int n = window.first; n < window.first + unknowns; ++n) {
    a.push_back(basis_row(n));
    b.emplace_back(series.at(n));
  }
  auto x = solve_exact(std::move(a), std::move(b));

  ExponentialFit fit;
  for (int i = 0; i < bases; ++i)
    fit.function.parts.emplace_back(std::vector<Rational>(x.begin() + i * (degree_bound + 1),
                                                          x.begin() + (i + 1) * (degree_bound + 1)));
  fit.fitted = {window.first, window.first + unknowns - 1};
  fit.validated = {window.first + unknowns, window.last};
  for (int n = fit.validated.first; n <= fit.validated.last; ++n) {
    Rational predicted = fit.function(n);
    if (predicted != Rational(series.at(n)))
      throw Error(ErrorKind::NoExactFit, "prediction " + predicted.get_str() + " at n=" +
                                             std::to_string(n) + " differs from " +
                                             series.at(n).get_str());
  }
  return fit;
}

}  // namespace

Polynomial::Polynomial(std::vector<Rational> binomial_coords) : coords_(std::move(binomial_coords)) {
  trim(coords_);
}

Polynomial Polynomial::from_monomial(const std::vector<Rational>& coeffs) {
  // Binomial coordinates are the forward differences at 0.
  int deg = static_cast<int>(coeffs.size()) - 1;
  std::vector<Rational> values;
  for (int n = 0; n <= deg; ++n) {
    Rational v = 0, pw = 1;
    for (const auto& c : coeffs) {
      v += c * pw;
      pw *= n;
    }
    values.push_back(v);
  }
  std::vector<Rational> coords;
  for (int k = 0; k <= deg; ++k) {
    coords.push_back(values[0]);
    for (int j = 0; j + 1 < static_cast<int>(values.size()); ++j) values[j] = values[j + 1] - values[j];
    values.pop_back();
  }
  return Polynomial(std::move(coords));
}

Rational Polynomial::operator()(const Rational& n) const {
  Rational v = 0;
  for (std::size_t k = 0; k < coords_.size(); ++k) v += coords_[k] * binomial_basis(n, static_cast<int>(k));
  return v;
}

std::vector<Rational> Polynomial::monomial_coeffs() const {
  std::vector<Rational> out(coords_.size(), Rational(0));
  std::vector<Rational> falling{1};  // n (n-1) ... (n-k+1)
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    Rational scale = coords_[k] / Rational(factorial(k));
    for (std::size_t j = 0; j < falling.size(); ++j) out[j] += scale * falling[j];
    std::vector<Rational> next(falling.size() + 1, Rational(0));
    for (std::size_t j = 0; j < falling.size(); ++j) {
      next[j + 1] += falling[j];
      next[j] -= falling[j] * static_cast<long>(k);
    }
    falling = std::move(next);
  }
  trim(out);
  return out;
}

Rational ExponentialPolynomial::operator()(int n) const {
  Rational v = 0;
  for (int i = 1; i <= bases(); ++i) v += parts[i - 1](n) * Rational(power(i, n));
  return v;
}

ExponentialFit fit_exponential_polynomial(const Series& series, int bases, int degree_bound,
                                          DegreeRange window) {
  return fit_exact(series, bases, degree_bound, window,
                   bases * (degree_bound + 1) + kMinValidationPoints);
}

PolynomialFit fit_polynomial(const Series& series, int degree_bound, DegreeRange window) {
  auto fit = fit_exact(series, 1, degree_bound, window, degree_bound + 2 + kMinValidationPoints);
  return {fit.function.parts.front(), fit.fitted, fit.validated};
}

int default_window_start(int m, int d, int degree_bound) { return m + d * (degree_bound + 1); }

int default_window_start(int m, int d, int degree_bound, const Partition& lambda) {
  return std::max(default_window_start(m, d, degree_bound), lambda.size() + lambda.first());
}

BigInt coinvariants_hilbert(int m, int d, int n) {
  if (n < m) return 0;
  return binomial(n - m + d - 1, d - 1);
}

MultiplicitySeries multiplicity_series(const FreeModuleSpec& spec, const Partition& lambda,
                                       DegreeRange range) {
  spec.validate();
  MultiplicitySeries out{lambda, {}};
  for (int n = range.first; n <= range.last; ++n) {
    std::vector<int> pads{n};
    auto target = pad(lambda, pads);
    out.values[n] = target ? multiplicity_at(spec, *target) : BigInt(0);
  }
  return out;
}

MultiplicitySeries trivial_multiplicity_series(const FreeModuleSpec& spec, DegreeRange range) {
  return multiplicity_series(spec, Partition{}, range);
}

BigInt padded_dimension(const Partition& lambda, const std::vector<int>& pads, int shift) {
  std::vector<int> shifted = pads;
  for (int& n : shifted) n += shift;
  auto p = pad(lambda, shifted);
  return p ? dim_irreducible(*p) : BigInt(0);
}

BigInt spanned_dimension(const FreeModuleSpec& spec, int n) {
  int free_points = n + 1 - spec.m;
  if (free_points < 1) return 0;
  BigInt orbits = 0;
  for (const auto& a : compositions(free_points, spec.d)) {
    std::vector<int> blocks{spec.m};
    blocks.insert(blocks.end(), a.begin(), a.end());
    orbits += multinomial(static_cast<unsigned long>(n + 1), blocks);
  }
  return spec.generator_dimension() * orbits;
}

bool StabilityReport::all_hold() const {
  if (!injectivity.holds || !generation.holds) return false;
  return std::all_of(probes.begin(), probes.end(), [](const ProbeVerdict& p) { return p.within_bound; });
}

StabilityReport verify_theorem_A(const FreeModuleSpec& spec, const std::vector<PaddedLabel>& probes,
                                 DegreeRange degrees, int shift_horizon) {
  spec.validate();
  if (degrees.count() < 1) throw Error(ErrorKind::InvalidArgument, "empty degree range");
  StabilityReport report;
  DegreeRange tested{std::max(degrees.first, spec.m), std::max(degrees.last, spec.m)};

  // Free modules: every phi^i_n is injective, so dimensions cannot drop.
  report.injectivity = {true, tested, "phi^i_n injective on free modules"};
  for (int n = tested.first; n <= tested.last; ++n) {
    if (dim_at(spec, n) > dim_at(spec, n + 1)) {
      report.injectivity.holds = false;
      report.injectivity.witness = "dimension drops at n=" + std::to_string(n);
      break;
    }
  }

  report.generation = {true, tested, "span of images equals dim M(W)_{n+1}"};
  for (int n = tested.first; n <= tested.last; ++n) {
    if (spanned_dimension(spec, n) != dim_at(spec, n + 1)) {
      report.generation.holds = false;
      report.generation.witness = "span falls short at n=" + std::to_string(n);
      break;
    }
  }

  for (const auto& probe : probes) {
    ProbeVerdict v{probe, stabilized_padded_multiplicity(spec, probe.core, probe.pads, shift_horizon)};
    v.within_bound = v.plateau.onset <= v.plateau.proven_bound;
    report.probes.push_back(std::move(v));
  }
  return report;
}

}  // namespace fid
