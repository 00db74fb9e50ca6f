#include "fid/numeric.hpp"

#include "fid/errors.hpp"

namespace fid {

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt power(unsigned long base, unsigned long exp) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

Rational ratio(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::BoxOutOfDiagram: return "BoxOutOfDiagram";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::UnsortedPads: return "UnsortedPads";
    case ErrorKind::TooFewRows: return "TooFewRows";
    case ErrorKind::NotPaddable: return "NotPaddable";
    case ErrorKind::NotACharacter: return "NotACharacter";
    case ErrorKind::NotContained: return "NotContained";
    case ErrorKind::NoStabilization: return "NoStabilization";
    case ErrorKind::NoExactFit: return "NoExactFit";
    case ErrorKind::InsufficientPoints: return "InsufficientPoints";
    case ErrorKind::NotFree: return "NotFree";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InvariantBreach: return "InvariantBreach";
  }
  return "Unknown";
}

}  // namespace fid
