#pragma once

#include <string>
#include <vector>

#include "dwarith/error.hpp"

namespace dwarith {

/// Integer coefficients of the N-th cyclotomic polynomial (degree phi(N)),
/// lowest degree first.
const std::vector<long long>& cyclotomic_polynomial(int n);

int euler_phi(int n);

/// An exact element of (1/den)·Z[ζ_N] in canonical form: the coefficient
/// vector has length N, is reduced modulo the N-th cyclotomic polynomial
/// (entries at indices >= phi(N) are zero), the denominator is positive and
/// coprime to the content of the coefficients. Equality of values is equality
/// of canonical forms.
class Cyclotomic {
 public:
  Cyclotomic() = default;

  static Cyclotomic zero(int n);
  static Cyclotomic integer(int n, long long value);
  static Cyclotomic rational(int n, long long num, long long den);
  static Cyclotomic root_power(int n, long long exponent);  // ζ^exponent

  int order() const { return n_; }
  const std::vector<long long>& coeffs() const { return coeffs_; }
  long long denominator() const { return den_; }
  bool is_zero() const;
  bool is_rational(long long* num = nullptr, long long* den = nullptr) const;

  Cyclotomic operator+(const Cyclotomic& other) const;
  Cyclotomic operator-(const Cyclotomic& other) const;
  Cyclotomic operator*(const Cyclotomic& other) const;
  Cyclotomic scaled(long long num, long long den) const;
  Cyclotomic conjugated() const;  // ζ ↦ ζ⁻¹
  bool operator==(const Cyclotomic& other) const;
  bool operator!=(const Cyclotomic& other) const { return !(*this == other); }

  std::string to_string() const;

 private:
  Cyclotomic(int n, std::vector<long long> raw, long long den);
  void reduce();
  void check_same_order(const Cyclotomic& other) const;

  int n_ = 0;
  std::vector<long long> coeffs_;
  long long den_ = 1;
};

}  // namespace dwarith
