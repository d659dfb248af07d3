#include "dwarith/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "dwarith/snf.hpp"

namespace dwarith {

namespace {

using Poly = std::vector<long long>;  // lowest degree first

int degree_of(const Poly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

// Exact division of p by a monic divisor; remainder must vanish.
Poly divide_exact(Poly p, const Poly& monic) {
  int dd = degree_of(monic);
  require(dd >= 0 && monic[dd] == 1, ErrorCode::Internal,
          "divisor must be monic");
  Poly q(p.size(), 0);
  for (int i = degree_of(p); i >= dd; i = degree_of(p)) {
    long long f = p[i];
    q[i - dd] = f;
    for (int k = 0; k <= dd; ++k) p[i - dd + k] -= f * monic[k];
  }
  require(degree_of(p) < 0, ErrorCode::Internal, "division not exact");
  q.resize(std::max(1, degree_of(q) + 1));
  return q;
}

long long checked_mul_ll(long long x, long long y) {
  long long r;
  require(!__builtin_mul_overflow(x, y, &r), ErrorCode::Internal,
          "integer overflow in cyclotomic arithmetic");
  return r;
}

}  // namespace

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<long long>& cyclotomic_polynomial(int n) {
  static std::map<int, Poly> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // x^n - 1 divided by the cyclotomic polynomials of the proper divisors.
  Poly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = divide_exact(std::move(p), cyclotomic_polynomial(d));
  return cache.emplace(n, std::move(p)).first->second;
}

Cyclotomic::Cyclotomic(int n, std::vector<long long> raw, long long den)
    : n_(n), coeffs_(std::move(raw)), den_(den) {
  reduce();
}

void Cyclotomic::reduce() {
  require(n_ >= 1, ErrorCode::Internal, "cyclotomic order must be positive");
  require(den_ != 0, ErrorCode::Internal, "zero denominator");
  const Poly& phi = cyclotomic_polynomial(n_);
  const int dd = degree_of(phi);
  // Remainder modulo the (monic) cyclotomic polynomial.
  for (int i = degree_of(coeffs_); i >= dd; i = degree_of(coeffs_)) {
    long long f = coeffs_[i];
    for (int k = 0; k <= dd; ++k)
      coeffs_[i - dd + k] -= checked_mul_ll(f, phi[k]);
  }
  coeffs_.resize(n_, 0);
  if (den_ < 0) {
    den_ = -den_;
    for (long long& c : coeffs_) c = -c;
  }
  long long content = 0;
  for (long long c : coeffs_) content = gcd_ll(content, c);
  if (content == 0) {
    den_ = 1;
    return;
  }
  long long g = gcd_ll(content, den_);
  if (g > 1) {
    for (long long& c : coeffs_) c /= g;
    den_ /= g;
  }
}

void Cyclotomic::check_same_order(const Cyclotomic& other) const {
  require(n_ == other.n_, ErrorCode::ModulusMismatch,
          "cyclotomic orders differ");
}

Cyclotomic Cyclotomic::zero(int n) {
  return Cyclotomic(n, Poly(n, 0), 1);
}

Cyclotomic Cyclotomic::integer(int n, long long value) {
  Poly raw(std::max(n, 1), 0);
  raw[0] = value;
  return Cyclotomic(n, std::move(raw), 1);
}

Cyclotomic Cyclotomic::rational(int n, long long num, long long den) {
  Poly raw(std::max(n, 1), 0);
  raw[0] = num;
  return Cyclotomic(n, std::move(raw), den);
}

Cyclotomic Cyclotomic::root_power(int n, long long exponent) {
  Poly raw(n + 1, 0);
  long long e = ((exponent % n) + n) % n;
  raw[e] = 1;
  return Cyclotomic(n, std::move(raw), 1);
}

bool Cyclotomic::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](long long c) { return c == 0; });
}

bool Cyclotomic::is_rational(long long* num, long long* den) const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  if (num) *num = coeffs_[0];
  if (den) *den = den_;
  return true;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& other) const {
  check_same_order(other);
  Poly raw(n_, 0);
  for (int i = 0; i < n_; ++i)
    raw[i] = checked_mul_ll(coeffs_[i], other.den_) +
             checked_mul_ll(other.coeffs_[i], den_);
  return Cyclotomic(n_, std::move(raw), checked_mul_ll(den_, other.den_));
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& other) const {
  return *this + other.scaled(-1, 1);
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& other) const {
  check_same_order(other);
  Poly raw(2 * n_, 0);
  for (int i = 0; i < n_; ++i) {
    if (coeffs_[i] == 0) continue;
    for (int j = 0; j < n_; ++j)
      raw[i + j] += checked_mul_ll(coeffs_[i], other.coeffs_[j]);
  }
  return Cyclotomic(n_, std::move(raw), checked_mul_ll(den_, other.den_));
}

Cyclotomic Cyclotomic::scaled(long long num, long long den) const {
  Poly raw(coeffs_);
  for (long long& c : raw) c = checked_mul_ll(c, num);
  return Cyclotomic(n_, std::move(raw), checked_mul_ll(den_, den));
}

Cyclotomic Cyclotomic::conjugated() const {
  Poly raw(n_, 0);
  for (int i = 0; i < n_; ++i) raw[(n_ - i) % n_] += coeffs_[i];
  return Cyclotomic(n_, std::move(raw), den_);
}

bool Cyclotomic::operator==(const Cyclotomic& other) const {
  return n_ == other.n_ && den_ == other.den_ && coeffs_ == other.coeffs_;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < n_; ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << (coeffs_[i] > 0 ? "+" : "");
    if (i == 0) {
      os << coeffs_[i];
    } else {
      if (coeffs_[i] == -1)
        os << "-";
      else if (coeffs_[i] != 1)
        os << coeffs_[i] << "*";
      os << "z^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  if (den_ != 1) {
    os.str("(" + os.str() + ")/" + std::to_string(den_));
    return os.str();
  }
  return os.str();
}

}  // namespace dwarith
