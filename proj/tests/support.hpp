#pragma once

#include <array>
#include <random>
#include <stdexcept>
#include <vector>

#include "dwarith/cochain.hpp"
#include "dwarith/group.hpp"
#include "dwarith/local.hpp"

namespace dwarith::testsupport {

inline LocalDatum klein_datum(const std::string& name = "k4",
                              int orientation = 1) {
  auto k4 = product_of_cyclics({2, 2});
  InvFunctional inv;
  inv.modulus = 2;
  long long a = k4->generators[0], b = k4->generators[1];
  inv.terms.push_back({a, b, 1});
  inv.terms.push_back({b, a, -1});
  return make_local_datum(name, k4, inv, orientation, std::nullopt);
}

// Carry-sum functional on cyclic(n): Σ_j α(1, j).
inline LocalDatum cyclic_datum(int n, int modulus, const std::string& name,
                               int orientation = 1, int unram_quotient = 0) {
  auto q = cyclic_group(n);
  InvFunctional inv;
  inv.modulus = modulus;
  for (int j = 0; j < n; ++j) inv.terms.push_back({1, j, 1});
  std::optional<UnramifiedQuotient> unram;
  if (unram_quotient > 0) {
    auto tilde = cyclic_group(unram_quotient);
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i % unram_quotient;
    unram = UnramifiedQuotient{tilde, make_hom(q, tilde, v)};
  }
  return make_local_datum(name, q, inv, orientation, std::move(unram));
}

inline Cochain xyz_cocycle(GroupPtr z2, int modulus = 2) {
  Cochain c = Cochain::zero(std::move(z2), 3, modulus);
  std::array<int, 3> t{1, 1, 1};
  c.values[c.index_of(t)] = 1;
  return c;
}

// The Z/2 model datum with inv(α) = α(1,1) − α(1,0).
inline LocalDatum z2_datum(const std::string& name = "p2", int orientation = 1) {
  auto z2 = cyclic_group(2);
  InvFunctional inv;
  inv.modulus = 2;
  inv.terms.push_back({1, 1, 1});
  inv.terms.push_back({1, 0, -1});
  return make_local_datum(name, z2, inv, orientation, std::nullopt);
}

// The quaternion group of order 8: index = sign*4 + basis, basis 1,i,j,k.
inline GroupPtr quaternion8() {
  struct SB {
    int sign, basis;
  };
  const SB mul_basis[4][4] = {
      {{0, 0}, {0, 1}, {0, 2}, {0, 3}},
      {{0, 1}, {1, 0}, {0, 3}, {1, 2}},
      {{0, 2}, {1, 3}, {1, 0}, {0, 1}},
      {{0, 3}, {0, 2}, {1, 1}, {1, 0}},
  };
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      SB r = mul_basis[a % 4][b % 4];
      int sign = (a / 4 + b / 4 + r.sign) % 2;
      table[a][b] = sign * 4 + r.basis;
    }
  return build_group(table, {1, 2}, "Q8");
}

// Brute-force reference: every map sending generators anywhere and extended
// over all of Q, filtered by the homomorphism property. Exponential; only for
// tiny groups.
inline std::vector<std::vector<int>> brute_force_homs(const FiniteGroup& q,
                                                      const FiniteGroup& g) {
  std::vector<std::vector<int>> out;
  std::vector<int> map(q.order, 0);
  long long total = 1;
  for (int i = 0; i < q.order; ++i) total *= g.order;
  for (long long code = 0; code < total; ++code) {
    long long rest = code;
    for (int i = 0; i < q.order; ++i) {
      map[i] = static_cast<int>(rest % g.order);
      rest /= g.order;
    }
    if (is_valid_hom(q, g, map)) out.push_back(map);
  }
  return out;
}

// Independent coboundary-membership oracle: enumerates every lower cochain.
// Only for tables where modulus^(order^(degree-1)) is tiny.
inline bool brute_force_is_coboundary(const Cochain& z) {
  long long cols = power_ll(z.group->order, z.degree - 1);
  long long total = 1;
  for (long long i = 0; i < cols; ++i) {
    total *= z.modulus;
    if (total > (1LL << 22)) throw std::runtime_error("oracle instance too big");
  }
  Cochain beta = Cochain::zero(z.group, z.degree - 1, z.modulus);
  for (long long code = 0; code < total; ++code) {
    long long rest = code;
    for (long long i = 0; i < cols; ++i) {
      beta.values[i] = static_cast<int>(rest % z.modulus);
      rest /= z.modulus;
    }
    if (coboundary(beta) == z) return true;
  }
  return false;
}

inline Cochain random_cochain(std::mt19937_64& rng, GroupPtr q, int degree,
                              int modulus) {
  Cochain c = Cochain::zero(std::move(q), degree, modulus);
  std::uniform_int_distribution<int> dist(0, modulus - 1);
  for (int& v : c.values) v = dist(rng);
  return c;
}

// Independent dimension oracle for the equivariance system
//   θ(t.g) = ζ^{λ(g,t)}·θ(t):
// specialize ζ at an element of exact order N in a prime field F_q
// (q ≡ 1 mod N) and compute the kernel dimension by Gaussian elimination.
// Specialization is a ring map, so ranks can only drop and the resulting
// dimension bounds the true one from above; the implementation's basis
// vectors are genuine independent solutions and bound it from below. The
// caller checks the sandwich closes.
inline int equivariance_dim_mod_p(const Boundary& boundary, const Section& x,
                                  int sign = 1) {
  const int n = boundary.cocycle.modulus;
  long long q = 1000003;
  auto is_prime = [](long long v) {
    for (long long d = 2; d * d <= v; ++d)
      if (v % d == 0) return false;
    return true;
  };
  while (q % n != 1 || !is_prime(q)) ++q;
  auto pow_mod = [&](long long base, long long exp) {
    long long r = 1 % q;
    base %= q;
    while (exp) {
      if (exp & 1) r = r * base % q;
      base = base * base % q;
      exp >>= 1;
    }
    return r;
  };
  // Exact order N: w^N = 1 and w^{N/p} != 1 for every prime p | N.
  long long omega = 0;
  for (long long a = 2; a < q && omega == 0; ++a) {
    long long w = pow_mod(a, (q - 1) / n);
    if (w == 1) continue;
    bool exact = true;
    int m = n;
    for (int p = 2; p * p <= m; ++p)
      if (m % p == 0) {
        if (pow_mod(w, n / p) == 1) exact = false;
        while (m % p == 0) m /= p;
      }
    if (m > 1 && pow_mod(w, n / m) == 1) exact = false;
    if (exact) omega = w;
  }
  if (omega == 0) throw std::runtime_error("no root of unity found");

  auto lam = lambda_table(boundary, x);
  const long long unknowns = boundary.tuple_count();
  std::vector<std::vector<long long>> rows;
  for (long long t = 0; t < unknowns; ++t)
    for (int g = 0; g < boundary.gauge->order; ++g) {
      std::vector<long long> row(unknowns, 0);
      long long moved = boundary.act_tuple(t, g);
      int exponent = ((sign * lam[g][t]) % n + n) % n;
      row[moved] = (row[moved] + 1) % q;
      row[t] = (row[t] + q - pow_mod(omega, exponent)) % q;
      bool zero = true;
      for (long long v : row) zero = zero && v == 0;
      if (!zero) rows.push_back(std::move(row));
    }
  // Gaussian elimination over F_q.
  int rank = 0;
  for (long long col = 0; col < unknowns; ++col) {
    int pivot = -1;
    for (std::size_t r = rank; r < rows.size(); ++r)
      if (rows[r][col] != 0) {
        pivot = static_cast<int>(r);
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    long long inv = pow_mod(rows[rank][col], q - 2);
    for (long long c = 0; c < unknowns; ++c)
      rows[rank][c] = rows[rank][c] * inv % q;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) == rank || rows[r][col] == 0) continue;
      long long f = rows[r][col];
      for (long long c = 0; c < unknowns; ++c)
        rows[r][c] = (rows[r][c] + (q - f) * rows[rank][c]) % q;
    }
    ++rank;
  }
  return static_cast<int>(unknowns) - rank;
}

// S3 as an explicit table: elements e,(12),(13),(23),(123),(132).
inline GroupPtr symmetric3() {
  auto compose_perm = [](const std::array<int, 3>& f,
                         const std::array<int, 3>& g) {
    // (f·g)(x) = g(f(x)): apply the left factor first.
    std::array<int, 3> h{};
    for (int x = 0; x < 3; ++x) h[x] = g[f[x]];
    return h;
  };
  std::vector<std::array<int, 3>> perms = {
      {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  auto index_of = [&](const std::array<int, 3>& p) {
    for (std::size_t i = 0; i < perms.size(); ++i)
      if (perms[i] == p) return static_cast<int>(i);
    return -1;
  };
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      table[a][b] = index_of(compose_perm(perms[a], perms[b]));
  return build_group(table, {1, 4}, "S3");
}

}  // namespace dwarith::testsupport
