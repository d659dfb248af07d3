#include <doctest.h>

#include <random>
#include <set>

#include "dwarith/snf.hpp"

using namespace dwarith;

namespace {

IntMat random_matrix(std::mt19937_64& rng, int rows, int cols, int spread) {
  IntMat m(rows, cols);
  std::uniform_int_distribution<int> dist(-spread, spread);
  for (long long i = 0; i < static_cast<long long>(rows) * cols; ++i)
    m.a[i] = dist(rng);
  return m;
}

long long det3(const IntMat& m) {
  REQUIRE(m.rows == 3);
  return m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1)) -
         m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0)) +
         m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
}

}  // namespace

TEST_CASE("smith form: U*A*V = S, diagonal, divisibility chain") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 6);
    int cols = 1 + static_cast<int>(rng() % 6);
    IntMat a = random_matrix(rng, rows, cols, 6);
    for (PivotStrategy strategy :
         {PivotStrategy::primary, PivotStrategy::alternate}) {
      SmithForm f = smith_normal_form(a, strategy);
      IntMat check = mat_mul(mat_mul(f.u, a), f.v);
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
          CHECK(check.at(i, j) == f.s.at(i, j));
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
          if (i != j) CHECK(f.s.at(i, j) == 0);
      for (int i = 0; i + 1 < std::min(rows, cols); ++i) {
        long long d1 = f.s.at(i, i), d2 = f.s.at(i + 1, i + 1);
        CHECK(d1 >= 0);
        if (d1 == 0) CHECK(d2 == 0);
        if (d1 > 0) CHECK(d2 % d1 == 0);
      }
    }
  }
}

TEST_CASE("smith transforms are unimodular (3x3 determinant check)") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    IntMat a = random_matrix(rng, 3, 3, 5);
    SmithForm f = smith_normal_form(a);
    CHECK(std::abs(det3(f.u)) == 1);
    CHECK(std::abs(det3(f.v)) == 1);
  }
}

TEST_CASE("solve_mod finds solutions exactly when they exist") {
  std::mt19937_64 rng(23);
  for (long long n : {2, 3, 4, 6}) {
    for (int trial = 0; trial < 80; ++trial) {
      int rows = 1 + static_cast<int>(rng() % 5);
      int cols = 1 + static_cast<int>(rng() % 5);
      IntMat a = random_matrix(rng, rows, cols, 4);
      // Build a guaranteed-solvable right side from a random x.
      std::vector<long long> x(cols);
      for (auto& v : x) v = static_cast<long long>(rng() % n);
      std::vector<long long> b = mat_vec(a, x);
      auto sol = solve_mod(a, b, n);
      REQUIRE(sol.has_value());
      std::vector<long long> back = mat_vec(a, *sol);
      for (int i = 0; i < rows; ++i)
        CHECK(((back[i] - b[i]) % n + n) % n == 0);

      auto alt = solve_mod(a, b, n, PivotStrategy::alternate);
      REQUIRE(alt.has_value());
      back = mat_vec(a, *alt);
      for (int i = 0; i < rows; ++i)
        CHECK(((back[i] - b[i]) % n + n) % n == 0);
    }
  }
}

TEST_CASE("solve_mod absence agrees with exhaustive search on tiny systems") {
  std::mt19937_64 rng(31);
  for (long long n : {2, 4}) {
    for (int trial = 0; trial < 60; ++trial) {
      int rows = 1 + static_cast<int>(rng() % 3);
      int cols = 1 + static_cast<int>(rng() % 3);
      IntMat a = random_matrix(rng, rows, cols, 3);
      std::vector<long long> b(rows);
      for (auto& v : b) v = static_cast<long long>(rng() % n);
      bool found = false;
      long long total = 1;
      for (int i = 0; i < cols; ++i) total *= n;
      for (long long code = 0; code < total && !found; ++code) {
        std::vector<long long> x(cols);
        long long rest = code;
        for (int i = 0; i < cols; ++i) {
          x[i] = rest % n;
          rest /= n;
        }
        std::vector<long long> back = mat_vec(a, x);
        bool all = true;
        for (int i = 0; i < rows; ++i)
          if (((back[i] - b[i]) % n + n) % n != 0) all = false;
        found = found || all;
      }
      CHECK(solve_mod(a, b, n).has_value() == found);
    }
  }
}

TEST_CASE("alternate pivoting returns a different solution when possible") {
  // x + y ≡ 0 (mod 4) has 4 solutions; the two strategies must disagree.
  IntMat a(1, 2);
  a.at(0, 0) = 1;
  a.at(0, 1) = 1;
  std::vector<long long> b{0};
  auto s1 = solve_mod(a, b, 4, PivotStrategy::primary);
  auto s2 = solve_mod(a, b, 4, PivotStrategy::alternate);
  REQUIRE(s1.has_value());
  REQUIRE(s2.has_value());
  CHECK(*s1 != *s2);
}

TEST_CASE("kernel_mod generates the full nullspace on tiny systems") {
  std::mt19937_64 rng(41);
  for (long long n : {2, 4}) {
    for (int trial = 0; trial < 30; ++trial) {
      int rows = 1 + static_cast<int>(rng() % 3);
      int cols = 1 + static_cast<int>(rng() % 3);
      IntMat a = random_matrix(rng, rows, cols, 3);
      auto gens = kernel_mod(a, n);
      // Every generator solves; every exhaustive solution lies in the span.
      for (const auto& g : gens) {
        std::vector<long long> back = mat_vec(a, g);
        for (int i = 0; i < rows; ++i) CHECK(back[i] % n == 0);
      }
      std::set<std::vector<long long>> span;
      std::vector<std::vector<long long>> frontier{
          std::vector<long long>(cols, 0)};
      span.insert(frontier[0]);
      while (!frontier.empty()) {
        auto cur = frontier.back();
        frontier.pop_back();
        for (const auto& g : gens) {
          std::vector<long long> next(cols);
          for (int i = 0; i < cols; ++i) next[i] = (cur[i] + g[i]) % n;
          if (span.insert(next).second) frontier.push_back(next);
        }
      }
      long long total = 1;
      for (int i = 0; i < cols; ++i) total *= n;
      std::size_t kernel_size = 0;
      for (long long code = 0; code < total; ++code) {
        std::vector<long long> x(cols);
        long long rest = code;
        for (int i = 0; i < cols; ++i) {
          x[i] = rest % n;
          rest /= n;
        }
        std::vector<long long> back = mat_vec(a, x);
        bool in_kernel = true;
        for (int i = 0; i < rows; ++i)
          if (((back[i]) % n + n) % n != 0) in_kernel = false;
        if (in_kernel) {
          ++kernel_size;
          CHECK(span.count(x) == 1);
        }
      }
      CHECK(span.size() == kernel_size);
    }
  }
}
