#include "dwarith/snf.hpp"

#include <algorithm>
#include <cstdlib>

#include "dwarith/error.hpp"

namespace dwarith {

namespace {

long long checked_mul(long long x, long long y) {
  long long r;
  require(!__builtin_mul_overflow(x, y, &r), ErrorCode::Internal,
          "integer overflow in exact linear algebra");
  return r;
}

long long checked_add(long long x, long long y) {
  long long r;
  require(!__builtin_add_overflow(x, y, &r), ErrorCode::Internal,
          "integer overflow in exact linear algebra");
  return r;
}

}  // namespace

long long gcd_ll(long long x, long long y) {
  x = std::llabs(x);
  y = std::llabs(y);
  while (y != 0) {
    long long t = x % y;
    x = y;
    y = t;
  }
  return x;
}

long long inv_mod(long long x, long long n) {
  // Extended Euclid; requires gcd(x, n) = 1.
  long long a = ((x % n) + n) % n, b = n;
  long long u = 1, v = 0;
  while (b != 0) {
    long long q = a / b;
    long long t = a - q * b;
    a = b;
    b = t;
    t = u - q * v;
    u = v;
    v = t;
  }
  require(a == 1, ErrorCode::Internal, "inv_mod of a non-unit");
  return ((u % n) + n) % n;
}

IntMat identity_mat(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat mat_mul(const IntMat& x, const IntMat& y) {
  require(x.cols == y.rows, ErrorCode::Internal, "mat_mul shape mismatch");
  IntMat z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      long long xv = x.at(i, k);
      if (xv == 0) continue;
      for (int j = 0; j < y.cols; ++j)
        z.at(i, j) = checked_add(z.at(i, j), checked_mul(xv, y.at(k, j)));
    }
  return z;
}

std::vector<long long> mat_vec(const IntMat& m, const std::vector<long long>& v) {
  require(static_cast<int>(v.size()) == m.cols, ErrorCode::Internal,
          "mat_vec shape mismatch");
  std::vector<long long> out(m.rows, 0);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (m.at(i, j) != 0)
        out[i] = checked_add(out[i], checked_mul(m.at(i, j), v[j]));
  return out;
}

namespace {

struct SnfWorker {
  IntMat a, u, v;

  void row_swap(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < a.cols; ++c) std::swap(a.at(i, c), a.at(j, c));
    for (int c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
  }
  void col_swap(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < a.rows; ++r) std::swap(a.at(r, i), a.at(r, j));
    for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
  }
  void row_addmul(int dst, int src, long long f) {  // row dst += f * row src
    if (f == 0) return;
    for (int c = 0; c < a.cols; ++c)
      a.at(dst, c) = checked_add(a.at(dst, c), checked_mul(f, a.at(src, c)));
    for (int c = 0; c < u.cols; ++c)
      u.at(dst, c) = checked_add(u.at(dst, c), checked_mul(f, u.at(src, c)));
  }
  void col_addmul(int dst, int src, long long f) {
    if (f == 0) return;
    for (int r = 0; r < a.rows; ++r)
      a.at(r, dst) = checked_add(a.at(r, dst), checked_mul(f, a.at(r, src)));
    for (int r = 0; r < v.rows; ++r)
      v.at(r, dst) = checked_add(v.at(r, dst), checked_mul(f, v.at(r, src)));
  }
  void row_negate(int i) {
    for (int c = 0; c < a.cols; ++c) a.at(i, c) = -a.at(i, c);
    for (int c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
  }

  bool find_pivot(int s, PivotStrategy strategy, int& pr, int& pc) const {
    long long best = 0;
    pr = pc = -1;
    if (strategy == PivotStrategy::primary) {
      for (int i = s; i < a.rows; ++i)
        for (int j = s; j < a.cols; ++j) {
          long long m = std::llabs(a.at(i, j));
          if (m != 0 && (best == 0 || m < best)) {
            best = m;
            pr = i;
            pc = j;
          }
        }
    } else {
      for (int i = a.rows - 1; i >= s; --i)
        for (int j = a.cols - 1; j >= s; --j) {
          long long m = std::llabs(a.at(i, j));
          if (m != 0 && (best == 0 || m < best)) {
            best = m;
            pr = i;
            pc = j;
          }
        }
    }
    return pr >= 0;
  }

  void run(PivotStrategy strategy) {
    const int steps = std::min(a.rows, a.cols);
    for (int s = 0; s < steps; ++s) {
      bool exhausted = false;
      for (;;) {
        // Re-pick the globally minimal pivot each pass; remainders shrink it
        // strictly, which also keeps the reduction quotients small.
        int pr, pc;
        if (!find_pivot(s, strategy, pr, pc)) {
          exhausted = true;
          break;
        }
        row_swap(s, pr);
        col_swap(s, pc);
        bool clean = true;
        for (int i = s + 1; i < a.rows; ++i) {
          long long q = a.at(i, s) / a.at(s, s);
          row_addmul(i, s, -q);
          if (a.at(i, s) != 0) clean = false;
        }
        for (int j = s + 1; j < a.cols; ++j) {
          long long q = a.at(s, j) / a.at(s, s);
          col_addmul(j, s, -q);
          if (a.at(s, j) != 0) clean = false;
        }
        if (!clean) continue;
        // Divisibility chain: fold in any entry the pivot does not divide.
        bool redo = false;
        for (int i = s + 1; i < a.rows && !redo; ++i)
          for (int j = s + 1; j < a.cols && !redo; ++j)
            if (a.at(i, j) % a.at(s, s) != 0) {
              row_addmul(s, i, 1);
              redo = true;
            }
        if (!redo) break;
      }
      if (exhausted) break;
      if (a.at(s, s) < 0) row_negate(s);
    }
  }
};

}  // namespace

SmithForm smith_normal_form(IntMat a, PivotStrategy strategy) {
  SnfWorker w{std::move(a), identity_mat(0), identity_mat(0)};
  w.u = identity_mat(w.a.rows);
  w.v = identity_mat(w.a.cols);
  w.run(strategy);
  return SmithForm{std::move(w.u), std::move(w.a), std::move(w.v)};
}

std::optional<std::vector<long long>> solve_mod(const IntMat& a,
                                                const std::vector<long long>& b,
                                                long long n,
                                                PivotStrategy strategy) {
  require(n >= 2, ErrorCode::Internal, "modulus must be >= 2");
  require(static_cast<int>(b.size()) == a.rows, ErrorCode::Internal,
          "solve_mod shape mismatch");
  SmithForm f = smith_normal_form(a, strategy);
  std::vector<long long> c = mat_vec(f.u, b);
  const int rank_bound = std::min(a.rows, a.cols);
  std::vector<long long> y(a.cols, 0);
  for (int i = 0; i < a.rows; ++i) {
    long long s = i < rank_bound ? f.s.at(i, i) : 0;
    long long ci = ((c[i] % n) + n) % n;
    if (s == 0) {
      if (ci != 0) return std::nullopt;
      continue;
    }
    long long g = gcd_ll(s, n);
    if (ci % g != 0) return std::nullopt;
    long long m = n / g;
    // s/g is a unit mod n/g; minimal nonnegative representative.
    long long yi = m == 1 ? 0 : (ci / g % m) * inv_mod(s / g % m, m) % m;
    if (strategy == PivotStrategy::alternate && g != 1) yi += m;  // shift
    y[i] = yi;
  }
  if (strategy == PivotStrategy::alternate) {
    for (int i = 0; i < a.cols; ++i) {
      long long s = i < rank_bound ? f.s.at(i, i) : 0;
      if (s == 0) y[i] = 1;  // free parameter
    }
  }
  std::vector<long long> x = mat_vec(f.v, y);
  for (long long& xi : x) xi = ((xi % n) + n) % n;
  return x;
}

std::vector<std::vector<long long>> kernel_mod(const IntMat& a, long long n) {
  SmithForm f = smith_normal_form(a);
  const int rank_bound = std::min(a.rows, a.cols);
  std::vector<std::vector<long long>> out;
  for (int i = 0; i < a.cols; ++i) {
    long long s = i < rank_bound ? f.s.at(i, i) : 0;
    long long mult = n / gcd_ll(s, n);  // gcd(0, n) = n -> mult 1
    if (mult % n == 0) continue;        // column contributes nothing mod n
    std::vector<long long> gen(a.cols);
    bool nonzero = false;
    for (int r = 0; r < a.cols; ++r) {
      gen[r] = ((checked_mul(f.v.at(r, i), mult) % n) + n) % n;
      nonzero = nonzero || gen[r] != 0;
    }
    if (nonzero) out.push_back(std::move(gen));
  }
  return out;
}

}  // namespace dwarith
