#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace dwarith {

/// Dense integer matrix, row-major.
struct IntMat {
  int rows = 0;
  int cols = 0;
  std::vector<long long> a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
  long long& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  long long at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

IntMat identity_mat(int n);
IntMat mat_mul(const IntMat& x, const IntMat& y);
std::vector<long long> mat_vec(const IntMat& m, const std::vector<long long>& v);

/// U*A*V = S with U, V unimodular and S diagonal with divisibility chain.
struct SmithForm {
  IntMat u;  // rows x rows
  IntMat s;  // rows x cols, diagonal
  IntMat v;  // cols x cols
};

enum class PivotStrategy {
  primary,    // smallest nonzero |entry|, first in scan order
  alternate,  // smallest nonzero |entry|, last in reversed scan order
};

SmithForm smith_normal_form(IntMat a,
                            PivotStrategy strategy = PivotStrategy::primary);

/// Solves A·x ≡ b (mod n) over the integers lifted mod n.
/// The primary strategy returns the solution whose SNF-coordinate vector is
/// lexicographically minimal with free parameters set to 0; the alternate
/// strategy picks a different representative in the solution set (shifted
/// constrained coordinates, free parameters set to 1) on top of the alternate
/// pivoting, so the two calls disagree whenever the solution is not unique.
std::optional<std::vector<long long>> solve_mod(
    const IntMat& a, const std::vector<long long>& b, long long n,
    PivotStrategy strategy = PivotStrategy::primary);

/// Generators of the solution lattice {x : A·x ≡ 0 (mod n)} reduced mod n.
/// Zero columns are dropped; the result spans the kernel as a Z/n-module.
std::vector<std::vector<long long>> kernel_mod(const IntMat& a, long long n);

long long gcd_ll(long long x, long long y);
/// Inverse of x mod n; x must be a unit.
long long inv_mod(long long x, long long n);

}  // namespace dwarith
