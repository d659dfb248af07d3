#include "dwarith/cochain.hpp"

#include <algorithm>
#include <numeric>

namespace dwarith {

namespace {

int mod_reduce(long long v, int n) {
  long long r = v % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

void check_compatible(const Cochain& x, const Cochain& y) {
  require(x.group.get() == y.group.get(), ErrorCode::Internal,
          "cochains live on different groups");
  require(x.degree == y.degree, ErrorCode::Internal, "degree mismatch");
  require(x.modulus == y.modulus, ErrorCode::ModulusMismatch,
          "modulus mismatch");
  require(x.action_char == y.action_char, ErrorCode::Internal,
          "module-action mismatch");
}

// Enumerates all degree-tuples in row-major order, invoking f(tuple).
template <typename F>
void for_each_tuple(int order, int degree, F&& f) {
  std::vector<int> tuple(degree, 0);
  for (;;) {
    f(std::span<const int>(tuple));
    int pos = degree - 1;
    while (pos >= 0 && ++tuple[pos] == order) tuple[pos--] = 0;
    if (pos < 0) break;
  }
}

// One evaluation of (1.2.1)-style coboundary at a (n+1)-tuple, expressed in
// terms of lookups into alpha.
long long coboundary_value(const Cochain& alpha, std::span<const int> tuple) {
  const FiniteGroup& g = *alpha.group;
  const int n = alpha.degree;
  std::vector<int> sub(n);
  // Leading face γ₁·α(γ₂,…).
  for (int i = 0; i < n; ++i) sub[i] = tuple[i + 1];
  long long total = alpha.act_on_value(tuple[0], alpha.at(sub));
  // Inner faces with γᵢγᵢ₊₁ merged.
  for (int i = 1; i <= n; ++i) {
    int pos = 0;
    for (int k = 0; k < i - 1; ++k) sub[pos++] = tuple[k];
    sub[pos++] = g.times(tuple[i - 1], tuple[i]);
    for (int k = i + 1; k <= n; ++k) sub[pos++] = tuple[k];
    long long v = alpha.at(sub);
    total += (i % 2 == 0) ? v : -v;
  }
  // Trailing face.
  for (int i = 0; i < n; ++i) sub[i] = tuple[i];
  long long v = alpha.at(sub);
  total += ((n + 1) % 2 == 0) ? v : -v;
  return total;
}

}  // namespace

long long power_ll(int base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) {
    require(r <= (1LL << 40), ErrorCode::Internal, "cochain table too large");
    r *= base;
  }
  return r;
}

Cochain Cochain::zero(GroupPtr g, int degree, int modulus) {
  Cochain c;
  c.group = std::move(g);
  c.degree = degree;
  c.modulus = modulus;
  c.values.assign(power_ll(c.group->order, degree), 0);
  return c;
}

bool Cochain::trivial_action() const {
  return action_char.empty() ||
         std::all_of(action_char.begin(), action_char.end(),
                     [](int u) { return u == 1; });
}

int Cochain::act_on_value(int group_element, int value) const {
  if (action_char.empty()) return value;
  return mod_reduce(static_cast<long long>(action_char[group_element]) * value,
                    modulus);
}

long long Cochain::index_of(std::span<const int> tuple) const {
  long long idx = 0;
  for (int x : tuple) idx = idx * group->order + x;
  return idx;
}

std::vector<int> Cochain::tuple_at(long long index) const {
  std::vector<int> tuple(degree);
  for (int i = degree - 1; i >= 0; --i) {
    tuple[i] = static_cast<int>(index % group->order);
    index /= group->order;
  }
  return tuple;
}

bool same_shape(const Cochain& x, const Cochain& y) {
  return x.group.get() == y.group.get() && x.degree == y.degree &&
         x.modulus == y.modulus && x.action_char == y.action_char;
}

bool operator==(const Cochain& x, const Cochain& y) {
  return same_shape(x, y) && x.values == y.values;
}

Cochain operator+(const Cochain& x, const Cochain& y) {
  check_compatible(x, y);
  Cochain out = x;
  for (std::size_t i = 0; i < out.values.size(); ++i)
    out.values[i] = mod_reduce(static_cast<long long>(x.values[i]) + y.values[i],
                               x.modulus);
  return out;
}

Cochain operator-(const Cochain& x, const Cochain& y) {
  check_compatible(x, y);
  Cochain out = x;
  for (std::size_t i = 0; i < out.values.size(); ++i)
    out.values[i] = mod_reduce(static_cast<long long>(x.values[i]) - y.values[i],
                               x.modulus);
  return out;
}

Cochain scale(const Cochain& x, int m) {
  Cochain out = x;
  for (int& v : out.values) v = mod_reduce(static_cast<long long>(v) * m, x.modulus);
  return out;
}

Cochain coboundary(const Cochain& alpha) {
  Cochain out = Cochain::zero(alpha.group, alpha.degree + 1, alpha.modulus);
  out.action_char = alpha.action_char;
  long long idx = 0;
  for_each_tuple(alpha.group->order, alpha.degree + 1,
                 [&](std::span<const int> tuple) {
                   out.values[idx++] =
                       mod_reduce(coboundary_value(alpha, tuple), alpha.modulus);
                 });
  return out;
}

bool is_cocycle(const Cochain& alpha, std::vector<int>* counterexample) {
  bool good = true;
  for_each_tuple(alpha.group->order, alpha.degree + 1,
                 [&](std::span<const int> tuple) {
                   if (!good) return;
                   if (mod_reduce(coboundary_value(alpha, tuple),
                                  alpha.modulus) != 0) {
                     good = false;
                     if (counterexample)
                       counterexample->assign(tuple.begin(), tuple.end());
                   }
                 });
  return good;
}

Cochain conj_act(int sigma, const Cochain& alpha) {
  const FiniteGroup& g = *alpha.group;
  Cochain out = alpha;
  std::vector<int> moved(alpha.degree);
  long long idx = 0;
  for_each_tuple(g.order, alpha.degree, [&](std::span<const int> tuple) {
    for (int i = 0; i < alpha.degree; ++i) moved[i] = g.conj(sigma, tuple[i]);
    out.values[idx++] = alpha.act_on_value(sigma, alpha.at(moved));
  });
  return out;
}

Cochain homotopy_h(int sigma, const Cochain& alpha) {
  require(alpha.degree >= 1, ErrorCode::DegreeTooLow,
          "homotopy_h needs degree >= 1");
  const FiniteGroup& g = *alpha.group;
  const int n = alpha.degree - 1;
  Cochain out = Cochain::zero(alpha.group, n, alpha.modulus);
  out.action_char = alpha.action_char;
  std::vector<int> arg(alpha.degree);
  long long idx = 0;
  for_each_tuple(g.order, n, [&](std::span<const int> tuple) {
    long long total = 0;
    for (int i = 0; i <= n; ++i) {
      // s_i: (g₁,…,gₙ) ↦ (g₁,…,g_i, σ, σ⁻¹g_{i+1}σ, …, σ⁻¹gₙσ)
      for (int k = 0; k < i; ++k) arg[k] = tuple[k];
      arg[i] = sigma;
      for (int k = i; k < n; ++k) arg[k + 1] = g.conj(sigma, tuple[k]);
      long long v = alpha.at(arg);
      total += (i % 2 == 0) ? v : -v;
    }
    out.values[idx++] = mod_reduce(total, alpha.modulus);
  });
  return out;
}

Cochain homotopy_hh(int sigma1, int sigma2, const Cochain& alpha) {
  require(alpha.degree >= 2, ErrorCode::DegreeTooLow,
          "homotopy_hh needs degree >= 2");
  const FiniteGroup& g = *alpha.group;
  const int n = alpha.degree - 2;
  const int s12 = g.times(sigma1, sigma2);
  Cochain out = Cochain::zero(alpha.group, n, alpha.modulus);
  out.action_char = alpha.action_char;
  std::vector<int> arg(alpha.degree);
  long long idx = 0;
  for_each_tuple(g.order, n, [&](std::span<const int> tuple) {
    long long total = 0;
    for (int i = 0; i <= n; ++i) {
      for (int j = i; j <= n; ++j) {
        // s_{i,j}: (g₁,…,gₙ) ↦ (g₁,…,g_i, σ₁, σ₁⁻¹g_{i+1}σ₁, …, σ₁⁻¹g_jσ₁,
        //                       σ₂, (σ₁σ₂)⁻¹g_{j+1}σ₁σ₂, …, (σ₁σ₂)⁻¹gₙσ₁σ₂)
        for (int k = 0; k < i; ++k) arg[k] = tuple[k];
        arg[i] = sigma1;
        for (int k = i; k < j; ++k) arg[k + 1] = g.conj(sigma1, tuple[k]);
        arg[j + 1] = sigma2;
        for (int k = j; k < n; ++k) arg[k + 2] = g.conj(s12, tuple[k]);
        long long v = alpha.at(arg);
        total += ((i + j) % 2 == 0) ? v : -v;
      }
    }
    out.values[idx++] = mod_reduce(total, alpha.modulus);
  });
  return out;
}

Cochain pullback(const Cochain& alpha, const GroupHom& rho) {
  require(alpha.trivial_action(), ErrorCode::Internal,
          "pullback requires the trivial module action");
  require(rho.target.get() == alpha.group.get(), ErrorCode::Internal,
          "pullback along a hom into a different group");
  Cochain out = Cochain::zero(rho.source, alpha.degree, alpha.modulus);
  std::vector<int> image(alpha.degree);
  long long idx = 0;
  for_each_tuple(rho.source->order, alpha.degree,
                 [&](std::span<const int> tuple) {
                   for (int i = 0; i < alpha.degree; ++i)
                     image[i] = rho.map[tuple[i]];
                   out.values[idx++] = alpha.at(image);
                 });
  return out;
}

Cochain h_class(int g, const Cochain& c) {
  require(c.degree == 3, ErrorCode::Internal, "h_class expects a 3-cochain");
  std::vector<int> bad;
  if (!is_cocycle(c, &bad)) {
    std::string where;
    for (int x : bad) where += std::to_string(x) + ",";
    fail(ErrorCode::NotACocycle, "dc != 0 at (" + where + ")");
  }
  return homotopy_h(g, c);
}

IntMat coboundary_matrix(const FiniteGroup& g, int degree) {
  require(degree >= 1, ErrorCode::Internal, "coboundary_matrix needs degree>=1");
  const int n = degree - 1;  // source degree
  const long long rows = power_ll(g.order, degree);
  const long long cols = power_ll(g.order, n);
  IntMat mat(static_cast<int>(rows), static_cast<int>(cols));
  std::vector<int> sub(n);
  auto col_index = [&](std::span<const int> t) {
    long long idx = 0;
    for (int x : t) idx = idx * g.order + x;
    return idx;
  };
  long long row = 0;
  for_each_tuple(g.order, degree, [&](std::span<const int> tuple) {
    // Leading face (trivial action: coefficient +1).
    for (int i = 0; i < n; ++i) sub[i] = tuple[i + 1];
    mat.at(static_cast<int>(row), static_cast<int>(col_index(sub))) += 1;
    for (int i = 1; i <= n; ++i) {
      int pos = 0;
      for (int k = 0; k < i - 1; ++k) sub[pos++] = tuple[k];
      sub[pos++] = g.times(tuple[i - 1], tuple[i]);
      for (int k = i + 1; k <= n; ++k) sub[pos++] = tuple[k];
      mat.at(static_cast<int>(row), static_cast<int>(col_index(sub))) +=
          (i % 2 == 0) ? 1 : -1;
    }
    for (int i = 0; i < n; ++i) sub[i] = tuple[i];
    mat.at(static_cast<int>(row), static_cast<int>(col_index(sub))) +=
        ((n + 1) % 2 == 0) ? 1 : -1;
    ++row;
  });
  return mat;
}

std::optional<Cochain> solve_coboundary(const Cochain& z,
                                        PivotStrategy strategy) {
  require(z.degree >= 1, ErrorCode::DegreeTooLow,
          "solve_coboundary needs degree >= 1");
  require(z.trivial_action(), ErrorCode::Internal,
          "solve_coboundary requires the trivial module action");
  IntMat d = coboundary_matrix(*z.group, z.degree);
  std::vector<long long> rhs(z.values.begin(), z.values.end());
  auto solution = solve_mod(d, rhs, z.modulus, strategy);
  if (!solution) return std::nullopt;
  Cochain beta = Cochain::zero(z.group, z.degree - 1, z.modulus);
  for (std::size_t i = 0; i < solution->size(); ++i)
    beta.values[i] = static_cast<int>((*solution)[i]);
  return beta;
}

long long CohomologyBasis::quotient_order() const {
  long long total = 1;
  for (long long f : quotient_structure) total *= f;
  return total;
}

namespace {

// Inverse of a unimodular matrix via a second Smith reduction.
IntMat unimodular_inverse(const IntMat& v) {
  SmithForm f = smith_normal_form(v);
  for (int i = 0; i < std::min(f.s.rows, f.s.cols); ++i)
    require(f.s.at(i, i) == 1, ErrorCode::Internal,
            "matrix is not unimodular");
  return mat_mul(f.v, f.u);
}

}  // namespace

CohomologyBasis cohomology_basis(GroupPtr q, int modulus, int degree) {
  CohomologyBasis out;
  out.degree = degree;
  out.modulus = modulus;
  const long long m = power_ll(q->order, degree);

  auto cochain_from = [&](const std::vector<long long>& vec) {
    Cochain c = Cochain::zero(q, degree, modulus);
    for (long long i = 0; i < m; ++i)
      c.values[i] = static_cast<int>(((vec[i] % modulus) + modulus) % modulus);
    return c;
  };

  // Z^n: kernel of d^{n+1} mod N. Degree 0 maps by dα(γ) = α − α = 0 under
  // the trivial action, so everything is a cocycle.
  IntMat d_up = coboundary_matrix(*q, degree + 1);
  if (degree == 0) {
    std::vector<long long> one(m, 0);
    one[0] = 1;
    out.cocycle_basis.push_back(cochain_from(one));
  } else {
    for (const auto& gen : kernel_mod(d_up, modulus))
      out.cocycle_basis.push_back(cochain_from(gen));
  }

  // B^n: spanned by d of the standard basis cochains of degree n-1.
  if (degree >= 1) {
    IntMat d_down = coboundary_matrix(*q, degree);
    for (int j = 0; j < d_down.cols; ++j) {
      std::vector<long long> col(m);
      bool nonzero = false;
      for (long long i = 0; i < m; ++i) {
        col[i] = d_down.at(static_cast<int>(i), j);
        nonzero = nonzero || col[i] % modulus != 0;
      }
      if (nonzero) out.coboundary_basis.push_back(cochain_from(col));
    }
  }

  // Invariant factors of H^n = Z^n/B^n. Work in the kernel lattice
  // K = {x : d_up·x ≡ 0 (mod N)}, with basis columns (N/gcd(s_i,N))·V_i.
  SmithForm f = smith_normal_form(d_up);
  std::vector<long long> mults(m, 1);
  const int bound = std::min(d_up.rows, d_up.cols);
  for (long long i = 0; i < m; ++i) {
    long long s = i < bound ? f.s.at(static_cast<int>(i), static_cast<int>(i)) : 0;
    mults[i] = modulus / gcd_ll(s, modulus);
  }
  IntMat v_inv = unimodular_inverse(f.v);

  const int b_cols = degree >= 1 ? static_cast<int>(power_ll(q->order, degree - 1)) : 0;
  IntMat d_down = degree >= 1 ? coboundary_matrix(*q, degree) : IntMat(static_cast<int>(m), 0);
  IntMat w(static_cast<int>(m), b_cols + static_cast<int>(m));
  auto put_column = [&](int col, const std::vector<long long>& gen) {
    std::vector<long long> y = mat_vec(v_inv, gen);
    for (long long i = 0; i < m; ++i) {
      require(y[i] % mults[i] == 0, ErrorCode::Internal,
              "coboundary generator not in the cocycle lattice");
      w.at(static_cast<int>(i), col) = y[i] / mults[i];
    }
  };
  for (int j = 0; j < b_cols; ++j) {
    std::vector<long long> gen(m);
    for (long long i = 0; i < m; ++i) gen[i] = d_down.at(static_cast<int>(i), j);
    put_column(j, gen);
  }
  for (long long j = 0; j < m; ++j) {
    std::vector<long long> gen(m, 0);
    gen[j] = modulus;
    put_column(b_cols + static_cast<int>(j), gen);
  }
  SmithForm wf = smith_normal_form(w);
  for (long long i = 0; i < m; ++i) {
    long long s = i < std::min(w.rows, w.cols)
                      ? wf.s.at(static_cast<int>(i), static_cast<int>(i))
                      : 0;
    require(s != 0, ErrorCode::Internal, "cohomology quotient not finite");
    if (s > 1) out.quotient_structure.push_back(s);
  }
  std::sort(out.quotient_structure.begin(), out.quotient_structure.end());
  return out;
}

}  // namespace dwarith
