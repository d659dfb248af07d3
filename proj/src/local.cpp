#include "dwarith/local.hpp"

#include <algorithm>

namespace dwarith {

int InvFunctional::eval(const Cochain& two_cochain) const {
  require(two_cochain.degree == 2, ErrorCode::Internal,
          "invariant functional expects a 2-cochain");
  require(two_cochain.modulus == modulus, ErrorCode::ModulusMismatch,
          "invariant functional modulus mismatch");
  long long total = 0;
  std::array<int, 2> point{};
  for (const auto& [g, h, coeff] : terms) {
    point[0] = static_cast<int>(g);
    point[1] = static_cast<int>(h);
    total += coeff % modulus * two_cochain.at(point);
  }
  long long r = total % modulus;
  return static_cast<int>(r < 0 ? r + modulus : r);
}

int LocalDatum::invariant(const Cochain& two_cochain) const {
  int raw = inv.eval(two_cochain);
  if (orientation == 1) return raw;
  return raw == 0 ? 0 : inv.modulus - raw;
}

namespace {

// Deterministic gcd combination of cocycle generators hitting raw value
// `target` (a unit). Returns the zero cochain when the functional is not
// surjective on cocycles.
Cochain derive_unit_cocycle(const GroupPtr& group, const InvFunctional& inv,
                            int target) {
  const int n = inv.modulus;
  Cochain zero = Cochain::zero(group, 2, n);
  IntMat d3 = coboundary_matrix(*group, 3);
  auto gens = kernel_mod(d3, n);
  long long value = 0;
  Cochain combo = zero;
  for (const auto& gen : gens) {
    Cochain z = zero;
    for (std::size_t i = 0; i < gen.size(); ++i)
      z.values[i] = static_cast<int>(gen[i]);
    long long v = inv.eval(z);
    if (v == 0) continue;
    if (value == 0) {
      value = v;
      combo = z;
      continue;
    }
    // Extended gcd step: a*value + b*v = g.
    long long a = 1, b = 0, x = 0, y = 1, r0 = value, r1 = v;
    while (r1 != 0) {
      long long q = r0 / r1;
      long long t = r0 - q * r1;
      r0 = r1; r1 = t;
      t = a - q * x; a = x; x = t;
      t = b - q * y; b = y; y = t;
    }
    value = r0;
    combo = scale(combo, static_cast<int>(((a % n) + n) % n)) +
            scale(z, static_cast<int>(((b % n) + n) % n));
  }
  if (value == 0 || gcd_ll(value, n) != 1) return zero;
  long long t = static_cast<long long>(target) % n * inv_mod(value, n) % n;
  return scale(combo, static_cast<int>(t));
}

}  // namespace

LocalDatum make_local_datum(std::string name, GroupPtr group, InvFunctional inv,
                            int orientation,
                            std::optional<UnramifiedQuotient> unramified) {
  require(orientation == 1 || orientation == -1, ErrorCode::SchemaError,
          "orientation must be +1 or -1");
  for (const auto& [g, h, coeff] : inv.terms) {
    require(0 <= g && g < group->order && 0 <= h && h < group->order,
            ErrorCode::SchemaError,
            "invariant functional evaluation point out of range");
    (void)coeff;
  }
  if (unramified) {
    require(unramified->projection.source.get() == group.get() &&
                unramified->projection.target.get() == unramified->group.get(),
            ErrorCode::SchemaError, "unramified projection endpoints wrong");
    require(unramified->projection.is_surjective(), ErrorCode::SchemaError,
            "unramified projection must be surjective");
  }
  LocalDatum d;
  d.name = std::move(name);
  d.group = group;
  d.inv = std::move(inv);
  d.orientation = orientation;
  // raw(u) = orientation makes the orientation-adjusted invariant of u one.
  d.unit_cocycle = derive_unit_cocycle(
      group, d.inv, orientation == 1 ? 1 : d.inv.modulus - 1);
  d.unramified = std::move(unramified);
  return d;
}

LocalDatum reverse_orientation(const LocalDatum& datum) {
  LocalDatum out = datum;
  out.orientation = -datum.orientation;
  out.unit_cocycle =
      scale(datum.unit_cocycle, datum.unit_cocycle.modulus - 1);
  return out;
}

bool AxiomReport::passed() const {
  return std::all_of(items.begin(), items.end(),
                     [](const CheckItem& c) { return c.passed; });
}

void AxiomReport::add(std::string name, bool ok, std::string detail) {
  items.push_back(CheckItem{std::move(name), ok, std::move(detail)});
}

long long Boundary::tuple_count() const {
  long long total = 1;
  for (const auto& c : components) total *= c.reps.size();
  return total;
}

std::vector<int> Boundary::tuple_at(long long index) const {
  std::vector<int> out(components.size());
  for (int i = prime_count() - 1; i >= 0; --i) {
    out[i] = static_cast<int>(index % components[i].reps.size());
    index /= components[i].reps.size();
  }
  return out;
}

long long Boundary::tuple_index(std::span<const int> component_indices) const {
  long long idx = 0;
  for (int i = 0; i < prime_count(); ++i)
    idx = idx * components[i].reps.size() + component_indices[i];
  return idx;
}

long long Boundary::act_tuple(long long index, int g) const {
  std::vector<int> t = tuple_at(index);
  for (int i = 0; i < prime_count(); ++i) t[i] = components[i].reps.act(t[i], g);
  return tuple_index(t);
}

std::pair<long long, long long> Boundary::split_tuple(long long index,
                                                      int prefix_len) const {
  long long suffix_size = 1;
  for (int i = prefix_len; i < prime_count(); ++i)
    suffix_size *= components[i].reps.size();
  return {index / suffix_size, index % suffix_size};
}

long long Boundary::join_tuple(long long prefix, long long suffix,
                               int prefix_len) const {
  long long suffix_size = 1;
  for (int i = prefix_len; i < prime_count(); ++i)
    suffix_size *= components[i].reps.size();
  return prefix * suffix_size + suffix;
}

Boundary make_boundary(GroupPtr gauge, Cochain cocycle,
                       std::vector<const LocalDatum*> locals) {
  require(cocycle.degree == 3 && cocycle.group.get() == gauge.get(),
          ErrorCode::Internal, "boundary needs a 3-cochain on the gauge group");
  std::vector<int> bad;
  if (!is_cocycle(cocycle, &bad)) {
    std::string where;
    for (int x : bad) where += std::to_string(x) + ",";
    fail(ErrorCode::NotACocycle, "dc != 0 at (" + where + ")");
  }
  Boundary b;
  b.gauge = gauge;
  b.cocycle = std::move(cocycle);
  for (const LocalDatum* d : locals) {
    require(d->inv.modulus == b.cocycle.modulus, ErrorCode::ModulusMismatch,
            "local datum '" + d->name + "' modulus differs from the cocycle");
    b.components.push_back(
        BoundaryComponent{d, enumerate_hom_set(d->group, gauge)});
  }
  return b;
}

AxiomReport check_local_axioms(const Boundary& boundary, int component) {
  AxiomReport report;
  const BoundaryComponent& comp = boundary.components[component];
  const LocalDatum& d = *comp.datum;
  const FiniteGroup& q = *d.group;
  const int n = d.inv.modulus;
  const std::string tag = "local[" + d.name + "].";

  // Vanishing on coboundaries: enough to test d of the indicator 1-cochains.
  bool vanishes = true;
  std::string which;
  for (int k = 0; k < q.order && vanishes; ++k) {
    Cochain delta = Cochain::zero(d.group, 1, n);
    delta.values[k] = 1;
    if (d.inv.eval(coboundary(delta)) != 0) {
      vanishes = false;
      which = "fails on d(indicator of element " + std::to_string(k) + ")";
    }
  }
  report.add(tag + "inv_vanishes_on_coboundaries", vanishes, which);

  bool surjective = is_cocycle(d.unit_cocycle) &&
                    d.invariant(d.unit_cocycle) == 1 % n;
  report.add(tag + "inv_surjective_on_cocycles", surjective,
             surjective ? "unit cocycle cached" : "no cocycle hits 1");

  if (d.unramified) {
    report.add(tag + "unramified_projection_surjective",
               d.unramified->projection.is_surjective());
  }

  bool solvable = true;
  std::string failing;
  for (int i = 0; i < comp.reps.size(); ++i) {
    if (!solve_coboundary(pullback(boundary.cocycle, comp.reps.homs[i]))) {
      solvable = false;
      failing += (failing.empty() ? "rep " : ", rep ") + std::to_string(i);
    }
  }
  report.add(tag + "pullbacks_solvable", solvable, failing);
  return report;
}

AxiomReport check_local_axioms(const Boundary& boundary) {
  AxiomReport report;
  for (int i = 0; i < boundary.prime_count(); ++i) {
    AxiomReport one = check_local_axioms(boundary, i);
    for (auto& item : one.items) report.items.push_back(std::move(item));
  }
  return report;
}

Section default_section(const Boundary& boundary) {
  Section x;
  x.assignment.resize(boundary.prime_count());
  for (int p = 0; p < boundary.prime_count(); ++p) {
    const BoundaryComponent& comp = boundary.components[p];
    for (int i = 0; i < comp.reps.size(); ++i) {
      auto beta = solve_coboundary(pullback(boundary.cocycle, comp.reps.homs[i]));
      require(beta.has_value(), ErrorCode::ModelViolation,
              "c∘ρ is not a coboundary for rep " + std::to_string(i) +
                  " of local '" + comp.datum->name + "'");
      x.assignment[p].push_back(
          FiberElement{comp.datum, comp.reps.homs[i], std::move(*beta)});
    }
  }
  return x;
}

Section perturb_section(const Boundary& boundary, const Section& x, int prime,
                        int rep_index, int amount) {
  Section out = x;
  out.assignment[prime][rep_index] =
      fiber_act(x.at(prime, rep_index), amount);
  out.label = x.label + "+" + boundary.components[prime].datum->name + "[" +
              std::to_string(rep_index) + "]:" + std::to_string(amount);
  return out;
}

int lambda_prime(const Boundary& boundary, const Section& x, int prime, int g,
                 int rep_index) {
  const BoundaryComponent& comp = boundary.components[prime];
  FiberMap f = conj_fiber_map(*comp.datum, boundary.cocycle, g,
                              comp.reps.homs[rep_index]);
  int moved = comp.reps.act(rep_index, g);
  return transition_scalar(f, x.at(prime, rep_index), x.at(prime, moved));
}

int lambda_space(const Boundary& boundary, const Section& x, int g,
                 long long tuple_index) {
  std::vector<int> t = boundary.tuple_at(tuple_index);
  long long total = 0;
  for (int p = 0; p < boundary.prime_count(); ++p)
    total += lambda_prime(boundary, x, p, g, t[p]);
  return static_cast<int>(total % boundary.cocycle.modulus);
}

int delta_sections(const Boundary& boundary, const Section& x,
                   const Section& x_prime, long long tuple_index) {
  std::vector<int> t = boundary.tuple_at(tuple_index);
  long long total = 0;
  for (int p = 0; p < boundary.prime_count(); ++p)
    total += fiber_diff(x.at(p, t[p]), x_prime.at(p, t[p]));
  return static_cast<int>(total % boundary.cocycle.modulus);
}

std::vector<std::vector<int>> lambda_table(const Boundary& boundary,
                                           const Section& x) {
  const int n = boundary.cocycle.modulus;
  const int gauge_order = boundary.gauge->order;
  // Per-prime tables first, then tuple sums.
  std::vector<std::vector<std::vector<int>>> per_prime(boundary.prime_count());
  for (int p = 0; p < boundary.prime_count(); ++p) {
    const BoundaryComponent& comp = boundary.components[p];
    per_prime[p].assign(gauge_order,
                        std::vector<int>(comp.reps.size(), 0));
    for (int g = 0; g < gauge_order; ++g) {
      Cochain hg = homotopy_h(g, boundary.cocycle);
      for (int i = 0; i < comp.reps.size(); ++i) {
        const FiberElement& xt = x.at(p, i);
        FiberElement shifted{comp.datum,
                             comp.reps.homs[comp.reps.act(i, g)],
                             xt.cochain + pullback(hg, comp.reps.homs[i])};
        per_prime[p][g][i] =
            fiber_diff(shifted, x.at(p, comp.reps.act(i, g)));
      }
    }
  }
  std::vector<std::vector<int>> table(
      gauge_order, std::vector<int>(boundary.tuple_count(), 0));
  for (int g = 0; g < gauge_order; ++g) {
    for (long long t = 0; t < boundary.tuple_count(); ++t) {
      std::vector<int> idx = boundary.tuple_at(t);
      long long total = 0;
      for (int p = 0; p < boundary.prime_count(); ++p)
        total += per_prime[p][g][idx[p]];
      table[g][t] = static_cast<int>(total % n);
    }
  }
  return table;
}

}  // namespace dwarith
