#include "dwarith/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace dwarith {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::GeneratorsDontGenerate: return "GeneratorsDontGenerate";
    case ErrorCode::DegreeTooLow: return "DegreeTooLow";
    case ErrorCode::NotACocycle: return "NotACocycle";
    case ErrorCode::MismatchedFiber: return "MismatchedFiber";
    case ErrorCode::ModelViolation: return "ModelViolation";
    case ErrorCode::ReciprocityViolation: return "ReciprocityViolation";
    case ErrorCode::BetaDependence: return "BetaDependence";
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::BaseMismatch: return "BaseMismatch";
    case ErrorCode::InvalidWitness: return "InvalidWitness";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::DanglingReference: return "DanglingReference";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order; ++a)
    for (int b = a + 1; b < order; ++b)
      if (times(a, b) != times(b, a)) return false;
  return true;
}

namespace {

std::vector<int> closure_of(const FiniteGroup& g, const std::vector<int>& gens) {
  std::vector<char> seen(g.order, 0);
  std::vector<int> reached{FiniteGroup::identity};
  seen[FiniteGroup::identity] = 1;
  for (std::size_t i = 0; i < reached.size(); ++i) {
    for (int s : gens) {
      int next = g.times(reached[i], s);
      if (!seen[next]) {
        seen[next] = 1;
        reached.push_back(next);
      }
    }
  }
  return reached;
}

}  // namespace

GroupPtr build_group(const std::vector<std::vector<int>>& table,
                     std::vector<int> generators, std::string label) {
  const int n = static_cast<int>(table.size());
  require(n > 0, ErrorCode::NotAGroup, "empty multiplication table");
  for (const auto& row : table)
    require(static_cast<int>(row.size()) == n, ErrorCode::NotAGroup,
            "multiplication table is not square");
  for (const auto& row : table)
    for (int v : row)
      require(0 <= v && v < n, ErrorCode::NotAGroup,
              "table entry out of range");
  require(!generators.empty(), ErrorCode::GeneratorsDontGenerate,
          "generator list is empty");
  for (int s : generators)
    require(0 <= s && s < n, ErrorCode::GeneratorsDontGenerate,
            "generator index out of range");

  // Locate the two-sided identity.
  int e = -1;
  for (int cand = 0; cand < n; ++cand) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      ok = table[cand][a] == a && table[a][cand] == a;
    if (ok) {
      e = cand;
      break;
    }
  }
  require(e >= 0, ErrorCode::NotAGroup, "no two-sided identity");

  auto g = std::make_shared<FiniteGroup>();
  g->order = n;
  g->label = std::move(label);
  g->mul.assign(static_cast<std::size_t>(n) * n, 0);

  // Renormalize so the identity gets index 0 (swap labels 0 <-> e).
  std::vector<int> relabel(n);
  std::iota(relabel.begin(), relabel.end(), 0);
  std::swap(relabel[0], relabel[e]);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      g->mul[a * n + b] = relabel[table[relabel[a]][relabel[b]]];
  for (int& s : generators) s = relabel[s];

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        require(g->times(g->times(a, b), c) == g->times(a, g->times(b, c)),
                ErrorCode::NotAGroup, "multiplication is not associative");

  g->inverse_of.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (g->times(b, a) == FiniteGroup::identity &&
          g->times(a, b) == FiniteGroup::identity) {
        g->inverse_of[a] = b;
        break;
      }
    }
    require(g->inverse_of[a] >= 0, ErrorCode::NotAGroup,
            "element " + std::to_string(a) + " has no inverse");
  }

  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()),
                   generators.end());
  g->generators = generators;
  require(static_cast<int>(closure_of(*g, generators).size()) == n,
          ErrorCode::GeneratorsDontGenerate,
          "generators do not generate the group");
  return g;
}

GroupPtr cyclic_group(int n) {
  require(n >= 1, ErrorCode::NotAGroup, "cyclic order must be positive");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  std::vector<int> gens{n > 1 ? 1 : 0};
  return build_group(table, gens, "cyclic(" + std::to_string(n) + ")");
}

GroupPtr product_of_cyclics(const std::vector<int>& orders) {
  require(!orders.empty(), ErrorCode::NotAGroup, "empty factor list");
  int n = 1;
  for (int m : orders) {
    require(m >= 1, ErrorCode::NotAGroup, "factor order must be positive");
    n *= m;
  }
  // Mixed-radix encoding, first factor most significant.
  auto encode = [&](const std::vector<int>& digits) {
    int v = 0;
    for (std::size_t i = 0; i < orders.size(); ++i) v = v * orders[i] + digits[i];
    return v;
  };
  auto decode = [&](int v) {
    std::vector<int> digits(orders.size());
    for (int i = static_cast<int>(orders.size()) - 1; i >= 0; --i) {
      digits[i] = v % orders[i];
      v /= orders[i];
    }
    return digits;
  };
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      auto da = decode(a), db = decode(b);
      std::vector<int> dc(orders.size());
      for (std::size_t i = 0; i < orders.size(); ++i)
        dc[i] = (da[i] + db[i]) % orders[i];
      table[a][b] = encode(dc);
    }
  }
  std::vector<int> gens;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] == 1) continue;
    std::vector<int> digits(orders.size(), 0);
    digits[i] = 1;
    gens.push_back(encode(digits));
  }
  if (gens.empty()) gens.push_back(0);
  std::string label = "product(";
  for (std::size_t i = 0; i < orders.size(); ++i)
    label += (i ? "," : "") + std::to_string(orders[i]);
  label += ")";
  return build_group(table, gens, label);
}

bool is_valid_hom(const FiniteGroup& source, const FiniteGroup& target,
                  const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != source.order) return false;
  for (int v : map)
    if (v < 0 || v >= target.order) return false;
  if (map[FiniteGroup::identity] != FiniteGroup::identity) return false;
  for (int a = 0; a < source.order; ++a)
    for (int b = 0; b < source.order; ++b)
      if (map[source.times(a, b)] != target.times(map[a], map[b])) return false;
  return true;
}

GroupHom make_hom(GroupPtr source, GroupPtr target, std::vector<int> map) {
  require(is_valid_hom(*source, *target, map), ErrorCode::SchemaError,
          "map is not a homomorphism");
  return GroupHom{std::move(source), std::move(target), std::move(map)};
}

GroupHom identity_hom(GroupPtr g) {
  std::vector<int> map(g->order);
  std::iota(map.begin(), map.end(), 0);
  return GroupHom{g, g, std::move(map)};
}

GroupHom trivial_hom(GroupPtr source, GroupPtr target) {
  std::vector<int> map(source->order, 0);
  return GroupHom{std::move(source), std::move(target), std::move(map)};
}

bool GroupHom::is_surjective() const {
  std::vector<char> hit(target->order, 0);
  for (int v : map) hit[v] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool GroupHom::is_bijective() const {
  return source->order == target->order && is_surjective();
}

GroupHom compose(const GroupHom& outer, const GroupHom& inner) {
  require(inner.target.get() == outer.source.get(), ErrorCode::Internal,
          "compose: hom targets do not line up");
  std::vector<int> map(inner.map.size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = outer.map[inner.map[i]];
  return GroupHom{inner.source, outer.target, std::move(map)};
}

GroupHom conjugate_hom(const GroupHom& rho, int g) {
  const FiniteGroup& t = *rho.target;
  std::vector<int> map(rho.map.size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = t.conj(g, rho.map[i]);
  return GroupHom{rho.source, rho.target, std::move(map)};
}

namespace {

// Backtracking enumerator: assigns images to generators in order, closing the
// partial map after each assignment and rejecting on conflicts.
struct HomEnumerator {
  const FiniteGroup& q;
  const FiniteGroup& g;
  GroupPtr q_ptr, g_ptr;
  std::vector<GroupHom> out;
  std::vector<int> partial;  // -1 = undetermined
  std::vector<int> known;    // determined source elements, in discovery order

  HomEnumerator(GroupPtr qp, GroupPtr gp)
      : q(*qp), g(*gp), q_ptr(std::move(qp)), g_ptr(std::move(gp)) {
    partial.assign(q.order, -1);
    partial[FiniteGroup::identity] = FiniteGroup::identity;
    known.push_back(FiniteGroup::identity);
  }

  // Extends the closure with source element x mapped to y. Returns false on
  // conflict; appends every newly determined element to `known`.
  bool extend(int x, int y) {
    if (partial[x] != -1) return partial[x] == y;
    partial[x] = y;
    known.push_back(x);
    std::size_t frontier = known.size() - 1;
    while (frontier < known.size()) {
      int a = known[frontier++];
      for (std::size_t i = 0; i < known.size(); ++i) {
        int b = known[i];
        int ab = q.times(a, b), ba = q.times(b, a);
        int img_ab = g.times(partial[a], partial[b]);
        int img_ba = g.times(partial[b], partial[a]);
        if (partial[ab] == -1) {
          partial[ab] = img_ab;
          known.push_back(ab);
        } else if (partial[ab] != img_ab) {
          return false;
        }
        if (partial[ba] == -1) {
          partial[ba] = img_ba;
          known.push_back(ba);
        } else if (partial[ba] != img_ba) {
          return false;
        }
      }
    }
    return true;
  }

  void search(std::size_t gen_index) {
    if (gen_index == q.generators.size()) {
      if (static_cast<int>(known.size()) != q.order) return;  // cannot happen
      out.push_back(GroupHom{q_ptr, g_ptr, partial});
      return;
    }
    auto saved_partial = partial;
    auto saved_known = known;
    for (int image = 0; image < g.order; ++image) {
      if (extend(q.generators[gen_index], image)) search(gen_index + 1);
      partial = saved_partial;
      known = saved_known;
    }
  }
};

}  // namespace

std::vector<GroupHom> enumerate_homs(GroupPtr source, GroupPtr target) {
  HomEnumerator en(std::move(source), std::move(target));
  en.search(0);
  return std::move(en.out);
}

int HomSet::index_of(const std::vector<int>& map) const {
  for (int i = 0; i < size(); ++i)
    if (homs[i].map == map) return i;
  return -1;
}

HomSet enumerate_hom_set(GroupPtr source, GroupPtr target) {
  HomSet hs;
  hs.source = source;
  hs.target = target;
  hs.homs = enumerate_homs(source, target);
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < hs.size(); ++i) index[hs.homs[i].map] = i;
  hs.conj_action.assign(hs.size(), std::vector<int>(target->order, -1));
  for (int i = 0; i < hs.size(); ++i) {
    for (int g = 0; g < target->order; ++g) {
      auto moved = conjugate_hom(hs.homs[i], g);
      auto it = index.find(moved.map);
      require(it != index.end(), ErrorCode::Internal,
              "hom set not closed under conjugation");
      hs.conj_action[i][g] = it->second;
    }
  }
  return hs;
}

OrbitDecomposition orbits_stabilizers(
    int set_size, const FiniteGroup& g_group,
    const std::vector<std::vector<int>>& action) {
  OrbitDecomposition dec;
  dec.orbit_of.assign(set_size, -1);
  for (int start = 0; start < set_size; ++start) {
    if (dec.orbit_of[start] != -1) continue;
    Orbit orbit;
    orbit.representative = start;
    const int orbit_index = static_cast<int>(dec.orbits.size());
    std::vector<int> frontier{start};
    dec.orbit_of[start] = orbit_index;
    orbit.elements.push_back(start);
    while (!frontier.empty()) {
      int item = frontier.back();
      frontier.pop_back();
      for (int g = 0; g < g_group.order; ++g) {
        int moved = action[item][g];
        require(0 <= moved && moved < set_size, ErrorCode::Internal,
                "action leaves the set");
        if (dec.orbit_of[moved] == -1) {
          dec.orbit_of[moved] = orbit_index;
          orbit.elements.push_back(moved);
          frontier.push_back(moved);
        }
      }
    }
    std::sort(orbit.elements.begin(), orbit.elements.end());
    for (int g = 0; g < g_group.order; ++g)
      if (action[start][g] == start) orbit.stabilizer.push_back(g);
    dec.orbits.push_back(std::move(orbit));
  }
  return dec;
}

}  // namespace dwarith
