#include "dwarith/torsor.hpp"

#include "dwarith/local.hpp"

namespace dwarith {

namespace {

void check_same_fiber(const FiberElement& s, const FiberElement& t) {
  require(s.local == t.local, ErrorCode::MismatchedFiber,
          "fiber elements belong to different local data");
  require(s.rep.map == t.rep.map, ErrorCode::MismatchedFiber,
          "fiber elements sit over different representations");
}

}  // namespace

int fiber_diff(const FiberElement& s, const FiberElement& t) {
  check_same_fiber(s, t);
  return s.local->invariant(s.cochain - t.cochain);
}

FiberElement fiber_act(const FiberElement& t, int m) {
  const LocalDatum& d = *t.local;
  require(d.invariant(d.unit_cocycle) == 1 % d.unit_cocycle.modulus,
          ErrorCode::ModelViolation,
          "local datum '" + d.name + "' has no unit cocycle");
  FiberElement out = t;
  out.cochain = t.cochain + scale(d.unit_cocycle, m);
  return out;
}

bool fiber_equal(const FiberElement& s, const FiberElement& t) {
  return fiber_diff(s, t) == 0;
}

FiberMap conj_fiber_map(const LocalDatum& datum, const Cochain& gauge_cocycle,
                        int g, const GroupHom& rho) {
  FiberMap f;
  f.local = &datum;
  f.source_rep = rho;
  f.target_rep = conjugate_hom(rho, g);
  f.shift = pullback(h_class(g, gauge_cocycle), rho);
  return f;
}

FiberElement apply_fiber_map(const FiberMap& f, const FiberElement& t) {
  require(f.local == t.local, ErrorCode::MismatchedFiber,
          "fiber map applied across local data");
  require(f.source_rep.map == t.rep.map, ErrorCode::MismatchedFiber,
          "fiber map applied to the wrong fiber");
  return FiberElement{f.local, f.target_rep, t.cochain + f.shift};
}

int transition_scalar(const FiberMap& f, const FiberElement& t,
                      const FiberElement& t_prime) {
  return fiber_diff(apply_fiber_map(f, t), t_prime);
}

}  // namespace dwarith
