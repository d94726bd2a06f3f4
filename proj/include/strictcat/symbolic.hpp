#pragma once

#include <optional>
#include <string>
#include <vector>

#include "strictcat/algebra.hpp"
#include "strictcat/error.hpp"
#include "strictcat/fincat.hpp"
#include "strictcat/monoidal.hpp"

namespace strictcat {

/// An object (m, t) of the symbolic family, m in Z and t in Z/r.
struct SymObject {
  long m = 0;
  long t = 0;

  std::string name() const {
    return "(" + std::to_string(m) + "," + std::to_string(t) + ")";
  }
  bool operator==(const SymObject&) const = default;
};

/// An arrow of the symbolic family, labelled by an element of H.
struct SymArrow {
  SymObject source;
  SymObject target;
  Index label = 0;

  bool operator==(const SymArrow&) const = default;
};

inline long floor_mod(long a, long r) {
  const long v = a % r;
  return v < 0 ? v + r : v;
}

/// The abelian monoid object with objects Z x Z/r, Hom((m,t),(m',t')) = H
/// when m = m' and empty otherwise; composition and sums use H.
class SymMonGpd {
 public:
  SymMonGpd(long r, Group h) : r_(r), h_(std::move(h)) {
    if (r_ < 1) throw PreconditionError("width r must be positive");
    if (auto bad = group_law_violation(h_)) throw PreconditionError("fiber: " + *bad);
    if (!h_.is_abelian()) throw PreconditionError("fiber group must be abelian");
  }

  long width() const noexcept { return r_; }
  const Group& fiber() const noexcept { return h_; }

  SymObject zero() const { return {0, 0}; }
  SymObject add(SymObject x, SymObject y) const {
    return {x.m + y.m, floor_mod(x.t + y.t, r_)};
  }
  long grade(SymObject x) const { return x.m; }
  bool has_arrow(SymObject x, SymObject y) const { return x.m == y.m; }

  SymArrow identity(SymObject x) const { return {x, x, h_.unit}; }

  SymArrow arrow(SymObject x, SymObject y, Index label) const {
    if (!has_arrow(x, y)) {
      throw StructuralError("no arrow " + x.name() + " -> " + y.name());
    }
    return {x, y, label};
  }

  /// a followed by b.
  SymArrow compose(const SymArrow& a, const SymArrow& b) const {
    if (!(a.target == b.source)) {
      throw ComposabilityError("arrows do not compose at " + a.target.name());
    }
    return {a.source, b.target, h_.op(a.label, b.label)};
  }

  SymArrow add(const SymArrow& a, const SymArrow& b) const {
    return {add(a.source, b.source), add(a.target, b.target), h_.op(a.label, b.label)};
  }

  SymArrow inverse(const SymArrow& a) const {
    return {a.target, a.source, h_.inverse(a.label)};
  }

  /// Objects with |m| <= w, ordered by m then t.
  std::vector<SymObject> window(long w) const {
    std::vector<SymObject> out;
    for (long m = -w; m <= w; ++m)
      for (long t = 0; t < r_; ++t) out.push_back({m, t});
    return out;
  }

  Index window_index(SymObject x, long w) const {
    if (x.m < -w || x.m > w) throw PreconditionError(x.name() + " is outside the window");
    return static_cast<Index>((x.m + w) * r_ + x.t);
  }

  /// The full subcategory on the window, as a finite level-1 category.
  FinCat::Ptr tabulate(long w) const {
    const auto objs = window(w);
    std::vector<std::string> names;
    for (const auto& x : objs) names.push_back(x.name());
    const auto n = objs.size();
    std::vector<std::vector<std::string>> arrows(n * n);
    for (Index x = 0; x < n; ++x)
      for (Index y = 0; y < n; ++y)
        if (has_arrow(objs[x], objs[y])) arrows[x * n + y] = h_.elements;
    return detail::one_category(
        std::move(names), arrows, std::vector<Index>(n, h_.unit),
        [&](Index, Index, Index, Index a, Index b) { return h_.op(a, b); });
  }

  /// The same grammar with Z replaced by Z/n: a finite monoid object.
  MonGpd quotient(long n) const {
    if (n < 1) throw PreconditionError("quotient modulus must be positive");
    std::vector<SymObject> objs;
    for (long m = 0; m < n; ++m)
      for (long t = 0; t < r_; ++t) objs.push_back({m, t});
    const auto count = objs.size();
    auto index = [&](long m, long t) {
      return static_cast<Index>(floor_mod(m, n) * r_ + floor_mod(t, r_));
    };
    std::vector<std::string> names;
    for (const auto& x : objs) names.push_back(x.name());
    std::vector<std::vector<std::string>> arrows(count * count);
    for (Index x = 0; x < count; ++x)
      for (Index y = 0; y < count; ++y)
        if (objs[x].m == objs[y].m) arrows[x * count + y] = h_.elements;
    auto u = detail::one_category(
        std::move(names), arrows, std::vector<Index>(count, h_.unit),
        [&](Index, Index, Index, Index a, Index b) { return h_.op(a, b); });
    std::vector<Index> os(count * count);
    for (Index x = 0; x < count; ++x)
      for (Index y = 0; y < count; ++y)
        os[x * count + y] = index(objs[x].m + objs[y].m, objs[x].t + objs[y].t);
    const auto na = u->cell_count(1);
    std::vector<Index> as(na * na);
    for (Index a = 0; a < na; ++a) {
      const auto la = u->locate(1, a);
      for (Index b = 0; b < na; ++b) {
        const auto lb = u->locate(1, b);
        as[a * na + b] = u->cell_at(1, os[la.x * count + lb.x], os[la.y * count + lb.y],
                                    h_.op(la.inner, lb.inner));
      }
    }
    return make_mongpd(u, std::move(os), std::move(as), index(0, 0));
  }

 private:
  long r_;
  Group h_;
};

struct Generators {
  SymObject a;
  SymObject b;
};

/// Lifts of 1 and -1 in pi_0 = Z, taking the least t.
inline Generators choose_generators(const SymMonGpd&) {
  return {{1, 0}, {-1, 0}};
}

/// A point (m, n) of N x N.
struct NPair {
  long m = 0;
  long n = 0;

  std::string name() const {
    return "(" + std::to_string(m) + "," + std::to_string(n) + ")";
  }
  NPair operator+(const NPair& o) const { return {m + o.m, n + o.n}; }
  bool operator==(const NPair&) const = default;
};

/// p(m, n) = m.a + n.b, evaluated by repeated addition in G.
class MonoidMap {
 public:
  MonoidMap(SymMonGpd g, SymObject a, SymObject b)
      : g_(std::move(g)), a_(a), b_(b) {}

  SymObject operator()(NPair x) const {
    if (x.m < 0 || x.n < 0) throw PreconditionError(x.name() + " is not in N x N");
    SymObject acc = g_.zero();
    for (long k = 0; k < x.m; ++k) acc = g_.add(acc, a_);
    for (long k = 0; k < x.n; ++k) acc = g_.add(acc, b_);
    return acc;
  }

  const SymMonGpd& target() const noexcept { return g_; }
  SymObject a() const noexcept { return a_; }
  SymObject b() const noexcept { return b_; }

 private:
  SymMonGpd g_;
  SymObject a_;
  SymObject b_;
};

inline MonoidMap build_p(const SymMonGpd& g, const Generators& gens) {
  return MonoidMap(g, gens.a, gens.b);
}

/// An arrow of G' over N x N: Hom_{G'}(s, t) = Hom_G(p s, p t).
struct GArrow {
  NPair source;
  NPair target;
  Index label = 0;

  bool operator==(const GArrow&) const = default;
};

/// G' = E(N x N) x_{E(Ob G)} G.
class GradedGpd {
 public:
  GradedGpd(SymMonGpd g, MonoidMap p) : g_(std::move(g)), p_(std::move(p)) {}

  const SymMonGpd& base() const noexcept { return g_; }
  const MonoidMap& p() const noexcept { return p_; }
  const Group& fiber() const noexcept { return g_.fiber(); }

  bool has_arrow(NPair s, NPair t) const { return g_.has_arrow(p_(s), p_(t)); }

  GArrow identity(NPair s) const { return {s, s, fiber().unit}; }

  GArrow arrow(NPair s, NPair t, Index label) const {
    if (!has_arrow(s, t)) throw StructuralError("no arrow " + s.name() + " -> " + t.name());
    return {s, t, label};
  }

  /// a followed by b, computed in G through p.
  GArrow compose(const GArrow& a, const GArrow& b) const {
    if (!(a.target == b.source)) throw ComposabilityError("arrows do not compose");
    const auto c = g_.compose(g_.arrow(p_(a.source), p_(a.target), a.label),
                              g_.arrow(p_(b.source), p_(b.target), b.label));
    return {a.source, b.target, c.label};
  }

  GArrow add(const GArrow& a, const GArrow& b) const {
    const auto c = g_.add(g_.arrow(p_(a.source), p_(a.target), a.label),
                          g_.arrow(p_(b.source), p_(b.target), b.label));
    return {a.source + b.source, a.target + b.target, c.label};
  }

  GArrow inverse(const GArrow& a) const {
    return {a.target, a.source, g_.inverse(g_.arrow(p_(a.source), p_(a.target), a.label)).label};
  }

  /// Objects with 0 <= m, n <= w, ordered by m then n.
  std::vector<NPair> window(long w) const {
    std::vector<NPair> out;
    for (long m = 0; m <= w; ++m)
      for (long n = 0; n <= w; ++n) out.push_back({m, n});
    return out;
  }

  Index window_index(NPair s, long w) const {
    if (s.m < 0 || s.n < 0 || s.m > w || s.n > w)
      throw PreconditionError(s.name() + " is outside the window");
    return static_cast<Index>(s.m * (w + 1) + s.n);
  }

  /// Indices into base().tabulate(w) of p on the window.
  std::vector<Index> window_map(long w) const {
    std::vector<Index> out;
    for (const auto& s : window(w)) out.push_back(g_.window_index(p_(s), w));
    return out;
  }

  /// The window of G' by generic base change of the tabulated window of G.
  FinCat::Ptr tabulate(long w) const {
    std::vector<std::string> names;
    for (const auto& s : window(w)) names.push_back(s.name());
    return base_change(g_.tabulate(w), std::move(names), window_map(w));
  }

 private:
  SymMonGpd g_;
  MonoidMap p_;
};

inline GradedGpd build_gprime(const SymMonGpd& g, const MonoidMap& p) {
  return GradedGpd(g, p);
}

/// 1_{m,n} + k.phi + u, with source (m, n) and target (m+k, n+k). For k < 0,
/// k.phi is the inverse of (-k).phi.
struct ArrowNF {
  NPair source;
  long k = 0;
  Index u = 0;

  NPair target() const { return {source.m + k, source.n + k}; }
  bool valid() const {
    return source.m >= 0 && source.n >= 0 && source.m + k >= 0 && source.n + k >= 0;
  }
  std::string name() const {
    return "(" + source.name() + "," + std::to_string(k) + "," + std::to_string(u) + ")";
  }
  bool operator==(const ArrowNF&) const = default;
};

inline ArrowNF choose_phi(const GradedGpd& gp) {
  return {{0, 0}, 1, gp.fiber().unit};
}

/// k.phi: (0,0) -> (k,k) for k >= 0, (-k,-k) -> (0,0) for k < 0.
inline ArrowNF nf_multiple(const GradedGpd& gp, long k) {
  return k >= 0 ? ArrowNF{{0, 0}, k, gp.fiber().unit}
                : ArrowNF{{-k, -k}, k, gp.fiber().unit};
}

inline ArrowNF nf_identity(const GradedGpd& gp, NPair s) {
  return {s, 0, gp.fiber().unit};
}

/// beta o alpha: alpha first.
inline ArrowNF nf_compose(const GradedGpd& gp, const ArrowNF& beta,
                          const ArrowNF& alpha) {
  if (!(alpha.target() == beta.source)) {
    throw ComposabilityError("normal forms " + beta.name() + " and " +
                             alpha.name() + " do not compose");
  }
  return {alpha.source, alpha.k + beta.k, gp.fiber().op(beta.u, alpha.u)};
}

inline ArrowNF nf_add(const GradedGpd& gp, const ArrowNF& a, const ArrowNF& b) {
  return {a.source + b.source, a.k + b.k, gp.fiber().op(a.u, b.u)};
}

inline Index h_map(const ArrowNF& a) { return a.u; }

/// D = deloop2([H]).
inline FinCat::Ptr build_D(const Group& h) { return deloop2(bracket(h)); }

/// Evaluates a normal form by the concrete operations of G': the sum of
/// 1_{m,n}, k.phi (a k-fold sum of phi, or its inverse) and u.
inline GArrow to_concrete(const GradedGpd& gp, const ArrowNF& a) {
  if (!a.valid()) throw PreconditionError("normal form " + a.name() + " leaves N x N");
  const auto unit = gp.fiber().unit;
  const GArrow phi = gp.arrow({0, 0}, {1, 1}, unit);
  GArrow multiple = gp.identity({0, 0});
  for (long j = 0; j < (a.k >= 0 ? a.k : -a.k); ++j) multiple = gp.add(multiple, phi);
  if (a.k < 0) multiple = gp.inverse(multiple);
  const NPair base = a.k >= 0 ? a.source : a.target();
  GArrow out = gp.add(gp.identity(base), multiple);
  return gp.add(out, gp.arrow({0, 0}, {0, 0}, a.u));
}

/// The unique normal form of a concrete arrow.
inline ArrowNF from_concrete(const GradedGpd& gp, const GArrow& x) {
  const long k = x.target.m - x.source.m;
  if (x.target.n - x.source.n != k) {
    throw StructuralError("arrow " + x.source.name() + " -> " + x.target.name() +
                          " changes m and n differently");
  }
  const auto base = to_concrete(gp, {x.source, k, gp.fiber().unit});
  const auto& h = gp.fiber();
  return {x.source, k, h.op(h.inverse(base.label), x.label)};
}

}  // namespace strictcat
