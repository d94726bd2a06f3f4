#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "strictcat/algebra.hpp"
#include "strictcat/constructions.hpp"
#include "strictcat/error.hpp"
#include "strictcat/fincat.hpp"
#include "strictcat/functor.hpp"
#include "strictcat/groupoid.hpp"
#include "strictcat/monoidal.hpp"
#include "strictcat/report.hpp"
#include "strictcat/symbolic.hpp"
#include "strictcat/truncation.hpp"
#include "strictcat/validate.hpp"

namespace strictcat {

struct Restriction {
  FinCat::Ptr cat;
  StrictFunctor inclusion;
};

/// The sub-category with the single object c and the single 1-cell 1_c,
/// keeping every higher cell above 1_c, with its inclusion.
inline Restriction restrict_to_unit(const FinCat::Ptr& c, Index x) {
  if (x >= c->object_count()) throw StructuralError("unknown object");
  const int n = c->level();
  if (n < 1) throw PreconditionError("restriction to the unit needs level >= 1");
  const auto& hxx = c->hom_ptr(x, x);
  const auto sub = full_subcategory(hxx, {c->identity(x)});
  const auto& table = c->composition(x, x, x);
  CompositionTable t;
  for (int i = 0; i < n; ++i) {
    const auto& into = sub.inclusion.maps[i];
    const Index unset = static_cast<Index>(-1);
    std::vector<Index> back(hxx->cell_count(i), unset);
    for (Index j = 0; j < into.size(); ++j) back[into[j]] = j;
    const auto k = into.size();
    std::vector<Index> lvl(k * k);
    for (Index a = 0; a < k; ++a) {
      for (Index b = 0; b < k; ++b) {
        const Index r = back[table.levels[i][into[a] * hxx->cell_count(i) + into[b]]];
        if (r == unset) throw StructuralError("composite leaves the cells above the unit");
        lvl[a * k + b] = r;
      }
    }
    t.levels.push_back(std::move(lvl));
  }
  Restriction out;
  out.cat = FinCat::make(n, {c->object_name(x)}, {sub.cat}, {0}, {std::move(t)});
  out.inclusion = StrictFunctor{out.cat, c, {{x}}};
  for (int i = 1; i <= n; ++i) {
    std::vector<Index> m(out.cat->cell_count(i));
    for (Index cell = 0; cell < m.size(); ++cell) {
      m[cell] = c->cell_at(i, x, x, sub.inclusion.maps[i - 1][cell]);
    }
    out.inclusion.maps.push_back(std::move(m));
  }
  return out;
}

inline Restriction restrict_to_unit(const FinCat::Ptr& c, std::string_view x) {
  return restrict_to_unit(c, c->object_index(x));
}

struct SplitParams {
  std::vector<std::size_t> h_factors{2};
  long r = 2;
  std::size_t fatten = 1;
  long window = 4;
  long modulus = 3;           // Z/modulus stands in for Z in the finite proxy
  std::size_t scan_budget = 50'000'000;
};

/// C <-g- B <-f- A -h-> D. The symbolic objects are described by the
/// family parameters; each also has a finite proxy in which Z is replaced by
/// Z/modulus, on which the generic machinery runs.
struct SplitDiagram {
  SplitParams params;
  Group h;
  std::string c, b, a, d;  // basepoints

  FinCat::Ptr proxy_c, proxy_b, proxy_a, proxy_d;
  StrictFunctor proxy_g, proxy_f, proxy_h;

  Certificate certificate;
};

namespace detail {

class ClaimRecorder {
 public:
  void run(const std::string& name, Mode mode, const std::function<std::optional<std::string>()>& check,
           std::string detail = {}) {
    Claim claim{name, true, mode, std::nullopt, std::move(detail)};
    try {
      if (auto w = check()) {
        claim.pass = false;
        claim.witness = std::move(w);
      }
    } catch (const Error& e) {
      claim.pass = false;
      claim.witness = std::string("error: ") + e.what();
    }
    cert_.claims.push_back(std::move(claim));
  }

  const Certificate& certificate() const { return cert_; }

 private:
  Certificate cert_;
};

inline std::optional<std::string> verdict_witness(const EquivalenceVerdict& v) {
  if (v.ok) return std::nullopt;
  return v.witness ? v.witness->describe() : std::string("not an equivalence");
}

inline std::optional<std::string> report_witness(const ValidationReport& r) {
  if (r.ok()) return std::nullopt;
  const auto& v = r.violations.front();
  std::string out = v.axiom + " at level " + std::to_string(v.level) + ":";
  for (const auto& c : v.cells) out += " " + c;
  return out;
}

/// Window arrows of G' in normal form, with labels restricted to `labels`.
inline std::vector<ArrowNF> window_arrows(const GradedGpd& gp, long w,
                                          const std::vector<Index>& labels) {
  std::vector<ArrowNF> out;
  for (const auto& s : gp.window(w)) {
    for (const auto& t : gp.window(w)) {
      if (t.m - s.m != t.n - s.n) continue;
      for (Index u : labels) out.push_back({s, t.m - s.m, u});
    }
  }
  return out;
}

}  // namespace detail

/// Runs the construction and verifies every conclusion. Throws
/// CertificateFailure on the first failing claim, after recording all.
inline SplitDiagram split(const SplitParams& params) {
  if (params.window < 1 || params.window > 8) throw PreconditionError("window must be in 1..8");
  if (params.r < 1) throw PreconditionError("r must be positive");
  if (params.fatten < 1) throw PreconditionError("fatten needs at least one point");
  if (params.modulus < 2) throw PreconditionError("proxy modulus must be at least 2");
  for (auto f : params.h_factors)
    if (f < 1) throw PreconditionError("cyclic factors must be positive");
  const Group h = abelian_group(params.h_factors);
  if (h.size() > 64) throw PreconditionError("|H| must be at most 64");

  const long w = params.window;
  const long nq = params.modulus;
  detail::ClaimRecorder rec;
  SplitDiagram out;
  out.params = params;
  out.h = h;

  // ---- symbolic data --------------------------------------------------
  const SymMonGpd g(params.r, h);
  const Generators gens = choose_generators(g);
  const MonoidMap p = build_p(g, gens);
  const GradedGpd gp = build_gprime(g, p);
  const ArrowNF phi = choose_phi(gp);

  std::vector<std::string> s_names;
  for (std::size_t k = 1; k <= params.fatten; ++k) s_names.push_back("s" + std::to_string(k));

  rec.run("input.fiber_abelian", Mode::exhaustive, [&]() -> std::optional<std::string> {
    if (auto bad = group_law_violation(h)) return *bad;
    if (!h.is_abelian()) return std::string("H is not commutative");
    return std::nullopt;
  });

  rec.run("input.family", Mode::structural, [&]() -> std::optional<std::string> {
    // pi_0 of the grammar is Z via the grade, and every hom is a copy of H.
    if (g.grade(g.add(SymObject{3, 1}, SymObject{-5, 0})) != -2) return std::string("grade is not additive");
    if (g.has_arrow({1, 0}, {2, 0})) return std::string("arrow between different grades");
    if (!g.has_arrow({1, 0}, {1, params.r - 1})) return std::string("missing arrow within a grade");
    return std::nullopt;
  }, "pi_0(C)=*, pi_1=1, pi_2=Z via (m,t)->m, pi_3=H");

  // ---- C and its finite proxy ----------------------------------------
  const auto e = chaotic(s_names, 3);
  rec.run("C.fatten.contractible", Mode::exhaustive, [&]() -> std::optional<std::string> {
    if (auto bad = detail::report_witness(validate_cat(*e))) return bad;
    for (auto v : {GroupoidVariant::v2, GroupoidVariant::v3}) {
      const auto r = is_groupoid(e, v);
      if (!r.ok) return "E(S) fails " + to_string(v) + ": " + r.witness->describe();
    }
    if (pi0(e).size() != 1) return std::string("E(S) is not connected");
    for (Index x = 0; x < e->object_count(); ++x)
      for (int i = 1; i <= 3; ++i)
        if (homotopy_group(e, i, x).size() != 1)
          return "pi_" + std::to_string(i) + "(E(S)) is not trivial";
    return std::nullopt;
  });

  const MonGpd gq = g.quotient(nq);
  const auto deloop_gq = deloop2(gq);
  const auto fat = fatten(deloop_gq, s_names);
  out.proxy_c = fat.cat;
  const Index c_index = 0;
  out.c = fat.cat->object_name(c_index);

  rec.run("C.proxy.groupoid", Mode::window, [&]() -> std::optional<std::string> {
    if (auto bad = detail::report_witness(validate_cat(*out.proxy_c))) return bad;
    const auto r = is_groupoid(out.proxy_c, GroupoidVariant::v3);
    if (!r.ok) return r.witness->describe();
    if (pi0(out.proxy_c).size() != 1) return std::string("pi_0 is not a point");
    if (homotopy_group(out.proxy_c, 1, c_index).size() != 1) return std::string("pi_1 is not trivial");
    const auto pi3 = homotopy_group(out.proxy_c, 3, c_index);
    if (!isomorphic(pi3, h)) return std::string("pi_3 is not H");
    return std::nullopt;
  }, "Z replaced by Z/" + std::to_string(nq));

  // ---- B = restrict_to_unit(C, c) -------------------------------------
  const auto rb = restrict_to_unit(out.proxy_c, c_index);
  out.proxy_b = rb.cat;
  out.proxy_g = rb.inclusion;
  out.b = rb.cat->object_name(0);
  const MonGpd gb = loop2(out.proxy_b);

  rec.run("B.shape", Mode::window, [&]() -> std::optional<std::string> {
    const auto& b = *out.proxy_b;
    if (b.object_count() != 1 || b.cell_count(1) != 1)
      return std::string("B must have one object and one 1-cell");
    if (!same_shape(*gb.underlying, *gq.underlying) || gb.object_sum != gq.object_sum ||
        gb.arrow_sum != gq.arrow_sum || gb.unit != gq.unit)
      return std::string("loop2(B) differs from G");
    const auto back = deloop2(gb, b.object_name(0), b.hom(0, 0).object_name(0));
    if (!(*back == b)) return std::string("deloop2(loop2(B)) differs from B");
    return std::nullopt;
  }, "B has one object b=c and one 1-cell; loop2(B) = G");

  rec.run("g.functor", Mode::window, [&]() {
    return detail::report_witness(validate_functor(out.proxy_g));
  });

  rec.run("g.equivalence.a", Mode::window, [&]() {
    return detail::verdict_witness(is_equivalence(out.proxy_g, EquivalenceVariant::a));
  }, "symbolically g induces the identity of Z on pi_2 and of H on pi_3");

  // ---- G, p, G' -------------------------------------------------------
  rec.run("G.monoid_laws", Mode::window, [&]() -> std::optional<std::string> {
    if (auto bad = detail::report_witness(validate_monoidal(gq))) return "proxy: " + *bad;
    const auto objs = g.window(w);
    for (const auto& x : objs) {
      if (!(g.add(x, g.zero()) == x)) return "unit fails at " + x.name();
      for (const auto& y : objs) {
        if (!(g.add(x, y) == g.add(y, x))) return "sum not commutative at " + x.name() + "," + y.name();
        for (const auto& z : objs)
          if (!(g.add(g.add(x, y), z) == g.add(x, g.add(y, z))))
            return "sum not associative at " + x.name();
      }
    }
    return std::nullopt;
  });

  rec.run("generators", Mode::structural, [&]() -> std::optional<std::string> {
    if (!(gens.a == SymObject{1, 0}) || !(gens.b == SymObject{-1, 0}))
      return std::string("generators differ from the least-index lifts");
    if (g.grade(gens.a) != 1 || g.grade(gens.b) != -1)
      return std::string("generator classes are not 1 and -1");
    return std::nullopt;
  }, "a=(1,0), b=(-1,0)");

  rec.run("p.monoid_map", Mode::window, [&]() -> std::optional<std::string> {
    if (!(p({0, 0}) == g.zero())) return std::string("p(0,0) is not the unit");
    const auto win = gp.window(w);
    for (const auto& x : win) {
      const SymObject closed{x.m - x.n, floor_mod(x.m * gens.a.t + x.n * gens.b.t, g.width())};
      if (!(p(x) == closed)) return "p" + x.name() + " differs from m.a + n.b";
      for (const auto& y : win)
        if (!(p(x + y) == g.add(p(x), p(y)))) return "p is not additive at " + x.name() + "," + y.name();
    }
    return std::nullopt;
  });

  rec.run("p.pi0_surjection", Mode::window, [&]() -> std::optional<std::string> {
    for (long grade = -w; grade <= w; ++grade) {
      bool hit = false;
      for (const auto& x : gp.window(w)) hit = hit || g.grade(p(x)) == grade;
      if (!hit) return "grade " + std::to_string(grade) + " is not hit";
    }
    return std::nullopt;
  }, "(m,n) -> m-n");

  const auto gp_tab = gp.tabulate(w);
  const auto g_tab = g.tabulate(w);
  rec.run("Gprime.fully_faithful", Mode::window, [&]() -> std::optional<std::string> {
    const auto proj = base_change_projection(gp_tab, g_tab, gp.window_map(w));
    if (auto bad = detail::report_witness(validate_functor(proj))) return bad;
    if (!is_fully_faithful(proj)) return std::string("projection G' -> G is not fully faithful");
    return std::nullopt;
  });

  rec.run("Gprime.pi0", Mode::window, [&]() -> std::optional<std::string> {
    const auto t = truncation(gp_tab, 0);
    const auto win = gp.window(w);
    for (Index x = 0; x < win.size(); ++x)
      for (Index y = 0; y < win.size(); ++y) {
        const bool same = t.class_of[x] == t.class_of[y];
        if (same != (win[x].m - win[x].n == win[y].m - win[y].n))
          return "classes of " + win[x].name() + " and " + win[y].name() + " disagree with m-n";
      }
    if (t.cat->object_count() != static_cast<std::size_t>(2 * w + 1))
      return std::string("pi_0 of the window is not [-W, W]");
    return std::nullopt;
  }, "pi_0(G') = Z by (m,n) -> m-n");

  // ---- A and f in the proxy -------------------------------------------
  const auto nn = direct_product(cyclic_group(static_cast<std::size_t>(nq)),
                                 cyclic_group(static_cast<std::size_t>(nq)));
  std::vector<Index> pq(nn.size());
  {
    const auto find = [&](long m) { return static_cast<Index>(floor_mod(m, nq) * g.width()); };
    const Index a_q = find(gens.a.m);
    const Index b_q = find(gens.b.m);
    for (Index x = 0; x < nn.size(); ++x) {
      Index acc = gq.unit;
      for (Index k = 0; k < x / static_cast<Index>(nq); ++k) acc = gq.add_objects(acc, a_q);
      for (Index k = 0; k < x % static_cast<Index>(nq); ++k) acc = gq.add_objects(acc, b_q);
      pq[x] = acc;
    }
  }
  const MonGpd gpq = base_change(gq, nn, pq);
  out.proxy_a = deloop2(gpq);
  out.a = out.proxy_a->object_name(0);
  {
    const auto proj = base_change_projection(gpq.underlying, gq.underlying, pq);
    out.proxy_f = StrictFunctor{out.proxy_a, out.proxy_b, {{0}, {0}, proj.maps[0], proj.maps[1]}};
  }

  rec.run("A.groupoid", Mode::window, [&]() -> std::optional<std::string> {
    if (auto bad = detail::report_witness(validate_cat(*out.proxy_a))) return bad;
    for (auto v : {GroupoidVariant::v2, GroupoidVariant::v3}) {
      const auto r = is_groupoid(out.proxy_a, v);
      if (!r.ok) return to_string(v) + ": " + r.witness->describe();
    }
    return std::nullopt;
  }, "A = deloop2(G')");

  rec.run("f.functor", Mode::window, [&]() {
    return detail::report_witness(validate_functor(out.proxy_f));
  });

  rec.run("f.equivalence.a", Mode::window, [&]() {
    return detail::verdict_witness(is_equivalence(out.proxy_f, EquivalenceVariant::a));
  }, "pi_0 bijective and p_2 fully faithful");

  rec.run("f.pi3_bijective", Mode::window, [&]() -> std::optional<std::string> {
    // Hom_{G'}((0,0),(0,0)) -> Hom_G(p(0,0), p(0,0)) on the window tabulations.
    const auto proj = base_change_projection(gp_tab, g_tab, gp.window_map(w));
    const Index o = gp.window_index({0, 0}, w);
    const auto hom = hom_functor(proj, o, o);
    if (!is_bijection(hom.maps[0], hom.target->object_count()))
      return std::string("Hom((0,0),(0,0)) -> Hom_G(0,0) is not bijective");
    return std::nullopt;
  });

  // ---- normal forms ---------------------------------------------------
  std::vector<Index> all_labels(h.size());
  for (Index u = 0; u < h.size(); ++u) all_labels[u] = u;

  rec.run("phi", Mode::structural, [&]() -> std::optional<std::string> {
    if (!(phi == ArrowNF{{0, 0}, 1, h.unit})) return std::string("phi is not ((0,0),1,0)");
    if (!(nf_multiple(gp, 0) == nf_identity(gp, {0, 0}))) return std::string("0.phi is not 1_{0,0}");
    const auto three = nf_multiple(gp, 3);
    if (!(three.target() == NPair{3, 3}) || three.u != h.unit) return std::string("3.phi is wrong");
    if (!(nf_compose(gp, nf_multiple(gp, -1), phi) == nf_identity(gp, {0, 0})))
      return std::string("(-1).phi o phi is not the identity");
    if (!(to_concrete(gp, phi) == gp.arrow({0, 0}, {1, 1}, h.unit)))
      return std::string("phi does not evaluate to (0,0) -> (1,1)");
    return std::nullopt;
  });

  rec.run("nf.unique", Mode::window, [&]() -> std::optional<std::string> {
    const auto win = gp.window(w);
    for (const auto& s : win) {
      for (const auto& t : win) {
        const Index si = gp.window_index(s, w);
        const Index ti = gp.window_index(t, w);
        const auto& hom = gp_tab->hom(si, ti);
        const bool nonempty = t.m - s.m == t.n - s.n;
        if (nonempty != (hom.object_count() > 0))
          return "hom " + s.name() + " -> " + t.name() + " has the wrong support";
        if (!nonempty) continue;
        std::vector<Index> images;
        for (Index u : all_labels) {
          const ArrowNF nf{s, t.m - s.m, u};
          const auto x = to_concrete(gp, nf);
          if (!(x.source == s) || !(x.target == t)) return "normal form " + nf.name() + " has wrong ends";
          if (!(from_concrete(gp, x) == nf)) return "normal form " + nf.name() + " does not round trip";
          images.push_back(x.label);
        }
        if (!is_bijection(images, hom.object_count()))
          return "normal forms do not biject onto Hom" + s.name() + t.name();
      }
    }
    return std::nullopt;
  });

  // Labels to scan: all of H when the budget allows, else the unit only,
  // with the H-part checked separately by the group laws.
  auto scan_labels = [&](std::size_t arity, std::size_t base_count) {
    std::size_t total = base_count;
    for (std::size_t k = 0; k < arity; ++k) total *= h.size();
    return total <= params.scan_budget ? all_labels : std::vector<Index>{h.unit};
  };

  const auto skeleton = detail::window_arrows(gp, w, {h.unit});
  const auto win = gp.window(w);
  rec.run("nf.compose", Mode::window, [&]() -> std::optional<std::string> {
    const auto arrows = detail::window_arrows(gp, w, scan_labels(3, skeleton.size() * 64));
    std::vector<std::vector<Index>> from(win.size());
    for (Index k = 0; k < arrows.size(); ++k)
      from[gp.window_index(arrows[k].source, w)].push_back(k);
    for (const auto& al : arrows) {
      const Index ti = gp.window_index(al.target(), w);
      for (Index bk : from[ti]) {
        const auto& be = arrows[bk];
        const auto nf = nf_compose(gp, be, al);
        // Concrete oracle.
        const auto cx = gp.compose(to_concrete(gp, al), to_concrete(gp, be));
        if (!(from_concrete(gp, cx) == nf)) return "concrete oracle differs at " + be.name() + " o " + al.name();
        // Tabulated-window oracle.
        const auto ca = to_concrete(gp, al);
        const auto cb = to_concrete(gp, be);
        const Index cell_a = gp_tab->cell_at(1, gp.window_index(ca.source, w), gp.window_index(ca.target, w), ca.label);
        const Index cell_b = gp_tab->cell_at(1, gp.window_index(cb.source, w), gp.window_index(cb.target, w), cb.label);
        const auto loc = gp_tab->locate(1, gp_tab->compose(1, 0, cell_a, cell_b));
        const GArrow tab{win[loc.x], win[loc.y], loc.inner};
        if (!(from_concrete(gp, tab) == nf)) return "tabulated oracle differs at " + be.name() + " o " + al.name();
        for (Index ck : from[gp.window_index(be.target(), w)]) {
          const auto& ga = arrows[ck];
          if (!(nf_compose(gp, ga, nf_compose(gp, be, al)) == nf_compose(gp, nf_compose(gp, ga, be), al)))
            return "composition is not associative at " + al.name();
        }
      }
    }
    return std::nullopt;
  });

  rec.run("nf.sum", Mode::window, [&]() -> std::optional<std::string> {
    const auto arrows = detail::window_arrows(gp, w, scan_labels(2, skeleton.size() * skeleton.size()));
    for (const auto& x : arrows) {
      if (!(nf_add(gp, x, nf_identity(gp, {0, 0})) == x)) return "zero arrow is not neutral at " + x.name();
      for (const auto& y : arrows) {
        const auto s = nf_add(gp, x, y);
        if (!(s == nf_add(gp, y, x))) return "sum not commutative at " + x.name() + "," + y.name();
        if (!(from_concrete(gp, gp.add(to_concrete(gp, x), to_concrete(gp, y))) == s))
          return "concrete oracle differs at " + x.name() + " + " + y.name();
      }
    }
    const auto few = detail::window_arrows(gp, std::min<long>(w, 2), all_labels);
    for (const auto& x : few)
      for (const auto& y : few)
        for (const auto& z : few)
          if (!(nf_add(gp, nf_add(gp, x, y), z) == nf_add(gp, x, nf_add(gp, y, z))))
            return "sum not associative at " + x.name();
    return std::nullopt;
  });

  rec.run("nf.interchange", Mode::window, [&]() -> std::optional<std::string> {
    // (a o b) + (a' o b') = (a + a') o (b + b') over composable pairs.
    std::vector<std::pair<ArrowNF, ArrowNF>> pairs;  // (b, a): b first
    const auto sk_pairs = [&] {
      std::size_t count = 0;
      for (const auto& b : skeleton)
        for (const auto& a : skeleton)
          if (a.source == b.target()) ++count;
      return count;
    }();
    const auto labels = scan_labels(4, sk_pairs * sk_pairs);
    const auto arrows = detail::window_arrows(gp, w, labels);
    for (const auto& b : arrows)
      for (const auto& a : arrows)
        if (a.source == b.target()) pairs.emplace_back(b, a);
    for (const auto& [b1, a1] : pairs) {
      const auto c1 = nf_compose(gp, a1, b1);
      for (const auto& [b2, a2] : pairs) {
        const auto lhs = nf_add(gp, c1, nf_compose(gp, a2, b2));
        const auto rhs = nf_compose(gp, nf_add(gp, a1, a2), nf_add(gp, b1, b2));
        if (!(lhs == rhs)) return "interchange fails at " + a1.name() + "," + b1.name() + "," + a2.name() + "," + b2.name();
      }
    }
    if (labels.size() < h.size()) {
      for (Index a = 0; a < h.size(); ++a)
        for (Index b = 0; b < h.size(); ++b)
          for (Index c = 0; c < h.size(); ++c)
            for (Index d = 0; d < h.size(); ++d)
              if (h.op(h.op(a, b), h.op(c, d)) != h.op(h.op(a, c), h.op(b, d)))
                return std::string("H fails the interchange identity");
    }
    return std::nullopt;
  });

  // ---- h and D --------------------------------------------------------
  out.proxy_d = build_D(h);
  out.d = out.proxy_d->object_name(0);

  rec.run("h.functor", Mode::window, [&]() -> std::optional<std::string> {
    const auto arrows = detail::window_arrows(gp, w, all_labels);
    std::vector<std::vector<Index>> from(win.size());
    for (Index k = 0; k < arrows.size(); ++k)
      from[gp.window_index(arrows[k].source, w)].push_back(k);
    for (const auto& al : arrows) {
      if (h_map(nf_identity(gp, al.source)) != h.unit) return "h(1) is not the unit at " + al.source.name();
      for (Index bk : from[gp.window_index(al.target(), w)]) {
        const auto& be = arrows[bk];
        if (h_map(nf_compose(gp, be, al)) != h.op(h_map(be), h_map(al)))
          return "h is not compatible with composition at " + be.name() + " o " + al.name();
      }
    }
    for (long k = -w; k <= w; ++k)
      if (h_map(nf_multiple(gp, k)) != h.unit) return "h(k.phi) is not the unit for k=" + std::to_string(k);
    return std::nullopt;
  });

  rec.run("h.sum", Mode::window, [&]() -> std::optional<std::string> {
    const auto arrows = detail::window_arrows(gp, w, scan_labels(2, skeleton.size() * skeleton.size()));
    for (const auto& x : arrows)
      for (const auto& y : arrows)
        if (h_map(nf_add(gp, x, y)) != h.op(h_map(x), h_map(y)))
          return "h is not additive at " + x.name() + "," + y.name();
    return std::nullopt;
  });

  rec.run("h.identity_on_H", Mode::exhaustive, [&]() -> std::optional<std::string> {
    for (Index u : all_labels)
      if (h_map({{0, 0}, 0, u}) != u) return "h is not the identity at " + h.elements[u];
    return std::nullopt;
  });

  rec.run("D.homotopy", Mode::exhaustive, [&]() -> std::optional<std::string> {
    const auto& d = out.proxy_d;
    if (auto bad = detail::report_witness(validate_cat(*d))) return bad;
    if (!is_groupoid(d, GroupoidVariant::v3).ok) return std::string("D is not a groupoid");
    if (pi0(d).size() != 1) return std::string("pi_0(D) is not a point");
    if (homotopy_group(d, 1, Index{0}).size() != 1) return std::string("pi_1(D) is not trivial");
    if (homotopy_group(d, 2, Index{0}).size() != 1) return std::string("pi_2(D) is not trivial");
    if (!isomorphic(homotopy_group(d, 3, Index{0}), h)) return std::string("pi_3(D) is not H");
    return std::nullopt;
  });

  {
    const auto& u = *gpq.underlying;
    const auto proj = base_change_projection(gpq.underlying, gq.underlying, pq);
    std::vector<Index> on_arrows(u.cell_count(1));
    for (Index a = 0; a < on_arrows.size(); ++a) {
      on_arrows[a] = gq.underlying->locate(1, proj.maps[1][a]).inner;
    }
    const auto bh = bracket(h);
    StrictFunctor to_h{gpq.underlying, bh.underlying,
                       {std::vector<Index>(u.object_count(), 0), on_arrows}};
    out.proxy_h = deloop2(gpq, bh, to_h);
    out.proxy_h.source = out.proxy_a;
    out.proxy_h.target = out.proxy_d;
  }

  rec.run("h.proxy_functor", Mode::window, [&]() {
    return detail::report_witness(validate_functor(out.proxy_h));
  });

  rec.run("pi3_h.iso", Mode::window, [&]() -> std::optional<std::string> {
    const auto ta = truncation(out.proxy_a, 3);
    const auto td = truncation(out.proxy_d, 3);
    const auto pa = detail::homotopy_from_truncation(ta, 3, 0);
    const auto pd = detail::homotopy_from_truncation(td, 3, 0);
    const auto map = detail::induced_on_homotopy(out.proxy_h, 3, ta, pa, td, pd);
    if (!is_bijection(map, pd.group.size()) || !is_homomorphism(pa.group, pd.group, map))
      return std::string("pi_3(h) is not an isomorphism");
    return std::nullopt;
  }, "pi_3(A) = Hom_{G'}((0,0),(0,0)) = H");

  rec.run("basepoints", Mode::window, [&]() -> std::optional<std::string> {
    if (out.proxy_f(0, 0) != 0) return std::string("f(a) != b");
    if (out.proxy_g(0, 0) != c_index) return std::string("g(b) != c");
    if (out.proxy_h(0, 0) != 0) return std::string("h(a) != d");
    return std::nullopt;
  }, "f(a)=b, g(b)=c, h(a)=d");

  out.certificate = rec.certificate();
  if (const auto* bad = out.certificate.first_failure()) {
    throw CertificateFailure(*bad, out.certificate);
  }
  return out;
}

}  // namespace strictcat
