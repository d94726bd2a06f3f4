#pragma once

// The acceptance suite shared by the acceptance test binary and the
// `selftest` command. Each criterion runs to completion and reports a
// verdict, a one-line detail and its wall time against a fixed limit.

#include <chrono>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "strictcat/corpus.hpp"
#include "strictcat/generators.hpp"
#include "strictcat/groupoid.hpp"
#include "strictcat/monoidal.hpp"
#include "strictcat/splitting.hpp"
#include "strictcat/truncation.hpp"
#include "strictcat/validate.hpp"

namespace strictcat::acceptance {

struct Result {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  std::optional<double> limit;  // seconds

  std::string line() const {
    std::ostringstream out;
    out << "criterion " << id << " " << (pass ? "PASS" : "FAIL") << " " << title << ": " << detail
        << " (" << std::fixed;
    out.precision(2);
    out << seconds << "s";
    if (limit) out << " / limit " << *limit << "s";
    out << ")";
    return out.str();
  }
};

namespace detail {

/// Runs `body`, which fills pass/detail; measures time and applies the limit.
inline Result timed(int id, std::string title, std::optional<double> limit,
                    const std::function<void(Result&)>& body) {
  Result r{id, std::move(title), true, {}, 0, limit};
  const auto start = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail += std::string(r.detail.empty() ? "" : "; ") + "exception: " + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit && r.seconds >= *limit) {
    r.pass = false;
    r.detail += "; time limit exceeded";
  }
  return r;
}

inline void fail(Result& r, const std::string& why) {
  if (r.pass) r.detail = why;
  r.pass = false;
}

inline bool is_gpd(const FinCat::Ptr& c, GroupoidVariant v) { return is_groupoid(c, v).ok; }

}  // namespace detail

inline Result axioms_and_interchange() {
  return detail::timed(1, "axiom and interchange suite", 10.0, [](Result& r) {
    std::size_t count = 0, eh = 0;
    for (const auto& e : corpus::entries()) {
      const auto c = e.build();
      ++count;
      const auto report = validate_cat(*c);
      if (!report.ok()) detail::fail(r, e.name + " does not validate");
      if (c->level() >= 2) {
        for (Index x = 0; x < c->object_count(); ++x) {
          ++eh;
          if (!eckmann_hilton_check(*c, x).ok())
            detail::fail(r, e.name + " fails Eckmann-Hilton at " + c->object_name(x));
        }
      }
    }
    if (count < 20) detail::fail(r, "corpus has fewer than 20 categories");
    if (r.pass)
      r.detail = std::to_string(count) + " corpus categories valid, " + std::to_string(eh) +
                 " Eckmann-Hilton checks";
  });
}

inline Result loop_deloop_round_trip() {
  return detail::timed(2, "loop2 after deloop2 is the identity", std::nullopt, [](Result& r) {
    const auto all = corpus::monoid_objects();
    for (const auto& m : all) {
      const auto g = m.build();
      const auto back = loop2(deloop2(g));
      if (!(back == g)) detail::fail(r, m.name + " does not round-trip");
    }
    if (all.size() < 10) detail::fail(r, "fewer than 10 monoid objects");
    if (r.pass) r.detail = std::to_string(all.size()) + " monoid objects round-trip exactly";
  });
}

inline Result groupoid_conditions(std::size_t samples = 200, unsigned seed = 20240917) {
  return detail::timed(3, "groupoid conditions v2 and v3 agree", 60.0, [=](Result& r) {
    gen::Rng rng(seed);
    std::size_t disagree = 0, groupoids = 0;
    for (std::size_t k = 0; k < samples; ++k) {
      const int n = 2 + static_cast<int>(k % 2);
      const auto c = k % 4 < 2 ? gen::random_groupoid(rng, n) : gen::random_mutant(rng, n);
      const bool v2 = detail::is_gpd(c, GroupoidVariant::v2);
      const bool v3 = detail::is_gpd(c, GroupoidVariant::v3);
      if (v2 != v3) ++disagree;
      groupoids += v3;
    }
    if (disagree) detail::fail(r, std::to_string(disagree) + " disagreements");
    r.detail = r.pass ? std::to_string(samples) + " categories (" + std::to_string(groupoids) +
                            " groupoids), 0 disagreements"
                      : r.detail;
  });
}

inline Result equivalence_definitions(std::size_t samples = 200, unsigned seed = 7091) {
  return detail::timed(4, "equivalence definitions a, b, c agree", 60.0, [=](Result& r) {
    gen::Rng rng(seed);
    std::size_t disagree = 0, equivalences = 0;
    for (std::size_t k = 0; k < samples; ++k) {
      const auto f = gen::random_functor(rng, 2 + static_cast<int>(k % 2));
      const bool a = is_equivalence(f, EquivalenceVariant::a).ok;
      const bool b = is_equivalence(f, EquivalenceVariant::b).ok;
      const bool c = is_equivalence(f, EquivalenceVariant::c).ok;
      if (a != b || b != c) ++disagree;
      equivalences += a;
    }
    if (disagree) detail::fail(r, std::to_string(disagree) + " disagreements");
    r.detail = r.pass ? std::to_string(samples) + " functors (" + std::to_string(equivalences) +
                            " equivalences), 0 disagreements"
                      : r.detail;
  });
}

inline Result equivalence_cancellation(std::size_t samples = 100, unsigned seed = 31337) {
  return detail::timed(5, "three-for-two and middle-map cancellation", std::nullopt, [=](Result& r) {
    gen::Rng rng(seed);
    std::size_t counter = 0, fired_three = 0, fired_cancel = 0;
    const auto eq = [](const StrictFunctor& f) { return is_equivalence(f, EquivalenceVariant::a).ok; };
    for (std::size_t k = 0; k < samples; ++k) {
      const auto chain = gen::random_chain(rng, 2 + static_cast<int>(k % 2), 3);
      const auto& f = chain[0];
      const auto& g = chain[1];
      const auto& h = chain[2];
      const bool ef = eq(f), eg = eq(g), eh = eq(h);
      const bool egf = eq(compose(g, f)), ehg = eq(compose(h, g));
      for (auto [x, y, xy] : {std::tuple{ef, eg, egf}, std::tuple{eg, eh, ehg}}) {
        const int known = int(x) + int(y) + int(xy);
        if (known >= 2) ++fired_three;
        if (known == 2) ++counter;
      }
      if (egf && ehg) {
        ++fired_cancel;
        if (!eg) ++counter;
      }
    }
    if (counter) detail::fail(r, std::to_string(counter) + " counterexamples");
    if (r.pass)
      r.detail = std::to_string(samples) + " chains, three-for-two premise met " +
                 std::to_string(fired_three) + " times, cancellation premise met " +
                 std::to_string(fired_cancel) + " times, 0 counterexamples";
  });
}

inline Result homotopy_consistency() {
  return detail::timed(6, "homotopy groups: loop formula, commutativity, truncation", std::nullopt,
                       [](Result& r) {
    std::size_t checks = 0;
    for (const auto& e : corpus::entries()) {
      if (!e.groupoid) continue;
      const auto c = e.build();
      const int n = c->level();
      for (Index x = 0; x < c->object_count(); ++x) {
        const auto where = e.name + " at " + c->object_name(x);
        for (int i = 1; i <= n; ++i) {
          const auto g = homotopy_group(c, i, x);
          ++checks;
          if (!loop_isomorphism(c, i, x)) detail::fail(r, where + ": loop formula fails for pi_" + std::to_string(i));
          if (i >= 2) {
            const auto& hxx = c->hom_ptr(x, x);
            const auto inner = homotopy_group(hxx, i - 1, c->identity(x));
            if (!isomorphic(g, inner)) detail::fail(r, where + ": pi_" + std::to_string(i) + " differs from the loop group");
            if (!g.is_commutative()) detail::fail(r, where + ": pi_" + std::to_string(i) + " is not commutative");
          }
        }
        for (int k = 1; k <= n; ++k) {
          const auto t = truncate(c, k);
          for (int i = 1; i <= k; ++i) {
            ++checks;
            if (!isomorphic(homotopy_group(t, i, x), homotopy_group(c, i, x)))
              detail::fail(r, where + ": truncation at " + std::to_string(k) + " changes pi_" + std::to_string(i));
          }
        }
      }
    }
    if (r.pass) r.detail = std::to_string(checks) + " homotopy group checks on corpus groupoids";
  });
}

inline Result delooping_biconditional() {
  return detail::timed(7, "delooping preserves and reflects groupoids", std::nullopt, [](Result& r) {
    for (const char* name : {"deloop_once_z2", "deloop_once_sat2"}) {
      const auto c = corpus::build(name);
      const auto input = c->hom_ptr(0, 0);
      for (auto v : {GroupoidVariant::v2, GroupoidVariant::v3}) {
        if (detail::is_gpd(c, v) != detail::is_gpd(input, v))
          detail::fail(r, std::string(name) + ": verdict differs from its input under " + to_string(v));
      }
      if (detail::is_gpd(c, GroupoidVariant::v3) != corpus::entry(name).groupoid)
        detail::fail(r, std::string(name) + ": unexpected verdict");
    }
    if (r.pass) r.detail = "group fixture is a groupoid, monoid fixture is not, matching inputs";
  });
}

inline Result splitting_certificate() {
  return detail::timed(8, "splitting certificates", std::nullopt, [](Result& r) {
    struct Run {
      SplitParams params;
      std::size_t h_order;
      std::string label;
    };
    SplitParams z2;
    z2.h_factors = {2};
    z2.r = 2;
    z2.fatten = 2;
    z2.window = 4;
    SplitParams z3;
    z3.h_factors = {3};
    z3.r = 1;
    z3.fatten = 1;
    z3.window = 4;
    std::vector<std::string> lines;
    for (const auto& run : {Run{z2, 2, "H=Z/2 r=2 fatten=2"}, Run{z3, 3, "H=Z/3 r=1 fatten=1"}}) {
      const auto start = std::chrono::steady_clock::now();
      try {
        const auto d = split(run.params);
        const auto& cert = d.certificate;
        for (const char* claim : {"g.equivalence.a", "f.equivalence.a", "D.homotopy", "pi3_h.iso",
                                  "nf.compose", "nf.sum", "nf.interchange"}) {
          const auto* c = cert.find(claim);
          if (!c || !c->pass) detail::fail(r, run.label + ": claim " + claim + " missing or failing");
        }
        if (!cert.ok()) detail::fail(r, run.label + ": certificate does not pass");
        const auto& dd = d.proxy_d;
        if (dd->object_count() != 1 || homotopy_group(dd, 1, Index{0}).size() != 1 ||
            homotopy_group(dd, 2, Index{0}).size() != 1 ||
            !isomorphic(homotopy_group(dd, 3, Index{0}), cyclic_group(run.h_order)))
          detail::fail(r, run.label + ": homotopy of D is wrong");
      } catch (const std::exception& e) {
        detail::fail(r, run.label + ": " + e.what());
      }
      const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      if (s >= 30.0) detail::fail(r, run.label + ": exceeded 30s");
      std::ostringstream o;
      o.precision(2);
      o << std::fixed << run.label << " " << s << "s";
      lines.push_back(o.str());
    }
    if (r.pass) r.detail = "certificates pass (" + lines[0] + ", " + lines[1] + ", limit 30s each)";
  });
}

inline Result truncation_algebra() {
  return detail::timed(9, "truncation algebra", std::nullopt, [](Result& r) {
    std::size_t checks = 0;
    for (const auto& e : corpus::entries()) {
      if (!e.groupoid) continue;
      const auto c = e.build();
      const int n = c->level();
      for (int k = 0; k <= n; ++k) {
        const auto t = truncate(c, k);
        ++checks;
        for (auto v : {GroupoidVariant::v2, GroupoidVariant::v3})
          if (!detail::is_gpd(t, v))
            detail::fail(r, e.name + ": truncation at " + std::to_string(k) + " is not a groupoid under " + to_string(v));
        for (int kk = k; kk <= n; ++kk) {
          ++checks;
          if (!(*truncate(truncate(c, kk), k) == *t))
            detail::fail(r, e.name + ": truncations at " + std::to_string(k) + " and " + std::to_string(kk) + " do not compose");
        }
      }
    }
    if (r.pass) r.detail = std::to_string(checks) + " truncation checks on corpus groupoids";
  });
}

inline std::vector<std::function<Result()>> criteria() {
  return {[] { return axioms_and_interchange(); },
          [] { return loop_deloop_round_trip(); },
          [] { return groupoid_conditions(); },
          [] { return equivalence_definitions(); },
          [] { return equivalence_cancellation(); },
          [] { return homotopy_consistency(); },
          [] { return delooping_biconditional(); },
          [] { return splitting_certificate(); },
          [] { return truncation_algebra(); }};
}

}  // namespace strictcat::acceptance
