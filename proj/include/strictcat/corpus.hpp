#pragma once

// The bundled fixture corpus. Every entry is produced by a builder; the files
// under corpus/ are these builders serialized, and tests keep the two in sync.

#include <functional>
#include <string>
#include <vector>

#include "strictcat/algebra.hpp"
#include "strictcat/constructions.hpp"
#include "strictcat/generators.hpp"
#include "strictcat/monoidal.hpp"

namespace strictcat::corpus {

struct Entry {
  std::string name;
  std::string description;
  bool groupoid = false;
  std::function<FinCat::Ptr()> build;
};

inline FinCat::Ptr deloop_of(const Group& g) { return deloop2(bracket(g)); }

inline const std::vector<Entry>& entries() {
  static const std::vector<Entry> all = [] {
    const auto z2 = cyclic_group(2);
    const auto z3 = cyclic_group(3);
    const auto sat2 = saturating_monoid(2);
    const auto sat3 = saturating_monoid(3);
    std::vector<Entry> v;
    v.push_back({"terminal1", "terminal 1-category", true, [] { return terminal(1); }});
    v.push_back({"terminal2", "terminal 2-category", true, [] { return terminal(2); }});
    v.push_back({"terminal3", "terminal 3-category", true, [] { return terminal(3); }});
    v.push_back({"chaotic_ab_2", "chaotic 2-groupoid on {a, b}", true,
                 [] { return chaotic({"a", "b"}, 2); }});
    v.push_back({"chaotic_abc_3", "chaotic 3-groupoid on {a, b, c}", true,
                 [] { return chaotic({"a", "b", "c"}, 3); }});
    v.push_back({"bz2", "Z/2 as a one-object groupoid", true,
                 [z2] { return bracket(z2).underlying; }});
    v.push_back({"bz2_raised3", "Z/2 as a one-object groupoid, raised to level 3", true,
                 [z2] { return raise(bracket(z2).underlying, 3); }});
    v.push_back({"deloop1_z3", "one object, one 1-cell, Z/3 of 2-cells", true,
                 [z3] { return deloop1(bracket(z3)); }});
    v.push_back({"deloop1_discrete_z2", "one object, 1-cells Z/2, identity 2-cells", true,
                 [z2] { return deloop1(discrete(z2)); }});
    v.push_back({"deloop_z2", "3-groupoid with pi_3 = Z/2 and nothing else", true,
                 [z2] { return deloop_of(z2); }});
    v.push_back({"deloop_z3", "3-groupoid with pi_3 = Z/3", true, [z3] { return deloop_of(z3); }});
    v.push_back({"deloop_z4", "3-groupoid with pi_3 = Z/4", true,
                 [] { return deloop_of(cyclic_group(4)); }});
    v.push_back({"deloop_z2xz2", "3-groupoid with pi_3 = Z/2 x Z/2", true,
                 [] { return deloop_of(abelian_group({2, 2})); }});
    v.push_back({"deloop2_discrete_z2", "3-groupoid with pi_2 = Z/2", true,
                 [z2] { return deloop2(discrete(z2)); }});
    v.push_back({"deloop2_chaotic_z2", "double delooping of the chaotic monoid object on Z/2", true,
                 [z2] { return deloop2(chaotic_monoidal(z2)); }});
    v.push_back({"deloop2_discrete_sat2", "double delooping of a non-group monoid (not a groupoid)",
                 false, [sat2] { return deloop2(discrete(sat2)); }});
    v.push_back({"monoid_n3", "the truncated natural numbers {0,1,2} as a one-object category",
                 false, [sat3] { return bracket(sat3).underlying; }});
    v.push_back({"interval", "the arrow category 0 -> 1", false, [] { return gen::interval(); }});
    v.push_back({"two_components", "chaotic {a, b} beside a copy of Z/3", true, [z3] {
                   const auto bz3 = with_object_names(*raise(bracket(z3).underlying, 2), {"c"});
                   return coproduct(chaotic({"a", "b"}, 2), bz3).cat;
                 }});
    v.push_back({"fatten_z2", "deloop_z2 times the chaotic groupoid on {s1, s2}", true,
                 [z2] { return fatten(deloop_of(z2), {"s1", "s2"}).cat; }});
    v.push_back({"deloop_once_z2", "one further delooping of deloop1(Z/2)", true,
                 [z2] { return deloop_once(deloop1(bracket(z2))); }});
    v.push_back({"deloop_once_sat2", "one further delooping of a non-group monoid", false,
                 [sat2] { return deloop_once(deloop1(bracket(sat2))); }});
    v.push_back({"product_z2_z3", "deloop_z2 times deloop_z3", true,
                 [z2, z3] { return product(deloop_of(z2), deloop_of(z3)).cat; }});
    v.push_back({"product_chaotic_z3", "chaotic {a, b} times deloop1_z3", true, [z3] {
                   return product(chaotic({"a", "b"}, 2), deloop1(bracket(z3))).cat;
                 }});
    return v;
  }();
  return all;
}

inline const Entry& entry(const std::string& name) {
  for (const auto& e : entries())
    if (e.name == name) return e;
  throw StructuralError("no corpus entry named '" + name + "'");
}

inline FinCat::Ptr build(const std::string& name) { return entry(name).build(); }

struct MonEntry {
  std::string name;
  std::function<MonGpd()> build;
};

/// Monoid objects in groupoids (and two non-group monoid objects in
/// categories) used by the delooping round trip.
inline std::vector<MonEntry> monoid_objects() {
  const auto z2 = cyclic_group(2);
  const auto z3 = cyclic_group(3);
  const auto v4 = abelian_group({2, 2});
  return {
      {"bracket_trivial", [] { return bracket(trivial_group()); }},
      {"bracket_z2", [z2] { return bracket(z2); }},
      {"bracket_z3", [z3] { return bracket(z3); }},
      {"bracket_z4", [] { return bracket(cyclic_group(4)); }},
      {"bracket_z2xz2", [v4] { return bracket(v4); }},
      {"discrete_z2", [z2] { return discrete(z2); }},
      {"discrete_z3", [z3] { return discrete(z3); }},
      {"discrete_z2xz2", [v4] { return discrete(v4); }},
      {"chaotic_z2", [z2] { return chaotic_monoidal(z2); }},
      {"chaotic_z3", [z3] { return chaotic_monoidal(z3); }},
      {"bracket_z2_x_discrete_z3", [z2, z3] { return product(bracket(z2), discrete(z3)); }},
      {"bracket_sat2", [] { return bracket(saturating_monoid(2)); }},
      {"discrete_sat3", [] { return discrete(saturating_monoid(3)); }},
  };
}

}  // namespace strictcat::corpus
