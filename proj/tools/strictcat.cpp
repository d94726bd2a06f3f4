#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "strictcat/strictcat.hpp"

namespace fs = std::filesystem;
using namespace strictcat;

namespace {

constexpr int exit_pass = 0;
constexpr int exit_claim = 1;
constexpr int exit_usage = 2;

struct Options {
  std::string input;
  std::string out;
  std::string variant;
  int level = -1;
  int index = 1;
  std::string basepoint;
  std::string h = "z2";
  long r = 2;
  std::size_t fatten = 1;
  long window = 4;
};

class Session {
 public:
  Session(std::string command, const Options& opt) : command_(std::move(command)), opt_(opt) {}

  void claim(std::string name, bool pass, Mode mode, std::optional<std::string> witness = {},
             std::string detail = {}) {
    cert_.claims.push_back({std::move(name), pass, mode, std::move(witness), std::move(detail)});
  }

  void set_params(Json p) { params_ = std::move(p); }
  void set_result(Json r) { result_ = std::move(r); }
  void set_certificate(Certificate c) { cert_ = std::move(c); }

  int finish() const {
    const auto text = dump(report(command_, params_, cert_, result_));
    if (opt_.out.empty()) {
      std::cout << text;
    } else {
      write_text_file(opt_.out, text);
    }
    for (const auto& c : cert_.claims) {
      std::cerr << (c.pass ? "pass " : "FAIL ") << c.name << " [" << to_string(c.mode) << "]";
      if (c.witness) std::cerr << ": " << *c.witness;
      std::cerr << "\n";
    }
    const bool ok = cert_.ok() || cert_.claims.empty();
    std::cerr << command_ << ": " << (ok ? "all claims pass" : "a claim failed") << "\n";
    return ok ? exit_pass : exit_claim;
  }

 private:
  std::string command_;
  const Options& opt_;
  Json params_ = Json::object();
  Json result_ = nullptr;
  Certificate cert_;
};

std::optional<std::string> first_violation(const ValidationReport& r) {
  if (r.ok()) return std::nullopt;
  const auto& v = r.violations.front();
  std::string out = v.axiom + " at level " + std::to_string(v.level);
  for (const auto& c : v.cells) out += " " + c;
  return out;
}

Json group_json(const Group& g) {
  Json table = Json::array();
  for (Index a = 0; a < g.size(); ++a) {
    Json row = Json::array();
    for (Index b = 0; b < g.size(); ++b) row.push_back(g.elements[g.op(a, b)]);
    table.push_back(std::move(row));
  }
  return {{"order", g.size()},
          {"abelian", g.is_commutative()},
          {"elements", g.elements},
          {"unit", g.elements[g.unit]},
          {"table", std::move(table)}};
}

Index basepoint(const FinCat& c, const std::string& name) {
  if (name.empty()) {
    if (c.object_count() == 0) throw PreconditionError("the category has no objects");
    return 0;
  }
  return c.object_index(name);
}

GroupoidVariant groupoid_variant(const std::string& v) {
  if (v.empty() || v == "v3") return GroupoidVariant::v3;
  if (v == "v2") return GroupoidVariant::v2;
  throw PreconditionError("check-groupoid takes --variant v2 or v3");
}

EquivalenceVariant equivalence_variant(const std::string& v) {
  if (v.empty() || v == "a") return EquivalenceVariant::a;
  if (v == "b") return EquivalenceVariant::b;
  if (v == "c") return EquivalenceVariant::c;
  throw PreconditionError("check-equivalence takes --variant a, b or c");
}

std::vector<std::size_t> parse_h(const std::string& text) {
  std::vector<std::size_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find(',', start), text.size());
    const auto part = text.substr(start, end - start);
    if (part.size() < 2 || (part[0] != 'z' && part[0] != 'Z'))
      throw PreconditionError("--H expects factors like z2,z3");
    try {
      std::size_t used = 0;
      const auto n = std::stoul(part.substr(1), &used);
      if (used != part.size() - 1 || n < 1) throw std::invalid_argument(part);
      out.push_back(n);
    } catch (const std::logic_error&) {
      throw PreconditionError("bad factor '" + part + "' in --H");
    }
    start = end + 1;
  }
  return out;
}

int run_validate(Session& s, const Options& o) {
  const auto c = load_category(o.input);
  const auto report = validate_cat(*c);
  s.claim("axioms", report.ok(), Mode::exhaustive, first_violation(report));
  if (report.ok() && c->level() >= 2) {
    std::optional<std::string> bad;
    for (Index x = 0; x < c->object_count() && !bad; ++x) {
      if (auto w = first_violation(eckmann_hilton_check(*c, x))) bad = c->object_name(x) + ": " + *w;
    }
    s.claim("eckmann_hilton", !bad, Mode::exhaustive, bad);
  }
  Json counts = Json::array();
  for (int i = 0; i <= c->level(); ++i) counts.push_back(c->cell_count(i));
  s.set_result({{"level", c->level()}, {"cells", std::move(counts)}});
  return s.finish();
}

int run_truncate(Session& s, const Options& o) {
  const auto c = load_category(o.input);
  const int k = o.level < 0 ? c->level() : o.level;
  s.set_params({{"level", k}});
  try {
    const auto t = truncation(c, k);
    s.claim("truncation", true, Mode::exhaustive);
    s.set_result(to_json(*t.cat));
  } catch (const TruncationError& e) {
    s.claim("truncation", false, Mode::exhaustive, std::string(e.what()));
  }
  return s.finish();
}

int run_pi(Session& s, const Options& o) {
  const auto c = load_category(o.input);
  const Index x = basepoint(*c, o.basepoint);
  s.set_params({{"index", o.index}, {"basepoint", c->object_name(x)}});
  const auto gpd = is_groupoid(c, GroupoidVariant::v3);
  s.claim("groupoid", gpd.ok, Mode::exhaustive,
          gpd.witness ? std::optional(gpd.witness->describe()) : std::nullopt);
  if (!gpd.ok) return s.finish();
  if (o.index == 0) {
    Json comps = Json::array();
    for (const auto& part : pi0(c)) comps.push_back(part);
    s.set_result({{"components", std::move(comps)}});
    return s.finish();
  }
  const auto g = homotopy_group(c, o.index, x);
  s.set_result(group_json(g));
  if (o.index >= 2) {
    s.claim("commutative", g.is_commutative(), Mode::exhaustive);
  }
  return s.finish();
}

int run_check_groupoid(Session& s, const Options& o) {
  const auto c = load_category(o.input);
  const auto v = groupoid_variant(o.variant);
  s.set_params({{"variant", to_string(v)}});
  const auto report = validate_cat(*c);
  s.claim("axioms", report.ok(), Mode::exhaustive, first_violation(report));
  if (!report.ok()) return s.finish();
  const auto verdict = is_groupoid(c, v);
  s.claim("groupoid." + to_string(v), verdict.ok, Mode::exhaustive,
          verdict.witness ? std::optional(verdict.witness->describe()) : std::nullopt);
  return s.finish();
}

int run_check_equivalence(Session& s, const Options& o) {
  const auto f = parse_functor(read_json_file(o.input), fs::path(o.input).parent_path());
  const auto v = equivalence_variant(o.variant);
  s.set_params({{"variant", to_string(v)}});
  const auto report = validate_functor(f);
  s.claim("functor", report.ok(), Mode::exhaustive, first_violation(report));
  if (!report.ok()) return s.finish();
  const auto verdict = is_equivalence(f, v);
  s.claim("equivalence." + to_string(v), verdict.ok, Mode::exhaustive,
          verdict.witness ? std::optional(verdict.witness->describe()) : std::nullopt);
  return s.finish();
}

int run_deloop(Session& s, const Options& o) {
  const auto doc = read_json_file(o.input);
  if (doc.is_object() && doc.contains("kind") && doc["kind"] == "mongpd") {
    const auto g = parse_mongpd(doc);
    const auto report = validate_monoidal(g);
    s.claim("monoid_object", report.ok(), Mode::exhaustive, first_violation(report));
    if (report.ok()) s.set_result(to_json(*deloop2(g)));
    return s.finish();
  }
  const auto c = parse_category(doc);
  const auto report = validate_cat(*c);
  s.claim("axioms", report.ok(), Mode::exhaustive, first_violation(report));
  if (report.ok()) s.set_result(to_json(*deloop_once(c)));
  return s.finish();
}

int run_loop(Session& s, const Options& o) {
  const auto c = load_category(o.input);
  const auto report = validate_cat(*c);
  s.claim("axioms", report.ok(), Mode::exhaustive, first_violation(report));
  if (report.ok()) s.set_result(to_json(loop2(c)));
  return s.finish();
}

int run_base_change(Session& s, const Options& o) {
  const auto in = parse_base_change(read_json_file(o.input));
  const auto v = base_change(in.category, in.names, in.map);
  const auto report = validate_cat(*v);
  s.claim("axioms", report.ok(), Mode::exhaustive, first_violation(report));
  const auto proj = base_change_projection(v, in.category, in.map);
  const auto fr = validate_functor(proj);
  s.claim("projection.functor", fr.ok(), Mode::exhaustive, first_violation(fr));
  if (fr.ok()) {
    s.claim("projection.fully_faithful", is_fully_faithful(proj), Mode::exhaustive);
  }
  s.set_result(to_json(*v));
  return s.finish();
}

int run_split(Session& s, const Options& o) {
  SplitParams p;
  p.h_factors = parse_h(o.h);
  p.r = o.r;
  p.fatten = o.fatten;
  p.window = o.window;
  Json factors = Json::array();
  for (auto f : p.h_factors) factors.push_back("z" + std::to_string(f));
  s.set_params({{"H", std::move(factors)},
                {"r", p.r},
                {"fatten", p.fatten},
                {"window", p.window},
                {"modulus", p.modulus}});
  try {
    const auto d = split(p);
    s.set_certificate(d.certificate);
    s.set_result({{"basepoints", {{"C", d.c}, {"B", d.b}, {"A", d.a}, {"D", d.d}}},
                  {"H", group_json(d.h)}});
  } catch (const CertificateFailure& e) {
    s.set_certificate(e.certificate());
  }
  return s.finish();
}

int run_selftest(Session& s) {
  for (const auto& criterion : acceptance::criteria()) {
    const auto r = criterion();
    std::cerr << r.line() << "\n";
    s.claim("criterion." + std::to_string(r.id), r.pass, Mode::exhaustive,
            r.pass ? std::nullopt : std::optional(r.detail), r.title);
  }
  return s.finish();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite strict n-categories and n-groupoids"};
  app.require_subcommand(1);
  Options o;

  const auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "input document")->required()->check(CLI::ExistingFile);
  };
  const auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "write the report here instead of stdout");
  };

  auto* validate = app.add_subcommand("validate", "check the strict n-category axioms");
  auto* truncate_cmd = app.add_subcommand("truncate", "truncate a groupoid at level k");
  auto* pi = app.add_subcommand("pi", "homotopy group pi_i at a basepoint");
  auto* check_gpd = app.add_subcommand("check-groupoid", "decide the groupoid condition");
  auto* check_eq = app.add_subcommand("check-equivalence", "decide whether a functor is an equivalence");
  auto* deloop = app.add_subcommand("deloop", "deloop a monoid object (or a one-object category once)");
  auto* loop = app.add_subcommand("loop", "recover the monoid object of a double delooping");
  auto* base = app.add_subcommand("base-change", "pull back along a map of object sets");
  auto* split_cmd = app.add_subcommand("split", "build and certify the splitting diagram");
  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");

  for (auto* sub : {validate, truncate_cmd, pi, check_gpd, check_eq, deloop, loop, base}) add_input(sub);
  for (auto* sub : {validate, truncate_cmd, pi, check_gpd, check_eq, deloop, loop, base, split_cmd, selftest})
    add_out(sub);
  truncate_cmd->add_option("--level", o.level, "truncation level k")->check(CLI::NonNegativeNumber);
  pi->add_option("--index", o.index, "homotopy index i")->check(CLI::NonNegativeNumber);
  pi->add_option("--basepoint", o.basepoint, "basepoint object id");
  check_gpd->add_option("--variant", o.variant, "v2 or v3")->check(CLI::IsMember({"v2", "v3"}));
  check_eq->add_option("--variant", o.variant, "a, b or c")->check(CLI::IsMember({"a", "b", "c"}));
  split_cmd->add_option("--H", o.h, "finite abelian H as cyclic factors, e.g. z2,z3");
  split_cmd->add_option("--r", o.r, "the integer r");
  split_cmd->add_option("--fatten", o.fatten, "size of the fattening set S");
  split_cmd->add_option("--window", o.window, "window bound W");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_pass : exit_usage;
  }

  auto* chosen = app.get_subcommands().front();
  Session s(chosen->get_name(), o);
  try {
    if (chosen == validate) return run_validate(s, o);
    if (chosen == truncate_cmd) return run_truncate(s, o);
    if (chosen == pi) return run_pi(s, o);
    if (chosen == check_gpd) return run_check_groupoid(s, o);
    if (chosen == check_eq) return run_check_equivalence(s, o);
    if (chosen == deloop) return run_deloop(s, o);
    if (chosen == loop) return run_loop(s, o);
    if (chosen == base) return run_base_change(s, o);
    if (chosen == split_cmd) return run_split(s, o);
    return run_selftest(s);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
}
