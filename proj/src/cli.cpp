#include "affsemi/cli.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <functional>
#include <memory>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "affsemi/affine_semigroup.hpp"
#include "affsemi/arf.hpp"
#include "affsemi/conjectures.hpp"
#include "affsemi/constructions.hpp"
#include "affsemi/error.hpp"
#include "affsemi/frobenius.hpp"
#include "affsemi/gap_semigroup.hpp"
#include "affsemi/io.hpp"
#include "affsemi/lattice.hpp"

namespace affsemi {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Leaf {
  CLI::App* app = nullptr;
  std::function<Json(Leaf&)> action;

  bool json = false;
  std::string order = "grlex";
  std::size_t budget = 0;
  unsigned threads = 1;

  std::string gens, gaps, file;
  std::size_t dim = 0;
  CLI::Option* gens_opt = nullptr;
  CLI::Option* gaps_opt = nullptr;
  CLI::Option* file_opt = nullptr;
  CLI::Option* dim_opt = nullptr;

  // subcommand-specific arguments
  std::string point, set, s1, s2, s, pf1, pf2, window, ns;
  Coord a = 0, p = 0;
  bool direct = false;
};

void add_common(Leaf& l) {
  l.app->add_flag("--json", l.json, "Emit one JSON document");
  l.app->add_option("--order", l.order, "Term order")->check(CLI::IsMember({"lex", "grlex"}));
  l.app->add_option("--budget", l.budget, "Maximum number of Apery elements explored");
  l.app->add_option("--threads", l.threads, "Worker threads")->check(CLI::Range(1u, 256u));
}

void add_input(Leaf& l) {
  l.gens_opt = l.app->add_option("--gens", l.gens, "Generators, \"(x,y);(x,y)\"");
  l.gaps_opt = l.app->add_option("--gaps", l.gaps, "Gap set, \"(x,y);(x,y)\"");
  l.file_opt = l.app->add_option("--file", l.file, "JSON input {\"d\":..,\"gens\"|\"gaps\":[..]}");
  l.dim_opt = l.app->add_option("--dim", l.dim, "Dimension, needed for an empty gap list")->check(CLI::PositiveNumber);
}

template <class F>
auto as_usage(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw UsageError(e.what());
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(e.what());
  }
}

std::optional<std::size_t> dimension_hint(const Leaf& l) {
  if (l.dim_opt && l.dim_opt->count()) return l.dim;
  return std::nullopt;
}

Input read_input(const Leaf& l) {
  const std::size_t sources = l.gens_opt->count() + l.gaps_opt->count() + l.file_opt->count();
  if (sources != 1) throw UsageError("exactly one of --gens, --gaps and --file is required");
  const auto hint = dimension_hint(l);
  return as_usage([&] {
    Input in;
    if (l.file_opt->count()) {
      std::ifstream stream(l.file);
      if (!stream) throw UsageError("cannot open " + l.file);
      in = parse_input(nlohmann::json::parse(stream));
      if (hint && *hint != in.dimension) throw UsageError("--dim disagrees with the file");
      return in;
    }
    in.kind = l.gens_opt->count() ? InputKind::Generators : InputKind::Gaps;
    in.points = parse_points(in.kind == InputKind::Generators ? l.gens : l.gaps, hint);
    if (in.points.empty() && !hint) throw UsageError("an empty point list needs --dim");
    in.dimension = in.points.empty() ? *hint : in.points.front().dimension();
    return in;
  });
}

Budget budget_of(const Leaf& l) {
  Budget b;
  if (l.budget > 0) b.max_apery = l.budget;
  return b;
}

TermOrder order_of(const Leaf& l, std::size_t d) { return l.order == "lex" ? TermOrder::lex(d) : TermOrder::grlex(d); }

Json point_set(std::vector<Point> v) {
  sort_grlex(v);
  return to_json(v);
}

GapSemigroup gap_semigroup_of(const Leaf& l, const Input& in) {
  if (in.kind == InputKind::Gaps) return GapSemigroup::from_gaps(in.dimension, in.points);
  return GapSemigroup::from_generators(AffineSemigroup(in.dimension, in.points), budget_of(l));
}

GapSemigroup gap_semigroup_of(const Leaf& l) { return gap_semigroup_of(l, read_input(l)); }

Json summary(const GapSemigroup& s) {
  Json out;
  out["dimension"] = s.dimension();
  out["genus"] = s.genus();
  out["gaps"] = point_set(s.gaps());
  return out;
}

Json report(const FrobeniusReport& r) {
  Json out;
  out["pf"] = point_set(r.pf);
  out["betti_type"] = r.betti_type;
  out["frobenius"] = to_json(r.frobenius);
  out["pf_prime"] = point_set(r.pf_prime);
  out["omega_extra"] = point_set(r.omega_extra);
  out["symmetric"] = r.symmetric;
  out["pseudo_symmetric"] = r.pseudo_symmetric;
  out["almost_symmetric"] = r.almost_symmetric;
  out["irreducible"] = r.irreducible;
  out["pf_prime_below_frobenius"] = r.pf_prime_below_frobenius;
  return out;
}

Json report(const BuchsbaumReport& r) {
  Json out;
  out["extremal_rays"] = point_set(r.extremal_rays);
  out["d_set"] = point_set(r.d_set);
  out["pf"] = point_set(r.pf);
  out["is_buchsbaum"] = r.is_buchsbaum;
  return out;
}

// ---------------------------------------------------------------------------
// Subcommands

Json cmd_member(Leaf& l) {
  const Input in = read_input(l);
  const Point x = as_usage([&] { return parse_point(l.point, in.dimension); });
  Json out;
  out["point"] = to_json(x);
  if (in.kind == InputKind::Generators) {
    out["member"] = is_member(AffineSemigroup(in.dimension, in.points), x);
  } else {
    out["member"] = GapSemigroup::from_gaps(in.dimension, in.points).contains(x);
  }
  return out;
}

Json cmd_gaps(Leaf& l) {
  const GapSemigroup s = gap_semigroup_of(l);
  Json out = summary(s);
  out["conductor"] = to_json(s.conductor());
  out["hilbert_basis"] = point_set(s.hilbert_basis());
  out["embedding_dimension"] = s.embedding_dimension();
  return out;
}

Json cmd_pf(Leaf& l) {
  const auto pf = pseudo_frobenius(gap_semigroup_of(l));
  Json out;
  out["pf"] = point_set(pf);
  out["betti_type"] = pf.size();
  return out;
}

Json cmd_frobenius(Leaf& l) {
  const GapSemigroup s = gap_semigroup_of(l);
  Json out;
  out["order"] = l.order;
  out["frobenius"] = to_json(frobenius_element(s, order_of(l, s.dimension())));
  return out;
}

Json cmd_classify(Leaf& l) {
  const GapSemigroup s = gap_semigroup_of(l);
  Json out;
  out["order"] = l.order;
  out.update(report(classify(s, order_of(l, s.dimension()))));
  return out;
}

Json cmd_omega(Leaf& l) {
  const GapSemigroup s = gap_semigroup_of(l);
  Json out;
  out["order"] = l.order;
  out["omega"] = point_set(omega(s, order_of(l, s.dimension())));
  return out;
}

Json cmd_apery(Leaf& l) {
  const GapSemigroup s = gap_semigroup_of(l);
  const auto elements = as_usage([&] { return parse_points(l.set, s.dimension()); });
  const auto ap = apery(s, elements);
  Json out;
  out["set"] = point_set(elements);
  out["size"] = ap.size();
  out["apery"] = point_set(ap);
  return out;
}

Json cmd_wilf(Leaf& l) {
  const GapSemigroup s = gap_semigroup_of(l);
  const WilfReport r = wilf_report(s, order_of(l, s.dimension()));
  Json out;
  out["order"] = l.order;
  out["frobenius"] = to_json(r.frobenius);
  out["genus"] = r.genus;
  out["sporadic"] = r.sporadic;
  out["n_frobenius"] = r.n_frobenius;
  out["embedding_dimension"] = r.embedding_dimension;
  out["lhs"] = r.n_frobenius + 1;
  out["rhs"] = r.embedding_dimension * r.sporadic;
  out["holds"] = r.holds;
  return out;
}

Json cmd_buchsbaum(Leaf& l) {
  const Input in = read_input(l);
  if (in.kind == InputKind::Gaps) return report(buchsbaum_report(GapSemigroup::from_gaps(in.dimension, in.points)));
  return report(buchsbaum_report(AffineSemigroup(in.dimension, in.points), budget_of(l)));
}

Json cmd_glue(Leaf& l) {
  const Point s = as_usage([&] { return parse_point(l.s); });
  const std::size_t d = s.dimension();
  const auto s1 = as_usage([&] { return parse_points(l.s1, d); });
  const auto s2 = as_usage([&] { return parse_points(l.s2, d); });
  const bool with_pf = !l.pf1.empty() || !l.pf2.empty();
  if (with_pf && (l.pf1.empty() || l.pf2.empty())) throw UsageError("--pf1 and --pf2 go together");

  const AffineSemigroup glued = glue({AffineSemigroup(d, s1), AffineSemigroup(d, s2), s});
  Json out;
  out["s"] = to_json(s);
  out["generators"] = point_set(glued.generators());
  out["embedding_dimension"] = glued.size();
  if (with_pf) {
    const auto pf1 = as_usage([&] { return parse_points(l.pf1, d); });
    const auto pf2 = as_usage([&] { return parse_points(l.pf2, d); });
    const GluedPF g = glued_pf(pf1, pf2, s);
    out["glued_pf"] = point_set(g.points);
    out["collisions"] = g.collisions;
  }
  if (l.direct) {
    const auto pf = pseudo_frobenius(GapSemigroup::from_generators(glued, budget_of(l)));
    out["pf"] = point_set(pf);
    if (with_pf) out["agree"] = out["pf"] == out["glued_pf"];
  }
  return out;
}

Json cmd_family_sap(Leaf& l) {
  const auto gens = family_sap_generators(l.a, l.p);
  const DeltaVerification v = verify_delta_pf(l.a, l.p, l.threads);
  Json out;
  out["a"] = l.a;
  out["p"] = l.p;
  out["generators"] = point_set(family_sap(l.a, l.p).generators());
  // shifted_member and closed_form follow this order
  out["check_order"] = to_json(std::vector<Point>(gens.begin(), gens.end()));
  out["delta_size"] = v.rows.size();
  out["verified"] = v.verified;
  out["passed"] = v.passed;
  Json rows = Json::array();
  for (const auto& r : v.rows) {
    Json row;
    row["ell"] = r.ell;
    row["f"] = to_json(r.f);
    row["outside"] = r.outside;
    row["shifted_member"] = r.shifted_member;
    row["closed_form"] = r.closed_form;
    row["passed"] = r.passed;
    rows.push_back(std::move(row));
  }
  out["rows"] = std::move(rows);
  if (!l.window.empty()) {
    const Point w = as_usage([&] { return parse_point(l.window, 2); });
    const AperyWindow aw = apery_sap_window(l.a, l.p, w);
    Json win;
    win["window"] = to_json(w);
    win["formula_size"] = aw.formula_side.size();
    win["window_scan_size"] = aw.window_scan.size();
    win["formula_verified"] = aw.formula_verified;
    win["consistent"] = aw.consistent;
    out["apery_window"] = std::move(win);
  }
  return out;
}

Json cmd_family_saps(Leaf& l) {
  std::vector<Coord> ns;
  for (const auto& x : as_usage([&] { return parse_points(l.ns, 1); })) ns.push_back(x[0]);
  const FamilyGluing g = family_saps(l.a, l.p, ns);
  Json out;
  out["a"] = l.a;
  out["p"] = l.p;
  out["ns"] = ns;
  out["mu"] = g.mu;
  out["s"] = to_json(g.s);
  out["generators"] = point_set(g.semigroup.generators());
  out["embedding_dimension"] = g.embedding_dimension;
  out["nu"] = g.nu;
  out["pf_lower_bound"] = g.pf_lower_bound;
  Json witnesses = Json::array();
  std::size_t verified = 0;
  for (const auto& w : g.pf_witnesses) {
    Json item;
    item["point"] = to_json(w.point);
    item["verified"] = w.verified;
    witnesses.push_back(std::move(item));
    verified += w.verified;
  }
  out["verified"] = verified;
  out["pf_witnesses"] = std::move(witnesses);
  return out;
}

Json cmd_arf_check(Leaf& l) {
  Json out;
  out["arf"] = is_arf(gap_semigroup_of(l), l.threads);
  return out;
}

Json cmd_arf_derived(Leaf& l) { return summary(arf_derived(gap_semigroup_of(l), l.threads)); }

Json cmd_arf_closure(Leaf& l) {
  const ArfClosure c = arf_closure(gap_semigroup_of(l), l.threads);
  Json out = summary(c.closure);
  out["steps"] = c.steps;
  return out;
}

Json cmd_pi_check(Leaf& l) {
  const Input in = read_input(l);
  const PICheck c = in.kind == InputKind::Gaps ? is_pi(GapSemigroup::from_gaps(in.dimension, in.points))
                                              : is_pi(AffineSemigroup(in.dimension, in.points));
  Json out;
  out["multiplicity"] = to_json(c.multiplicity);
  out["attained"] = c.attained;
  out["pi"] = c.result ? Json(*c.result) : Json(nullptr);
  return out;
}

Json cmd_pi_decompose(Leaf& l) {
  const Input in = read_input(l);
  Json out;
  if (in.kind == InputKind::Gaps) {
    const PIMonoid m = pi_decompose(GapSemigroup::from_gaps(in.dimension, in.points));
    out["offset"] = to_json(m.offset());
    out["base_gaps"] = point_set(m.base().gaps());
  } else {
    const AffinePIDecomposition m = pi_decompose(AffineSemigroup(in.dimension, in.points));
    out["offset"] = to_json(m.offset);
    out["base_generators"] = point_set(m.base.generators());
  }
  return out;
}

Json cmd_identity_pf_ideal(Leaf& l) {
  const GapSemigroup s = gap_semigroup_of(l);
  const auto via = pf_via_ideal(s);
  const auto pf = pseudo_frobenius(s);
  Json out;
  out["pf_via_ideal"] = point_set(via);
  out["pf"] = point_set(pf);
  out["equal"] = via == pf;
  return out;
}

Json cmd_identity_cardinality(Leaf& l) {
  const GapSemigroup s = gap_semigroup_of(l);
  const CardinalityIdentity c = cardinality_identity(s, order_of(l, s.dimension()));
  Json out;
  out["order"] = l.order;
  out["lhs"] = c.lhs;
  out["rhs"] = c.rhs;
  out["holds"] = c.lhs == c.rhs;
  return out;
}

// ---------------------------------------------------------------------------
// Text rendering

bool is_point(const Json& j) {
  return j.is_array() && std::ranges::all_of(j, [](const Json& c) { return c.is_number_integer(); });
}

bool is_point_list(const Json& j) { return j.is_array() && std::ranges::all_of(j, is_point); }

std::string inline_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (is_point(j) && !j.empty()) {
    std::string s = "(";
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? "," : "") + j[i].dump();
    return s + ")";
  }
  if (is_point_list(j)) {
    std::string s = "{";
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + inline_text(j[i]);
    return s + "}";
  }
  if (j.is_object()) {
    std::string s;
    for (const auto& [k, v] : j.items()) s += (s.empty() ? "" : "  ") + k + "=" + inline_text(v);
    return s;
  }
  return j.dump();
}

void render_text(const Json& doc, std::ostream& out, const std::string& indent = "") {
  for (const auto& [key, value] : doc.items()) {
    if (value.is_object()) {
      out << indent << key << ":\n";
      render_text(value, out, indent + "  ");
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      out << indent << key << ":\n";
      for (const auto& item : value) out << indent << "  " << inline_text(item) << "\n";
    } else {
      out << indent << key << ": " << inline_text(value) << "\n";
    }
  }
}

Json error_document(const Error& e) {
  Json doc;
  doc["error"] = std::string(e.name());
  doc["message"] = e.what();
  if (const auto* g = dynamic_cast<const NotAGluingError*>(&e)) doc["reason"] = g->reason();
  if (const auto* h = dynamic_cast<const HypothesisError*>(&e)) doc["which"] = h->which();
  if (const auto* i = dynamic_cast<const InfiniteGapsError*>(&e)) {
    doc["axis"] = i->axis();
    doc["base"] = to_json(i->base());
    doc["step"] = to_json(i->step());
  }
  if (const auto* c = dynamic_cast<const NotClosedError*>(&e)) {
    doc["gap"] = to_json(c->gap());
    doc["left"] = to_json(c->left());
    doc["right"] = to_json(c->right());
  }
  return doc;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of affine semigroups in N^d", "affsemi"};
  app.require_subcommand(1);
  std::deque<Leaf> leaves;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, Json (*action)(Leaf&),
                  bool input = true) -> Leaf& {
    Leaf& l = leaves.emplace_back();
    l.app = parent->add_subcommand(name, help);
    l.action = action;
    add_common(l);
    if (input) add_input(l);
    return l;
  };

  {
    Leaf& l = leaf(&app, "member", "Decide membership of --point", cmd_member);
    l.app->add_option("--point", l.point)->required();
  }
  leaf(&app, "gaps", "Gap set, conductor and Hilbert basis", cmd_gaps);
  leaf(&app, "pf", "Pseudo-Frobenius elements", cmd_pf);
  leaf(&app, "frobenius", "Frobenius element for --order", cmd_frobenius);
  leaf(&app, "classify", "Symmetry classes", cmd_classify);
  leaf(&app, "omega", "The set Omega for --order", cmd_omega);
  {
    Leaf& l = leaf(&app, "apery", "Apery set of --set", cmd_apery);
    l.app->add_option("--set", l.set)->required();
  }
  leaf(&app, "wilf", "Extended Wilf report", cmd_wilf);
  leaf(&app, "buchsbaum", "Buchsbaum test", cmd_buchsbaum);
  {
    Leaf& l = leaf(&app, "glue", "Glue two semigroups along --s", cmd_glue, false);
    l.app->add_option("--s1", l.s1, "Generators of S1")->required();
    l.app->add_option("--s2", l.s2, "Generators of S2")->required();
    l.app->add_option("--s", l.s, "Gluing element")->required();
    l.app->add_option("--pf1", l.pf1, "PF(S1), for the gluing formula");
    l.app->add_option("--pf2", l.pf2, "PF(S2), for the gluing formula");
    l.app->add_flag("--direct", l.direct, "Also compute PF of the gluing directly");
  }
  {
    CLI::App* family = app.add_subcommand("family", "The four-generator family and its gluings");
    family->require_subcommand(1);
    Leaf& sap = leaf(family, "sap", "Verify the Delta set and Apery window", cmd_family_sap, false);
    sap.app->add_option("--a", sap.a)->required();
    sap.app->add_option("--p", sap.p)->required();
    sap.app->add_option("--window", sap.window, "Apery scan window \"(x,y)\"");
    Leaf& saps = leaf(family, "saps", "Glue with a numerical semigroup", cmd_family_saps, false);
    saps.app->add_option("--a", saps.a)->required();
    saps.app->add_option("--p", saps.p)->required();
    saps.app->add_option("--ns", saps.ns, "Numerical generators \"n1;n2;...\"")->required();
  }
  {
    CLI::App* arf = app.add_subcommand("arf", "Arf property, derived monoid and closure");
    arf->require_subcommand(1);
    leaf(arf, "check", "Is the monoid Arf", cmd_arf_check);
    leaf(arf, "derived", "Derived monoid", cmd_arf_derived);
    leaf(arf, "closure", "Arf closure", cmd_arf_closure);
  }
  {
    CLI::App* pi = app.add_subcommand("pi", "PI-monoids");
    pi->require_subcommand(1);
    leaf(pi, "check", "PI criterion", cmd_pi_check);
    leaf(pi, "decompose", "Offset and base", cmd_pi_decompose);
  }
  {
    CLI::App* identity = app.add_subcommand("identity", "Identities between invariants");
    identity->require_subcommand(1);
    leaf(identity, "pf-ideal", "PF through the ideal difference", cmd_identity_pf_ideal);
    leaf(identity, "cardinality", "Cardinality identity for the Frobenius element", cmd_identity_cardinality);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help, msg;
    const int code = app.exit(e, help, msg);
    out << help.str();
    err << msg.str();
    return code == 0 ? 0 : 2;
  }

  Leaf* chosen = nullptr;
  for (auto& l : leaves) {
    if (l.app->parsed()) chosen = &l;
  }
  if (!chosen) {
    err << "no subcommand selected\n";
    return 2;
  }

  try {
    const Json doc = chosen->action(*chosen);
    if (chosen->json) {
      out << doc.dump() << "\n";
    } else {
      render_text(doc, out);
    }
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    if (chosen->json) {
      out << error_document(e).dump() << "\n";
    } else {
      err << "error: " << e.name() << ": " << e.what() << "\n";
    }
    return 1;
  }
}

}  // namespace affsemi
