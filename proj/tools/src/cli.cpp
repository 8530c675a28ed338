#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "claims.hpp"
#include "json_io.hpp"

namespace fatcat::cli {

namespace {

using io::json;

struct Options {
  std::string category = "ord:1";
  std::string input;
  std::string out;
  std::string reading = "both";
  std::string t;
  std::string s;
  int N = 2;
  int D = 2;
  int d = -1;
  int k = -1;
  int n = 1;
  bool fat = false;
  bool geometric = false;
};

int emit(const json& j, const Options& o, std::ostream& out) {
  const auto text = j.dump(2) + "\n";
  if (o.out.empty()) {
    out << text;
    return 0;
  }
  std::ofstream file(o.out);
  if (!file) throw SchemaError("cannot write " + o.out);
  file << text;
  return 0;
}

int emit_claim(const claims::Claim& c, const Options& o, std::ostream& out) {
  emit(claims::to_json(c), o, out);
  return c.passed() ? kPass : kFail;
}

claims::Claim single(const std::string& id, const std::string& location, std::vector<claims::Case> cases) {
  return claims::Claim{id, location, std::move(cases)};
}

std::vector<Rational> parse_point(const std::string& text) {
  std::vector<Rational> t;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) t.push_back(parse_rational(item));
  return t;
}

std::vector<RhoReading> readings(const std::string& r) {
  if (r == "full") return {RhoReading::Full};
  if (r == "short") return {RhoReading::Short};
  if (r == "both") return {RhoReading::Full, RhoReading::Short};
  throw PreconditionError("--reading must be full, short or both");
}

FinCategory load_category(const std::string& spec) {
  auto c = io::resolve_category(spec);
  if (auto r = check_category(c); !r.empty())
    throw StructuralError(spec + ": " + r.front().law + " fails at " + io::to_json(r.front()).dump());
  return c;
}

FinGroupoid load_groupoid(const std::string& spec) {
  auto g = io::resolve_groupoid(spec);
  if (auto r = check_groupoid(g); !r.empty())
    throw StructuralError(spec + ": " + r.front().law + " fails at " + io::to_json(r.front()).dump());
  return g;
}

int default_d(const Options& o) { return o.d >= 0 ? o.d : std::max(0, std::min(2, o.D - 1)); }

int run_homology(const Options& o, std::ostream& out) {
  if (o.fat && o.geometric) throw PreconditionError("--fat and --geometric are exclusive");
  IntegerChainComplex c;
  json doc;
  const bool from_file = !o.input.empty();
  if (from_file) doc = io::read_file(o.input);
  if (from_file && doc.contains("basis")) {
    c = io::complex_from_json(doc);
    if (auto r = check_complex(c); !r.empty()) throw SchemaError("complex: ∂∂ ≠ 0 at " + r.front().witness.front());
  } else {
    const auto cat = load_category(from_file ? o.input : o.category);
    auto x = nerve(cat, o.D);
    c = o.geometric ? geometric_chains(x) : fat_chains(x);
  }
  if (o.k >= 0) {
    auto h = homology(c, o.k);
    if (!h.reliable) throw PreconditionError("degree " + std::to_string(o.k) + " needs D ≥ " + std::to_string(o.k + 1));
    return emit(io::to_json(h), o, out);
  }
  json groups = json::array();
  for (int k = 0; k <= c.D; ++k) {
    auto h = homology(c, k);
    if (h.reliable) groups.push_back(io::to_json(h));
  }
  return emit({{"ranks", c.ranks()}, {"groups", groups}}, o, out);
}

int dispatch(const CLI::App& app, const Options& o, std::ostream& out) {
  auto parsed = [&](const char* name) { return app.got_subcommand(name); };
  if (parsed("nerve")) return emit(io::to_json(nerve(load_category(o.category), o.D)), o, out);
  if (parsed("homology")) return run_homology(o, out);
  if (parsed("report")) {
    auto report = claims::report_all();
    emit(report, o, out);
    for (const auto& c : report["claims"])
      if (c["result"] != "pass") return kFail;
    return kPass;
  }
  if (parsed("counterexample")) {
    std::vector<claims::Case> cases;
    for (auto r : readings(o.reading)) cases.push_back(claims::rho_mismatch(o.n, r));
    return emit_claim(single("rho-face-mismatch", "the proposed inverse ρ does not commute with faces", cases), o, out);
  }
  const auto* verify = app.get_subcommand("verify");
  auto sub = [&](const char* name) { return verify->got_subcommand(name); };
  const auto cat_name = o.category;
  if (sub("cell-bijection")) {
    auto c = load_category(o.category);
    return emit_claim(single("cell-bijection", "nondegenerate cells of the unraveled nerve are the cells of Ner C × S",
                             {claims::cell_bijection(cat_name, c, o.N, o.D)}),
                      o, out);
  }
  if (sub("tom-dieck")) {
    auto c = load_category(o.category);
    return emit_claim(single("projection-quasi-iso", "projection ||Ner C × S|| → ||Ner C|| is a homology isomorphism",
                             {claims::projection_quasi_iso(cat_name, c, o.N, o.D, default_d(o))}),
                      o, out);
  }
  if (sub("quillen-a")) {
    auto c = load_category(o.category);
    return emit_claim(single("comma-fiber-contractible", "comma fibers of the forgetful map Ner C^ℕ → Ner C are contractible",
                             {claims::quillen_fibers(cat_name, c, o.N, o.D)}),
                      o, out);
  }
  if (sub("tau")) {
    auto c = load_category(o.category);
    return emit_claim(single("tau-chain-map", "τ commutes with boundaries and π∘τ is the identity on homology",
                             {claims::tau_chain_map(cat_name, c, o.N, o.D),
                              claims::pi_tau_identity(cat_name, c, o.N, o.D, default_d(o))}),
                      o, out);
  }
  if (sub("cocycle")) {
    if (o.input.empty()) throw PreconditionError("verify cocycle needs --input");
    auto u = io::cocycle_from_json(io::read_file(o.input));
    return emit_claim(single("cocycle-calculus", "groupoid cocycles: validity", {claims::cocycle_valid(o.input, u)}), o, out);
  }
  if (sub("blowup")) {
    if (o.input.empty()) throw PreconditionError("verify blowup needs --input");
    auto base = io::covered_from_json(io::read_file(o.input));
    const int d = o.d >= 0 ? o.d : base->complex().dimension();
    return emit_claim(single("blowup-quasi-iso", "blowup of a cover has the homology of the space",
                             {claims::blowup_quasi_iso(o.input, base, d)}),
                      o, out);
  }
  if (sub("universal-cocycle")) {
    auto g = std::make_shared<const FinGroupoid>(load_groupoid(o.category));
    std::vector<claims::Case> cases{claims::universal_cocycle(cat_name, g, o.N, o.D)};
    if (!o.input.empty()) cases.push_back(claims::pullback(o.input, io::cocycle_from_json(io::read_file(o.input)), o.N, o.D));
    return emit_claim(single("universal-cocycle", "the universal cocycle on BG and its pullbacks", cases), o, out);
  }
  if (sub("partition")) {
    claims::Case c = o.t.empty() ? claims::partition_grid()
                                 : claims::partition(PartitionPoint::make(parse_point(o.t)),
                                                     o.s.empty() ? Rational(1) : parse_rational(o.s));
    return emit_claim(single("partition-homotopy", "partition-of-unity homotopy stays a partition and truncates at s = 1",
                             {c}),
                      o, out);
  }
  throw PreconditionError("no command given");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Checks for finite categories, their nerves and classifying spaces", "fatcat"};
  app.require_subcommand(1);
  Options o;

  auto category = [&](CLI::App* a) {
    a->add_option("--category", o.category, "builtin (terminal, ord:n, nat:n, cyclic:m, pair:n) or JSON file");
  };
  auto sizes = [&](CLI::App* a) {
    a->add_option("--N", o.N, "unraveling bound")->check(CLI::NonNegativeNumber);
    a->add_option("--D", o.D, "truncation degree")->check(CLI::NonNegativeNumber);
    a->add_option("--d", o.d, "homology checked through this degree");
  };
  auto output = [&](CLI::App* a) { a->add_option("--out", o.out, "write the JSON report here"); };

  auto* nerve_cmd = app.add_subcommand("nerve", "print the truncated nerve");
  category(nerve_cmd);
  nerve_cmd->add_option("--D", o.D, "truncation degree")->check(CLI::NonNegativeNumber);
  output(nerve_cmd);

  auto* homology_cmd = app.add_subcommand("homology", "integral homology of a nerve or chain complex");
  homology_cmd->add_option("--input", o.input, "category or complex JSON");
  category(homology_cmd);
  homology_cmd->add_flag("--fat", o.fat, "unnormalized chains (default)");
  homology_cmd->add_flag("--geometric", o.geometric, "normalized chains");
  homology_cmd->add_option("--D", o.D, "truncation degree")->check(CLI::NonNegativeNumber);
  homology_cmd->add_option("--k", o.k, "single degree");
  output(homology_cmd);

  auto* verify = app.add_subcommand("verify", "run one verification suite");
  verify->require_subcommand(1);
  for (const char* name : {"cell-bijection", "tom-dieck", "quillen-a", "tau"}) {
    auto* s = verify->add_subcommand(name);
    category(s);
    sizes(s);
    output(s);
  }
  for (const char* name : {"cocycle", "blowup"}) {
    auto* s = verify->add_subcommand(name);
    s->add_option("--input", o.input, "covered complex or cocycle JSON")->required();
    s->add_option("--d", o.d, "homology checked through this degree");
    output(s);
  }
  auto* universal = verify->add_subcommand("universal-cocycle");
  category(universal);
  sizes(universal);
  universal->add_option("--input", o.input, "cocycle JSON to pull back");
  output(universal);
  auto* part = verify->add_subcommand("partition");
  part->add_option("--t", o.t, "point as comma-separated rationals; omit for the grid");
  part->add_option("--s", o.s, "homotopy parameter in [0,1]");
  output(part);

  auto* counter = app.add_subcommand("counterexample", "search for a counterexample");
  counter->require_subcommand(1);
  auto* rho = counter->add_subcommand("rho");
  rho->add_option("--n", o.n, "simplex dimension")->check(CLI::PositiveNumber);
  rho->add_option("--reading", o.reading, "full, short or both");
  output(rho);

  auto* report = app.add_subcommand("report", "run the claim registry");
  report->require_subcommand(1);
  output(report->add_subcommand("all"));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kMalformed;
  }

  auto fail = [&](const char* kind, const std::exception& e) {
    err << "fatcat: " << kind << ": " << e.what() << "\n";
    out << json{{"error", {{"kind", kind}, {"message", e.what()}}}}.dump(2) << "\n";
    return kMalformed;
  };
  try {
    return dispatch(app, o, out);
  } catch (const SchemaError& e) {
    return fail("schema", e);
  } catch (const StructuralError& e) {
    return fail("structure", e);
  } catch (const ResourceLimitError& e) {
    return fail("resource-limit", e);
  } catch (const std::invalid_argument& e) {
    return fail("parameter", e);
  }
}

}  // namespace fatcat::cli
