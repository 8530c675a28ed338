#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "claims.hpp"
#include "cli.hpp"

using namespace fatcat;
using claims::json;

namespace {

struct Criterion {
  int number;
  std::string title;
  double budget_ms;
  std::function<bool(std::string& note)> check;
};

json claim(const std::string& id) {
  for (const auto& spec : claims::registry())
    if (spec.id == id) return claims::to_json(claims::run(spec));
  throw std::logic_error("unknown claim " + id);
}

bool passed(const json& c, std::string& note) {
  if (c["result"] == "pass") return true;
  note += c["id"].get<std::string>() + " failed: " + c["witnesses"].dump() + "; ";
  return false;
}

// Every case flagged "broken" must carry a named witness.
bool broken_cases_have_witnesses(const json& c, std::string& note) {
  bool ok = true;
  std::size_t broken = 0;
  for (std::size_t i = 0; i < c["parameters"].size(); ++i) {
    if (c["parameters"][i].value("expect", "") != "broken") continue;
    ++broken;
    const auto& d = c["details"][i];
    if (!d.contains("witness") || d["witness"]["law"].get<std::string>().empty()) {
      note += "broken case without witness: " + c["parameters"][i].dump() + "; ";
      ok = false;
    }
  }
  return ok && broken > 0;
}

// Normalized bar complex of ℤ/2: one generator per degree, ∂ alternates 0 and 2.
std::vector<std::string> bar_z2_oracle(int through) {
  IntegerChainComplex c;
  c.D = through + 1;
  c.complete = false;
  for (int k = 0; k <= c.D; ++k) {
    c.basis.push_back({"[" + std::string(static_cast<std::size_t>(k), 's') + "]"});
    SparseMatrix m(k == 0 ? 0 : 1, 1);
    if (k > 0 && k % 2 == 0) m.add(0, 0, 2);
    c.boundary.push_back(std::move(m));
  }
  std::vector<std::string> out;
  for (int k = 0; k <= through; ++k) out.push_back(homology(c, k).describe());
  return out;
}

bool criterion_laws(std::string& note) {
  auto cats = claim("category-laws");
  auto groupoids = claim("groupoid-laws");
  auto unravel = claim("unravel-equivalences");
  bool ok = passed(cats, note) && passed(groupoids, note) && passed(unravel, note);
  ok = broken_cases_have_witnesses(cats, note) && ok;
  ok = broken_cases_have_witnesses(groupoids, note) && ok;
  std::size_t unraveled = 0;
  for (const auto& p : cats["parameters"])
    if (p["category"].get<std::string>().rfind("unravel(", 0) == 0) ++unraveled;
  if (unraveled != 4 * 6) {
    note += "expected unraveled categories for n ≤ 3, N ≤ 5; ";
    ok = false;
  }
  return ok;
}

bool criterion_bijection(std::string& note) {
  auto c = claim("cell-bijection");
  bool ok = passed(c, note);
  const json expected = json::parse(
      R"([{"D":2,"N":2,"category":"ord:1"},{"D":3,"N":3,"category":"ord:2"},
          {"D":3,"N":3,"category":"cyclic:2"},{"D":3,"N":3,"category":"pair:2"}])");
  if (c["parameters"] != expected) {
    note += "parameter sets differ: " + c["parameters"].dump() + "; ";
    ok = false;
  }
  for (const auto& d : c["details"])
    if (d["nondegenerate_counts"] != d["product_counts"]) ok = false;
  if (c["details"][0]["nondegenerate_counts"] != json({6, 9, 4})) {
    note += "ord:1 counts " + c["details"][0]["nondegenerate_counts"].dump() + "; ";
    ok = false;
  }
  return ok;
}

bool criterion_projection(std::string& note) {
  auto c = claim("projection-quasi-iso");
  bool ok = passed(c, note);
  std::set<std::string> seen;
  for (std::size_t i = 0; i < c["parameters"].size(); ++i) {
    const auto& p = c["parameters"][i];
    const auto& d = c["details"][i];
    seen.insert(p["category"]);
    if (p["N"] != 6 || p["D"] != 4 || p["d"] != 2) ok = false;
    if (d["source"] != d["target"]) ok = false;
    if (p["category"] == "cyclic:2") {
      const json oracle = bar_z2_oracle(2);
      if (d["source"] != oracle || d["target"] != oracle) {
        note += "ℤ/2 groups " + d["source"].dump() + " vs oracle " + oracle.dump() + "; ";
        ok = false;
      }
      if (oracle != json({"ℤ", "ℤ/2", "0"})) ok = false;
    }
  }
  if (seen != std::set<std::string>{"terminal", "ord:1", "cyclic:2", "pair:2"}) ok = false;
  return ok;
}

bool criterion_quillen(std::string& note) {
  auto c = claim("comma-fiber-contractible");
  bool ok = passed(c, note);
  for (const auto& d : c["details"])
    if (d["contractible"] != d["simplices"]) ok = false;
  return ok && c["parameters"].size() == 3;
}

bool criterion_tau(std::string& note) {
  auto tau = claim("tau-chain-map");
  auto pi_tau = claim("pi-tau-identity");
  return passed(tau, note) && passed(pi_tau, note);
}

bool criterion_rho(std::string& note) {
  auto c = claim("rho-face-mismatch");
  bool ok = passed(c, note);
  std::set<std::pair<int, std::string>> covered;
  for (std::size_t i = 0; i < c["parameters"].size(); ++i) {
    const auto& w = c["details"][i];
    if (!w.contains("witness") || w["witness"]["face_then_image"] == w["witness"]["image_then_face"]) ok = false;
    covered.emplace(c["parameters"][i]["n"].get<int>(), c["parameters"][i]["reading"].get<std::string>());
  }
  if (covered.size() != 4) {
    note += "need n ∈ {1,2} × both readings; ";
    ok = false;
  }
  return ok;
}

bool criterion_partition(std::string& note) {
  auto c = claim("partition-homotopy");
  bool ok = passed(c, note);
  const auto& d = c["details"][0];
  if (d["pairs"].get<std::size_t>() < 100 || d["vertex_points"].get<std::size_t>() == 0) {
    note += "grid too small: " + d.dump() + "; ";
    ok = false;
  }
  return ok;
}

bool criterion_blowup(std::string& note) {
  auto c = claim("blowup-quasi-iso");
  bool ok = passed(c, note);
  for (const auto& d : c["details"])
    if (d["blowup"] != d["space"]) ok = false;
  const auto& random = c["details"][2];
  if (random["faces"].get<std::size_t>() > 50) {
    note += "random complex exceeds 50 faces; ";
    ok = false;
  }
  return ok && c["details"].size() == 3;
}

bool criterion_universal(std::string& note) {
  auto universal = claim("universal-cocycle");
  auto pullback = claim("pullback-restriction");
  bool ok = passed(universal, note) && passed(pullback, note);
  for (const char* g : {"cyclic:2", "pair:2"}) {
    std::set<int> Ns;
    for (const auto& p : universal["parameters"])
      if (p["groupoid"] == g && p["D"] == 3) Ns.insert(p["N"].get<int>());
    if (Ns != std::set<int>{1, 2, 3, 4}) {
      note += std::string(g) + " misses some N ≤ 4; ";
      ok = false;
    }
  }
  return ok;
}

bool criterion_determinism(std::string& note) {
  auto canonical = [] {
    std::ostringstream out, err;
    if (cli::run({"report", "all"}, out, err) != cli::kPass) return std::string("failed: ") + err.str();
    auto j = json::parse(out.str());
    j.erase("timing_ms");
    return j.dump();
  };
  const auto first = canonical();
  const auto second = canonical();
  if (first != second) note += "payloads differ; ";
  return first == second && first.rfind("failed", 0) != 0;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "category and groupoid law suites, broken fixtures rejected", 1000, criterion_laws},
      {2, "cell bijection between Ner C × S and nondegenerate cells", 5000, criterion_bijection},
      {3, "projection is a homology isomorphism through degree 2", 60000, criterion_projection},
      {4, "comma fibers are acyclic", 60000, criterion_quillen},
      {5, "τ is a chain map and π∘τ is the identity on homology", 30000, criterion_tau},
      {6, "ρ face-mismatch witnesses for n = 1, 2 in both readings", 1000, criterion_rho},
      {7, "partition homotopy formulas on a rational grid", 1000, criterion_partition},
      {8, "blowup has the homology of the space", 30000, criterion_blowup},
      {9, "universal cocycle on BG and pullback restriction", 30000, criterion_universal},
      {10, "report all is byte-identical across runs", 60000, criterion_determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    std::string note;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.check(note);
    } catch (const std::exception& e) {
      note += std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (ms > c.budget_ms) {
      note += "over budget; ";
      ok = false;
    }
    if (!ok) ++failures;
    std::cout << "criterion " << std::setw(2) << c.number << ": " << (ok ? "PASS" : "FAIL") << "  " << c.title << "  ("
              << std::fixed << std::setprecision(1) << ms << " ms, budget " << c.budget_ms / 1000 << " s)";
    if (!note.empty()) std::cout << "  " << note;
    std::cout << "\n";
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
