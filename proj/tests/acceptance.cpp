// One pass/fail line per acceptance criterion.  With no arguments all
// criteria run; otherwise only the listed numbers.  Exit 0 iff all pass.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ko/suites.hpp"

using namespace ko;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

RunConfig config(AlgebraKind kind, unsigned n, std::uint32_t p, Scalar kappa = 0) {
  RunConfig c;
  c.algebra = kind;
  c.n = n;
  c.p = p;
  c.kappa = kappa;
  return c;
}

std::string label(const RunConfig& c) {
  std::ostringstream s;
  if (c.algebra == AlgebraKind::M) {
    s << "m(" << c.n << "," << c.p << ")";
  } else {
    s << "sm(" << c.n << "," << c.kappa << "," << c.p << ")";
  }
  return s.str();
}

// Runs suites and collects the first failures.
class Runner {
 public:
  Report run(const std::string& cmd, const std::string& sub, const RunConfig& c) {
    Report r = run_suite(cmd, sub, c);
    if (r.status() != Status::Pass) {
      ok_ = false;
      for (const auto& k : r.checks)
        if (k.status != Status::Pass) note(label(c) + " " + cmd + " " + sub + ": " + k.name + ": " + k.detail);
    }
    ++suites_;
    return r;
  }
  void fail(const std::string& why) {
    ok_ = false;
    note(why);
  }
  Outcome outcome(const std::string& summary) const {
    return {ok_, ok_ ? summary : summary + "; " + notes_};
  }
  int suites() const { return suites_; }

 private:
  void note(const std::string& s) {
    if (count_++ < 3) notes_ += (notes_.empty() ? "" : " | ") + s;
  }
  bool ok_ = true;
  int suites_ = 0;
  int count_ = 0;
  std::string notes_;
};

const std::vector<RunConfig>& axiom_grid() {
  static const std::vector<RunConfig> grid = [] {
    std::vector<RunConfig> v;
    for (auto [n, p] : {std::pair{1u, 5u}, {1u, 7u}, {2u, 5u}}) {
      v.push_back(config(AlgebraKind::M, n, p));
      for (Scalar k : {0u, 1u}) v.push_back(config(AlgebraKind::SM, n, p, k));
    }
    return v;
  }();
  return grid;
}

Outcome golden() {
  Runner r;
  r.run("verify", "golden15", config(AlgebraKind::M, 1, 5));
  for (Scalar k : {0u, 1u, 2u}) r.run("verify", "golden15", config(AlgebraKind::SM, 1, 5, k));
  return r.outcome("m(1,5) and sm(1,k,5), k = 0,1,2: graded dims and listed elements");
}

Outcome homomorphism() {
  Runner r;
  for (unsigned n : {1u, 2u}) r.run("verify", "homomorphism", config(AlgebraKind::M, n, 5));
  return r.outcome("all basis pairs at (1,5) and (2,5)");
}

Outcome axioms() {
  Runner r;
  for (const auto& c : axiom_grid()) {
    r.run("verify", "jacobi", c);
    r.run("verify", "restricted", c);
  }
  return r.outcome(std::to_string(r.suites()) + " exhaustive Jacobi and restrictedness suites");
}

Outcome divergence() {
  Runner r;
  for (const auto& c : axiom_grid()) r.run("verify", "divclosure", c);
  return r.outcome(std::to_string(r.suites()) + " kernel closure suites");
}

Outcome simplicity() {
  Runner r;
  r.run("verify", "simplicity", config(AlgebraKind::M, 1, 5));
  return r.outcome("ideal closure of every basis vector of m(1,5)");
}

// Every Kac check records dim_M and dim_K; compare with the law directly.
void dimension_law(const Report& rep, const RunConfig& c, Runner& r, int& instances) {
  for (const auto& k : rep.checks) {
    if (!k.data.contains("dim_K")) continue;
    ++instances;
    std::size_t law = k.data["dim_M"].get<std::size_t>();
    for (unsigned i = 0; i < c.n; ++i) law *= c.p;
    law <<= c.n + 1;
    if (k.data["dim_K"].get<std::size_t>() != law) r.fail(label(c) + " " + k.name + ": dim law");
  }
}

Outcome kac_dimension() {
  Runner r, ignored;
  int instances = 0;
  for (const auto& [cmd, sub, c] :
       std::vector<std::tuple<std::string, std::string, RunConfig>>{
           {"theorem", "nonsingular", config(AlgebraKind::M, 1, 5)},
           {"theorem", "regular-semisimple", config(AlgebraKind::M, 1, 5)},
           {"theorem", "regular-semisimple", config(AlgebraKind::M, 2, 5)},
           {"theorem", "regular-semisimple", config(AlgebraKind::SM, 2, 5, 0)},
           {"kac", "build", config(AlgebraKind::M, 2, 5)}}) {
    auto c2 = c;
    if (cmd == "kac") c2.chi = Json::object();
    dimension_law(ignored.run(cmd, sub, c2), c2, r, instances);
  }
  if (instances == 0) r.fail("no Kac modules were constructed");
  return r.outcome(std::to_string(instances) + " Kac modules obey dim K = p^n 2^(n+1) dim M");
}

Outcome theorem_nonsingular() {
  Runner r, sm;
  r.run("theorem", "nonsingular", config(AlgebraKind::M, 1, 5));
  std::string summary = "m(1,5) found and all heads simple with unique socle";
  for (Scalar k : {0u, 1u, 2u}) {
    auto c = config(AlgebraKind::SM, 1, 5, k);
    auto rep = sm.run("theorem", "nonsingular", c);
    if (rep.status() == Status::Pass) {
      summary += "; " + label(c) + " found";
      continue;
    }
    const auto& s = rep.checks.front();
    const bool exhausted = s.name == "search nonsingular" && !s.data.value("found", true) &&
                           !s.data["log"].empty() && rep.checks.size() == 1;
    if (!exhausted) {
      r.fail(label(c) + ": " + s.name + ": " + s.detail);
    } else {
      summary += "; " + label(c) + " " + s.detail + " (logged)";
    }
  }
  return r.outcome(summary);
}

Outcome theorem_regular() {
  Runner r;
  r.run("theorem", "regular-semisimple", config(AlgebraKind::M, 2, 5));
  for (Scalar k : {0u, 1u}) r.run("theorem", "regular-semisimple", config(AlgebraKind::SM, 2, 5, k));
  return r.outcome("m(2,5), sm(2,0,5), sm(2,1,5): chi validated, every head gives a simple K");
}

Outcome theorem_delta() {
  Runner r;
  auto c = config(AlgebraKind::M, 1, 7);
  auto rep = r.run("theorem", "delta-invertible", c);
  if (rep.exit_code() == 2) {
    return {false, "witness found and revalidated, but the module suites are inconclusive (exit 2); " +
                       rep.checks.back().detail};
  }
  return r.outcome("m(1,7): witness found and the simplicity and socle suites pass");
}

Outcome invariance() {
  auto g = build_m({1, 5, 0});
  const auto& L = g.lsa;
  std::mt19937_64 rng(0);
  int tested = 0;
  for (; tested < 100; ++tested) {
    PChar chi;
    int h = 0;
    do {
      chi = zero_pchar(L);
      const int top = 1 + static_cast<int>(rng() % 3);
      for (std::size_t k = 0; k < L.dim; ++k)
        if (!L.parity[k] && L.degree[k] <= top) chi.values[k] = static_cast<Scalar>(rng() % 5);
      h = height(L, chi);
    } while (h < 2 || L.indices_of_degree(h + 1).empty());
    const auto rk = rank_chi(g, chi);
    for (Scalar c = 1; c < 5; ++c) {
      auto t = coadjoint_apply(L, {c}, chi);
      if (height(L, t) != h || rank_chi(g, t) != rk)
        return {false, "character " + std::to_string(tested) + " changes under c = " + std::to_string(c)};
    }
  }
  return {true, std::to_string(tested) + " characters of height >= 2, all c in F_5^x"};
}

Outcome determinism() {
  Runner r;
  std::vector<std::tuple<std::string, std::string, RunConfig>> runs{
      {"algebra", "export", config(AlgebraKind::SM, 2, 5, 1)},
      {"char", "search", config(AlgebraKind::M, 1, 7)},
      {"theorem", "nonsingular", config(AlgebraKind::M, 1, 5)},
      {"theorem", "regular-semisimple", config(AlgebraKind::M, 2, 5)},
      {"theorem", "delta-invertible", config(AlgebraKind::M, 1, 7)}};
  std::get<2>(runs[1]).seed = 11;
  std::get<2>(runs[1]).target = SearchTarget::DeltaInvertible;
  std::get<2>(runs[2]).seed = 3;
  for (const auto& [cmd, sub, c] : runs) {
    const auto a = run_suite(cmd, sub, c).to_json().dump(2);
    const auto b = run_suite(cmd, sub, c).to_json().dump(2);
    if (a != b) r.fail(cmd + " " + sub + " " + label(c) + ": JSON differs between runs");
  }
  return r.outcome(std::to_string(runs.size()) + " suites repeated with byte-identical JSON");
}

struct Criterion {
  int number;
  double limit;  // seconds, 0 for none
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all{
      {1, 1, golden},        {2, 10, homomorphism},        {3, 60, axioms},
      {4, 0, divergence},    {5, 5, simplicity},           {6, 0, kac_dimension},
      {7, 300, theorem_nonsingular}, {8, 900, theorem_regular}, {9, 0, theorem_delta},
      {10, 0, invariance},   {11, 0, determinism}};
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));
  bool ok = true;
  for (const auto& c : all) {
    if (!wanted.empty() && !wanted.count(c.number)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit > 0 && secs > c.limit) {
      o.pass = false;
      o.detail += "; over the time limit";
    }
    ok = ok && o.pass;
    std::cout << "criterion " << c.number << ": " << (o.pass ? "PASS" : "FAIL") << " (" << secs << " s) "
              << o.detail << std::endl;
  }
  return ok ? 0 : 1;
}
