#include "ko/suites.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "ko/kac.hpp"
#include "ko/parallel.hpp"

namespace ko {

ContactAlgebra build_configured(const RunConfig& cfg) {
  if (cfg.n < 1) throw UsageError("--n must be at least 1");
  try {
    PrimeField check(cfg.p);
  } catch (const Error& e) {
    throw UsageError(std::string("--p: ") + e.what());
  }
  if (cfg.p <= 3) throw UsageError("--p must be a prime above 3");
  if (cfg.kappa >= cfg.p) throw UsageError("--kappa must lie in [0, p)");
  return build_algebra(cfg.algebra, cfg.shape());
}

namespace {

std::string tuple_string(const std::vector<std::size_t>& v) {
  std::ostringstream s;
  s << '(';
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  s << ')';
  return s.str();
}

std::string name_of(const ContactAlgebra& g) {
  std::ostringstream s;
  s << (g.kind == AlgebraKind::M ? "m(" : "sm(") << g.shape.n << ',' << g.shape.p;
  if (g.kind == AlgebraKind::SM) s << ", kappa=" << g.shape.kappa;
  s << ')';
  return s.str();
}

void add_check_report(Report& r, const std::string& name, const CheckReport& c) {
  Json data;
  data["checked"] = c.checked;
  data["violations"] = c.violation_count;
  std::string detail = std::to_string(c.checked) + " checked, " + std::to_string(c.violation_count) + " violations";
  if (!c.violations.empty()) detail += "; first: " + c.violations.front().what;
  r.add(name, pass_if(c.passed()), detail, data);
}

Json dims_json(const ContactAlgebra& g) {
  Json j;
  j["min_degree"] = g.lsa.min_degree();
  j["max_degree"] = g.lsa.max_degree();
  j["graded"] = g.graded_dims();
  j["total"] = g.dim();
  return j;
}

// ---------------------------------------------------------------- algebra

void algebra_suite(const std::string& sub, const RunConfig& cfg, Report& r) {
  auto g = build_configured(cfg);
  if (sub == "build") {
    r.add("build", Status::Pass, name_of(g) + " has dimension " + std::to_string(g.dim()), dims_json(g));
    add_check_report(r, "antisymmetry", verify_antisymmetry(g.lsa));
    add_check_report(r, "parity-degree", verify_parity_degree(g));
  } else if (sub == "dims") {
    r.add("dims", Status::Pass, tuple_string(g.graded_dims()) + " over degrees " + std::to_string(g.lsa.min_degree()) +
                                    ".." + std::to_string(g.lsa.max_degree()) + ", total " + std::to_string(g.dim()),
          dims_json(g));
  } else if (sub == "export") {
    const Json doc = export_lsa(g.lsa);
    const LSA back = import_lsa(Json::parse(doc.dump()));
    Json data;
    data["basis_records"] = doc["basis"].size();
    data["sc_entries"] = doc["sc"].size();
    r.add("roundtrip", pass_if(back.structurally_equal(g.lsa)), "export, parse and import give an equal algebra", data);
    add_check_report(r, "degree-additivity", verify_degree_additivity(back));
  } else {
    throw UsageError("unknown algebra subcommand '" + sub + "'");
  }
}

// ----------------------------------------------------------------- verify

// Ideal closure of random elements of sm(3, kappa, 5)^(2), checked against the
// whole derived algebra.
void long_simplicity_probe(const RunConfig& cfg, Report& r) {
  auto g = build_sm({3, 5, cfg.kappa});
  const auto& F = g.F();
  const Subspace d2 = derived_subalgebra(g.lsa, 2);
  std::mt19937_64 rng(cfg.seed);
  unsigned ok = 0;
  const unsigned trials = 3;
  for (unsigned t = 0; t < trials; ++t) {
    Vec v(g.dim(), 0);
    for (const auto& b : d2.basis()) vec_axpy(F, v, static_cast<Scalar>(rng() % 5), b);
    if (is_zero(v)) continue;
    if (ideal_closure(g.lsa, {v}) == d2) ++ok;
  }
  Json data;
  data["derived_dim"] = d2.dim();
  data["trials"] = trials;
  data["generating"] = ok;
  r.add("sm(3,kappa,5)^(2) probe", ok == trials ? Status::Pass : Status::Inconclusive,
        std::to_string(ok) + "/" + std::to_string(trials) + " random elements generate the derived algebra", data);
}

void verify_suite(const std::string& sub, const RunConfig& cfg, Report& r) {
  if (sub == "homomorphism") {
    add_check_report(r, "homomorphism", verify_homomorphism(cfg.shape()));
    return;
  }
  if (sub == "golden15") {
    if (cfg.n != 1 || cfg.p != 5) throw UsageError("golden15 needs --n 1 --p 5");
    auto g = build_configured(cfg);
    const std::vector<std::size_t> want =
        g.kind == AlgebraKind::M ? std::vector<std::size_t>{1, 2, 3, 4, 4, 3, 2, 1} : std::vector<std::size_t>{1, 2, 2, 2, 2, 1};
    const auto got = g.graded_dims();
    r.add("graded dims", pass_if(got == want && g.lsa.min_degree() == -2), tuple_string(got), dims_json(g));
    add_check_report(r, "listed elements", verify_golden(g));
    return;
  }
  auto g = build_configured(cfg);
  if (sub == "jacobi") {
    add_check_report(r, "jacobi", verify_jacobi(g.lsa));
  } else if (sub == "restricted") {
    add_check_report(r, "restricted", verify_restricted(g.lsa));
  } else if (sub == "divclosure") {
    auto sm = g.kind == AlgebraKind::SM ? g : build_sm(cfg.shape());
    add_check_report(r, "divergence closure", verify_divergence_closure(sm));
  } else if (sub == "simplicity") {
    const Subspace whole = Subspace::whole(g.dim());
    std::size_t bad = 0;
    std::vector<char> full(g.dim(), 0);
    parallel_for(g.dim(), [&](std::size_t i) { full[i] = ideal_closure(g.lsa, {g.lsa.basis_vec(i)}) == whole; });
    for (char f : full) bad += !f;
    Json data;
    data["basis_vectors"] = g.dim();
    data["not_generating"] = bad;
    r.add("ideal closure", pass_if(bad == 0),
          std::to_string(g.dim() - bad) + "/" + std::to_string(g.dim()) + " basis vectors generate " + name_of(g),
          data);
    if (cfg.long_checks) long_simplicity_probe(cfg, r);
  } else {
    throw UsageError("unknown verify subcommand '" + sub + "'");
  }
}

// ------------------------------------------------------------------- char

PChar configured_chi(const ContactAlgebra& g, const RunConfig& cfg, bool required) {
  if (!cfg.chi) {
    if (required) throw UsageError("--chi is required");
    return zero_pchar(g.lsa);
  }
  try {
    return pchar_from_json(g.lsa, *cfg.chi);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

Json search_json(const ContactAlgebra& g, const SearchResult& s) {
  Json j;
  j["found"] = s.found;
  j["evaluations"] = s.evaluations;
  j["log"] = s.log;
  if (s.found) j["chi"] = pchar_to_json(g.lsa, s.chi);
  return j;
}

Json witness_json(const ContactAlgebra& g, const DeltaWitness& w) {
  auto vecs = [&](const std::vector<Vec>& vs) {
    Json a = Json::array();
    for (const auto& v : vs) {
      Json e = Json::object();
      for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k]) e[g.lsa.labels[k]] = v[k];
      a.push_back(std::move(e));
    }
    return a;
  };
  Json j;
  j["c"] = w.c;
  j["r"] = w.r;
  j["I"] = w.I;
  j["J"] = w.J;
  j["minor_rows"] = w.minor_rows;
  j["delta"] = vecs(w.delta);
  j["e"] = vecs(w.e);
  return j;
}

void classify(const ContactAlgebra& g, const PChar& chi, Report& r) {
  const int h = height(g.lsa, chi);
  Json data;
  data["height"] = h;
  r.add("height", Status::Pass, "ht(chi) = " + std::to_string(h), data);
  if (h == 1) {
    auto rs = is_regular_semisimple(g, chi, OrbitMode::Identity);
    Json d;
    d["value"] = rs.value;
    d["degenerate"] = rs.degenerate;
    r.add("regular semisimple", Status::Pass, std::string(rs.value ? "yes" : "no") + (rs.degenerate ? " (" + rs.warning + ")" : ""),
          d);
  }
  if (h >= 2 && !g.lsa.indices_of_degree(h).empty() && !g.lsa.indices_of_degree(h + 1).empty()) {
    auto m = char_matrix(g, chi);
    const auto rk = rank_of(g.F(), m);
    Json d;
    d["rank"] = rk;
    d["rank_a1"] = rank(g.F(), m.a1);
    d["rank_a2"] = rank(g.F(), m.a2);
    d["nonsingular"] = rk == 2 * g.shape.n + 1;
    r.add("rank", Status::Pass,
          "rank " + std::to_string(rk) + (rk == 2 * g.shape.n + 1 ? ", nonsingular" : ", singular"), d);
  } else if (h >= 2) {
    r.add("rank", Status::Pass, "undefined: g_[h] or g_[h+1] is zero");
  }
  if (h >= 5) {
    auto d = is_delta_invertible(g, chi, OrbitMode::GradingOrbit);
    Json j;
    j["decision"] = to_string(d.decision);
    j["log"] = d.log;
    if (d.decision == Decision::Yes) j["witness"] = witness_json(g, d.witness);
    r.add("delta-invertible", d.decision == Decision::Inconclusive ? Status::Inconclusive : Status::Pass,
          to_string(d.decision), j);
  }
}

void char_suite(const std::string& sub, const RunConfig& cfg, Report& r) {
  auto g = build_configured(cfg);
  if (sub == "classify") {
    classify(g, configured_chi(g, cfg, true), r);
  } else if (sub == "search") {
    auto s = search_char(g, cfg.target, cfg.seed, cfg.budget);
    r.add("search " + to_string(cfg.target), s.found ? Status::Pass : Status::Inconclusive,
          s.found ? "found after " + std::to_string(s.evaluations) + " evaluations" : s.log.back(), search_json(g, s));
  } else if (sub == "examples") {
    if (g.kind != AlgebraKind::M) throw UsageError("char examples needs --algebra m");
    std::vector<int> hs;
    if (cfg.h) {
      hs.push_back(*cfg.h);
    } else {
      for (int h = 2; h < static_cast<int>(cfg.p) - 2; ++h) hs.push_back(h);
    }
    for (int h : hs) {
      try {
        auto chi = build_example_nonsingular(g, h);
        Json d;
        d["chi"] = pchar_to_json(g.lsa, chi);
        d["rank"] = rank_chi(g, chi);
        r.add("nonsingular example h=" + std::to_string(h),
              pass_if(is_nonsingular(g, chi) && height(g.lsa, chi) == h), "rank " + std::to_string(rank_chi(g, chi)), d);
      } catch (const Error& e) {
        r.add("nonsingular example h=" + std::to_string(h), Status::Inconclusive, e.what());
      }
    }
    try {
      auto chi = build_example_singular(g);
      Json d;
      d["chi"] = pchar_to_json(g.lsa, chi);
      d["height"] = height(g.lsa, chi);
      d["rank"] = rank_chi(g, chi);
      r.add("singular example", pass_if(!is_nonsingular(g, chi)),
            "height " + std::to_string(height(g.lsa, chi)) + ", rank " + std::to_string(rank_chi(g, chi)), d);
    } catch (const Error& e) {
      r.add("singular example", Status::Inconclusive, e.what());
    }
  } else {
    throw UsageError("unknown char subcommand '" + sub + "'");
  }
}

// -------------------------------------------------------------- kac, theorem

constexpr std::size_t kDenseCap = 4000;

bool vanishes_on_negative(const LSA& L, const PChar& chi) {
  for (std::size_t k = 0; k < L.dim; ++k)
    if (L.degree[k] < 0 && chi.values[k]) return false;
  return true;
}

struct KacOptions {
  bool relations = true;
  bool irreducible = true;
  bool socle = false;
  unsigned samples = 64;
};

Check check_kac(const ContactAlgebra& g, const PChar& chi, const GModule& M, std::size_t index,
                std::uint64_t seed, const KacOptions& opt) {
  const auto& L = g.lsa;
  Check c;
  c.name = "K(M" + std::to_string(index) + ")";
  auto K = kac_module(g, chi, M);
  std::size_t law = M.dim;
  for (unsigned i = 0; i < g.shape.n; ++i) law *= g.shape.p;
  law <<= g.shape.n + 1;
  Json d;
  d["dim_M"] = M.dim;
  d["dim_K"] = K.dim();
  bool ok = K.dim() == law;
  bool unsure = false;
  std::vector<std::string> notes{"dim " + std::to_string(K.dim()) + (ok ? " = " : " != ") + "p^n 2^(n+1) dim M"};
  const auto all = filtration_basis(L, L.min_degree());
  if (opt.relations) {
    CheckReport rel;
    if (K.dim() <= kDenseCap) {
      rel = verify_module(L, K.as_module(all), chi);
      d["relations"] = "exhaustive";
    } else {
      std::vector<Vec> gens;
      for (int deg = L.min_degree(); deg <= 1; ++deg)
        for (auto& v : graded_basis(L, deg)) gens.push_back(v);
      rel = verify_induced_sampled(L, K, chi, gens, 1, seed);
      d["relations"] = "sampled";
    }
    d["relation_violations"] = rel.violation_count;
    ok = ok && rel.passed();
    notes.push_back(rel.passed() ? "relations hold" : "relations fail");
  }
  if (opt.irreducible) {
    Verdict v = Verdict::Inconclusive;
    std::string how;
    if (K.dim() <= kDenseCap) {
      auto res = meataxe_irreducible(K.as_module(all), seed);
      v = res.verdict;
      how = "MeatAxe";
      d["meataxe_attempts"] = res.attempts;
      d["meataxe_factor_degree"] = res.factor_degree;
    } else if (height(L, chi) <= 1 && vanishes_on_negative(L, chi)) {
      auto cert = kac_simplicity_certificate(g, chi, K, seed);
      how = "structural certificate";
      v = cert.passed() ? Verdict::Irreducible : cert.proved_reducible ? Verdict::Reducible : Verdict::Inconclusive;
      d["certificate"] = {{"free_action", cert.free_action},
                          {"top_kernel", cert.top_kernel},
                          {"top", to_string(cert.top.verdict)},
                          {"reaches_bottom", cert.reaches_bottom},
                          {"proved_reducible", cert.proved_reducible},
                          {"base", to_string(cert.base.verdict)}};
    } else {
      how = "no method at this size";
    }
    d["irreducible"] = to_string(v);
    d["method"] = how;
    ok = ok && v != Verdict::Reducible;
    unsure = unsure || v == Verdict::Inconclusive;
    notes.push_back(to_string(v) + " (" + how + ")");
  }
  if (opt.socle) {
    auto s = unique_socle_check(g, chi, K, opt.samples, seed);
    d["socle"] = {{"eigen_dim", s.eigen_dim}, {"exact", s.exact}, {"samples", s.samples}, {"pass", s.sample_pass}};
    ok = ok && s.passed();
    notes.push_back("socle " + std::string(s.exact ? "exact" : "not exact") + ", " + std::to_string(s.sample_pass) +
                    "/" + std::to_string(s.samples) + " walks");
  }
  c.status = !ok ? Status::Fail : unsure ? Status::Inconclusive : Status::Pass;
  for (std::size_t i = 0; i < notes.size(); ++i) c.detail += (i ? "; " : "") + notes[i];
  c.data = std::move(d);
  return c;
}

void module_checks(const ContactAlgebra& g, const PChar& chi, const SimpleFamily& fam, std::uint64_t seed,
                   const KacOptions& opt, Report& r) {
  Json d;
  d["count"] = fam.modules.size();
  d["complete"] = fam.complete;
  std::vector<std::size_t> dims;
  for (const auto& M : fam.modules) dims.push_back(M.dim);
  d["dims"] = dims;
  r.add("simple g^0-modules", fam.modules.empty() ? Status::Fail : Status::Pass,
        std::to_string(fam.modules.size()) + " modules" + (fam.complete ? ", complete family" : ""), d);
  std::vector<Check> out(fam.modules.size());
  parallel_for(fam.modules.size(), [&](std::size_t i) { out[i] = check_kac(g, chi, fam.modules[i], i, seed + i, opt); });
  for (auto& c : out) r.checks.push_back(std::move(c));
}

void kac_suite(const std::string& sub, const RunConfig& cfg, Report& r) {
  auto g = build_configured(cfg);
  const PChar chi = configured_chi(g, cfg, false);
  auto fam = simple_g0_modules(g, chi, cfg.seed, cfg.module + 1);
  if (cfg.module >= fam.modules.size())
    throw UsageError("--module " + std::to_string(cfg.module) + " out of range (" + std::to_string(fam.modules.size()) +
                     " modules)");
  KacOptions opt;
  if (sub == "build") {
    opt.irreducible = false;
  } else if (sub != "irreducible") {
    throw UsageError("unknown kac subcommand '" + sub + "'");
  }
  r.add("chi", Status::Pass, "ht(chi) = " + std::to_string(height(g.lsa, chi)), pchar_to_json(g.lsa, chi));
  r.checks.push_back(check_kac(g, chi, fam.modules[cfg.module], cfg.module, cfg.seed, opt));
}

// Ranks of chi([., .]) on the even and odd parts of g^0.
std::pair<std::size_t, std::size_t> form_ranks(const LSA& L, const PChar& chi) {
  std::vector<Vec> ev, od;
  for (auto& v : filtration_basis(L, 0)) (L.vec_parity(v) == 0u ? ev : od).push_back(v);
  auto form = [&](const std::vector<Vec>& X) {
    Matrix m(X.size(), X.size());
    for (std::size_t i = 0; i < X.size(); ++i)
      for (std::size_t j = 0; j < X.size(); ++j) m(i, j) = chi(L.bracket(X[i], X[j]), L.F());
    return rank(L.F(), m);
  };
  return {form(ev), form(od)};
}

void theorem_suite(const std::string& sub, const RunConfig& cfg, Report& r) {
  auto g = build_configured(cfg);
  const auto& L = g.lsa;
  SearchTarget target;
  if (sub == "nonsingular" || sub == "socle") {
    target = SearchTarget::Nonsingular;
  } else if (sub == "regular-semisimple") {
    target = SearchTarget::RegularSemisimple;
  } else if (sub == "delta-invertible") {
    target = SearchTarget::DeltaInvertible;
  } else {
    throw UsageError("unknown theorem subcommand '" + sub + "'");
  }
  auto s = search_char(g, target, cfg.seed, cfg.budget);
  r.add("search " + to_string(target), s.found ? Status::Pass : Status::Inconclusive,
        s.found ? "found after " + std::to_string(s.evaluations) + " evaluations" : s.log.back(), search_json(g, s));
  if (!s.found) return;
  const PChar& chi = s.chi;

  if (target == SearchTarget::DeltaInvertible) {
    auto d = is_delta_invertible(g, chi, OrbitMode::Identity);
    const auto why = d.decision == Decision::Yes ? validate_delta_witness(g, chi, d.witness) : "no witness";
    Json w;
    w["witness"] = witness_json(g, d.witness);
    w["log"] = d.log;
    r.add("witness", pass_if(why.empty()), why.empty() ? "all five conditions revalidated" : why, w);
    // The module suites need simple u_chi(g^0)-modules; their size follows
    // from the rank of chi([., .]) on g^0.
    const auto [re, ro] = form_ranks(L, chi);
    double est = std::pow(static_cast<double>(g.shape.p), re / 2.0) * std::pow(2.0, ro / 2.0);
    for (unsigned i = 0; i < g.shape.n; ++i) est *= g.shape.p;
    est *= std::pow(2.0, g.shape.n + 1);
    Json m;
    m["form_rank_even"] = re;
    m["form_rank_odd"] = ro;
    m["estimated_dim_K"] = static_cast<std::uint64_t>(est);
    std::ostringstream detail;
    detail << "simple g^0-modules expected near p^" << re / 2 << " * 2^" << ro / 2
           << "; K would have about " << static_cast<std::uint64_t>(est) << " dimensions, beyond the MeatAxe here";
    r.add("K(M) simplicity and socle", Status::Inconclusive, detail.str(), m);
    return;
  }

  KacOptions opt;
  opt.samples = cfg.samples;
  const int h = height(L, chi);
  if (target == SearchTarget::RegularSemisimple) {
    auto rs = is_regular_semisimple(g, chi, OrbitMode::Identity);
    r.add("regular semisimple", pass_if(rs.value && h == 1), rs.degenerate ? rs.warning : "conditions hold");
  } else {
    r.add("nonsingular", pass_if(is_nonsingular(g, chi)), "rank " + std::to_string(rank_chi(g, chi)));
    opt.socle = true;
    if (sub == "socle") opt.irreducible = false;
  }
  module_checks(g, chi, simple_g0_modules(g, chi, cfg.seed), cfg.seed, opt, r);
}

}  // namespace

Report run_suite(const std::string& command, const std::string& sub, const RunConfig& cfg) {
  Report r;
  r.suite = command + " " + sub;
  r.config = cfg;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (command == "algebra") {
      algebra_suite(sub, cfg, r);
    } else if (command == "verify") {
      verify_suite(sub, cfg, r);
    } else if (command == "char") {
      char_suite(sub, cfg, r);
    } else if (command == "kac") {
      kac_suite(sub, cfg, r);
    } else if (command == "theorem") {
      theorem_suite(sub, cfg, r);
    } else {
      throw UsageError("unknown command '" + command + "'");
    }
  } catch (const UsageError&) {
    throw;
  } catch (const Error& e) {
    r.add("error", Status::Fail, e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace ko
