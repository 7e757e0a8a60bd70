#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "ko/suites.hpp"

namespace {

constexpr int kUsage = 64;

struct Options {
  std::string algebra = "m";
  std::string format = "json";
  std::string out;
  std::string chi;
  std::string target = "nonsingular";
  int h = 0;
};

void add_options(CLI::App* app, ko::RunConfig& cfg, Options& o) {
  app->add_option("--algebra", o.algebra, "m or sm")->check(CLI::IsMember({"m", "sm"}));
  app->add_option("--n", cfg.n, "number of even variables")->check(CLI::PositiveNumber);
  app->add_option("--p", cfg.p, "characteristic, a prime above 3");
  app->add_option("--kappa", cfg.kappa, "divergence parameter of sm");
  app->add_option("--seed", cfg.seed, "seed for every randomized step (default 0)");
  app->add_option("--budget", cfg.budget, "predicate evaluations allowed in searches");
  app->add_option("--samples", cfg.samples, "random vectors for the socle check");
  app->add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app->add_option("--out", o.out, "write the report (or exported algebra) here");
  app->add_option("--chi", o.chi, "p-character as JSON, or @file");
  app->add_option("--height", o.h, "height for char examples");
  app->add_option("--module", cfg.module, "index of the simple g^0-module for kac commands");
  app->add_option("--target", o.target, "search target")
      ->check(CLI::IsMember({"nonsingular", "delta-invertible", "regular-semisimple"}));
  app->add_flag("--long", cfg.long_checks, "run the optional long checks");
}

std::string read_chi(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw ko::UsageError("cannot read " + arg.substr(1));
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

ko::SearchTarget parse_target(const std::string& t) {
  if (t == "delta-invertible") return ko::SearchTarget::DeltaInvertible;
  if (t == "regular-semisimple") return ko::SearchTarget::RegularSemisimple;
  return ko::SearchTarget::Nonsingular;
}

std::string render(const ko::Report& r, const std::string& format) {
  if (format == "csv") return r.to_csv();
  if (format == "text") {
    std::ostringstream s;
    s << r.to_text() << "time: " << r.seconds << " s\n";
    return s.str();
  }
  return r.to_json().dump(2) + "\n";
}

bool write_file(const std::string& path, const std::string& body) {
  std::ofstream f(path, std::ios::binary);
  f << body;
  return static_cast<bool>(f);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Odd contact Lie superalgebras over F_p and their Kac modules"};
  app.require_subcommand(1);
  ko::RunConfig cfg;
  Options o;
  std::string command, sub;

  const std::map<std::string, std::vector<std::string>> tree = {
      {"algebra", {"build", "dims", "export"}},
      {"verify", {"jacobi", "restricted", "homomorphism", "divclosure", "simplicity", "golden15"}},
      {"char", {"classify", "search", "examples"}},
      {"kac", {"build", "irreducible"}},
      {"theorem", {"nonsingular", "delta-invertible", "regular-semisimple", "socle"}},
  };
  const std::map<std::string, std::string> about = {
      {"algebra", "build m or sm(kappa), graded dimensions, JSON export"},
      {"verify", "structural checks of the built algebra"},
      {"char", "p-characters: classify, search, examples"},
      {"kac", "Kac modules K(M) for a given p-character"},
      {"theorem", "search a character class and check every K(M)"},
  };
  for (const auto& [cmd, subs] : tree) {
    auto* c = app.add_subcommand(cmd, about.at(cmd));
    c->require_subcommand(1);
    for (const auto& s : subs) {
      auto* leaf = c->add_subcommand(s);
      add_options(leaf, cfg, o);
      leaf->callback([&command, &sub, cmd, s] {
        command = cmd;
        sub = s;
      });
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    cfg.algebra = o.algebra == "sm" ? ko::AlgebraKind::SM : ko::AlgebraKind::M;
    cfg.target = parse_target(o.target);
    if (o.h) cfg.h = o.h;
    if (!o.chi.empty()) {
      try {
        cfg.chi = ko::Json::parse(read_chi(o.chi));
      } catch (const ko::Json::parse_error& e) {
        throw ko::UsageError(std::string("--chi: ") + e.what());
      }
    }

    if (command == "algebra" && sub == "export") {
      auto g = ko::build_configured(cfg);
      const std::string doc = ko::export_lsa(g.lsa).dump() + "\n";
      auto report = ko::run_suite(command, sub, cfg);
      if (o.out.empty()) {
        std::cout << doc;
        std::cerr << report.to_text();
      } else {
        if (!write_file(o.out, doc)) {
          std::cerr << "cannot write " << o.out << "\n";
          return 1;
        }
        std::cout << render(report, o.format);
      }
      return report.exit_code();
    }

    auto report = ko::run_suite(command, sub, cfg);
    const std::string body = render(report, o.format);
    if (o.out.empty()) {
      std::cout << body;
    } else if (!write_file(o.out, body)) {
      std::cerr << "cannot write " << o.out << "\n";
      return 1;
    }
    return report.exit_code();
  } catch (const ko::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  }
}
