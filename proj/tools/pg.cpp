#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "pg/cli/commands.hpp"

using namespace pg;

namespace {

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<Rational> rational_list(const std::string& s) {
  std::vector<Rational> out;
  for (const auto& x : split_list(s)) out.push_back(Rational::parse(x));
  return out;
}

template <typename T>
std::vector<T> integer_list(const std::string& s, const char* what) {
  std::vector<T> out;
  for (const auto& x : split_list(s)) {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(x, &pos);
    } catch (const std::logic_error&) {
      pos = 0;
    }
    if (pos != x.size() || v < 0) throw InputError(std::string("bad ") + what + " entry '" + x + "'");
    out.push_back(static_cast<T>(v));
  }
  return out;
}

json read_json(const std::string& path) {
  std::stringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    ss << in.rdbuf();
  }
  auto j = json::parse(ss.str(), nullptr, false);
  if (j.is_discarded()) throw InputError(path + " is not valid JSON");
  return j;
}

struct Globals {
  std::string json_out;
  std::string order = "grevlex";
  std::string primes;
  std::string nodes;
  std::string cache_dir;
  bool heavy = false;
};

CommandOptions command_options(const Globals& g, const std::string& z_file) {
  CommandOptions o;
  o.order = g.order;
  o.heavy = g.heavy;
  if (!g.primes.empty()) o.primes = integer_list<std::uint64_t>(g.primes, "prime");
  if (o.primes.empty()) throw InputError("--primes needs at least one prime");
  if (!g.nodes.empty()) o.nodes = rational_list(g.nodes);
  if (!z_file.empty()) o.z = read_json(z_file);
  return o;
}

int emit(const Report& r, const Globals& g, bool print_report = true) {
  auto j = to_json(r);
  if (!g.json_out.empty()) {
    std::ofstream out(g.json_out);
    if (!out) throw InputError("cannot write " + g.json_out);
    out << j.dump(2) << "\n";
  }
  if (print_report) std::cout << j.dump(2) << "\n";
  for (const auto& w : r.witness) std::cerr << "FAIL: " << w << "\n";
  return r.exit_code();
}

int run(int argc, char** argv) {
  CLI::App app{"Exact computations on amplituhedra, Grassmannians and a genus-one positive geometry", "pg"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--json", g.json_out, "also write the report to FILE");
  app.add_option("--order", g.order, "monomial order: grevlex, lex or block(k)");
  app.add_option("--primes", g.primes, "primes for smoothness probes, e.g. 32003,65537");
  app.add_option("--nodes", g.nodes, "Vandermonde nodes, e.g. 0,1,2");
  app.add_option("--cache-dir", g.cache_dir, "Groebner basis cache directory (default $PG_CACHE_DIR or .pg-cache)");
  app.add_flag("--heavy", g.heavy, "allow m=4 curve computations");

  std::function<int()> action;

  auto* grass = app.add_subcommand("grass", "Grassmannian formulas");
  grass->require_subcommand(1);
  auto* gdeg = grass->add_subcommand("degree", "degree of Gr(K,N)");
  std::size_t gk = 0, gn = 0;
  gdeg->add_option("K", gk)->required();
  gdeg->add_option("N", gn)->required();
  gdeg->callback([&] {
    action = [&] {
      auto r = grass_degree(gk, gn);
      std::cout << r.results["degree"].get<std::string>() << "\n";
      return emit(r, g, false);
    };
  });

  auto* amp = app.add_subcommand("amp", "amplituhedron boundaries and residual curves");
  amp->require_subcommand(1);
  int am = 2;
  std::size_t ak = 0, an = 0;
  std::string az, aidx;
  auto* boundary = amp->add_subcommand("boundary", "boundary divisors");
  boundary->add_option("--m", am)->required();
  boundary->add_option("--k", ak)->required();
  boundary->add_option("--n", an)->required();
  boundary->add_option("--z", az, "Z-matrix JSON file");
  boundary->callback([&] { action = [&] { return emit(amp_boundary(am, ak, an, command_options(g, az)), g); }; });

  auto* curve = amp->add_subcommand("curve", "residual curve invariants");
  curve->add_option("--m", am)->required();
  curve->add_option("--k", ak)->required();
  curve->add_option("--n", an)->required();
  curve->add_option("--z", az, "Z-matrix JSON file");
  curve->add_option("--indices", aidx, "divisor indices, e.g. 1,3,5 (pairs i,j for m=4)")->required();
  curve->callback([&] {
    action = [&] {
      return emit(amp_curve(am, ak, an, integer_list<std::size_t>(aidx, "index"), command_options(g, az)), g);
    };
  });

  auto* matroid = amp->add_subcommand("matroid", "rank-2 matroid residual test");
  matroid->add_option("--k", ak)->required();
  matroid->add_option("--n", an)->required();
  matroid->add_option("--indices", aidx)->required();
  matroid->callback([&] { action = [&] { return emit(amp_matroid(ak, an, integer_list<std::size_t>(aidx, "index")), g); }; });

  auto* genus = amp->add_subcommand("genus", "genus formulas");
  genus->add_option("--k", ak)->required();
  genus->add_option("--m", am)->required();
  genus->callback([&] { action = [&] { return emit(amp_genus(ak, am), g); }; });

  auto* gb = app.add_subcommand("gb", "reduced Groebner basis of an ideal JSON file");
  std::string gb_file;
  gb->add_option("FILE", gb_file, "ideal JSON, - for stdin")->required();
  gb->callback([&] {
    action = [&] {
      Cache cache(g.cache_dir.empty() ? Cache::default_dir() : std::filesystem::path(g.cache_dir));
      return emit(gb_command(read_json(gb_file), command_options(g, ""), cache), g);
    };
  });

  auto* dp = app.add_subcommand("delpezzo", "genus-one region");
  dp->require_subcommand(1);
  auto* verify = dp->add_subcommand("verify", "verify every stage");
  std::string lambdas, region_file;
  verify->add_option("--lambda", lambdas, "kernel samples, e.g. 1,-1,1/2 (0 is always added)");
  verify->add_option("--region", region_file, "region JSON instead of the built-in data");
  verify->callback([&] {
    action = [&] {
      std::vector<Rational> ls;
      if (!lambdas.empty()) {
        ls = rational_list(lambdas);
        if (std::none_of(ls.begin(), ls.end(), [](const Rational& x) { return x.is_zero(); }))
          ls.insert(ls.begin(), Rational(0));
      }
      std::optional<json> region;
      if (!region_file.empty()) region = read_json(region_file);
      return emit(delpezzo_verify(region, ls, command_options(g, "")), g);
    };
  });

  auto* cube = app.add_subcommand("cube", "plain cube regression");
  cube->require_subcommand(1);
  cube->add_subcommand("demo", "verify the plain cube")->callback([&] {
    action = [&] { return emit(cube_demo(command_options(g, "")), g); };
  });

  auto* ex5 = app.add_subcommand("example5", "k=3, n=10 residual curve");
  ex5->require_subcommand(1);
  ex5->add_subcommand("verify", "dimension, degree, genus and smoothness")->callback([&] {
    action = [&] { return emit(example5_verify(command_options(g, "")), g); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return 2;
  }
  if (!action) {
    std::cerr << app.help();
    return 2;
  }
  return action();
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
