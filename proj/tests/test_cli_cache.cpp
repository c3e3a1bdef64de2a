#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <fstream>
#include <thread>

#include "pg/cli/commands.hpp"

using namespace pg;

namespace {

std::filesystem::path scratch(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("pg-cache-test-" + std::to_string(::getpid()) + "-" + name);
  std::filesystem::remove_all(p);
  return p;
}

QIdeal twisted_cubic() {
  auto v = make_vars({"x", "y", "z", "w"});
  return QIdeal::of({parse_poly("x*z - y^2", v), parse_poly("y*w - z^2", v), parse_poly("x*w - y*z", v)});
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Hash, KnownVectors) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST(Cache, MissThenHitIsIdentical) {
  auto dir = scratch("hit");
  Cache cache(dir);
  auto ideal = twisted_cubic();
  auto a = cached_basis(cache, ideal, MonomialOrder::grevlex());
  EXPECT_EQ(cache.computations(), 1);
  auto bytes = slurp(cache.entry_path(basis_cache_key(ideal, MonomialOrder::grevlex())));
  auto b = cached_basis(cache, ideal, MonomialOrder::grevlex());
  EXPECT_EQ(cache.computations(), 1);
  EXPECT_EQ(cache.hits(), 1);
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_EQ(a.dump(), basis_to_json(ideal.basis()).dump());
  EXPECT_EQ(bytes, slurp(cache.entry_path(basis_cache_key(ideal, MonomialOrder::grevlex()))));

  Cache reopened(dir);
  EXPECT_EQ(cached_basis(reopened, ideal, MonomialOrder::grevlex()).dump(), a.dump());
  EXPECT_EQ(reopened.computations(), 0);
  std::filesystem::remove_all(dir);
}

TEST(Cache, OrderChangesKey) {
  auto ideal = twisted_cubic();
  EXPECT_NE(basis_cache_key(ideal, MonomialOrder::grevlex()), basis_cache_key(ideal, MonomialOrder::lex()));
  auto v = ideal.vars();
  auto other = QIdeal::of({parse_poly("x*z - y^2", v), parse_poly("y*w - z^2", v)});
  EXPECT_NE(basis_cache_key(ideal, MonomialOrder::grevlex()), basis_cache_key(other, MonomialOrder::grevlex()));
  EXPECT_EQ(basis_cache_key(ideal, MonomialOrder::lex()), basis_cache_key(twisted_cubic(), MonomialOrder::lex()));
}

TEST(Cache, ParallelRequestsComputeOnce) {
  auto dir = scratch("parallel");
  Cache cache(dir);
  std::atomic<int> calls{0};
  std::vector<std::thread> ts;
  std::vector<std::string> out(8);
  for (int i = 0; i < 8; ++i)
    ts.emplace_back([&, i] {
      out[i] = cache.get_or_compute("k", [&] {
        ++calls;
        std::this_thread::sleep_for(std::chrono::milliseconds(50));
        return std::string("value");
      });
    });
  for (auto& t : ts) t.join();
  EXPECT_EQ(calls.load(), 1);
  EXPECT_EQ(cache.computations(), 1);
  for (const auto& s : out) EXPECT_EQ(s, "value");
  std::filesystem::remove_all(dir);
}

TEST(Cache, ConcurrentProcessesComputeOnce) {
  auto dir = scratch("procs");
  auto log = dir.string() + ".log";
  std::filesystem::remove(log);
  auto work = [&] {
    Cache cache(dir);
    return cache.get_or_compute("shared", [&] {
      std::ofstream(log, std::ios::app) << "x";
      std::this_thread::sleep_for(std::chrono::milliseconds(100));
      return std::string("payload");
    });
  };
  std::vector<pid_t> kids;
  for (int i = 0; i < 3; ++i) {
    pid_t pid = ::fork();
    ASSERT_GE(pid, 0);
    if (pid == 0) ::_exit(work() == "payload" ? 0 : 1);
    kids.push_back(pid);
  }
  EXPECT_EQ(work(), "payload");
  for (auto pid : kids) {
    int status = 0;
    ::waitpid(pid, &status, 0);
    EXPECT_TRUE(WIFEXITED(status) && WEXITSTATUS(status) == 0);
  }
  EXPECT_EQ(slurp(log), "x");
  std::filesystem::remove_all(dir);
  std::filesystem::remove(log);
}

TEST(Cache, CorruptEntryIsRecomputed) {
  auto dir = scratch("corrupt");
  Cache cache(dir);
  auto ideal = twisted_cubic();
  auto good = cached_basis(cache, ideal, MonomialOrder::grevlex()).dump();
  auto path = cache.entry_path(basis_cache_key(ideal, MonomialOrder::grevlex()));
  for (const char* junk : {"{not json", "{\"key\":\"other\",\"value\":\"x\"}", "[]", ""}) {
    std::ofstream(path, std::ios::binary | std::ios::trunc) << junk;
    Cache fresh(dir);
    EXPECT_EQ(cached_basis(fresh, ideal, MonomialOrder::grevlex()).dump(), good) << junk;
    EXPECT_EQ(fresh.computations(), 1) << junk;
    Cache again(dir);
    cached_basis(again, ideal, MonomialOrder::grevlex());
    EXPECT_EQ(again.computations(), 0) << junk;
  }
  std::filesystem::remove_all(dir);
}

TEST(Cache, EnvironmentDirectory) {
  ::setenv("PG_CACHE_DIR", "/tmp/pg-env-cache", 1);
  EXPECT_EQ(Cache::default_dir(), std::filesystem::path("/tmp/pg-env-cache"));
  ::unsetenv("PG_CACHE_DIR");
  EXPECT_EQ(Cache::default_dir(), std::filesystem::path(".pg-cache"));
}

TEST(Cache, ThunkFailureIsNotStored) {
  auto dir = scratch("throw");
  Cache cache(dir);
  EXPECT_THROW(cache.get_or_compute("bad", []() -> std::string { throw InputError("boom"); }), InputError);
  EXPECT_EQ(cache.get_or_compute("bad", [] { return std::string("ok"); }), "ok");
  std::filesystem::remove_all(dir);
}

TEST(Report, Shape) {
  auto r = grass_degree(3, 7);
  auto j = to_json(r);
  EXPECT_EQ(j["command"], "grass degree");
  EXPECT_EQ(j["results"]["degree"], "462");
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["inputs_digest"].get<std::string>().size(), 64u);
  EXPECT_TRUE(j["wall_time"].is_string());
  EXPECT_EQ(r.exit_code(), 0);
  EXPECT_NE(grass_degree(3, 6).inputs_digest(), r.inputs_digest());
  EXPECT_EQ(grass_degree(3, 7).inputs_digest(), r.inputs_digest());
}

TEST(Report, FailCarriesWitness) {
  auto r = timed_report("demo", json::object(), [](Report& rep) { rep.status = "fail"; });
  EXPECT_EQ(r.exit_code(), 1);
  EXPECT_FALSE(r.witness.empty());
  auto region = builtin_region();
  region.cubics[0] += parse_poly("x^3", region.plane);
  auto d = delpezzo_verify(to_json(region), {}, CommandOptions{});
  EXPECT_EQ(d.status, "fail");
  EXPECT_EQ(d.exit_code(), 1);
  ASSERT_FALSE(d.witness.empty());
  EXPECT_EQ(d.witness.front().rfind("incidence:", 0), 0u);
  EXPECT_EQ(d.results["failed_check"], "incidence");
}

TEST(Commands, Matroid) {
  auto r = amp_matroid(3, 10, {1, 3, 5, 7, 9});
  EXPECT_EQ(r.results["e"], -2);
  EXPECT_EQ(r.results["c"], 5);
  EXPECT_EQ(r.results["in_P"], false);
  EXPECT_THROW(amp_matroid(3, 10, {1, 10}), InputError);
}

TEST(Commands, Example5) {
  auto r = example5_verify(CommandOptions{});
  EXPECT_EQ(r.status, "pass");
  EXPECT_EQ(r.results["dim"], 1);
  EXPECT_EQ(r.results["degree"], 5);
  EXPECT_EQ(r.results["genus"], 1);
  EXPECT_EQ(r.results["smooth_mod"], json::array({32003, 65537}));
  EXPECT_EQ(r.results["positive_minors"], true);
}

TEST(Commands, GenusAndBoundary) {
  auto g = amp_genus(3, 4);
  EXPECT_EQ(g.results["genus_bound"], "925");
  EXPECT_EQ(amp_genus(2, 2).results["note"].get<std::string>().empty(), false);
  auto b = amp_boundary(4, 1, 8, CommandOptions{});
  EXPECT_EQ(b.results["count"], 20);
  EXPECT_THROW(amp_boundary(3, 1, 8, CommandOptions{}), InputError);
}

TEST(Commands, CurveGates) {
  CommandOptions opt;
  EXPECT_THROW(amp_curve(4, 1, 6, {1, 4}, opt), InputError);
  auto r = amp_curve(2, 1, 4, {1}, opt);
  EXPECT_EQ(r.results["degree"], 1);
  EXPECT_EQ(r.results["genus"], 0);
  EXPECT_EQ(r.status, "pass");
  opt.nodes = std::vector<Rational>{Rational(0), Rational(2), Rational(1), Rational(3)};
  EXPECT_THROW(amp_curve(2, 1, 4, {1}, opt), InputError);
}

TEST(Commands, GbUsesCache) {
  auto dir = scratch("gb");
  Cache cache(dir);
  CommandOptions opt;
  auto j = to_json(twisted_cubic());
  auto a = gb_command(j, opt, cache);
  auto b = gb_command(j, opt, cache);
  EXPECT_EQ(a.timings["cache"], "miss");
  EXPECT_EQ(b.timings["cache"], "hit");
  EXPECT_EQ(a.results.dump(), b.results.dump());
  EXPECT_EQ(a.results["hilbert"]["degree"], 3);
  opt.order = "lex";
  EXPECT_EQ(gb_command(j, opt, cache).timings["cache"], "miss");
  opt.order = "revlex";
  EXPECT_THROW(gb_command(j, opt, cache), InputError);
  std::filesystem::remove_all(dir);
}

TEST(Commands, CubeDemo) {
  auto r = cube_demo(CommandOptions{});
  EXPECT_EQ(r.status, "pass");
  EXPECT_EQ(r.results["data"]["adjoint"]["degree"], 2);
  EXPECT_FALSE(r.timings.empty());
}
