// Acceptance suite: one test case per criterion, each printing a single
// PASS/FAIL line.  Tolerances and corpus sizes are pinned here, not
// configurable.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>

#include "ordkit/io.hpp"
#include "ordkit/sweeps.hpp"

using namespace ordkit;

namespace {

constexpr std::uint64_t kSeed = 20240817;

struct Timer {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  }
};

void report(const std::string& name, bool pass,
            const sweeps::SweepResult* r = nullptr, double secs = -1) {
  std::cout << (pass ? "PASS" : "FAIL") << " " << name;
  if (r)
    for (const auto& [k, v] : r->stats) std::cout << " " << k << "=" << v;
  if (secs >= 0) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", secs);
    std::cout << " seconds=" << buf;
  }
  std::cout << "\n";
}

}  // namespace

TEST_CASE("criterion 1: duality round-trip over >= 500 structures") {
  Timer t;
  sweeps::SweepResult r = sweeps::duality_roundtrip_sweep(kSeed);
  bool in_time = t.seconds() < 60.0;
  report("duality-roundtrip", r.pass && in_time, &r, t.seconds());
  CHECK(r.pass);
  CHECK(in_time);
}

TEST_CASE("criterion 2: sigma-discreteness certificate, exhaustive") {
  Timer t;
  sweeps::SweepResult r = sweeps::sigma_discreteness_sweep(kSeed);
  bool in_time = t.seconds() < 600.0;
  report("sigma-discreteness", r.pass && in_time, &r, t.seconds());
  CHECK(r.pass);
  CHECK(in_time);
}

TEST_CASE("criterion 3: gate laws and Helly witnesses") {
  Timer t;
  sweeps::SweepResult r = sweeps::gate_laws_sweep(kSeed);
  report("gate-laws", r.pass, &r, t.seconds());
  CHECK(r.pass);
}

TEST_CASE("criterion 4: oscillation bound over >= 1000 triples") {
  Timer t;
  sweeps::SweepResult r = sweeps::oscillation_sweep(kSeed);
  bool in_time = t.seconds() < 600.0;
  report("oscillation-bound", r.pass && in_time, &r, t.seconds());
  CHECK(r.pass);
  CHECK(in_time);
}

TEST_CASE("criterion 5: range gaps and interval-emptiness transfer") {
  Timer t;
  sweeps::SweepResult r = sweeps::range_gap_sweep(kSeed);
  report("range-gap-and-interval-emptiness", r.pass, &r, t.seconds());
  CHECK(r.pass);
}

TEST_CASE("criterion 6: SLD partition audit") {
  Timer t;
  sweeps::SweepResult r = sweeps::sld_audit_sweep(kSeed);
  report("sld-partition", r.pass, &r, t.seconds());
  CHECK(r.pass);
}

TEST_CASE("criterion 7: p-sequence against the closed form") {
  sweeps::SweepResult r = sweeps::p_sequence_check();
  report("p-sequence", r.pass, &r);
  CHECK(r.pass);
}

TEST_CASE("criterion 8: CLI determinism, byte-identical reports") {
  const std::string cli = ORDKIT_CLI_PATH;
  const std::string samples = ORDKIT_SAMPLES_DIR;
  const std::string tmp = "acceptance_tmp";

  auto run = [&](const std::string& args, const std::string& tag) {
    std::string cmd = cli + " " + args + " > " + tmp + "_" + tag +
                      ".txt 2>&1";
    return std::system(cmd.c_str());
  };
  auto same_bytes = [&](const std::string& a, const std::string& b) {
    return read_file(a) == read_file(b);
  };

  std::vector<std::string> commands = {
      "validate " + samples + "/kite.struct",
      "dualize " + samples + "/three_chain.struct --report " + tmp +
          "_TAG.json",
      "roundtrip " + samples + "/kite.struct --report " + tmp + "_TAG.json",
      "decompose " + samples + "/kite.struct " + samples +
          "/kite_x.func --report " + tmp + "_TAG.json",
      "osc-check " + samples + "/three_chain.struct " + samples +
          "/three_chain_id.func --eps 1/2 --report " + tmp + "_TAG.json",
      "leaps " + samples + "/grid22.struct " + samples +
          "/grid22_sum.func --eps 1/2",
      "cover " + samples + "/three_chain.struct " + samples +
          "/three_chain_id.func --eps 1/2 --report " + tmp + "_TAG.json",
      "gates " + samples + "/grid22.struct",
      "discreteness " + samples + "/kite.struct",
      "generate random-semilattice --seed 7 --size 6",
      "generate tree --seed 3 --size 5",
      "generate chain-product --seed 5 --size 8 --chains 3,3",
      "sld-check " + samples + "/grid22.struct --eps 1/2 --all-binary "
      "--random 5 --seed 3 --report " + tmp + "_TAG.json",
      "selftest --quick --seed 5",
  };

  bool all_same = true;
  std::vector<std::string> scratch;
  for (size_t i = 0; i < commands.size(); ++i) {
    std::string first = commands[i], second = commands[i];
    auto replace = [](std::string s, const std::string& tag) {
      auto pos = s.find("_TAG");
      if (pos != std::string::npos) s.replace(pos, 4, "_" + tag);
      return s;
    };
    int rc1 = run(replace(first, "a"), "a" + std::to_string(i));
    int rc2 = run(replace(second, "b"), "b" + std::to_string(i));
    scratch.push_back(tmp + "_a" + std::to_string(i) + ".txt");
    scratch.push_back(tmp + "_b" + std::to_string(i) + ".txt");
    bool same = rc1 == rc2 && same_bytes(scratch[scratch.size() - 2],
                                         scratch[scratch.size() - 1]);
    if (first.find("_TAG") != std::string::npos) {
      same = same && same_bytes(tmp + "_a.json", tmp + "_b.json");
      scratch.push_back(tmp + "_a.json");
      scratch.push_back(tmp + "_b.json");
    }
    if (!same) {
      all_same = false;
      std::cout << "  nondeterministic: " << commands[i] << "\n";
    }
  }
  for (const std::string& file : scratch) std::remove(file.c_str());
  report("cli-determinism", all_same);
  CHECK(all_same);
}
