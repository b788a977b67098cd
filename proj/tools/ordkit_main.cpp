// ordkit command-line surface: validation, duality checks, sigma-discrete
// decomposition, leap/cover/oscillation analysis, corpus generators and the
// self-test sweeps.  Every command prints a deterministic text report to
// stdout and, with --report, writes the same data as JSON; the exit status
// is 0 exactly when every asserted property held.

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ordkit/duality.hpp"
#include "ordkit/generators.hpp"
#include "ordkit/io.hpp"
#include "ordkit/leaps.hpp"
#include "ordkit/prng.hpp"
#include "ordkit/sigma.hpp"
#include "ordkit/sweeps.hpp"

using nlohmann::json;
using namespace ordkit;

namespace {

struct Output {
  std::string report_path;
  json data = json::object();

  void flush() const {
    if (!report_path.empty()) write_file(report_path, data.dump(2) + "\n");
  }
};

std::string subset_names(const FiniteSemilattice& K, Subset s) {
  std::string out = "{";
  bool first = true;
  for_each_bit(s, [&](int x) {
    if (!first) out += ",";
    out += K.name(x);
    first = false;
  });
  return out + "}";
}

std::string member_set(const ChainProductSublattice& K, Subset s) {
  std::string out = "{";
  bool first = true;
  for_each_bit(s, [&](int x) {
    if (!first) out += " ";
    out += "(" + K.member_name(x) + ")";
    first = false;
  });
  return out + "}";
}

json subset_json(const FiniteSemilattice& K, Subset s) {
  json arr = json::array();
  for_each_bit(s, [&](int x) { arr.push_back(K.name(x)); });
  return arr;
}

int exhaustive_cap() {
  if (const char* env = std::getenv("ORDKIT_EXHAUSTIVE_CAP"))
    return std::atoi(env);
  return 16;
}

Rational parse_eps(const std::string& text) { return Rational::parse(text); }

const ChainProductSublattice& require_product(const ParsedStructure& s) {
  if (s.kind != StructureKind::ChainProduct)
    throw Error(ErrorCode::PreconditionViolation,
                "this command needs a chain-product structure");
  return *s.product;
}

int cmd_validate(const std::string& path, Output& out) {
  ParsedStructure s = parse_structure_file(path);
  const FiniteSemilattice& K = s.base();
  const char* kind = s.kind == StructureKind::Semilattice  ? "semilattice"
                     : s.kind == StructureKind::Lattice    ? "lattice"
                                                           : "chain-product";
  std::cout << "certified " << kind << " with " << K.size() << " elements\n";
  std::cout << "zero " << K.name(K.zero()) << "\n";
  if (s.kind == StructureKind::Lattice)
    std::cout << "one " << K.name(s.lattice->one()) << "\n";
  if (s.kind == StructureKind::ChainProduct) {
    std::cout << "chains";
    for (int i = 0; i < s.product->coords(); ++i)
      std::cout << " " << s.product->arity(i);
    std::cout << "\n";
  }
  out.data["kind"] = kind;
  out.data["elements"] = K.size();
  out.data["zero"] = K.name(K.zero());
  return 0;
}

int cmd_dualize(const std::string& path, Output& out) {
  ParsedStructure s = parse_structure_file(path);
  DualSemilattice D = dual_semilattice(s.base());
  const FiniteSemilattice& sl = D.semilattice();
  std::cout << "dual semilattice with " << sl.size() << " elements\n";
  json table = json::object();
  for (int i = 0; i < sl.size(); ++i) {
    std::cout << sl.name(i) << " :";
    json row = json::object();
    for (int j = 0; j < sl.size(); ++j) {
      std::cout << " " << sl.name(D.product(i, j));
      row[sl.name(j)] = sl.name(D.product(i, j));
    }
    std::cout << "\n";
    table[sl.name(i)] = row;
  }
  out.data["elements"] = sl.size();
  out.data["product"] = table;
  return 0;
}

int cmd_roundtrip(const std::string& path, Output& out) {
  ParsedStructure s = parse_structure_file(path);
  const FiniteSemilattice& K = s.base();
  DualSemilattice D = dual_semilattice(K);
  RoundtripReport r = verify_duality_roundtrip(K);
  std::cout << "duality roundtrip: " << (r.ok ? "isomorphism" : "FAILED") << "\n";
  std::cout << "dual points " << r.dual_point_count << ", excluded filters "
            << r.excluded_filter_count << "\n";
  json bijection = json::object();
  for (int x = 0; x < K.size(); ++x) {
    const FilterObject& f = r.space.points[r.hat_point[x]];
    std::cout << "  " << K.name(x) << " -> "
              << subset_names(D.semilattice(), f.members) << "\n";
    bijection[K.name(x)] = subset_json(D.semilattice(), f.members);
  }
  if (!r.ok) std::cout << "failure: " << r.failure << "\n";
  out.data["ok"] = r.ok;
  out.data["dual_points"] = r.dual_point_count;
  out.data["bijection"] = bijection;
  if (!r.ok) out.data["failure"] = r.failure;
  return r.ok ? 0 : 1;
}

int cmd_decompose(const std::string& struct_path, const std::string& func_path,
                  Output& out) {
  ParsedStructure s = parse_structure_file(struct_path);
  const FiniteSemilattice& K = s.base();
  BinaryFunction f = parse_binary_function_file(func_path, K);
  DualSemilattice D = dual_semilattice(K);
  JumpLedger ledger = compute_ledger(f, D);

  std::cout << "jump points "
            << subset_names(K, D.source_members(ledger.jump_points)) << "\n";
  for (size_t i = 0; i < ledger.levels.size(); ++i)
    std::cout << "L_" << i << " = "
              << subset_names(D.semilattice(), ledger.levels[i]) << "\n";
  std::cout << "n(f) = " << ledger.n_of_f << "\n";
  std::cout << "s(f) = (";
  for (size_t i = 0; i < ledger.signature.size(); ++i)
    std::cout << (i ? "," : "") << ledger.signature[i];
  std::cout << ")\n";
  std::cout << "M_f = " << subset_names(K, ledger.support) << "\n";

  QuotientMap Q = quotient_map(K, D, ledger.top_level());
  std::cout << "quotient fibers " << Q.fibers.size() << "\n";
  json fibers = json::array();
  for (Subset fiber : Q.fibers) {
    std::cout << "  fiber " << subset_names(K, fiber) << "\n";
    fibers.push_back(subset_json(K, fiber));
  }
  FiberConstancyReport fc = verify_fiber_constancy(f, D);
  std::cout << "fiber constancy: " << (fc.ok ? "ok" : "VIOLATED") << "\n";

  out.data["jump_points"] = subset_json(K, D.source_members(ledger.jump_points));
  out.data["n_of_f"] = ledger.n_of_f;
  out.data["signature"] = ledger.signature;
  out.data["support"] = subset_json(K, ledger.support);
  out.data["fibers"] = fibers;
  out.data["fiber_constancy"] = fc.ok;
  return fc.ok ? 0 : 1;
}

int cmd_discreteness(const std::string& path, int cap, Output& out) {
  ParsedStructure s = parse_structure_file(path);
  DiscretenessReport r = verify_discreteness(s.base(), cap);
  std::cout << "functions " << r.function_count << "\n";
  std::cout << "signature classes " << r.signature_classes << "\n";
  std::cout << "buckets " << r.buckets << "\n";
  std::cout << "max class size " << r.max_class_size << "\n";
  bool ok = r.jump_existence_ok && r.stabilization_ok && r.fiber_constancy_ok &&
            r.discreteness_ok;
  std::cout << "jump existence: " << (r.jump_existence_ok ? "ok" : "VIOLATED")
            << "\n";
  std::cout << "stabilization: " << (r.stabilization_ok ? "ok" : "VIOLATED")
            << "\n";
  std::cout << "fiber constancy: " << (r.fiber_constancy_ok ? "ok" : "VIOLATED")
            << "\n";
  std::cout << "discreteness: " << (r.discreteness_ok ? "ok" : "VIOLATED")
            << "\n";
  out.data["functions"] = r.function_count;
  out.data["signature_classes"] = r.signature_classes;
  out.data["buckets"] = r.buckets;
  out.data["max_class_size"] = r.max_class_size;
  out.data["ok"] = ok;
  return ok ? 0 : 1;
}

int cmd_gates(const std::string& path, Output& out) {
  ParsedStructure s = parse_structure_file(path);
  const ChainProductSublattice& K = require_product(s);
  json gates = json::array();
  long long checks = 0;
  for (int i = 0; i < K.coords(); ++i)
    for (int cut_p : prime_filters_of_chain(K.arity(i))) {
      LiftedPrime p = lift_prime(K, i, cut_p);
      if (p.degenerate) continue;
      for (int cut_q = cut_p + 1; cut_q < K.arity(i); ++cut_q) {
        LiftedPrime q = lift_prime(K, i, cut_q);
        if (q.degenerate || q.members == p.members) continue;
        GateLawReport r = verify_gate_coordinate_laws(K, i, cut_p, cut_q);
        ++checks;
        std::cout << "coordinate " << i << " pair (" << cut_p << "," << cut_q
                  << ") gate (" << K.member_name(r.gate.a) << ");("
                  << K.member_name(r.gate.b) << ") laws ok\n";
        gates.push_back({{"coordinate", i},
                         {"cut_p", cut_p},
                         {"cut_q", cut_q},
                         {"a", K.member_name(r.gate.a)},
                         {"b", K.member_name(r.gate.b)}});
      }
    }
  std::cout << "law checks " << checks << ", all passed\n";
  out.data["checks"] = checks;
  out.data["gates"] = gates;
  return 0;
}

int cmd_leaps(const std::string& struct_path, const std::string& func_path,
              const std::string& eps_text, Output& out) {
  ParsedStructure s = parse_structure_file(struct_path);
  const ChainProductSublattice& K = require_product(s);
  RealFunction f = parse_real_function_file(func_path, K);
  Rational eps = parse_eps(eps_text);
  json coords = json::array();
  for (int i = 0; i < K.coords(); ++i) {
    CoordinateChain cc = max_leap_count(f, eps, i);
    std::cout << "m_" << (i + 1) << " = " << cc.m << "\n";
    json chain = json::array();
    for (const LeapPair& pair : cc.chain) {
      std::cout << "  (" << pair.cut_p << "," << pair.cut_q << ") gate ("
                << K.member_name(pair.gate.a) << ");("
                << K.member_name(pair.gate.b) << ") gap "
                << pair.gap.to_string() << (pair.is_jump ? " jump" : " leap")
                << "\n";
      chain.push_back({{"cut_p", pair.cut_p},
                       {"cut_q", pair.cut_q},
                       {"a", K.member_name(pair.gate.a)},
                       {"b", K.member_name(pair.gate.b)},
                       {"gap", pair.gap.to_string()},
                       {"jump", pair.is_jump}});
    }
    coords.push_back({{"m", cc.m}, {"chain", chain}});
  }
  out.data["epsilon"] = eps.to_string();
  out.data["coordinates"] = coords;
  return 0;
}

int cmd_cover(const std::string& struct_path, const std::string& func_path,
              const std::string& eps_text, Output& out) {
  ParsedStructure s = parse_structure_file(struct_path);
  const ChainProductSublattice& K = require_product(s);
  RealFunction f = parse_real_function_file(func_path, K);
  Rational eps = parse_eps(eps_text);
  LeapLedgerN ledger = compute_leap_ledger(f, eps);
  std::cout << "cubes " << ledger.cubes.size() << "\n";
  json cubes = json::array();
  for (const Cube& cube : ledger.cubes) {
    std::cout << "  box";
    for (auto [lo, hi] : cube.box) std::cout << " [" << lo << "," << hi << "]";
    std::cout << " members " << member_set(K, cube.members) << "\n";
    json box = json::array();
    for (auto [lo, hi] : cube.box) box.push_back({lo, hi});
    cubes.push_back({{"box", box}, {"size", popcount(cube.members)}});
  }
  out.data["epsilon"] = eps.to_string();
  out.data["cubes"] = cubes;
  return 0;
}

int cmd_osc_check(const std::string& struct_path, const std::string& func_path,
                  const std::string& eps_text, Output& out) {
  ParsedStructure s = parse_structure_file(struct_path);
  const ChainProductSublattice& K = require_product(s);
  RealFunction f = parse_real_function_file(func_path, K);
  Rational eps = parse_eps(eps_text);
  OscReport r = verify_osc_bound(f, eps);
  std::cout << "bound p(" << K.coords() << ")*eps = " << r.bound.to_string()
            << "\n";
  json cubes = json::array();
  for (const OscCubeReport& c : r.cubes) {
    std::cout << "  cube " << member_set(K, c.cube.members) << " osc "
              << c.osc.to_string() << " slack " << c.slack.to_string() << "\n";
    cubes.push_back({{"size", popcount(c.cube.members)},
                     {"osc", c.osc.to_string()},
                     {"slack", c.slack.to_string()}});
  }
  std::cout << "all cubes within bound\n";
  out.data["bound"] = r.bound.to_string();
  out.data["cubes"] = cubes;
  out.data["ok"] = r.ok;
  return r.ok ? 0 : 1;
}

int cmd_sld_check(const std::string& struct_path, const std::string& eps_text,
                  bool all_binary, int random_count, std::uint64_t seed,
                  Output& out) {
  ParsedStructure s = parse_structure_file(struct_path);
  const ChainProductSublattice& K = require_product(s);
  Rational eps = parse_eps(eps_text);

  std::vector<RealFunction> F;
  if (all_binary) {
    if (K.size() > 12)
      throw Error(ErrorCode::SizeLimit,
                  "--all-binary needs a host with at most 12 members");
    for (Subset mask = 0; mask < (Subset{1} << K.size()); ++mask) {
      RealFunction g;
      g.host = &K;
      for (int x = 0; x < K.size(); ++x)
        g.values.push_back(Rational(contains(mask, x) ? 1 : 0));
      F.push_back(std::move(g));
    }
  }
  Prng rng(seed);
  for (int k = 0; k < random_count; ++k) {
    RealFunction g;
    g.host = &K;
    for (int x = 0; x < K.size(); ++x)
      g.values.push_back(Rational(static_cast<long long>(rng.below(41)), 4));
    F.push_back(std::move(g));
  }
  if (F.empty())
    throw Error(ErrorCode::PreconditionViolation,
                "no functions; pass --all-binary and/or --random N");

  SldReport r = sld_partition(F, eps);
  std::cout << "functions " << F.size() << "\n";
  std::cout << "classes " << r.classes.size() << "\n";
  json classes = json::array();
  for (const SldClass& cls : r.classes) {
    std::cout << "  key (";
    for (size_t i = 0; i < cls.key.size(); ++i)
      std::cout << (i ? "," : "") << cls.key[i];
    std::cout << ") size " << cls.members.size() << " max-nbhd-dist "
              << cls.max_neighborhood_diameter.to_string() << "\n";
    classes.push_back({{"key", cls.key},
                       {"size", cls.members.size()},
                       {"max_nbhd_dist",
                        cls.max_neighborhood_diameter.to_string()}});
  }
  std::cout << "neighborhood checks " << r.neighborhood_checks << "\n";
  std::cout << "violations " << r.violations << "\n";
  out.data["classes"] = classes;
  out.data["violations"] = r.violations;
  return r.violations == 0 ? 0 : 1;
}

int cmd_generate(const std::string& what, std::uint64_t seed, int size,
                 const std::string& chains_text, const std::string& out_path,
                 Output& out) {
  std::string text;
  if (what == "random-semilattice") {
    text = serialize_structure(random_semilattice(seed, size));
  } else if (what == "tree") {
    text = serialize_structure(tree_compactification(random_tree(seed, size)));
  } else if (what == "chain-product") {
    std::vector<int> arities;
    std::string tok;
    for (char c : chains_text + ",") {
      if (c == ',') {
        if (!tok.empty()) arities.push_back(std::stoi(tok));
        tok.clear();
      } else {
        tok += c;
      }
    }
    if (arities.empty())
      throw Error(ErrorCode::PreconditionViolation,
                  "--chains a,b,... required for chain-product");
    text = serialize_structure(random_sublattice(seed, arities, size));
  } else {
    throw Error(ErrorCode::PreconditionViolation,
                "generate kind must be random-semilattice, tree or chain-product");
  }
  std::cout << text;
  if (!out_path.empty()) write_file(out_path, text);
  out.data["kind"] = what;
  out.data["seed"] = seed;
  out.data["text"] = text;
  return 0;
}

int cmd_selftest(std::uint64_t seed, bool quick, Output& out) {
  auto results = sweeps::run_all(seed, quick);
  bool all = true;
  json arr = json::array();
  for (const sweeps::SweepResult& r : results) {
    std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.name;
    json stats = json::object();
    for (const auto& [k, v] : r.stats) {
      std::cout << " " << k << "=" << v;
      stats[k] = v;
    }
    std::cout << "\n";
    arr.push_back({{"name", r.name}, {"pass", r.pass}, {"stats", stats}});
    all = all && r.pass;
  }
  std::cout << (all ? "selftest passed" : "selftest FAILED") << "\n";
  out.data["sweeps"] = arr;
  out.data["pass"] = all;
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ordkit: finite order-theory toolkit"};
  app.require_subcommand(1);

  std::string report_path;
  std::string path, func_path, eps_text = "1/2", chains_text, out_path;
  std::string generate_kind;
  std::uint64_t seed = 1;
  int size = 6;
  int cap = exhaustive_cap();
  bool quick = false, all_binary = false;
  int random_count = 0;

  auto subcommand = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--report", report_path, "write a JSON report to this path");
    return sub;
  };

  auto* validate = subcommand("validate", "certify a structure file");
  validate->add_option("file", path)->required();

  auto* dualize = subcommand("dualize", "print the dual semilattice");
  dualize->add_option("file", path)->required();

  auto* roundtrip = subcommand("roundtrip", "check the duality isomorphism");
  roundtrip->add_option("file", path)->required();

  auto* decompose = subcommand(
      "decompose", "jump ledger, signature and quotient of a binary function");
  decompose->add_option("structure", path)->required();
  decompose->add_option("function", func_path)->required();

  auto* discreteness = subcommand(
      "discreteness", "exhaustive sigma-discreteness audit over 2^|K| functions");
  discreteness->add_option("structure", path)->required();
  discreteness->add_option("--cap", cap, "max |K| for the exhaustive audit");

  auto* gates = subcommand("gates", "gate coordinate laws on a chain product");
  gates->add_option("structure", path)->required();

  auto* leaps = subcommand("leaps", "per-coordinate leap counts");
  leaps->add_option("structure", path)->required();
  leaps->add_option("function", func_path)->required();
  leaps->add_option("--eps", eps_text, "epsilon as p/q");

  auto* cover = subcommand("cover", "the cube cover cut at leap gates");
  cover->add_option("structure", path)->required();
  cover->add_option("function", func_path)->required();
  cover->add_option("--eps", eps_text, "epsilon as p/q");

  auto* osc = subcommand("osc-check", "oscillation bound per cube");
  osc->add_option("structure", path)->required();
  osc->add_option("function", func_path)->required();
  osc->add_option("--eps", eps_text, "epsilon as p/q");

  auto* sld = subcommand("sld-check", "leap-signature partition audit");
  sld->add_option("structure", path)->required();
  sld->add_option("--eps", eps_text, "epsilon as p/q");
  sld->add_flag("--all-binary", all_binary, "include every 0/1-valued function");
  sld->add_option("--random", random_count, "seeded random rational functions");
  sld->add_option("--seed", seed, "seed for the random functions");

  auto* generate = subcommand("generate", "corpus generators");
  generate->add_option("kind", generate_kind,
                       "random-semilattice | tree | chain-product")
      ->required();
  generate->add_option("--seed", seed, "generator seed");
  generate->add_option("--size", size, "size parameter (nodes for trees)");
  generate->add_option("--chains", chains_text, "chain arities a,b,...");
  generate->add_option("-o,--out", out_path, "write the structure here");

  auto* selftest = subcommand("selftest", "run every invariant sweep");
  selftest->add_option("--seed", seed, "sweep seed");
  selftest->add_flag("--quick", quick, "trimmed corpora");

  CLI11_PARSE(app, argc, argv);

  Output out;
  out.report_path = report_path;
  int status = 1;
  try {
    if (*validate) status = cmd_validate(path, out);
    else if (*dualize) status = cmd_dualize(path, out);
    else if (*roundtrip) status = cmd_roundtrip(path, out);
    else if (*decompose) status = cmd_decompose(path, func_path, out);
    else if (*discreteness) status = cmd_discreteness(path, cap, out);
    else if (*gates) status = cmd_gates(path, out);
    else if (*leaps) status = cmd_leaps(path, func_path, eps_text, out);
    else if (*cover) status = cmd_cover(path, func_path, eps_text, out);
    else if (*osc) status = cmd_osc_check(path, func_path, eps_text, out);
    else if (*sld)
      status = cmd_sld_check(path, eps_text, all_binary, random_count, seed, out);
    else if (*generate)
      status = cmd_generate(generate_kind, seed, size, chains_text, out_path, out);
    else if (*selftest) status = cmd_selftest(seed, quick, out);
  } catch (const Error& e) {
    std::cout << "error: " << e.what() << "\n";
    out.data["error"] = e.what();
    out.flush();
    return 1;
  } catch (const std::exception& e) {
    std::cout << "error: " << e.what() << "\n";
    return 1;
  }
  out.flush();
  return status;
}
