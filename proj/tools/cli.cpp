#include "cli.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sts/automorphism.hpp"
#include "sts/constructions/classic.hpp"
#include "sts/constructions/embed.hpp"
#include "sts/constructions/moore.hpp"
#include "sts/constructions/paired.hpp"
#include "sts/constructions/pointed.hpp"
#include "sts/constructions/rigid.hpp"
#include "sts/errors.hpp"
#include "sts/fano_analysis.hpp"
#include "sts/io.hpp"
#include "sts/parameters.hpp"
#include "sts/pstss.hpp"
#include "sts/subsystems.hpp"
#include "sts/validate.hpp"

namespace sts::cli {

std::string sha256_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed for " + path);
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < length; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return hex.str();
}

namespace {

struct Session {
  std::ostream& out;
  std::ostream& err;
  std::vector<std::string> args;
  std::string command;
  std::vector<std::string> inputs;
  std::optional<std::uint64_t> seed;
  SearchOptions search;
};

// A validation failure that has already been reported.
struct Failed {};

std::vector<std::string> index_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return names;
}

io::Parsed load(Session& s, const std::string& path) {
  if (!std::filesystem::exists(path)) throw std::invalid_argument("no such file: " + path);
  s.inputs.push_back(path);
  try {
    return io::read_file(path);
  } catch (const io::ParseError& e) {
    s.err << path << ": " << e.what() << "\n";
    throw Failed{};
  }
}

TripleSystem load_sts(Session& s, const std::string& path) {
  io::Parsed parsed = load(s, path);
  TripleSystem ts(parsed.system.size(), parsed.system.triples());
  auto report = validate_sts(ts);
  if (!report.ok()) {
    s.err << path << ": not a Steiner triple system: " << report.summary() << "\n";
    throw Failed{};
  }
  return ts;
}

// Names from the sidecar next to path, or indices when there is none.
LabeledSystem load_labeled(Session& s, const std::string& path) {
  TripleSystem ts = load_sts(s, path);
  std::ifstream sidecar(path + ".map");
  if (sidecar) {
    auto names = io::parse_names(sidecar);
    if (names.size() == ts.size()) return {ts, names};
  }
  return with_index_names(ts);
}

void write_manifest(Session& s, const std::string& out_path) {
  nlohmann::ordered_json m;
  m["tool"] = "sts-tool";
  m["version"] = kToolVersion;
  m["subcommand"] = s.command;
  m["args"] = s.args;
  if (s.seed) m["seed"] = *s.seed;
  m["node_budget"] = s.search.node_budget;
  m["inputs"] = nlohmann::ordered_json::array();
  for (const auto& in : s.inputs) m["inputs"].push_back({{"path", in}, {"sha256", sha256_file(in)}});
  m["outputs"] = nlohmann::ordered_json::array();
  for (const auto& path : {out_path, out_path + ".map"}) {
    m["outputs"].push_back({{"path", path}, {"sha256", sha256_file(path)}});
  }
  std::ofstream(out_path + ".manifest.json") << m.dump(2) << "\n";
}

// Writes the system, its sidecar and manifest (or the system alone to
// stdout), then re-reads and re-validates what was written.
void emit(Session& s, const std::string& out_path, const PartialTripleSystem& ts, bool partial,
          const std::vector<std::string>& names) {
  if (out_path.empty()) {
    io::write(s.out, ts, partial);
    return;
  }
  io::write_file(out_path, ts, partial);
  {
    std::ofstream sidecar(out_path + ".map");
    io::write_names(sidecar, names);
  }
  io::Parsed back = io::read_file(out_path);
  auto report = partial ? validate_pstss(back.system) : validate_sts(back.system);
  if (!(back.system == ts) || !report.ok()) {
    s.err << out_path << ": written file does not re-validate: " << report.summary() << "\n";
    throw Failed{};
  }
  write_manifest(s, out_path);
  s.out << "wrote " << out_path << ": " << ts.size() << " points, " << ts.triples().size() << " triples\n";
}

LabelingMode parse_mode(const std::string& mode) {
  return mode == "strict" ? LabelingMode::strict : LabelingMode::best_effort;
}

MooreProduct build_moore(std::size_t x, std::size_t y, std::size_t v, const std::string& mode) {
  Embedding e = embed_subsystem(x, y);
  auto labeling = label_per_p7(e.system.system, e.subsystem, parse_mode(mode));
  return moore({e.system.system, e.subsystem, steiner_system(v).system, labeling});
}

std::string join_names(const std::vector<std::string>& names, const auto& points) {
  std::string out = "{";
  bool first = true;
  for (Point p : points) {
    if (!first) out += ",";
    out += names[p];
    first = false;
  }
  return out + "}";
}

std::string subset_name(const std::vector<std::string>& ground, Point p) {
  std::uint64_t pattern = BooleanSpace::pattern_of(p);
  std::vector<Point> members;
  for (unsigned i = 0; i < ground.size(); ++i) {
    if (pattern >> i & 1) members.push_back(i);
  }
  return join_names(ground, members);
}

std::set<int> residues_mod24(const BigInt& K, const BigInt& v1, const BigInt& v2) {
  std::set<int> out;
  for (const BigInt& r : residue_coverage(K, v1, v2)) out.insert(static_cast<int>(residue(r, 24)));
  return out;
}

// One or two random products of the generators that already generate the
// group, else the generators minus any that are redundant.
std::vector<Permutation> small_generating_set(const PermutationGroup& group, std::uint64_t seed) {
  std::vector<Permutation> gens = group.generators();
  if (gens.size() <= 1) return gens;
  const BigInt order = group.order();
  std::mt19937_64 rng(seed);
  auto random_element = [&] {
    Permutation p = Permutation::identity(group.degree());
    for (int i = 0; i < 24; ++i) p = p * gens[rng() % gens.size()];
    return p;
  };
  for (std::size_t size : {1u, 2u}) {
    if (size >= gens.size()) break;
    for (int attempt = 0; attempt < 100; ++attempt) {
      std::vector<Permutation> trial;
      for (std::size_t i = 0; i < size; ++i) trial.push_back(random_element());
      if (PermutationGroup(group.degree(), trial).order() == order) return trial;
    }
  }
  for (std::size_t i = gens.size(); i-- > 0;) {
    auto fewer = gens;
    fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(i));
    if (PermutationGroup(group.degree(), fewer).order() == order) gens = std::move(fewer);
  }
  return gens;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Session s{out, err, args, {}, {}, {}, search_options_from_env()};

  CLI::App app{"Steiner triple system constructions and checks", "sts-tool"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);
  std::optional<std::uint64_t> node_budget;
  app.add_option("--node-budget", node_budget, "Search node budget (overrides STS_NODE_BUDGET)");

  // construct
  auto* construct = app.add_subcommand("construct", "Build a system and write it in sts/1 format");
  construct->require_subcommand(1);
  std::string out_path;
  std::size_t n = 0, x = 0, y = 0, v = 0;
  unsigned dim = 0;
  std::string input, with, mode = "best_effort", star_name = "*";
  auto add_out = [&](CLI::App* c) { c->add_option("--out", out_path, "Output file; sidecar and manifest go next to it"); };
  auto* c_bose = construct->add_subcommand("bose", "Bose construction, n = 3 (mod 6)");
  auto* c_skolem = construct->add_subcommand("skolem", "Skolem construction, n = 1 (mod 6)");
  auto* c_steiner = construct->add_subcommand("steiner", "Any admissible order");
  for (auto* c : {c_bose, c_skolem, c_steiner}) c->add_option("--n", n, "Order")->required();
  auto* c_pg = construct->add_subcommand("pg", "Points and lines of PG(d,2)");
  c_pg->add_option("--dim", dim, "Dimension d >= 2")->required();
  auto* c_double = construct->add_subcommand("double", "2Y + 1");
  c_double->add_option("--input", input, "STS file")->required();
  c_double->add_option("--star-name", star_name, "Name of the new point");
  auto* c_product = construct->add_subcommand("product", "Direct product of two systems");
  c_product->add_option("--input", input, "First STS file")->required();
  c_product->add_option("--with", with, "Second STS file")->required();
  auto* c_moore = construct->add_subcommand("moore", "Moore product with X in Y and V = STS(v)");
  auto* c_embed = construct->add_subcommand("embed", "STS(y) with an STS(x) subsystem");
  for (auto* c : {c_moore, c_embed}) {
    c->add_option("--x", x, "Order of X")->required();
    c->add_option("--y", y, "Order of Y")->required();
  }
  c_moore->add_option("--v", v, "Order of V")->required();
  c_moore->add_option("--mode", mode, "Labeling mode")->check(CLI::IsMember({"strict", "best_effort"}));
  auto* c_paired = construct->add_subcommand("paired", "A system over the blocks of a design");
  c_paired->add_option("--input", input, "STS whose copies are placed on blocks")->required();
  c_paired->add_option("--design", with, "STS file read as a block design")->required();
  for (auto* c : {c_bose, c_skolem, c_steiner, c_pg, c_double, c_product, c_moore, c_embed, c_paired}) add_out(c);

  // verify
  auto* verify = app.add_subcommand("verify", "Check the axioms and optional geometric properties");
  std::string sts_path, pstss_path;
  std::optional<Point> pointed;
  std::vector<Point> two_pointed;
  bool paired_check = false;
  auto* sts_opt = verify->add_option("--sts", sts_path, "Steiner triple system file");
  auto* pstss_opt = verify->add_option("--pstss", pstss_path, "Partial triple system file");
  sts_opt->excludes(pstss_opt);
  verify->add_option("--pointed", pointed, "Check PG(2,2)-pointed at this point");
  verify->add_option("--two-pointed", two_pointed, "Check PG(3,2)-2-pointed at these points")->expected(2);
  verify->add_flag("--paired", paired_check, "Check PG(2,2)-paired");

  // aut
  auto* aut = app.add_subcommand("aut", "Automorphism group");
  std::string aut_path;
  bool aut_json = false;
  aut->add_option("file", aut_path, "System file")->required();
  aut->add_flag("--json", aut_json, "JSON output");

  // iso
  auto* iso = app.add_subcommand("iso", "Isomorphism test; exit 1 when not isomorphic");
  std::string iso_a, iso_b;
  iso->add_option("first", iso_a, "System file")->required();
  iso->add_option("second", iso_b, "System file")->required();

  // classify-fano
  auto* classify = app.add_subcommand("classify-fano", "Classify every Fano subsystem of a Moore product");
  classify->add_option("--x", x, "Order of X")->required();
  classify->add_option("--y", y, "Order of Y")->required();
  classify->add_option("--v", v, "Order of V")->required();
  classify->add_option("--mode", mode, "Labeling mode")->check(CLI::IsMember({"strict", "best_effort"}));

  // solve-params
  auto* solve = app.add_subcommand("solve-params", "Order arithmetic certificate");
  std::string u_text, v1_text, v2_text, check_path, strategy = "smallest_prime";
  auto* u_opt = solve->add_option("--u", u_text, "Target order");
  solve->add_option("--v1", v1_text, "|V1|");
  solve->add_option("--v2", v2_text, "|V2|");
  solve->add_option("--strategy", strategy, "How k is chosen")
      ->check(CLI::IsMember({"smallest_prime", "order_of_two"}));
  auto* check_opt = solve->add_option("--check", check_path, "Re-verify a certificate file");
  solve->add_option("--out", out_path, "Write the certificate here");
  u_opt->excludes(check_opt);

  // embed-pstss
  auto* embed = app.add_subcommand("embed-pstss", "Partial system embedding pipelines");
  std::string embed_mode = "theorem13";
  unsigned np_cap = kDefaultNPrimeCap;
  std::vector<Point> subsystem;
  embed->add_option("--input", input, "Input file")->required();
  embed->add_option("--mode", embed_mode, "Pipeline")->check(CLI::IsMember({"theorem13", "cor46", "cor47"}));
  embed->add_option("--np-cap", np_cap, "Largest ground set for the Boolean space");
  embed->add_option("--with", with, "cor46: the system V kept invariant");
  embed->add_option("--subsystem", subsystem, "cor47: points of V1")->delimiter(',');
  embed->add_option("--out", out_path, "Output file");

  // rigid-search
  auto* rigid = app.add_subcommand("rigid-search", "Search for an STS with trivial automorphism group");
  std::uint64_t seed = 0;
  std::size_t max_attempts = 1000;
  rigid->add_option("--n", n, "Order")->required();
  rigid->add_option("--seed", seed, "Random seed");
  rigid->add_option("--max-attempts", max_attempts, "Systems to try");
  rigid->add_option("--out", out_path, "Output file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }
  if (node_budget) s.search.node_budget = *node_budget;

  try {
    if (construct->parsed()) {
      s.command = "construct";
      LabeledSystem built;
      if (c_bose->parsed()) {
        built = bose(n);
      } else if (c_skolem->parsed()) {
        built = skolem(n);
      } else if (c_steiner->parsed()) {
        built = steiner_system(n);
      } else if (c_pg->parsed()) {
        built = pg_sts(dim);
      } else if (c_double->parsed()) {
        built = doubling(load_labeled(s, input), star_name);
      } else if (c_product->parsed()) {
        built = direct_product(load_labeled(s, input), load_labeled(s, with));
      } else if (c_moore->parsed()) {
        MooreProduct product = build_moore(x, y, v, mode);
        built = {product.system, product.names()};
      } else if (c_embed->parsed()) {
        Embedding e = embed_subsystem(x, y);
        out << "subsystem " << join_names(index_names(y), e.subsystem.points()) << " via " << e.method << "\n";
        built = e.system;
      } else if (c_paired->parsed()) {
        TripleSystem copy = load_sts(s, input);
        built = paired_via_design(copy, design_from_sts(load_sts(s, with)));
      }
      emit(s, out_path, built.system, false, built.names);
      return kOk;
    }

    if (verify->parsed()) {
      s.command = "verify";
      if (sts_path.empty() && pstss_path.empty()) {
        err << "verify needs --sts or --pstss\n";
        return kUsageError;
      }
      const bool partial = !pstss_path.empty();
      io::Parsed parsed = load(s, partial ? pstss_path : sts_path);
      bool all_ok = true;
      auto line = [&](const std::string& name, bool ok, const std::string& detail) {
        out << name << ": " << (ok ? "ok" : "FAIL") << (detail.empty() ? "" : " (" + detail + ")") << "\n";
        all_ok = all_ok && ok;
      };
      auto report = partial ? validate_pstss(parsed.system) : validate_sts(parsed.system);
      line(partial ? "pstss" : "sts", report.ok(), report.ok() ? "" : report.summary());
      if (!partial && report.ok()) {
        TripleSystem ts(parsed.system.size(), parsed.system.triples());
        auto predicate = [&](const std::string& name, const PredicateResult& r) {
          std::string detail = r.detail;
          if (!r.holds && !r.counterexample.empty()) {
            detail += (detail.empty() ? "" : "; ") + std::string("witness ") + join_names(index_names(ts.size()), r.counterexample);
          }
          line(name, r.holds, detail);
        };
        if (pointed) predicate("pg2-pointed", is_pg2_pointed(ts, *pointed));
        if (two_pointed.size() == 2) predicate("pg3-2pointed", is_pg3_2pointed(ts, two_pointed[0], two_pointed[1]));
        if (paired_check) predicate("pg2-paired", is_pg2_paired(ts));
      }
      return all_ok ? kOk : kValidationFailure;
    }

    if (aut->parsed()) {
      s.command = "aut";
      io::Parsed parsed = load(s, aut_path);
      PermutationGroup group = automorphism_group(parsed.system, s.search);
      const auto rep = group.orbit_representatives();
      const std::vector<Permutation> gens = small_generating_set(group, 0);
      std::vector<std::size_t> orbit_sizes;
      for (Point p = 0; p < rep.size(); ++p) {
        if (rep[p] == p) orbit_sizes.push_back(static_cast<std::size_t>(std::count(rep.begin(), rep.end(), p)));
      }
      if (aut_json) {
        nlohmann::ordered_json j;
        j["points"] = parsed.system.size();
        j["order"] = group.order().str();
        j["generators"] = nlohmann::ordered_json::array();
        for (const auto& g : gens) j["generators"].push_back(g.cycles());
        j["orbit_sizes"] = orbit_sizes;
        out << j.dump(2) << "\n";
      } else {
        out << "order " << group.order() << "\n";
        out << "generators " << gens.size() << "\n";
        for (const auto& g : gens) out << "  " << g.cycles() << "\n";
        out << "orbits " << orbit_sizes.size() << ":";
        for (std::size_t size : orbit_sizes) out << " " << size;
        out << "\n";
      }
      return kOk;
    }

    if (iso->parsed()) {
      s.command = "iso";
      io::Parsed a = load(s, iso_a);
      io::Parsed b = load(s, iso_b);
      IsoCertificate cert = are_isomorphic(a.system, b.system, s.search);
      if (!cert.isomorphic()) {
        out << "not isomorphic: " << cert.reason << "\n";
        return kValidationFailure;
      }
      out << "isomorphic\nmap";
      for (Point p = 0; p < cert.map->degree(); ++p) out << " " << p << "->" << (*cert.map)(p);
      out << "\n";
      return kOk;
    }

    if (classify->parsed()) {
      s.command = "classify-fano";
      MooreProduct product = build_moore(x, y, v, mode);
      const auto names = product.names();
      std::size_t t31 = 0, yv = 0, vsf = 0, bad = 0;
      for (const auto& plane : enumerate_fano(product.system)) {
        try {
          FanoClassification c = classify_fano(product, plane);
          out << join_names(names, plane) << " " << c.describe() << "\n";
          if (std::holds_alternative<Type31>(c.kind)) ++t31;
          if (std::holds_alternative<InYv>(c.kind)) ++yv;
          if (std::holds_alternative<VSf>(c.kind)) ++vsf;
        } catch (const Unclassifiable& e) {
          out << join_names(names, plane) << " unclassifiable " << e.what() << "\n";
          ++bad;
        }
      }
      out << "# total " << t31 + yv + vsf + bad << ": type31 " << t31 << ", in_yv " << yv << ", vsf " << vsf
          << ", unclassifiable " << bad << "\n";
      return bad == 0 ? kOk : kValidationFailure;
    }

    if (solve->parsed()) {
      s.command = "solve-params";
      if (!check_path.empty()) {
        s.inputs.push_back(check_path);
        std::ifstream in(check_path);
        if (!in) {
          err << "cannot read " << check_path << "\n";
          return kUsageError;
        }
        std::stringstream text;
        text << in.rdbuf();
        ParameterSolution sol = parse_certificate(text.str());
        auto violations = check_solution(sol);
        for (const auto& violation : violations) out << "violated: " << violation << "\n";
        if (!y_admissible(sol)) out << "note: y = " << residue(sol.y, 6) << " (mod 6) is not an STS order\n";
        out << (violations.empty() ? "certificate ok" : "certificate rejected") << "\n";
        return violations.empty() ? kOk : kValidationFailure;
      }
      if (u_text.empty() || v1_text.empty() || v2_text.empty()) {
        err << "solve-params needs --u, --v1 and --v2, or --check\n";
        return kUsageError;
      }
      BigInt u, v1, v2;
      try {
        u = BigInt(u_text);
        v1 = BigInt(v1_text);
        v2 = BigInt(v2_text);
      } catch (const std::exception&) {
        err << "--u, --v1 and --v2 must be integers\n";
        return kUsageError;
      }
      KChoice K = choose_K(v1, v2, strategy == "order_of_two" ? KStrategy::order_of_two : KStrategy::smallest_prime);
      try {
        ParameterSolution sol = solve_order(u, v1, v2, K);
        std::string cert = to_certificate(sol);
        if (out_path.empty()) {
          out << cert;
        } else {
          std::ofstream(out_path) << cert;
          out << "wrote " << out_path << "\n";
        }
        return kOk;
      } catch (const BelowThreshold& e) {
        err << e.what() << "\n";
        std::set<int> reached = residues_mod24(1, v1, v2);
        for (int r : residues_mod24(K.K, v1, v2)) reached.insert(r);
        err << "residues mod 24 reached:";
        for (int r : reached) err << " " << r;
        err << "\n";
        return kValidationFailure;
      }
    }

    if (embed->parsed()) {
      s.command = "embed-pstss";
      if (embed_mode == "theorem13") {
        io::Parsed parsed = load(s, input);
        Theorem13Result r = theorem13_build(parsed.system, np_cap);
        std::vector<std::string> names;
        names.reserve(r.system.size());
        for (Point p = 0; p < r.system.size(); ++p) names.push_back(subset_name(r.vprime.names, p));
        emit(s, out_path, r.system, false, names);
        return kOk;
      }
      if (embed_mode == "cor47") {
        TripleSystem vsys = load_sts(s, input);
        PointSet v1(vsys.size());
        for (Point p : subsystem) {
          if (p >= vsys.size()) throw std::invalid_argument("subsystem point " + std::to_string(p) + " out of range");
          v1.insert(p);
        }
        LabeledPartialSystem w = corollary47_build(vsys, v1);
        emit(s, out_path, w.system, true, w.names);
        return kOk;
      }
      if (with.empty()) {
        err << "cor46 needs --with <sts file> for V\n";
        return kUsageError;
      }
      TripleSystem wsys = load_sts(s, input);
      TripleSystem vsys = load_sts(s, with);
      Corollary46Result r = corollary46_build(vsys, wsys);
      std::vector<std::string> names = r.w_prime.names;
      for (Point p = 0; p < vsys.size(); ++p) names.push_back("V" + std::to_string(p));
      out << "rounds " << r.rounds << ", |W'| = " << r.w_prime.system.size() << "\n";
      emit(s, out_path, r.combined, true, names);
      return kOk;
    }

    if (rigid->parsed()) {
      s.command = "rigid-search";
      s.seed = seed;
      RigidSearchResult r = rigid_sts_search(n, seed, max_attempts, s.search);
      out << "rigid STS(" << n << ") after " << r.attempts << " attempt(s), seed " << seed << "\n";
      emit(s, out_path, r.system, false, index_names(n));
      return kOk;
    }
  } catch (const Failed&) {
    return kValidationFailure;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const Unsupported& e) {
    err << "unsupported: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const io::ParseError& e) {
    err << e.what() << "\n";
    return kValidationFailure;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kValidationFailure;
  }
  return kUsageError;
}

}  // namespace sts::cli
