// Batch front-end: invariants of PD inputs and theorem-verification runs
// over diagram corpora.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "khoreo/json_io.hpp"
#include "khoreo/khoreo.hpp"

using namespace khoreo;

namespace {

struct CommonOpts {
  std::string pd;
  std::string corpus;
  std::string name_filter;
  std::string reverse;
  int max_crossings = kDefaultCrossingCap;
  int jobs = 0;
  bool json = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool orientation = true) {
  auto* pd = cmd->add_option("--pd", o.pd, "PD expression, e.g. PD[X[1,4,2,5],...]");
  auto* corpus = cmd->add_option("--corpus", o.corpus, "TSV corpus file (name<TAB>PD)");
  pd->excludes(corpus);
  cmd->add_option("--name", o.name_filter, "only corpus records whose name contains this");
  if (orientation)
    cmd->add_option("--reverse", o.reverse,
                    "comma-separated components (2-based) to reverse, e.g. 2,3");
  cmd->add_option("--max-crossings", o.max_crossings, "crossing cap")
      ->default_val(kDefaultCrossingCap);
  cmd->add_option("--jobs", o.jobs, "parallel rank jobs (default: KHOREO_JOBS or 1)");
  cmd->add_flag("--json", o.json, "emit JSON instead of tables");
}

std::vector<std::pair<std::string, Diagram>> load_inputs(const CommonOpts& o) {
  std::vector<std::pair<std::string, Diagram>> inputs;
  auto orient = [&](Diagram d) {
    if (o.reverse.empty()) return d;
    std::vector<int> comps;
    std::stringstream ss(o.reverse);
    std::string tok;
    while (std::getline(ss, tok, ','))
      comps.push_back(std::stoi(tok) - 1);  // 1-based components on the CLI
    return d.reoriented(comps);
  };
  if (!o.pd.empty()) {
    inputs.emplace_back("input", orient(Diagram::parse(o.pd)));
    return inputs;
  }
  if (o.corpus.empty()) throw std::runtime_error("one of --pd / --corpus is required");
  std::ifstream in(o.corpus);
  if (!in) throw std::runtime_error("cannot open corpus file " + o.corpus);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) throw std::runtime_error("corpus line without TAB");
    std::string name = line.substr(0, tab);
    if (!o.name_filter.empty() && name.find(o.name_filter) == std::string::npos) continue;
    inputs.emplace_back(name, orient(Diagram::parse(line.substr(tab + 1))));
  }
  return inputs;
}

void print_table(const BigradedTable& t) {
  std::cout << "  i   j   rank\n";
  for (auto& [k, v] : t.ranks)
    std::cout << "  " << k.first << "   " << k.second << "   " << v << "\n";
}

int run_kh(const CommonOpts& o) {
  for (auto& [name, d] : load_inputs(o)) {
    auto t = homology_table(d, khovanov_frobenius(), o.max_crossings, o.jobs);
    if (o.json) {
      auto j = to_json(t);
      j["name"] = name;
      j["poly"] = kh_polynomial(t).str();
      j["diagram"] = to_json(d);
      std::cout << j.dump() << "\n";
    } else {
      std::cout << name << ":\n";
      print_table(t);
      std::cout << "  Kh = " << kh_polynomial(t).str() << "\n";
    }
  }
  return 0;
}

int run_jones(const CommonOpts& o) {
  int failures = 0;
  for (auto& [name, d] : load_inputs(o)) {
    auto t = homology_table(d, khovanov_frobenius(), o.max_crossings, o.jobs);
    LaurentPoly euler = kh_polynomial(t).at_t_minus_one();
    LaurentPoly bracket = jones_bracket(d, o.max_crossings);
    bool ok = euler == bracket;
    failures += ok ? 0 : 1;
    if (o.json) {
      std::cout << nlohmann::json{{"name", name},
                                  {"kh_at_minus_one", euler.str()},
                                  {"bracket", bracket.str()},
                                  {"equal", ok}}
                       .dump()
                << "\n";
    } else {
      std::cout << name << ": Kh(-1,q) = " << euler.str() << "\n";
      std::cout << name << ": bracket  = " << bracket.str() << "\n";
      std::cout << name << ": " << (ok ? "EQUAL" : "MISMATCH") << "\n";
    }
  }
  return failures ? 1 : 0;
}

int run_lee(const CommonOpts& o) {
  int failures = 0;
  for (auto& [name, d] : load_inputs(o)) {
    LeeTable lee = lee_homology(d, o.max_crossings, o.jobs);
    LeeTable pred = predicted_lee_table(d.linking_matrix(), d.component_count());
    bool ok = lee == pred && lee.total() == (std::size_t(1) << d.component_count());
    failures += ok ? 0 : 1;
    if (o.json) {
      auto j = to_json(lee);
      j["name"] = name;
      j["predicted"] = to_json(pred)["lee"];
      j["match"] = ok;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << name << ": lee =";
      for (auto& [i, v] : lee.dims) std::cout << " " << i << ":" << v;
      std::cout << " (total " << lee.total() << "), predicted =";
      for (auto& [i, v] : pred.dims) std::cout << " " << i << ":" << v;
      std::cout << " -> " << (ok ? "MATCH" : "MISMATCH") << "\n";
    }
  }
  return failures ? 1 : 0;
}

int run_signature(const CommonOpts& o) {
  int failures = 0;
  for (auto& [name, d] : load_inputs(o)) {
    Diagram r = reduce_nugatory(d);
    int goeritz = robust_signature(r);
    auto flags = classify(r);
    bool has_alt = flags.alternating && flags.nonsplit && flags.reduced;
    int alt = has_alt ? alternating_signature(r) : 0;
    bool ok = !has_alt || alt == goeritz;
    failures += ok ? 0 : 1;
    if (o.json) {
      nlohmann::json j{{"name", name}, {"goeritz", goeritz}, {"agree", ok}};
      if (has_alt) j["alternating_formula"] = alt;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << name << ": goeritz = " << goeritz;
      if (has_alt)
        std::cout << ", o(D)-y(D)-1 = " << alt << " -> " << (ok ? "AGREE" : "MISMATCH");
      std::cout << "\n";
    }
  }
  return failures ? 1 : 0;
}

int run_thin(const CommonOpts& o) {
  int failures = 0;
  for (auto& [name, d] : load_inputs(o)) {
    Diagram r = reduce_nugatory(d);
    auto flags = classify(r);
    bool alt = flags.alternating && flags.nonsplit && flags.reduced;
    int sigma = alt ? alternating_signature(r) : robust_signature(r);
    auto table = homology_table(d, khovanov_frobenius(), o.max_crossings, o.jobs);
    ThinnessReport rep = thinness_report(table, sigma);
    if (alt && !(rep.is_thin && rep.corners_ok)) ++failures;
    if (o.json) {
      auto j = to_json(rep);
      j["name"] = name;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << name << ": sigma = " << sigma << ", "
                << (rep.is_thin ? "thin" : "NOT thin") << ", top (" << rep.top.first << ","
                << rep.top.second << ") bottom (" << rep.bottom.first << ","
                << rep.bottom.second << ") corners " << rep.corner_coeffs.first << ","
                << rep.corner_coeffs.second << ", violations " << rep.violations.size()
                << "\n";
    }
  }
  return failures ? 1 : 0;
}

int run_pairing(const CommonOpts& o) {
  int failures = 0;
  for (auto& [name, d] : load_inputs(o)) {
    Diagram r = reduce_nugatory(d);
    auto flags = classify(r);
    bool alt = flags.alternating && flags.nonsplit && flags.reduced;
    int sigma = alt ? alternating_signature(r) : robust_signature(r);
    auto table = homology_table(d, khovanov_frobenius(), o.max_crossings, o.jobs);
    auto res =
        pairing_decompose(kh_polynomial(table), sigma, d.linking_matrix(), d.component_count());
    if (alt && !res.ok) ++failures;
    if (o.json) {
      auto j = to_json(res);
      j["name"] = name;
      j["sigma"] = sigma;
      std::cout << j.dump() << "\n";
    } else if (res.ok) {
      std::cout << name << ": Kh'(z) = " << res.kh_prime.str("z") << "\n";
    } else {
      std::cout << name << ": no decomposition (" << res.reason << ")\n";
    }
  }
  return failures ? 1 : 0;
}

int run_verify(const CommonOpts& o) {
  int failures = 0;
  for (auto& [name, d] : load_inputs(o)) {
    auto results = verify_properties(d, o.max_crossings, o.jobs);
    if (o.json) {
      auto j = to_json(results);
      j["name"] = name;
      std::cout << j.dump() << "\n";
    } else {
      for (auto& r : results) {
        std::cout << name << ": " << (r.pass ? "[pass] " : "[FAIL] ") << r.name;
        if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
        std::cout << "\n";
      }
    }
    for (auto& r : results) failures += r.pass ? 0 : 1;
  }
  return failures ? 1 : 0;
}

int run_fuzz(const CommonOpts& o, const FuzzOptions& fo) {
  int failures = 0;
  for (auto& [name, d] : load_inputs(o)) {
    DriftReport rep = fuzz_invariants(d, fo);
    failures += rep.drift_events;
    if (o.json) {
      std::cout << nlohmann::json{{"name", name},
                                  {"runs", rep.runs},
                                  {"drift_events", rep.drift_events},
                                  {"messages", rep.messages}}
                       .dump()
                << "\n";
    } else {
      std::cout << name << ": " << rep.runs << " runs, " << rep.drift_events
                << " drift events\n";
      for (auto& m : rep.messages) std::cout << "  " << m << "\n";
    }
  }
  return failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"khoreo: exact Khovanov homology, Lee deformation, and link invariants"};
  app.require_subcommand(1);

  CommonOpts o;
  FuzzOptions fo;

  auto* kh = app.add_subcommand("kh", "bigraded homology table and Kh polynomial");
  add_common(kh, o);
  auto* jones = app.add_subcommand("jones", "graded Euler characteristic vs bracket oracle");
  add_common(jones, o);
  auto* lee = app.add_subcommand("lee", "Lee homology table and linking-number prediction");
  add_common(lee, o);
  auto* sig = app.add_subcommand("signature", "Goeritz signature and alternating formula");
  add_common(sig, o);
  auto* thin = app.add_subcommand("thin", "two-diagonal support report");
  add_common(thin, o);
  auto* pairing = app.add_subcommand("pairing", "pairing decomposition Kh'");
  add_common(pairing, o);
  auto* verify = app.add_subcommand("verify", "full property suite per input");
  add_common(verify, o);
  auto* fuzz = app.add_subcommand("fuzz", "random move sequences, report invariant drift");
  add_common(fuzz, o);
  fuzz->add_option("--seed", fo.seed, "RNG seed")->default_val(42);
  fuzz->add_option("--moves", fo.moves, "moves per run")->default_val(30);
  fuzz->add_option("--runs", fo.runs, "number of runs")->default_val(1);
  fuzz->add_option("--extra-crossings", fo.extra_crossings, "growth budget over the seed")
      ->default_val(4);

  CLI11_PARSE(app, argc, argv);

  try {
    if (kh->parsed()) return run_kh(o);
    if (jones->parsed()) return run_jones(o);
    if (lee->parsed()) return run_lee(o);
    if (sig->parsed()) return run_signature(o);
    if (thin->parsed()) return run_thin(o);
    if (pairing->parsed()) return run_pairing(o);
    if (verify->parsed()) return run_verify(o);
    if (fuzz->parsed()) return run_fuzz(o, fo);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
