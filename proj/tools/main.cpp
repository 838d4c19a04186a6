// Command-line front end for the pullback library.
//
// Word syntax everywhere: a..d are generators, A..D their inverses, "e" the
// identity.  Fractions are "p/q" (or a bare integer); 1/0 is the point at
// infinity.  Exit codes: 0 success, 1 domain error, 2 usage error.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "pullback/boundary.hpp"
#include "pullback/cf.hpp"
#include "pullback/projective.hpp"
#include "pullback/schreier.hpp"
#include "pullback/twister.hpp"
#include "pullback/verify.hpp"
#include "pullback/virtual_endo.hpp"
#include "pullback/words.hpp"
#include "pullback/wreath.hpp"

namespace {

using namespace pullback;

Word moduli_word(const std::string& text) {
  return parse_word(text, Context::ModuliFree2);
}

std::string join_rationals(const std::vector<ExtRational>& xs,
                           const char* sep = " -> ") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += format_rational(xs[i]);
  }
  return out;
}

std::string join_mat_letters(const std::vector<MatLetter>& ls) {
  std::string out;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (i) out += ' ';
    out += mat_letter_name(ls[i]);
  }
  return out;
}

int default_jobs() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  return static_cast<int>(std::min(hw, 8u));
}

// ---------------------------------------------------------------------------

struct ExpandArgs {
  std::string point;
};

int run_expand(const ExpandArgs& a) {
  Decomposition d = decompose(parse_rational(a.point));
  std::cout << (d.mat_letters.empty() ? std::string("(terminal)")
                                      : join_mat_letters(d.mat_letters))
            << " | terminal " << format_rational(d.terminal) << "\n";
  std::cout << "fund_word: " << format_word(d.fund_word) << "\n";
  std::cout << "labels: " << cf_labels(d) << "\n";
  return 0;
}

struct SigmaArgs {
  std::string point;
  bool show_orbit = false;
  std::string oracle = "decomp";
  std::string twist;
  std::size_t cap = 100000;
};

int run_sigma(const SigmaArgs& a) {
  ExtRational x = parse_rational(a.point);
  bool twisted = !a.twist.empty();
  if (twisted && a.oracle != "decomp") {
    std::cerr << "error: --oracle stab/both applies to the untwisted map only\n";
    return 2;
  }
  SigmaFn map = twisted ? make_sigma_twisted(moduli_word(a.twist)) : make_sigma();

  ExtRational value = map(x);
  std::cout << "sigma(" << format_rational(x) << ") = " << format_rational(value)
            << "\n";
  if (a.oracle == "stab" || a.oracle == "both") {
    ExtRational via = sigma_via_stabilizer(x);
    std::cout << "stabilizer oracle: " << format_rational(via) << "\n";
    if (a.oracle == "both") {
      bool agree = via == value;
      std::cout << "agree: " << (agree ? "yes" : "NO") << "\n";
      if (!agree) {
        std::cerr << "error: oracle disagreement\n";
        return 1;
      }
    }
  }
  if (a.show_orbit) {
    OrbitReport r = orbit(map, x, a.cap);
    std::cout << "orbit: " << join_rationals(r.tail)
              << (r.tail.empty() ? "" : " -> ") << "["
              << join_rationals(r.cycle) << "]\n";
    std::cout << "steps to cycle: " << r.steps_to_cycle << "\n";
  }
  return 0;
}

struct AttractorArgs {
  long height = 0;
  std::string twist;
  std::size_t cap = 100000;
  int jobs = 1;
};

int run_attractor(const AttractorArgs& a) {
  bool twisted = !a.twist.empty();
  SigmaFn map = twisted ? make_sigma_twisted(moduli_word(a.twist)) : make_sigma();
  AttractorSummary s =
      attractor_scan(map, a.height, a.cap, a.jobs, /*check_parity=*/!twisted);

  std::cout << "seeds: " << count_reduced(a.height) << " (height <= " << a.height
            << ")\n";
  std::cout << "cycles: " << s.cycles.size() << "\n";
  for (std::size_t i = 0; i < s.cycles.size(); ++i) {
    std::size_t hits = 0;
    for (const auto& per_parity : s.counts_by_parity) hits += per_parity[i];
    std::cout << "  cycle " << (i + 1) << " (length " << s.cycles[i].size()
              << "): [" << join_rationals(s.cycles[i]) << "]  seeds " << hits
              << "\n";
  }
  if (!twisted)
    std::cout << "parity rule (odd/odd <-> fixed point): "
              << (s.exceptions.empty() ? "holds" : "VIOLATED") << "\n";
  std::cout << "exceptions: " << s.exceptions.size() << "\n";
  for (std::size_t i = 0; i < s.exceptions.size() && i < 20; ++i)
    std::cout << "  " << format_rational(s.exceptions[i]) << "\n";
  return 0;
}

struct PlotArgs {
  long height = 0;
  std::string out;
  int jobs = 1;
};

int run_plot(const PlotArgs& a) {
  std::vector<ExtRational> seeds;
  seeds.reserve(count_reduced(a.height));
  for_each_reduced(a.height, [&seeds](const ExtRational& x) { seeds.push_back(x); });

  std::vector<ExtRational> values(seeds.size());
  int jobs = std::max(1, a.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < seeds.size(); ++i) values[i] = sigma(seeds[i]);
  } else {
    std::vector<std::thread> workers;
    for (int t = 0; t < jobs; ++t)
      workers.emplace_back([&seeds, &values, t, jobs] {
        for (std::size_t i = static_cast<std::size_t>(t); i < seeds.size();
             i += static_cast<std::size_t>(jobs))
          values[i] = sigma(seeds[i]);
      });
    for (auto& w : workers) w.join();
  }

  std::ofstream file(a.out);
  if (!file) throw std::runtime_error("cannot open output file: " + a.out);
  file << "p,q,sp,sq\n";
  for (std::size_t i = 0; i < seeds.size(); ++i)
    file << seeds[i].num << ',' << seeds[i].den << ',' << values[i].num << ','
         << values[i].den << '\n';
  file.close();
  if (!file) throw std::runtime_error("write failed: " + a.out);
  std::cout << "wrote " << seeds.size() << " rows to " << a.out << "\n";
  return 0;
}

struct PhiArgs {
  std::string word;
  bool bar = false;
  bool psi = false;
};

int run_phi(const PhiArgs& a) {
  Word w = moduli_word(a.word);
  Word image = a.bar ? phi_bar(w) : a.psi ? psi_bar(w) : phi(w);
  std::cout << format_word(image) << "\n";
  return 0;
}

struct WordArg {
  std::string word;
};

int run_rewrite(const WordArg& a) {
  RewriteResult r = rewrite(moduli_word(a.word));
  std::cout << "factors:";
  for (const Word& f : r.factors) std::cout << ' ' << format_word(f);
  if (r.factors.empty()) std::cout << " (none)";
  std::cout << "\n";
  std::cout << "generators:";
  for (const SignedHGen& g : r.generators)
    std::cout << ' ' << hgen_name(g.gen) << (g.sign < 0 ? "^-1" : "");
  if (r.generators.empty()) std::cout << " (none)";
  std::cout << "\n";
  return 0;
}

int run_coset(const WordArg& a) {
  Word w = moduli_word(a.word);
  std::cout << "left:  " << left_coset_name(left_coset(w)) << "\n";
  std::cout << "right: " << right_coset_name(right_coset(w)) << "\n";
  std::cout << "in H:  " << (in_H(w) ? "yes" : "no") << "\n";
  return 0;
}

struct WreathArgs {
  std::string recursion;
  std::string word;
  int level = 0;
  std::string restrict_addr;
  bool nucleus = false;
  std::size_t max_size = 200;
  std::size_t max_rounds = 50;
};

std::string cycle_type(const std::vector<int>& images) {
  std::vector<bool> seen(images.size(), false);
  std::map<std::size_t, std::size_t> lengths;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images[j])) {
      seen[j] = true;
      ++len;
    }
    ++lengths[len];
  }
  std::string out;
  for (const auto& [len, count] : lengths) {
    if (!out.empty()) out += ' ';
    out += std::to_string(len) + "^" + std::to_string(count);
  }
  return out;
}

int run_wreath(const WreathArgs& a) {
  Recursion rec = [&a] {
    const auto names = Recursion::builtin_names();
    if (std::find(names.begin(), names.end(), a.recursion) != names.end())
      return Recursion::builtin(a.recursion);
    return Recursion::from_file(a.recursion);
  }();
  Word w = parse_word(a.word, rec.context());

  std::cout << "element: " << format_wreath(rec.apply(w)) << "\n";
  if (!a.restrict_addr.empty())
    std::cout << "restriction @" << a.restrict_addr << ": "
              << format_word(rec.restriction(w, a.restrict_addr)) << "\n";
  if (a.level > 0) {
    std::vector<int> images = rec.act_level(w, a.level);
    std::cout << "level " << a.level << " action on " << images.size()
              << " points: order " << perm_order(images) << ", cycle type "
              << cycle_type(images) << "\n";
  }
  if (a.nucleus) {
    NucleusResult n = nucleus_search(rec, a.max_size, a.max_rounds);
    std::cout << "nucleus: contracting=" << (n.contracting ? "yes" : "no")
              << " candidates=" << n.nucleus.size() << " rounds=" << n.rounds
              << " max-length=" << n.max_length_seen << "\n";
    if (n.contracting) {
      std::cout << "  elements:";
      for (const Word& u : n.nucleus) std::cout << ' ' << format_word(u);
      std::cout << "\n";
    } else {
      std::cout << "  longest seen:";
      for (const Word& u : n.longest_seen) std::cout << ' ' << format_word(u);
      std::cout << "\n";
    }
  }
  return 0;
}

int run_twist(const WordArg& a) {
  TwistClass c = classify(moduli_word(a.word));
  std::cout << "class: " << twist_kind_name(c.kind);
  if (c.kind == TwistKind::Obstructed) std::cout << " (k = " << c.k << ")";
  std::cout << "\n";
  std::cout << "representative: " << m_element_name(c.rep) << "\n";
  std::cout << "steps: " << c.steps << "\n";
  if (c.has_evidence) {
    std::cout << "evidence cycles:\n";
    for (const auto& cyc : c.evidence.cycles)
      std::cout << "  [" << join_rationals(cyc) << "]\n";
  } else {
    std::cout << "evidence: none (obstructed class)\n";
  }
  return 0;
}

struct FibersArgs {
  std::string point;
  std::size_t count = 0;
};

int run_fibers(const FibersArgs& a) {
  ExtRational target = parse_rational(a.point);
  std::vector<ExtRational> values = preimage_family(target, a.count);
  for (const ExtRational& v : values) {
    if (sigma(v) != target)
      throw std::logic_error("preimage check failed for " + format_rational(v));
    std::cout << format_rational(v) << "\n";
  }
  std::cout << "all " << values.size() << " map to " << format_rational(target)
            << "\n";
  return 0;
}

int run_verify(int jobs) {
  std::vector<CheckResult> results = run_verification(jobs);
  std::size_t failed = 0;
  for (const CheckResult& r : results) {
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.1f", r.millis);
    std::cout << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] "
              << r.description << " (" << ms << " ms)\n";
    if (!r.detail.empty()) std::cout << "      " << r.detail << "\n";
    if (!r.passed) ++failed;
  }
  if (failed == 0) {
    std::cout << "all " << results.size() << " checks passed\n";
    return 0;
  }
  std::cout << failed << " of " << results.size() << " checks FAILED\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Boundary dynamics of the cubic Thurston map f(z) = 3z^2/(2z^3+1): "
      "continued-fraction expansion, subgroup rewriting, the virtual "
      "endomorphism, the boundary map sigma on extended rationals, wreath "
      "recursions and twisted-map classification.\n"
      "Words use letters a..d with A..D as inverses and 'e' for the identity; "
      "fractions are written p/q (1/0 is infinity)."};
  app.require_subcommand(1);

  ExpandArgs expand_args;
  auto* cmd_expand = app.add_subcommand(
      "expand", "Run the even continued-fraction machine on p/q");
  cmd_expand->add_option("point", expand_args.point, "fraction p/q")->required();

  SigmaArgs sigma_args;
  auto* cmd_sigma =
      app.add_subcommand("sigma", "Boundary value sigma(p/q) of the pullback map");
  cmd_sigma->add_option("point", sigma_args.point, "fraction p/q")->required();
  cmd_sigma->add_flag("--orbit", sigma_args.show_orbit,
                      "also print the forward orbit to its cycle");
  cmd_sigma
      ->add_option("--oracle", sigma_args.oracle,
                   "evaluation route: decomp, stab or both")
      ->check(CLI::IsMember({"decomp", "stab", "both"}));
  cmd_sigma->add_option("--twist", sigma_args.twist,
                        "twist by a moduli word h (uses sigma of f.h)");
  cmd_sigma->add_option("--cap", sigma_args.cap, "orbit iteration cap");

  AttractorArgs attractor_args;
  auto* cmd_attractor = app.add_subcommand(
      "attractor", "Scan all reduced fractions up to a height and report cycles");
  cmd_attractor->add_option("--height", attractor_args.height, "max(|p|,|q|) bound")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_attractor->add_option("--twist", attractor_args.twist, "twist word");
  cmd_attractor->add_option("--cap", attractor_args.cap, "orbit iteration cap");
  cmd_attractor->add_option("--jobs", attractor_args.jobs, "parallel workers")
      ->check(CLI::PositiveNumber);

  PlotArgs plot_args;
  auto* cmd_plot = app.add_subcommand(
      "plot", "Write CSV rows p,q,sp,sq with sigma(p/q) = sp/sq");
  cmd_plot->add_option("--height", plot_args.height, "max(|p|,|q|) bound")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_plot->add_option("--out", plot_args.out, "output CSV path")->required();
  cmd_plot->add_option("--jobs", plot_args.jobs, "parallel workers")
      ->check(CLI::PositiveNumber);

  PhiArgs phi_args;
  auto* cmd_phi = app.add_subcommand(
      "phi", "Apply the virtual endomorphism (or an extension) to a word");
  cmd_phi->add_option("word", phi_args.word, "moduli word")->required();
  auto* flag_bar = cmd_phi->add_flag("--bar", phi_args.bar,
                                     "left-transversal extension phi-bar");
  auto* flag_psi = cmd_phi->add_flag("--psi-bar", phi_args.psi,
                                     "right-transversal extension psi-bar");
  flag_bar->excludes(flag_psi);

  WordArg rewrite_args;
  auto* cmd_rewrite = app.add_subcommand(
      "rewrite", "Rewrite an H-word over the subgroup generators g1..g5");
  cmd_rewrite->add_option("word", rewrite_args.word, "moduli word in H")->required();

  WordArg coset_args;
  auto* cmd_coset =
      app.add_subcommand("coset", "Left and right cosets of a word modulo H");
  cmd_coset->add_option("word", coset_args.word, "moduli word")->required();

  WreathArgs wreath_args;
  auto* cmd_wreath = app.add_subcommand(
      "wreath", "Evaluate a wreath recursion (built-in name or recursion file)");
  cmd_wreath
      ->add_option("recursion", wreath_args.recursion,
                   "phi-moduli | phi-f | phi-g | phi-f-b2 | path to file")
      ->required();
  cmd_wreath->add_option("word", wreath_args.word, "word in the recursion context")
      ->required();
  cmd_wreath->add_option("--level", wreath_args.level,
                         "also print the induced level-n permutation");
  cmd_wreath->add_option("--restrict", wreath_args.restrict_addr,
                         "also print the restriction at a vertex address, e.g. 13");
  cmd_wreath->add_flag("--nucleus", wreath_args.nucleus,
                       "run the bounded nucleus search");
  cmd_wreath->add_option("--max-size", wreath_args.max_size,
                         "nucleus candidate-set cap");
  cmd_wreath->add_option("--max-rounds", wreath_args.max_rounds,
                         "nucleus closure-round cap");

  WordArg twist_args;
  auto* cmd_twist = app.add_subcommand(
      "twist", "Classify the twisted map f.g for a moduli word g");
  cmd_twist->add_option("word", twist_args.word, "moduli word g")->required();

  FibersArgs fibers_args;
  auto* cmd_fibers =
      app.add_subcommand("fibers", "List distinct sigma-preimages of a point");
  cmd_fibers->add_option("point", fibers_args.point, "target fraction p/q")
      ->required();
  cmd_fibers->add_option("--count", fibers_args.count, "number of preimages")
      ->required()
      ->check(CLI::PositiveNumber);

  int verify_jobs = default_jobs();
  auto* cmd_verify = app.add_subcommand(
      "verify", "Run the full verification suite and print a pass/fail table");
  cmd_verify->add_option("--jobs", verify_jobs, "parallel workers for the scan")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(cmd_expand)) return run_expand(expand_args);
    if (app.got_subcommand(cmd_sigma)) return run_sigma(sigma_args);
    if (app.got_subcommand(cmd_attractor)) return run_attractor(attractor_args);
    if (app.got_subcommand(cmd_plot)) return run_plot(plot_args);
    if (app.got_subcommand(cmd_phi)) return run_phi(phi_args);
    if (app.got_subcommand(cmd_rewrite)) return run_rewrite(rewrite_args);
    if (app.got_subcommand(cmd_coset)) return run_coset(coset_args);
    if (app.got_subcommand(cmd_wreath)) return run_wreath(wreath_args);
    if (app.got_subcommand(cmd_twist)) return run_twist(twist_args);
    if (app.got_subcommand(cmd_fibers)) return run_fibers(fibers_args);
    if (app.got_subcommand(cmd_verify)) return run_verify(verify_jobs);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
