#include "pullback/verify.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "pullback/boundary.hpp"
#include "pullback/cf.hpp"
#include "pullback/projective.hpp"
#include "pullback/sampling.hpp"
#include "pullback/schreier.hpp"
#include "pullback/twister.hpp"
#include "pullback/virtual_endo.hpp"
#include "pullback/words.hpp"
#include "pullback/wreath.hpp"

namespace pullback {

namespace {

Word m(const char* s) { return parse_word(s, Context::ModuliFree2); }
ExtRational q(const char* s) { return parse_rational(s); }

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += "FAILED: " + what;
    }
  }
  void info(const std::string& s) {
    if (!ok) return;
    if (!detail.empty()) detail += "; ";
    detail += s;
  }
};

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::vector<ExtRational> pts(std::initializer_list<const char*> ss) {
  std::vector<ExtRational> out;
  for (const char* s : ss) out.push_back(q(s));
  return out;
}

std::string join(const std::vector<ExtRational>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += " ";
    out += format_rational(xs[i]);
  }
  return out;
}

// --- 1: the two sample orbits, bit-exact and fast -------------------------

Outcome check_sample_orbits() {
  Outcome o;
  auto f = make_sigma();
  sigma(q("1/2"));  // warm up lazily initialized tables
  auto t0 = std::chrono::steady_clock::now();
  OrbitReport r1 = orbit(f, q("203/356"));
  double ms1 = ms_since(t0);
  o.expect(r1.tail == pts({"203/356", "-50/33", "-13/6", "6/1", "-1/2"}),
           "orbit tail of 203/356");
  o.expect(r1.cycle == pts({"0/1", "1/0"}), "orbit cycle of 203/356");
  o.expect(r1.steps_to_cycle == 5, "steps_to_cycle of 203/356");

  t0 = std::chrono::steady_clock::now();
  OrbitReport r2 = orbit(f, q("203/354"));
  double ms2 = ms_since(t0);
  o.expect(r2.tail == pts({"203/354", "-28/19", "-7/4", "-4/1"}),
           "orbit tail of 203/354 (expected 203/354 -28/19 -7/4 -4/1, got " +
               join(r2.tail) + ")");
  o.expect(r2.cycle == pts({"1/0", "0/1"}), "orbit cycle of 203/354");
  o.expect(ms1 < 1.0 && ms2 < 1.0,
           "orbit timing under 1 ms (got " + std::to_string(ms1) + " / " +
               std::to_string(ms2) + ")");
  o.info("orbits in " + std::to_string(ms1) + " / " + std::to_string(ms2) + " ms");
  return o;
}

// --- 2: finite global attractor over all heights <= 1000 ------------------

Outcome check_attractor(int jobs) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  AttractorSummary s = attractor_scan(make_sigma(), 1000, 100000, jobs, true);
  double secs = ms_since(t0) / 1000.0;
  o.expect(s.cycles.size() == 2, "exactly two cycles");
  if (s.cycles.size() == 2) {
    o.expect(s.cycles[0] == pts({"-1/1"}), "fixed point -1/1");
    o.expect(s.cycles[1] == pts({"0/1", "1/0"}), "two-cycle 0/1 <-> 1/0");
  }
  o.expect(s.exceptions.empty(),
           "no orbit exceptions and no parity violations (got " +
               std::to_string(s.exceptions.size()) + ")");
  o.expect(secs < 60.0, "scan under 60 s (got " + std::to_string(secs) + ")");
  std::size_t seeds = 0;
  for (const auto& row : s.counts_by_parity)
    for (std::size_t c : row) seeds += c;
  o.info(std::to_string(seeds) + " seeds in " + std::to_string(secs) + " s");
  return o;
}

// --- 3: sigma agrees with the parabolic-stabilizer route ------------------

Outcome check_sigma_oracle() {
  Outcome o;
  std::size_t n = 0, bad = 0;
  for_each_reduced(200, [&](const ExtRational& x) {
    ++n;
    if (sigma(x) != sigma_via_stabilizer(x)) ++bad;
  });
  o.expect(bad == 0, std::to_string(bad) + " disagreements");
  o.info(std::to_string(n) + " points compared");
  return o;
}

// --- 4: transducer vs the generator-image route ---------------------------

Outcome check_transducer() {
  Outcome o;
  o.expect(phi(m("aaBABaaB")) == m("bAbb"), "worked transducer example");
  Word images[] = {m("b"), m("B"), m("AB"), m("b"), m("a")};
  for (int i = 0; i < 5; ++i) {
    HGen g = static_cast<HGen>(i);
    o.expect(phi(hgen_word(g)) == images[i],
             std::string("image of ") + hgen_name(g));
    o.expect(generator_image(g) == images[i],
             std::string("image table entry of ") + hgen_name(g));
  }
  std::mt19937_64 rng(20260814);
  std::size_t bad = 0;
  const std::size_t kWords = 10000;
  for (std::size_t i = 0; i < kWords; ++i) {
    Word w = random_h_word(rng, 64);
    if (phi(w) != phi_via_generators(w)) ++bad;
  }
  o.expect(bad == 0, std::to_string(bad) + " transducer/rewrite disagreements");
  o.info(std::to_string(kWords) + " random H-words");
  return o;
}

// --- 5: rewriting round-trip ----------------------------------------------

Outcome check_rewriting() {
  Outcome o;
  RewriteResult r = rewrite(m("abbAB"));
  std::vector<Word> expected = {m("e"), m("ab"), m("e"), m("bAB"), m("e")};
  o.expect(r.factors == expected, "worked factor trace of abbAB");
  o.expect(r.generators.size() == 2 &&
               r.generators[0] == SignedHGen{HGen::G3, -1} &&
               r.generators[1] == SignedHGen{HGen::G1, -1},
           "worked generator sequence of abbAB");
  o.expect(expand_hgens(r.generators) == m("abbAB"), "worked round-trip");
  std::mt19937_64 rng(404816);
  std::size_t bad = 0;
  const std::size_t kWords = 10000;
  for (std::size_t i = 0; i < kWords; ++i) {
    Word w = random_h_word(rng, 64);
    if (expand_hgens(rewrite(w).generators) != w) ++bad;
  }
  o.expect(bad == 0, std::to_string(bad) + " round-trip failures");
  o.info(std::to_string(kWords) + " random H-words");
  return o;
}

// --- 6: point identities, reciprocal symmetry, parity transitions ---------

Outcome check_identities() {
  Outcome o;
  o.expect(sigma(q("1/1")) == q("-1/1"), "sigma(1/1)");
  o.expect(sigma(q("1/3")) == q("-1/1"), "sigma(1/3)");
  o.expect(sigma(q("-2/1")) == q("1/0"), "sigma(-2/1)");
  o.expect(sigma(q("1/2")) == q("0/1"),
           "sigma(1/2) (expected 0/1, got " + format_rational(sigma(q("1/2"))) + ")");
  o.expect(sigma(q("-1/2")) == q("0/1"), "sigma(-1/2)");
  for (long n = 1; n <= 100; ++n) {
    o.expect(sigma(ExtRational(n + 1, n)) == ExtRational(-n, n + 1),
             "sigma((n+1)/n) at n=" + std::to_string(n));
    ExtRational lower = sigma(ExtRational(n, n + 1));
    ExtRational want = n % 2 == 1 ? ExtRational(-(n - 1), n - 2)
                                  : ExtRational(-(n + 1), n);
    o.expect(lower == want,
             "sigma(n/(n+1)) at n=" + std::to_string(n) + " (expected " +
                 format_rational(want) + ", got " + format_rational(lower) + ")");
    if (!o.ok) break;
  }
  std::size_t bad_inv = 0, n_inv = 0;
  for_each_reduced(300, [&](const ExtRational& x) {
    ++n_inv;
    if (sigma(reciprocal(x)) != reciprocal(sigma(x))) ++bad_inv;
  });
  o.expect(bad_inv == 0, std::to_string(bad_inv) + " reciprocal-symmetry failures");
  std::size_t bad_par = 0, n_par = 0;
  for_each_reduced(500, [&](const ExtRational& x) {
    ++n_par;
    ParityClass in = parity_class(x);
    ParityClass out = parity_class(sigma(x));
    ParityClass want = in == ParityClass::OddOdd ? ParityClass::OddOdd
                       : in == ParityClass::OddEven ? ParityClass::EvenOdd
                                                    : ParityClass::OddEven;
    if (out != want) ++bad_par;
  });
  o.expect(bad_par == 0, std::to_string(bad_par) + " parity-transition failures");
  o.info(std::to_string(n_inv) + " reciprocal + " + std::to_string(n_par) +
         " parity points");
  return o;
}

// --- 7: the functional equation --------------------------------------------

Outcome check_functional_equation() {
  Outcome o;
  std::mt19937_64 rng(7771);
  std::uniform_int_distribution<long> num(-100, 100);
  std::uniform_int_distribution<long> den(0, 100);
  std::size_t bad = 0;
  const std::size_t kPairs = 1000;
  for (std::size_t i = 0; i < kPairs; ++i) {
    long p = num(rng), qq = den(rng);
    if (p == 0 && qq == 0) {
      --i;
      continue;
    }
    ExtRational x(p, qq);
    Word w = random_h_word(rng, 40);
    if (!verify_functional_equation(x, w)) ++bad;
  }
  o.expect(bad == 0, std::to_string(bad) + " functional-equation failures");
  o.info(std::to_string(kPairs) + " pairs");
  return o;
}

// --- 8: fibers and preimage families ---------------------------------------

Outcome check_fibers() {
  Outcome o;
  Word kernel = m("bbaa");
  for (long long k = -10; k <= 10; ++k) {
    ExtRational x = right_act(q("0/1"), pow(kernel, k));
    o.expect(sigma(x) == q("1/0"),
             "kernel fiber at k=" + std::to_string(k));
  }
  // Exact family over the target 1/0.
  std::vector<ExtRational> fam = preimage_family(q("1/0"), 5);
  for (std::size_t j = 0; j < fam.size(); ++j)
    o.expect(fam[j] == right_act(q("0/1"), pow(kernel, static_cast<long long>(j))),
             "family over 1/0 at j=" + std::to_string(j));
  std::mt19937_64 rng(88);
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(0, 50);
  std::uniform_int_distribution<int> kk(1, 8);
  for (int t = 0; t < 25; ++t) {
    long p = num(rng), qq = den(rng);
    if (p == 0 && qq == 0) {
      --t;
      continue;
    }
    ExtRational target(p, qq);
    std::size_t k = kk(rng);
    std::vector<ExtRational> f = preimage_family(target, k);
    o.expect(f.size() == k, "family size");
    for (std::size_t i = 0; i < f.size(); ++i) {
      o.expect(sigma(f[i]) == target,
               "preimage check for target " + format_rational(target));
      for (std::size_t j = i + 1; j < f.size(); ++j)
        o.expect(f[i] != f[j], "distinctness for target " + format_rational(target));
    }
    if (!o.ok) break;
  }
  o.info("21 kernel fibers + 25 random families");
  return o;
}

// --- 9: wreath engine -------------------------------------------------------

Outcome check_wreath() {
  Outcome o;
  auto w4 = [](const char* s1, const char* s2, const char* s3, const char* s4,
               std::vector<std::vector<int>> cycles) {
    WreathElement e;
    e.sections = {m(s1), m(s2), m(s3), m(s4)};
    e.perm = Perm::from_cycles(4, cycles);
    return e;
  };
  WreathElement lhs = w4("e", "ba", "a", "B", {{1, 4, 2}});
  WreathElement rhs = w4("ba", "A", "e", "b", {{1, 3, 4}});
  WreathElement want = w4("b", "baba", "a", "BA", {{2, 3, 4}});
  o.expect(wreath_mul(lhs, rhs) == want, "worked wreath product");

  Recursion phi_rec = Recursion::builtin("phi-moduli");
  for (long long n = 1; n <= 6; ++n) {
    WreathElement e = phi_rec.apply(pow(m("ba"), 3 * n));
    WreathElement expect_e;
    expect_e.sections = {pow(m("ba"), n), pow(m("ba"), n), pow(m("ba"), 3 * n),
                         pow(m("ab"), n)};
    expect_e.perm = Perm(4);
    o.expect(e == expect_e, "non-contraction witness at n=" + std::to_string(n));
  }

  // The dynamical recursion respects the relation a c b d = 1 with the
  // tabulated image of d.
  Recursion phi_f = Recursion::builtin("phi-f");
  WreathElement displayed_d;
  displayed_d.sections = {parse_word("d", Context::DynamicalRank3),
                          Word::identity(Context::DynamicalRank3),
                          Word::identity(Context::DynamicalRank3)};
  displayed_d.perm = Perm::from_cycles(3, {{1, 2}});
  WreathElement prod =
      wreath_mul(phi_f.apply(parse_word("acb", Context::DynamicalRank3)), displayed_d);
  o.expect(prod == wreath_identity(Context::DynamicalRank3, 3),
           "relation product of the dynamical recursion");

  NucleusResult contracting = nucleus_search(Recursion::builtin("phi-f-b2"), 200, 50);
  o.expect(contracting.contracting, "phi-f-b2 contracts");
  NucleusResult diverging = nucleus_search(phi_rec, 200, 50);
  o.expect(!diverging.contracting, "phi-moduli hits the caps");

  std::mt19937_64 rng(990917);
  std::size_t bad = 0;
  const std::size_t kWords = 10000;
  for (std::size_t i = 0; i < kWords; ++i) {
    Word w = random_h_word(rng, 64);
    if (!phi_cross_check(w)) ++bad;
  }
  o.expect(bad == 0, std::to_string(bad) + " cross-check failures");
  o.info("nucleus size " + std::to_string(contracting.nucleus.size()) + ", " +
         std::to_string(kWords) + " cross-checked words");
  return o;
}

// --- 10: twisting classifier ------------------------------------------------

Outcome check_twister() {
  Outcome o;
  auto kind = [&](const char* w) { return classify(m(w)).kind; };
  o.expect(kind("e") == TwistKind::RationalF, "class of e");
  o.expect(kind("bb") == TwistKind::RationalF, "class of bb");
  o.expect(kind("aB") == TwistKind::RationalF, "class of aB");
  o.expect(kind("A") == TwistKind::RationalG, "class of A");
  o.expect(kind("aaB") == TwistKind::RationalG, "class of aaB");
  o.expect(kind("AbA") == TwistKind::RationalG, "class of AbA");

  TwistClass tb = classify(m("b"));
  o.expect(tb.kind == TwistKind::RationalG, "class of b");
  o.expect(tb.has_evidence && tb.evidence.cycles.size() == 2 &&
               tb.evidence.cycles[0] == pts({"-1/1", "1/1"}) &&
               tb.evidence.cycles[1] == pts({"0/1", "1/0"}),
           "attractor of the b-twist");

  TwistClass ta = classify(m("a"));
  o.expect(ta.kind == TwistKind::Obstructed && ta.k == 0, "class of a");
  TwistClass taba = classify(m("aba"));
  o.expect(taba.kind == TwistKind::Obstructed && taba.k == 1, "class of aba");
  TwistClass tB = classify(m("B"));
  o.expect(tB.kind == TwistKind::Obstructed && tB.k == -1, "class of B");

  o.expect(psi_bar(m("b")) == m("b"), "psi_bar fixes b");
  o.expect(psi_bar(m("A")) == m("A"), "psi_bar fixes A");
  o.expect(psi_bar(m("aaB")) == m("AbA") && psi_bar(m("AbA")) == m("aaB"),
           "psi_bar swaps aaB and AbA");
  o.expect(psi_bar(m("aB")) == m("bb") && psi_bar(m("bb")) == m("aB"),
           "psi_bar swaps aB and bb");
  for (long long k = -10; k <= 10; ++k) {
    Word fam = concat(m("a"), pow(m("ba"), k));
    o.expect(psi_bar(fam) == fam, "psi_bar fixes family k=" + std::to_string(k));
  }

  std::mt19937_64 rng(137035);
  std::size_t bad = 0;
  const std::size_t kWords = 2000;
  for (std::size_t i = 0; i < kWords; ++i) {
    Word w = random_reduced_word(rng, Context::ModuliFree2,
                                 std::uniform_int_distribution<std::size_t>(0, 40)(rng));
    if (!reduce_to_M(w).reached) ++bad;
  }
  o.expect(bad == 0, std::to_string(bad) + " limit-set convergence failures");
  o.info(std::to_string(kWords) + " random words converged");
  return o;
}

}  // namespace

std::vector<CheckResult> run_verification(int jobs) {
  std::vector<CheckResult> out;
  auto record = [&out](const char* id, const char* description, Outcome o,
                       double millis) {
    out.push_back({id, description, o.ok, millis, o.detail});
  };

  auto timed = [&record](const char* id, const char* description, auto&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o = fn();
    record(id, description, std::move(o), ms_since(t0));
  };

  timed("1", "sample orbits, exact and under 1 ms", check_sample_orbits);
  timed("2", "finite global attractor over heights <= 1000",
        [jobs] { return check_attractor(jobs); });
  timed("3", "sigma equals the stabilizer route (heights <= 200)",
        check_sigma_oracle);
  timed("4", "transducer equals the rewrite route", check_transducer);
  timed("5", "subgroup rewriting round-trip", check_rewriting);
  timed("6", "point identities, reciprocity, parity", check_identities);
  timed("7", "functional equation on random pairs", check_functional_equation);
  timed("8", "kernel fibers and preimage families", check_fibers);
  timed("9", "wreath recursion engine", check_wreath);
  timed("10", "twisting classifier and limit set", check_twister);
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

}  // namespace pullback
