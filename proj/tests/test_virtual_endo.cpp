#include <random>
#include <stdexcept>

#include "doctest.h"
#include "pullback/sampling.hpp"
#include "pullback/schreier.hpp"
#include "pullback/virtual_endo.hpp"
#include "pullback/words.hpp"

using namespace pullback;

namespace {
Word m(const char* s) { return parse_word(s, Context::ModuliFree2); }

bool is_power_of(const Word& w, const Word& base) {
  if (base.empty()) return w.empty();
  if (w.length() % base.length() != 0) return false;
  long long k = static_cast<long long>(w.length() / base.length());
  return w == pow(base, k) || w == pow(base, -k);
}
}  // namespace

TEST_SUITE("virtual_endo") {

TEST_CASE("worked transducer value") {
  CHECK(phi(m("aaBABaaB")) == m("bAbb"));
}

TEST_CASE("generator images") {
  CHECK(generator_image(HGen::G1) == m("b"));
  CHECK(generator_image(HGen::G2) == m("B"));
  CHECK(generator_image(HGen::G3) == m("AB"));
  CHECK(generator_image(HGen::G4) == m("b"));
  CHECK(generator_image(HGen::G5) == m("a"));
  for (HGen g : {HGen::G1, HGen::G2, HGen::G3, HGen::G4, HGen::G5})
    CHECK(phi(hgen_word(g)) == generator_image(g));
}

TEST_CASE("cube images of the parabolics") {
  CHECK(phi(m("aaa")) == m("b"));
  CHECK(phi(m("bbb")) == m("a"));
  CHECK(phi(pow(m("c"), 3)) == m("c"));
  CHECK(phi(pow(m("d"), 3)) == pow(m("c"), 3));
  CHECK(phi(m("bbaa")) == m("e"));
}

TEST_CASE("phi rejects words outside H") {
  CHECK_THROWS_AS(phi(m("a")), std::domain_error);
  CHECK_THROWS_AS(phi(m("ba")), std::domain_error);
}

TEST_CASE("transducer equals the rewriting route") {
  std::mt19937_64 rng(11235);
  for (int i = 0; i < 2000; ++i) {
    Word w = random_h_word(rng, 64);
    CHECK(phi(w) == phi_via_generators(w));
  }
}

TEST_CASE("phi is a homomorphism on H") {
  std::mt19937_64 rng(853211);
  for (int i = 0; i < 1000; ++i) {
    Word u = random_h_word(rng, 32);
    Word v = random_h_word(rng, 32);
    CHECK(phi(concat(u, v)) == concat(phi(u), phi(v)));
    CHECK(phi(invert(u)) == invert(phi(u)));
  }
}

TEST_CASE("phi shortens by two except on powers of ab") {
  CHECK(phi(m("ab")) == m("ba"));
  CHECK(phi(pow(m("ab"), -2)) == pow(m("ba"), -2));
  std::mt19937_64 rng(314159);
  for (int i = 0; i < 2000; ++i) {
    Word w = random_h_word(rng, 48);
    Word img = phi(w);
    if (is_power_of(w, m("ab"))) {
      CHECK(img.length() == w.length());
    } else {
      CHECK(img.length() + 2 <= w.length());
    }
  }
}

TEST_CASE("phi_bar length trichotomy") {
  std::mt19937_64 rng(6180339);
  std::uniform_int_distribution<std::size_t> lend(0, 40);
  for (int i = 0; i < 2000; ++i) {
    Word w = random_reduced_word(rng, Context::ModuliFree2, lend(rng));
    Word img = phi_bar(w);
    if (is_power_of(w, m("ab"))) {
      CHECK(img.length() == w.length());
    } else if (!w.empty() && w.letters().front() == kB &&
               is_power_of(concat(m("B"), w), m("ab")) &&
               pow(m("ab"), static_cast<long long>(w.length() / 2)) ==
                   concat(m("B"), w)) {
      // w = b (ab)^k with k >= 0
      CHECK(img.length() == w.length() + 1);
    } else {
      CHECK(img.length() + 1 <= w.length());
    }
  }
  CHECK(phi_bar(m("b")) == m("ba"));
  CHECK(phi_bar(m("bab")) == m("baba"));
}

TEST_CASE("extensions agree with phi on H") {
  std::mt19937_64 rng(999331);
  for (int i = 0; i < 500; ++i) {
    Word w = random_h_word(rng, 40);
    CHECK(phi_bar(w) == phi(w));
    CHECK(psi_bar(w) == phi(w));
  }
}

TEST_CASE("surjectivity witnesses and the section") {
  CHECK(phi(m("Aba")) == m("a"));
  CHECK(phi(m("baB")) == m("b"));
  CHECK(section_lift(m("a")) == m("Aba"));
  CHECK(section_lift(m("b")) == m("baB"));
  CHECK(section_lift(m("e")) == m("e"));
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<std::size_t> lend(0, 24);
  for (int i = 0; i < 500; ++i) {
    Word w = random_reduced_word(rng, Context::ModuliFree2, lend(rng));
    Word lifted = section_lift(w);
    CHECK(in_H(lifted));
    CHECK(phi(lifted) == w);
  }
}

TEST_CASE("parabolic normal forms") {
  ParabolicForm p = parse_parabolic(m("a"));
  CHECK(p.base == kA);
  CHECK(p.exponent == 1);
  CHECK(p.conjugator.empty());

  p = parse_parabolic(m("AA"));
  CHECK(p.base == kA);
  CHECK(p.exponent == -2);

  p = parse_parabolic(m("c"));
  CHECK(p.base == kC);
  CHECK(p.exponent == 1);

  p = parse_parabolic(m("baba"));
  CHECK(p.base == kC);
  CHECK(p.exponent == -2);

  p = parse_parabolic(m("abab"));
  CHECK(p.base == kD);
  CHECK(p.exponent == -2);

  p = parse_parabolic(m("BABA"));
  CHECK(p.base == kD);
  CHECK(p.exponent == 2);

  p = parse_parabolic(m("aBaaaaabA"));
  CHECK(p.base == kA);
  CHECK(p.exponent == 5);
  CHECK(p.conjugator == m("bA"));

  CHECK_THROWS_AS(parse_parabolic(m("e")), std::invalid_argument);
  CHECK_THROWS_AS(parse_parabolic(m("aab")), std::invalid_argument);
  CHECK_THROWS_AS(parse_parabolic(m("aB")), std::invalid_argument);
}

TEST_CASE("parabolic words round trip") {
  std::mt19937_64 rng(24601);
  std::uniform_int_distribution<std::size_t> lend(0, 10);
  std::uniform_int_distribution<int> based(1, 4);
  std::uniform_int_distribution<long long> expd(-6, 6);
  for (int i = 0; i < 500; ++i) {
    ParabolicForm p;
    p.base = static_cast<Letter>(based(rng));
    long long e = expd(rng);
    if (e == 0) e = 1;
    p.exponent = e;
    p.conjugator = random_reduced_word(rng, Context::ModuliFree2, lend(rng));
    Word w = parabolic_word(p);
    ParabolicForm back = parse_parabolic(w);
    CHECK(parabolic_word(back) == w);
  }
}

TEST_CASE("phi_parabolic base transitions") {
  auto form = [](Letter base, long long e, const char* conj) {
    ParabolicForm p;
    p.base = base;
    p.exponent = e;
    p.conjugator = m(conj);
    return p;
  };
  ParabolicForm r = phi_parabolic(form(kA, 3, "e"));
  CHECK(r.base == kB);
  CHECK(r.exponent == 1);
  r = phi_parabolic(form(kB, 3, "e"));
  CHECK(r.base == kA);
  CHECK(r.exponent == 1);
  r = phi_parabolic(form(kC, 3, "e"));
  CHECK(r.base == kC);
  CHECK(r.exponent == 1);
  r = phi_parabolic(form(kD, 3, "e"));
  CHECK(r.base == kC);
  CHECK(r.exponent == 3);
  r = phi_parabolic(form(kA, -6, "e"));
  CHECK(r.base == kB);
  CHECK(r.exponent == -2);
  CHECK_THROWS_AS(phi_parabolic(form(kA, 2, "e")), std::domain_error);
}

TEST_CASE("phi_parabolic matches phi on the expanded words") {
  std::mt19937_64 rng(555);
  std::uniform_int_distribution<std::size_t> lend(0, 8);
  std::uniform_int_distribution<int> based(1, 4), signd(0, 1);
  for (int i = 0; i < 300; ++i) {
    ParabolicForm p;
    p.base = static_cast<Letter>(based(rng));
    p.exponent = signd(rng) ? 3 : -3;
    p.conjugator = random_reduced_word(rng, Context::ModuliFree2, lend(rng));
    Word w = parabolic_word(p);
    REQUIRE(in_H(w));
    CHECK(parabolic_word(phi_parabolic(p)) == phi(w));
  }
}

TEST_CASE("conjugator elimination") {
  ParabolicForm start;
  start.base = kB;
  start.exponent = 3;
  start.conjugator = m("abab");
  ConjugatorTrace t = eliminate_conjugator(start);
  CHECK(t.eliminated);
  CHECK(t.steps.size() <= 60);
  if (!t.steps.empty()) CHECK(t.steps.back().conjugator.empty());

  std::mt19937_64 rng(43110);
  std::uniform_int_distribution<std::size_t> lend(0, 20);
  for (int i = 0; i < 200; ++i) {
    ParabolicForm p;
    p.base = kC;
    p.exponent = 3;
    p.conjugator = random_reduced_word(rng, Context::ModuliFree2, lend(rng));
    ConjugatorTrace tr = eliminate_conjugator(p);
    CHECK(tr.eliminated);
  }
}

}  // TEST_SUITE
