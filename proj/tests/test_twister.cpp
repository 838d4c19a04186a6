#include <optional>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "pullback/boundary.hpp"
#include "pullback/sampling.hpp"
#include "pullback/twister.hpp"
#include "pullback/virtual_endo.hpp"
#include "pullback/words.hpp"

using namespace pullback;

namespace {
Word m(const char* s) { return parse_word(s, Context::ModuliFree2); }

// a (ba)^k; reduces to B (AB)^(-k-1) for negative k.
Word family(long long k) { return concat(m("a"), pow(m("ba"), k)); }

ExtRational r(long long p, long long q) { return ExtRational(p, q); }
}  // namespace

TEST_SUITE("twister") {

TEST_CASE("limit set membership") {
  using Tag = MElement::Tag;
  auto tag_of = [](const char* s) {
    auto e = match_m(m(s));
    REQUIRE(e.has_value());
    CHECK(e->word == m(s));
    return e->tag;
  };
  CHECK(tag_of("e") == Tag::E);
  CHECK(tag_of("b") == Tag::B);
  CHECK(tag_of("A") == Tag::AInv);
  CHECK(tag_of("aaB") == Tag::AABInv);
  CHECK(tag_of("AbA") == Tag::AInvBAInv);
  CHECK(tag_of("aB") == Tag::ABInv);
  CHECK(tag_of("bb") == Tag::BB);

  for (long long k = -6; k <= 6; ++k) {
    auto e = match_m(family(k));
    REQUIRE(e.has_value());
    CHECK(e->tag == Tag::Family);
    CHECK(e->k == k);
  }
  CHECK(match_m(m("a"))->k == 0);
  CHECK(match_m(m("aba"))->k == 1);
  CHECK(match_m(m("ababa"))->k == 2);
  CHECK(match_m(m("B"))->k == -1);
  CHECK(match_m(m("BAB"))->k == -2);

  for (const char* s : {"ab", "ba", "aa", "bab", "Ab", "aBa", "abab", "BB"})
    CHECK_FALSE(match_m(m(s)).has_value());
  CHECK_FALSE(match_m(parse_word("b", Context::DynamicalRank3)).has_value());
}

TEST_CASE("limit set element names") {
  auto name = [](const Word& w) { return m_element_name(*match_m(w)); };
  CHECK(name(m("e")) == "e");
  CHECK(name(m("b")) == "b");
  CHECK(name(m("A")) == "A");
  CHECK(name(m("aaB")) == "aaB");
  CHECK(name(m("AbA")) == "AbA");
  CHECK(name(m("aB")) == "aB");
  CHECK(name(m("bb")) == "bb");
  CHECK(name(m("a")) == "a(ba)^0");
  CHECK(name(m("aba")) == "a(ba)^1");
  CHECK(name(m("BAB")) == "a(ba)^-2");
}

TEST_CASE("the limit set is invariant under the outer iteration") {
  // psi_bar permutes the limit set: e, b, A and the family are fixed;
  // aaB <-> AbA and aB <-> bb are swapped.
  CHECK(psi_bar(m("e")) == m("e"));
  CHECK(psi_bar(m("b")) == m("b"));
  CHECK(psi_bar(m("A")) == m("A"));
  CHECK(psi_bar(m("aaB")) == m("AbA"));
  CHECK(psi_bar(m("AbA")) == m("aaB"));
  CHECK(psi_bar(m("aB")) == m("bb"));
  CHECK(psi_bar(m("bb")) == m("aB"));
  for (long long k = -10; k <= 10; ++k) CHECK(psi_bar(family(k)) == family(k));
}

TEST_CASE("reduction to the limit set") {
  ReduceResult direct = reduce_to_M(m("b"));
  CHECK(direct.reached);
  CHECK(direct.steps == 0);
  CHECK(direct.final_word == m("b"));
  CHECK(direct.element.tag == MElement::Tag::B);

  // b^3 and a^3 land after a single step: psi_bar restricted to the
  // subgroup is the transducer, which sends b^3 -> a and a^3 -> b.
  ReduceResult cubeb = reduce_to_M(m("bbb"));
  CHECK(cubeb.reached);
  CHECK(cubeb.steps == 1);
  CHECK(cubeb.final_word == m("a"));
  ReduceResult cubea = reduce_to_M(m("aaa"));
  CHECK(cubea.reached);
  CHECK(cubea.steps == 1);
  CHECK(cubea.final_word == m("b"));

  // An explicit cap stops the iteration early.
  REQUIRE_FALSE(match_m(m("abab")).has_value());
  REQUIRE_FALSE(match_m(psi_bar(m("abab"))).has_value());
  ReduceResult capped = reduce_to_M(m("abab"), 1);
  CHECK_FALSE(capped.reached);
  CHECK(capped.steps == 1);
  CHECK(capped.final_word == psi_bar(m("abab")));
  CHECK(reduce_to_M(m("abab")).reached);
}

TEST_CASE("random words reach the limit set within the default cap") {
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<std::size_t> lend(0, 24);
  for (int i = 0; i < 400; ++i) {
    Word w = random_reduced_word(rng, Context::ModuliFree2, lend(rng));
    ReduceResult res = reduce_to_M(w);
    CHECK(res.reached);
    auto e = match_m(res.final_word);
    REQUIRE(e.has_value());
    CHECK(e->tag == res.element.tag);
    CHECK(e->k == res.element.k);
    // One more outer step stays inside the limit set.
    CHECK(match_m(psi_bar(res.final_word)).has_value());
  }
}

TEST_CASE("twist class names") {
  CHECK(std::string(twist_kind_name(TwistKind::RationalF)) == "RationalF");
  CHECK(std::string(twist_kind_name(TwistKind::RationalG)) == "RationalG");
  CHECK(std::string(twist_kind_name(TwistKind::Obstructed)) == "Obstructed");
}

TEST_CASE("classification of the limit set representatives") {
  for (const char* s : {"e", "bb", "aB"}) {
    TwistClass c = classify(m(s));
    CHECK(c.kind == TwistKind::RationalF);
    CHECK(c.has_evidence);
    CHECK(c.steps == 0);
  }
  for (const char* s : {"b", "A", "aaB", "AbA"}) {
    TwistClass c = classify(m(s));
    CHECK(c.kind == TwistKind::RationalG);
    CHECK(c.has_evidence);
    std::size_t two = 0;
    for (const auto& cyc : c.evidence.cycles)
      if (cyc.size() == 2) ++two;
    CHECK(two >= 2);
  }
  struct { const char* s; long long k; } family_cases[] = {
      {"a", 0}, {"aba", 1}, {"ababa", 2}, {"B", -1}, {"BAB", -2}};
  for (const auto& fc : family_cases) {
    TwistClass c = classify(m(fc.s));
    CHECK(c.kind == TwistKind::Obstructed);
    CHECK(c.k == fc.k);
    CHECK_FALSE(c.has_evidence);
    CHECK(c.rep.tag == MElement::Tag::Family);
  }
}

TEST_CASE("evidence for the untwisted map is the plain attractor") {
  TwistClass c = classify(m("e"));
  REQUIRE(c.evidence.cycles.size() == 2);
  CHECK(c.evidence.cycles[0] == std::vector<ExtRational>{r(-1, 1)});
  CHECK(c.evidence.cycles[1] == std::vector<ExtRational>{r(0, 1), r(1, 0)});
  CHECK(c.evidence.exceptions.empty());
  // Every scanned point converges to one of the two cycles.
  std::size_t total = 0;
  for (const auto& row : c.evidence.counts_by_parity)
    for (std::size_t n : row) total += n;
  CHECK(total == count_reduced(50));
}

TEST_CASE("evidence for the single twist pairs the former fixed points") {
  TwistClass c = classify(m("b"));
  CHECK(c.kind == TwistKind::RationalG);
  REQUIRE(c.evidence.cycles.size() == 2);
  CHECK(c.evidence.cycles[0] == std::vector<ExtRational>{r(-1, 1), r(1, 1)});
  CHECK(c.evidence.cycles[1] == std::vector<ExtRational>{r(0, 1), r(1, 0)});
  CHECK(c.evidence.exceptions.empty());
}

TEST_CASE("classification after a reduction step") {
  TwistClass cb = classify(m("bbb"));
  CHECK(cb.kind == TwistKind::Obstructed);
  CHECK(cb.k == 0);
  CHECK(cb.steps == 1);
  TwistClass ca = classify(m("aaa"));
  CHECK(ca.kind == TwistKind::RationalG);
  CHECK(ca.steps == 1);
  CHECK(m_element_name(ca.rep) == "b");
}

TEST_CASE("random twists classify without contradiction") {
  std::mt19937_64 rng(777001);
  std::uniform_int_distribution<std::size_t> lend(0, 14);
  int rational = 0, obstructed = 0;
  for (int i = 0; i < 60; ++i) {
    Word w = random_reduced_word(rng, Context::ModuliFree2, lend(rng));
    TwistClass c = classify(w, 20);  // modest evidence height keeps this fast
    if (c.kind == TwistKind::Obstructed) {
      ++obstructed;
      CHECK_FALSE(c.has_evidence);
    } else {
      ++rational;
      CHECK(c.has_evidence);
      CHECK(c.evidence.exceptions.empty());
    }
  }
  CHECK(rational > 0);
  CHECK(obstructed > 0);
}

}  // TEST_SUITE
