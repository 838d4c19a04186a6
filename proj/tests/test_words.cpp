#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "pullback/words.hpp"

using namespace pullback;

namespace {
Word m(const char* s) { return parse_word(s, Context::ModuliFree2); }
}  // namespace

TEST_SUITE("words") {

TEST_CASE("parsing and identity") {
  CHECK(m("e") == Word::identity(Context::ModuliFree2));
  CHECK(m("") == Word::identity(Context::ModuliFree2));
  CHECK(m("e").empty());
  CHECK(format_word(m("e")) == "e");
  CHECK(format_word(m("abA")) == "abA");
  CHECK(m("aA") == m("e"));
  CHECK(m("aBbA") == m("e"));
  CHECK(m("abBA") == m("e"));
  CHECK_THROWS_AS(m("ax"), std::invalid_argument);
  CHECK_THROWS_AS(m("a b"), std::invalid_argument);
}

TEST_CASE("notational letters expand per context") {
  // Moduli: c = a^-1 b^-1, d = b^-1 a^-1.
  CHECK(m("c") == m("AB"));
  CHECK(m("C") == m("ba"));
  CHECK(m("d") == m("BA"));
  CHECK(m("D") == m("ab"));
  CHECK(m("acb") == m("e"));
  CHECK(m("abd") == m("e"));

  // Dynamical rank 3: d = b^-1 c^-1 a^-1, so a c b d = 1.
  auto dyn = [](const char* s) { return parse_word(s, Context::DynamicalRank3); };
  CHECK(dyn("d") == dyn("BCA"));
  CHECK(dyn("D") == dyn("acb"));
  CHECK(dyn("acbd") == dyn("e"));
  CHECK(dyn("c").length() == 1);  // c is a stored generator here

  // Free rank 4: nothing expands.
  auto fr = [](const char* s) { return parse_word(s, Context::FreeRank4); };
  CHECK(fr("abcd").length() == 4);
  CHECK(fr("dD") == fr("e"));
}

TEST_CASE("stored basis is enforced") {
  CHECK(stored_bases(Context::ModuliFree2) == 2);
  CHECK(stored_bases(Context::DynamicalRank3) == 3);
  CHECK(stored_bases(Context::FreeRank4) == 4);
  CHECK_THROWS_AS(Word(Context::ModuliFree2, std::vector<Letter>{kC}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Word(Context::DynamicalRank3, std::vector<Letter>{kD}),
                  std::invalid_argument);
  CHECK_NOTHROW(Word(Context::FreeRank4, std::vector<Letter>{kD}));
}

TEST_CASE("constructor reduces") {
  Word w(Context::ModuliFree2, std::vector<Letter>{kA, kB, -kB, -kA, kB});
  CHECK(w == m("b"));
}

TEST_CASE("group operations") {
  CHECK(concat(m("ab"), m("BA")) == m("e"));
  CHECK(concat(m("ab"), m("b")) == m("abb"));
  CHECK(invert(m("ab")) == m("BA"));
  CHECK(invert(m("e")) == m("e"));
  CHECK(conjugate(m("a"), m("b")) == m("Bab"));
  CHECK(conjugate(m("a"), m("e")) == m("a"));
  CHECK(pow(m("ab"), 3) == m("ababab"));
  CHECK(pow(m("ab"), 0) == m("e"));
  CHECK(pow(m("a"), -2) == m("AA"));
  CHECK(pow(m("ab"), -2) == m("BABA"));
}

TEST_CASE("mixed contexts are rejected") {
  CHECK_THROWS_AS(concat(m("a"), parse_word("a", Context::FreeRank4)),
                  std::invalid_argument);
}

TEST_CASE("ordering and hashing are consistent") {
  std::vector<Word> ws = {m("e"), m("a"), m("A"), m("ab"), m("ba"), m("bb")};
  for (const Word& u : ws) {
    CHECK_FALSE(u < u);
    CHECK(WordHash{}(u) == WordHash{}(Word(u)));
    for (const Word& v : ws) {
      if (u == v) continue;
      CHECK(((u < v) || (v < u)));
      CHECK_FALSE(((u < v) && (v < u)));
    }
  }
}

TEST_CASE("format round trip") {
  for (const char* s : {"e", "a", "A", "ab", "aBBa", "bAbb", "aaB"}) {
    CHECK(format_word(m(s)) == s);
    CHECK(m(format_word(m(s)).c_str()) == m(s));
  }
}

}  // TEST_SUITE
