#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "pullback/sampling.hpp"
#include "pullback/schreier.hpp"
#include "pullback/virtual_endo.hpp"
#include "pullback/words.hpp"
#include "pullback/wreath.hpp"

using namespace pullback;

namespace {
Word m(const char* s) { return parse_word(s, Context::ModuliFree2); }

WreathElement w4(const char* s1, const char* s2, const char* s3, const char* s4,
                 std::vector<std::vector<int>> cycles) {
  WreathElement e;
  e.sections = {m(s1), m(s2), m(s3), m(s4)};
  e.perm = Perm::from_cycles(4, std::move(cycles));
  return e;
}
}  // namespace

TEST_SUITE("wreath") {

TEST_CASE("permutations compose left-first") {
  Perm s = Perm::from_cycles(4, {{1, 4, 2}});
  Perm t = Perm::from_cycles(4, {{1, 3, 4}});
  CHECK(s.then(t) == Perm::from_cycles(4, {{2, 3, 4}}));
  CHECK(s.then(s.inverse()) == Perm(4));
  CHECK(Perm(4).is_identity());
  CHECK(Perm(4).cycle_string() == "()");
  CHECK(s.then(t).cycle_string() == "(2 3 4)");
  CHECK(Perm::from_cycles(4, {{1, 2}, {3, 4}}).cycle_string() == "(1 2)(3 4)");
  CHECK(s.map(0) == 3);  // 1 -> 4, zero-based
  CHECK_THROWS_AS(Perm::from_cycles(3, {{1, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(Perm::from_cycles(3, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("permutation order") {
  CHECK(perm_order({0, 1, 2, 3}) == 1);
  CHECK(perm_order({1, 0, 3, 2}) == 2);
  CHECK(perm_order({0, 2, 3, 1}) == 3);
  CHECK(perm_order({1, 0, 3, 4, 2}) == 6);  // a 2-cycle and a 3-cycle
}

TEST_CASE("worked wreath product") {
  WreathElement lhs = w4("e", "ba", "a", "B", {{1, 4, 2}});
  WreathElement rhs = w4("ba", "A", "e", "b", {{1, 3, 4}});
  WreathElement want = w4("b", "baba", "a", "BA", {{2, 3, 4}});
  CHECK(wreath_mul(lhs, rhs) == want);
  CHECK(format_wreath(want) == "<b, baba, a, BA> (2 3 4)");
  CHECK(format_wreath(wreath_identity(Context::ModuliFree2, 4)) ==
        "<e, e, e, e> ()");
}

TEST_CASE("wreath inverse and associativity") {
  WreathElement u = w4("e", "ba", "a", "B", {{1, 4, 2}});
  WreathElement v = w4("ba", "A", "e", "b", {{1, 3, 4}});
  WreathElement w = w4("bb", "e", "A", "ab", {{2, 4}});
  WreathElement id = wreath_identity(Context::ModuliFree2, 4);
  CHECK(wreath_mul(u, wreath_inv(u)) == id);
  CHECK(wreath_mul(wreath_inv(u), u) == id);
  CHECK(wreath_mul(wreath_mul(u, v), w) == wreath_mul(u, wreath_mul(v, w)));
}

TEST_CASE("builtin moduli recursion") {
  Recursion rec = Recursion::builtin("phi-moduli");
  CHECK(rec.degree() == 4);
  CHECK(rec.context() == Context::ModuliFree2);
  CHECK(rec.image(kA) == w4("ba", "b", "A", "e", {{1, 3, 4}}));
  CHECK(rec.image(kB) == w4("B", "ba", "e", "a", {{1, 2, 3}}));
  CHECK(rec.apply(m("ba")) == w4("e", "b", "ba", "a", {{1, 2, 4}}));
  CHECK(rec.apply(m("e")) == wreath_identity(Context::ModuliFree2, 4));
  CHECK(rec.apply(m("aA")) == wreath_identity(Context::ModuliFree2, 4));
}

TEST_CASE("apply is a homomorphism") {
  Recursion rec = Recursion::builtin("phi-moduli");
  std::mt19937_64 rng(52520);
  std::uniform_int_distribution<std::size_t> lend(0, 16);
  for (int i = 0; i < 300; ++i) {
    Word u = random_reduced_word(rng, Context::ModuliFree2, lend(rng));
    Word v = random_reduced_word(rng, Context::ModuliFree2, lend(rng));
    CHECK(rec.apply(concat(u, v)) == wreath_mul(rec.apply(u), rec.apply(v)));
    CHECK(rec.apply(invert(u)) == wreath_inv(rec.apply(u)));
  }
}

TEST_CASE("non-contraction witness") {
  Recursion rec = Recursion::builtin("phi-moduli");
  for (long long n = 1; n <= 3; ++n) {
    WreathElement e = rec.apply(pow(m("ba"), 3 * n));
    WreathElement expect;
    expect.sections = {pow(m("ba"), n), pow(m("ba"), n), pow(m("ba"), 3 * n),
                       pow(m("ab"), n)};
    expect.perm = Perm(4);
    CHECK(e == expect);
  }
}

TEST_CASE("restrictions at vertices") {
  Recursion rec = Recursion::builtin("phi-moduli");
  Word w = pow(m("ba"), 3);
  CHECK(rec.restriction(w, "3") == w);
  CHECK(rec.restriction(w, "1") == m("ba"));
  CHECK(rec.restriction(w, "13") == m("ba"));
  CHECK(rec.restriction(w, "") == w);
  CHECK_THROWS_AS(rec.restriction(w, "5"), std::invalid_argument);
  CHECK_THROWS_AS(rec.restriction(w, "0"), std::invalid_argument);
  CHECK_THROWS_AS(rec.restriction(w, "1x"), std::invalid_argument);
}

TEST_CASE("level actions are consistent projections") {
  Recursion rec = Recursion::builtin("phi-moduli");
  std::mt19937_64 rng(12321);
  std::uniform_int_distribution<std::size_t> lend(0, 10);
  for (int i = 0; i < 50; ++i) {
    Word w = random_reduced_word(rng, Context::ModuliFree2, lend(rng));
    std::vector<int> l1 = rec.act_level(w, 1);
    std::vector<int> l2 = rec.act_level(w, 2);
    WreathElement e = rec.apply(w);
    for (int j = 0; j < 4; ++j) CHECK(l1[j] == e.perm.map(j));
    for (int idx = 0; idx < 16; ++idx) CHECK(l2[idx] / 4 == l1[idx / 4]);
  }
  CHECK(perm_order(rec.act_level(m("a"), 1)) == 3);
  std::vector<int> ident = rec.act_level(m("e"), 3);
  for (std::size_t j = 0; j < ident.size(); ++j)
    CHECK(ident[j] == static_cast<int>(j));
  CHECK_THROWS_AS(rec.act_level(m("a"), 13), std::invalid_argument);
}

TEST_CASE("cube of a acts trivially on the first level only") {
  // a^3 lies in H, so it fixes branch 1; its section there is phi(a^3) = b.
  Recursion rec = Recursion::builtin("phi-moduli");
  WreathElement e = rec.apply(m("aaa"));
  CHECK(e.perm.map(0) == 0);
  CHECK(e.sections[0] == phi(m("aaa")));
}

TEST_CASE("tree action cross-checks the transducer") {
  std::mt19937_64 rng(998877);
  for (int i = 0; i < 500; ++i) {
    Word w = random_h_word(rng, 48);
    CHECK(phi_cross_check(w));
  }
  CHECK_THROWS_AS(phi_cross_check(m("a")), std::domain_error);
}

TEST_CASE("dynamical recursion satisfies its defining relation") {
  Recursion rec = Recursion::builtin("phi-f");
  CHECK(rec.degree() == 3);
  CHECK(rec.context() == Context::DynamicalRank3);
  auto dyn = [](const char* s) { return parse_word(s, Context::DynamicalRank3); };
  CHECK(rec.apply(dyn("acbd")) == wreath_identity(Context::DynamicalRank3, 3));

  WreathElement displayed_d;
  displayed_d.sections = {dyn("d"), dyn("e"), dyn("e")};
  displayed_d.perm = Perm::from_cycles(3, {{1, 2}});
  CHECK(wreath_mul(rec.apply(dyn("acb")), displayed_d) ==
        wreath_identity(Context::DynamicalRank3, 3));
}

TEST_CASE("pinned images of the rank-4 recursions") {
  auto fr = [](const char* s) { return parse_word(s, Context::FreeRank4); };
  Recursion g = Recursion::builtin("phi-g");
  CHECK(g.degree() == 3);
  CHECK(g.context() == Context::FreeRank4);
  CHECK(g.image(kA).sections == std::vector<Word>{fr("e"), fr("BDC"), fr("e")});
  CHECK(g.image(kA).perm == Perm::from_cycles(3, {{1, 2}}));
  CHECK(g.image(kC).sections == std::vector<Word>{fr("e"), fr("db"), fr("D")});
  CHECK(g.image(kC).perm == Perm::from_cycles(3, {{2, 3}}));

  Recursion fb2 = Recursion::builtin("phi-f-b2");
  CHECK(fb2.context() == Context::FreeRank4);
  CHECK(fb2.image(kB).sections == std::vector<Word>{fr("a"), fr("e"), fr("e")});
  CHECK(fb2.image(kB).perm == Perm::from_cycles(3, {{1, 2}}));
  CHECK(fb2.image(kD).sections == std::vector<Word>{fr("e"), fr("c"), fr("AB")});
}

TEST_CASE("recursion text parsing") {
  std::istringstream in(
      "# a sample recursion\n"
      "degree 3\n"
      "gen a = <e, e, b> (1 3)\n"
      "gen b = <B, e, CD> (1 3)\n"
      "gen c = <e, c, e> (2 3)\n");
  Recursion rec = Recursion::parse(in);
  CHECK(rec.degree() == 3);
  CHECK(rec.context() == Context::DynamicalRank3);
  Recursion builtin = Recursion::builtin("phi-f");
  for (Letter l : {kA, kB, kC}) CHECK(rec.image(l) == builtin.image(l));
}

TEST_CASE("parsing accepts identity permutations and rejects junk") {
  std::istringstream ok(
      "degree 2\n"
      "gen a = <a, b> ()\n"
      "gen b = <e, e> (1 2)\n");
  Recursion rec = Recursion::parse(ok);
  CHECK(rec.image(kA).perm.is_identity());
  CHECK(rec.image(kB).perm == Perm::from_cycles(2, {{1, 2}}));

  auto reject = [](const char* text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(Recursion::parse(in), std::invalid_argument);
  };
  reject("gen a = <e> ()\n");                          // missing degree
  reject("degree 0\ngen a = <> ()\n");                 // bad degree
  reject("degree 5\ngen a = <e,e,e,e,e> ()\n");        // degree too large
  reject("degree 2\ngen a = <e> ()\ngen b = <e, e> ()\n");     // section count
  reject("degree 2\ngen a = <e, e> (1 3)\ngen b = <e, e> ()\n");  // bad point
  reject("degree 2\ngen q = <e, e> ()\n");             // unknown generator
  reject("degree 2\ngen a = <e, e> ()\n");             // missing generator b
  reject("degree 2\ngen a = <e, e> ()\ngen a = <e, e> ()\n");  // duplicate
  reject("degree 2\nfoo bar\n");                       // unknown directive
  reject("degree 2\ngen a = e, e ()\ngen b = <e, e> ()\n");  // missing <...>
}

TEST_CASE("recursion files round trip") {
  namespace fs = std::filesystem;
  fs::path path = fs::temp_directory_path() / "pullback_test_recursion.txt";
  {
    std::ofstream out(path);
    out << "degree 4\n"
           "# the moduli recursion\n"
           "gen a = <ba, b, A, e> (1 3 4)\n"
           "gen b = <B, ba, e, a> (1 2 3)\n";
  }
  Recursion rec = Recursion::from_file(path.string());
  Recursion builtin = Recursion::builtin("phi-moduli");
  CHECK(rec.image(kA) == builtin.image(kA));
  CHECK(rec.image(kB) == builtin.image(kB));
  std::remove(path.string().c_str());
  CHECK_THROWS_AS(Recursion::from_file("/nonexistent/recursion.txt"),
                  std::invalid_argument);
  CHECK_THROWS_AS(Recursion::builtin("no-such-recursion"), std::invalid_argument);
  CHECK(Recursion::builtin_names().size() == 4);
  CHECK_THROWS_AS(Recursion::builtin("phi-moduli").image(kC),
                  std::invalid_argument);
}

TEST_CASE("bounded nucleus search") {
  NucleusResult good = nucleus_search(Recursion::builtin("phi-f-b2"), 200, 50);
  CHECK(good.contracting);
  CHECK_FALSE(good.nucleus.empty());
  // The candidate set contains the identity and all generators, and is closed
  // under first-level restrictions.
  Recursion rec = Recursion::builtin("phi-f-b2");
  auto in_nucleus = [&good](const Word& w) {
    for (const Word& u : good.nucleus)
      if (u == w) return true;
    return false;
  };
  CHECK(in_nucleus(parse_word("e", Context::FreeRank4)));
  for (const char* s : {"a", "b", "c", "d", "A", "B", "C", "D"})
    CHECK(in_nucleus(parse_word(s, Context::FreeRank4)));
  for (const Word& u : good.nucleus)
    for (const Word& sec : rec.apply(u).sections) CHECK(in_nucleus(sec));

  NucleusResult bad = nucleus_search(Recursion::builtin("phi-moduli"), 200, 50);
  CHECK_FALSE(bad.contracting);
  CHECK(bad.nucleus.empty());
  CHECK(bad.max_length_seen >= 4);
  CHECK_FALSE(bad.longest_seen.empty());
}

}  // TEST_SUITE
