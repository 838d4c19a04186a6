#pragma once

#include <string>
#include <vector>

#include "pullback/words.hpp"

namespace pullback {

// Right-coset states of the index-4 subgroup H, labelled by the transversal
// representatives 1, b, a, A.
enum class CosetState : std::uint8_t { S1, SB, SA, SAInv };

const char* coset_state_name(CosetState s);
Word coset_rep(CosetState s);  // e, b, a, A (moduli words)

// One automaton step on a stored moduli letter (+-a, +-b).
CosetState step(CosetState s, Letter l);

// Fold step over the word from S1.  Computes the right coset of w.
CosetState coset_of(const Word& w);
bool in_H(const Word& w);

// Schreier factor rep(t) . s . rep(step(t,s))^-1, tabulated for all four
// states and all four signed letters.
Word schreier_gamma(CosetState t, Letter s);

// The five subgroup generators.
enum class HGen : std::uint8_t { G1, G2, G3, G4, G5 };
Word hgen_word(HGen g);  // baB, bbA, BA, aaa, Aba
const char* hgen_name(HGen g);

struct SignedHGen {
  HGen gen;
  int sign;  // +1 or -1
  bool operator==(const SignedHGen& o) const { return gen == o.gen && sign == o.sign; }
};

// Rewriting of an H-word over the subgroup generators.  factors lists the
// Schreier factor of every input letter (including trivial ones, in order);
// generators is the same sequence with trivial factors dropped and each
// nontrivial factor identified as g_i or its inverse.
struct RewriteResult {
  std::vector<Word> factors;
  std::vector<SignedHGen> generators;
};

RewriteResult rewrite(const Word& w);  // throws std::domain_error if w is not in H

// Expands a signed-generator sequence back to a moduli word.
Word expand_hgens(const std::vector<SignedHGen>& gens);

enum class LeftCoset { H, BInvH, AH, AInvH };
enum class RightCoset { H, HA, HAInv, HB };

LeftCoset left_coset(const Word& w);
RightCoset right_coset(const Word& w);
const char* left_coset_name(LeftCoset c);
const char* right_coset_name(RightCoset c);

}  // namespace pullback
