#pragma once

#include <vector>

#include "pullback/projective.hpp"
#include "pullback/schreier.hpp"
#include "pullback/words.hpp"

namespace pullback {

// The virtual endomorphism phi: H -> full group, computed by a letter
// transducer over the coset automaton.  Throws std::domain_error when the
// input is not in H.
Word phi(const Word& w);

// Independent route: rewrite over the subgroup generators, then substitute
// their images g1 -> b, g2 -> B, g3 -> AB, g4 -> b, g5 -> a.  Must agree with
// phi on all of H.
Word phi_via_generators(const Word& w);
Word generator_image(HGen g);

// Extension of phi to the whole group using the left transversal
// {1, b^-1, a, a^-1}: w in x H maps to phi(x^-1 w).
Word phi_bar(const Word& w);

// Extension using the right transversal {1, a, a^-1, b}: g in H x maps to
// x phi(g x^-1).
Word psi_bar(const Word& g);

// Section of phi: s(a) = Aba, s(b) = baB extended letterwise; phi(s(w)) = w.
Word section_lift(const Word& w);

// conjugator^-1 . base^exponent . conjugator over the moduli group, with
// base one of the letters a, b, c, d (c, d are the notational parabolics).
// The base is stored as a positive letter; the exponent carries the sign.
struct ParabolicForm {
  Letter base = kA;
  BigInt exponent = 1;
  Word conjugator{Context::ModuliFree2};
};

Word parabolic_word(const ParabolicForm& p);

// Parse a reduced moduli word as a conjugated power of a, b, c or d, by
// peeling the conjugator and classifying the cyclically reduced core.
// Throws std::invalid_argument if the word has no such shape.
ParabolicForm parse_parabolic(const Word& w);

// phi on a parabolic form whose exponent is divisible by 3 (cubes of the
// four base parabolics lie in H in every conjugate).  The result is the
// parsed normal form of phi(parabolic_word(p)).
ParabolicForm phi_parabolic(const ParabolicForm& p);

// Iterates phi_parabolic projectively (the exponent is re-scaled to +-3 each
// round, so only base, sign and conjugator evolve) until the conjugator is
// empty or the round cap is hit.  Default cap: 10 * (|conjugator| + 3).
struct ConjugatorTrace {
  std::vector<ParabolicForm> steps;  // successive normal forms, input excluded
  bool eliminated = false;
};

ConjugatorTrace eliminate_conjugator(const ParabolicForm& start, std::size_t cap = 0);

}  // namespace pullback
