#pragma once

#include <string>
#include <vector>

#include "pullback/projective.hpp"
#include "pullback/words.hpp"

namespace pullback {

// Matrix-side letters used by the expansion machine.
enum class MatLetter : std::uint8_t { A, AInv, B, BInv };

MobiusMat mat_letter_matrix(MatLetter l);
MatLetter mat_letter_inverse(MatLetter l);
std::string mat_letter_name(MatLetter l);  // "A", "A^-1", "B", "B^-1"

// Anti-isomorphism onto fundamental-group words: reverse the sequence and
// rename A -> a, B -> b (keeping inverses).
Word mat_letters_to_word(const std::vector<MatLetter>& ls);

// Result of running the expansion machine on a point:
//   x = act(product of mat_letters in appended order, terminal)
//     = right_act(terminal, fund_word).
struct Decomposition {
  ExtRational terminal;               // one of 0/1, 1/0, 1/1
  std::vector<MatLetter> mat_letters; // letters appended by the machine
  Word fund_word;                     // moduli word; x = terminal . fund_word
  std::vector<std::string> labels;    // one tag per machine step
};

// The even-continued-fraction machine.  Terminals are 0/1, 1/0 and 1/1;
// every step strictly decreases max(|p|,|q|) except the final -1/1 -> 1/1
// adjustment.
Decomposition decompose(const ExtRational& x);

// Folds the matrix letters back over the terminal; equals the input of
// decompose.
ExtRational recompose(const Decomposition& d);

// "[label;...;terminal]" with no labels for a terminal input, e.g. "[0/1]".
std::string cf_labels(const Decomposition& d);

// Parabolic stabilizer data: conjugator . base . conjugator^-1 fixes x.  The
// base depends on the orbit of x: A for the 0/1 orbit, B for the 1/0 orbit
// and A B for the odd/odd orbit (whose machine terminal 1/1 first pulls back
// to the representative -1/1 = act(A, 1/1), absorbing one A into the
// conjugator).
struct Stabilizer {
  std::vector<MatLetter> conjugator;
  std::vector<MatLetter> base;
};

Stabilizer stabilizer(const ExtRational& x);

// conjugator . base^power . conjugator^-1 as a matrix.
MobiusMat stabilizer_matrix(const Stabilizer& s, long long power = 1);

}  // namespace pullback
