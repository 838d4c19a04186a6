#pragma once

#include <random>

#include "pullback/words.hpp"

namespace pullback {

// Uniformly random freely reduced word of exactly the given length over the
// stored basis of the context.
Word random_reduced_word(std::mt19937_64& rng, Context ctx, std::size_t length);

// Random reduced moduli word in the subgroup H of length at most max_length
// (rejection sampling on the coset automaton).
Word random_h_word(std::mt19937_64& rng, std::size_t max_length);

}  // namespace pullback
