#pragma once

#include <array>
#include <functional>
#include <stdexcept>
#include <vector>

#include "pullback/cf.hpp"
#include "pullback/projective.hpp"
#include "pullback/words.hpp"

namespace pullback {

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using SigmaFn = std::function<ExtRational(const ExtRational&)>;

// The boundary pullback map: decompose x as terminal.w, then
// sigma(x) = swap(terminal).phi_bar(w) with 0/1 <-> 1/0 and 1/1 -> -1/1,
// except that the 1/0 terminal takes an extra beta^-1 before phi_bar(w)
// when w lies in the coset (a^-1)H.  The prefix makes the value independent
// of the representative word chosen for x (representatives differ by left
// beta-powers, which permute the cosets) and is what the parabolic
// stabilizer route computes; it also gives the reciprocal symmetry
// sigma(1/x) = 1/sigma(x) and the functional equation exactly.
ExtRational sigma(const ExtRational& x);

// Independent route through parabolic stabilizers: take the stabilizer word
// of x, transport it to the fundamental group, cube it into H, push it
// through phi and return the fixed point of the resulting parabolic matrix.
ExtRational sigma_via_stabilizer(const ExtRational& x);

// Boundary map of the twisted map: pre-compose with the inverse of the
// matrix of h (a moduli word).
ExtRational sigma_twisted(const Word& h, const ExtRational& x);

SigmaFn make_sigma();
SigmaFn make_sigma_twisted(const Word& h);

// Forward orbit split at the first repeated value.  tail holds the strictly
// pre-periodic segment starting at the seed (empty when the seed is
// periodic); cycle starts at the first value that repeats, so mapping the
// last tail entry (or the last cycle entry) yields cycle[0].
struct OrbitReport {
  ExtRational seed;
  std::vector<ExtRational> tail;
  std::vector<ExtRational> cycle;
  std::size_t steps_to_cycle = 0;  // == tail.size()
};

OrbitReport orbit(const SigmaFn& map, const ExtRational& seed, std::size_t cap = 100000);

// Cycles are rotation-normalized (least element first) and listed in sorted
// order, so summaries are deterministic and comparable.  counts_by_parity
// records, for each parity class of seed, how many seeds landed on each
// cycle.  exceptions collects seeds whose orbit exceeded the cap, plus (when
// parity checking is on) seeds violating the rule "the orbit ends on the
// fixed point -1/1 exactly when p and q are both odd".
struct AttractorSummary {
  std::vector<std::vector<ExtRational>> cycles;
  std::array<std::vector<std::size_t>, 3> counts_by_parity;
  std::vector<ExtRational> exceptions;
};

AttractorSummary attractor_scan(const SigmaFn& map, long height,
                                std::size_t cap = 100000, int jobs = 1,
                                bool check_parity = false);

// All reduced p/q with max(|p|,|q|) <= height, starting with 1/0 and then
// ordered by (q, p).
void for_each_reduced(long height, const std::function<void(const ExtRational&)>& fn);
std::size_t count_reduced(long height);

// k distinct sigma-preimages of the target, built from the kernel element
// b b a a (whose phi-image is trivial) and a section lift of the target's
// machine word.
std::vector<ExtRational> preimage_family(const ExtRational& target, std::size_t k);

// sigma(x.w) == sigma(x).phi(w) for w in H.
bool verify_functional_equation(const ExtRational& x, const Word& w);

}  // namespace pullback
