#pragma once

#include <optional>
#include <string>

#include "pullback/boundary.hpp"
#include "pullback/words.hpp"

namespace pullback {

// The finite-state limit set of the psi_bar iteration on moduli words:
//   e, b, A, aaB, AbA, aB, bb   and the family  a(ba)^k, k in Z.
// For k < 0 the family word reduces to B(AB)^(-k-1); matching is by the
// reduced shape, so e.g. B is the k = -1 family member.
struct MElement {
  enum class Tag { E, B, AInv, AABInv, AInvBAInv, ABInv, BB, Family };
  Tag tag;
  long long k = 0;  // family parameter, meaningful for Tag::Family
  Word word{Context::ModuliFree2};
};

std::optional<MElement> match_m(const Word& w);
std::string m_element_name(const MElement& e);

// Iterate psi_bar until the word lands in the limit set.  Default cap:
// 10 * max(length, 1) iterations; reached reports whether the cap held.
struct ReduceResult {
  MElement element;
  std::size_t steps = 0;
  bool reached = false;
  Word final_word{Context::ModuliFree2};
};

ReduceResult reduce_to_M(const Word& g, std::size_t cap = 0);

// Equivalence class of the twisted map: the two rational classes carry an
// attractor scan of the twisted boundary map as evidence (height 50); the
// obstructed family is indexed by its integer parameter.
enum class TwistKind { RationalF, RationalG, Obstructed };
const char* twist_kind_name(TwistKind k);

struct TwistClass {
  TwistKind kind;
  long long k = 0;  // family index for Obstructed
  MElement rep;     // limit-set representative of the input
  std::size_t steps = 0;
  bool has_evidence = false;
  AttractorSummary evidence;
};

// Classify the map twisted by g.  Throws CapExceeded if the psi_bar
// iteration fails to reach the limit set, and std::logic_error if the
// attractor evidence contradicts the class looked up from the table.
TwistClass classify(const Word& g, long evidence_height = 50);

}  // namespace pullback
