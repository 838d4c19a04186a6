#include "pullback/schreier.hpp"

#include <array>
#include <stdexcept>

namespace pullback {

namespace {

constexpr int kStates = 4;

int state_index(CosetState s) { return static_cast<int>(s); }

// Column index for a signed letter: a, A, b, B.
int letter_index(Letter l) {
  switch (l) {
    case kA: return 0;
    case -kA: return 1;
    case kB: return 2;
    case -kB: return 3;
    default:
      throw std::invalid_argument("coset automaton expects a stored moduli letter");
  }
}

constexpr CosetState T = CosetState::S1;  // shorthand for the tables
constexpr CosetState Sb = CosetState::SB;
constexpr CosetState Sa = CosetState::SA;
constexpr CosetState SA_ = CosetState::SAInv;

// Transition table, rows S1, Sb, Sa, SA; columns a, A, b, B.
constexpr CosetState kStep[kStates][4] = {
    {Sa, SA_, Sb, Sa},
    {Sb, Sb, Sa, T},
    {SA_, T, T, Sb},
    {T, Sa, SA_, SA_},
};

struct GammaTable {
  std::array<std::array<Word, 4>, kStates> w;
  GammaTable() {
    auto m = [](const char* s) { return parse_word(s, Context::ModuliFree2); };
    // Rows S1, Sb, Sa, SA; columns a, A, b, B.
    w[0] = {m("e"), m("e"), m("e"), m("BA")};
    w[1] = {m("baB"), m("bAB"), m("bbA"), m("e")};
    w[2] = {m("aaa"), m("e"), m("ab"), m("aBB")};
    w[3] = {m("e"), m("AAA"), m("Aba"), m("ABa")};
  }
};

const GammaTable& gamma_table() {
  static const GammaTable t;
  return t;
}

struct HGenTable {
  std::array<Word, 5> w;
  HGenTable() {
    auto m = [](const char* s) { return parse_word(s, Context::ModuliFree2); };
    w = {m("baB"), m("bbA"), m("BA"), m("aaa"), m("Aba")};
  }
};

const HGenTable& hgen_table() {
  static const HGenTable t;
  return t;
}

}  // namespace

const char* coset_state_name(CosetState s) {
  switch (s) {
    case CosetState::S1: return "1";
    case CosetState::SB: return "b";
    case CosetState::SA: return "a";
    case CosetState::SAInv: return "A";
  }
  return "?";
}

Word coset_rep(CosetState s) {
  switch (s) {
    case CosetState::S1: return parse_word("e", Context::ModuliFree2);
    case CosetState::SB: return parse_word("b", Context::ModuliFree2);
    case CosetState::SA: return parse_word("a", Context::ModuliFree2);
    case CosetState::SAInv: return parse_word("A", Context::ModuliFree2);
  }
  throw std::logic_error("bad coset state");
}

CosetState step(CosetState s, Letter l) {
  return kStep[state_index(s)][letter_index(l)];
}

CosetState coset_of(const Word& w) {
  if (w.context() != Context::ModuliFree2)
    throw std::invalid_argument("coset automaton expects a moduli word");
  CosetState s = CosetState::S1;
  for (Letter l : w.letters()) s = step(s, l);
  return s;
}

bool in_H(const Word& w) { return coset_of(w) == CosetState::S1; }

Word schreier_gamma(CosetState t, Letter s) {
  return gamma_table().w[state_index(t)][letter_index(s)];
}

Word hgen_word(HGen g) { return hgen_table().w[static_cast<int>(g)]; }

const char* hgen_name(HGen g) {
  static const char* names[] = {"g1", "g2", "g3", "g4", "g5"};
  return names[static_cast<int>(g)];
}

RewriteResult rewrite(const Word& w) {
  if (!in_H(w)) throw std::domain_error("rewrite: word is not in the subgroup H");
  RewriteResult r;
  r.factors.reserve(w.length());
  CosetState s = CosetState::S1;
  for (Letter l : w.letters()) {
    Word f = schreier_gamma(s, l);
    s = step(s, l);
    if (!f.empty()) {
      bool matched = false;
      for (int i = 0; i < 5 && !matched; ++i) {
        HGen g = static_cast<HGen>(i);
        if (f == hgen_word(g)) {
          r.generators.push_back({g, +1});
          matched = true;
        } else if (f == invert(hgen_word(g))) {
          r.generators.push_back({g, -1});
          matched = true;
        }
      }
      if (!matched) throw std::logic_error("Schreier factor is not a subgroup generator");
    }
    r.factors.push_back(std::move(f));
  }
  return r;
}

Word expand_hgens(const std::vector<SignedHGen>& gens) {
  Word out(Context::ModuliFree2);
  for (const auto& sg : gens) {
    Word g = hgen_word(sg.gen);
    out = concat(out, sg.sign > 0 ? g : invert(g));
  }
  return out;
}

LeftCoset left_coset(const Word& w) {
  if (in_H(w)) return LeftCoset::H;
  if (in_H(concat(parse_word("b", Context::ModuliFree2), w))) return LeftCoset::BInvH;
  if (in_H(concat(parse_word("A", Context::ModuliFree2), w))) return LeftCoset::AH;
  if (in_H(concat(parse_word("a", Context::ModuliFree2), w))) return LeftCoset::AInvH;
  throw std::logic_error("left cosets failed to partition");
}

RightCoset right_coset(const Word& w) {
  switch (coset_of(w)) {
    case CosetState::S1: return RightCoset::H;
    case CosetState::SA: return RightCoset::HA;
    case CosetState::SAInv: return RightCoset::HAInv;
    case CosetState::SB: return RightCoset::HB;
  }
  throw std::logic_error("bad coset state");
}

const char* left_coset_name(LeftCoset c) {
  switch (c) {
    case LeftCoset::H: return "H";
    case LeftCoset::BInvH: return "b^-1 H";
    case LeftCoset::AH: return "a H";
    case LeftCoset::AInvH: return "a^-1 H";
  }
  return "?";
}

const char* right_coset_name(RightCoset c) {
  switch (c) {
    case RightCoset::H: return "H";
    case RightCoset::HA: return "H a";
    case RightCoset::HAInv: return "H a^-1";
    case RightCoset::HB: return "H b";
  }
  return "?";
}

}  // namespace pullback
