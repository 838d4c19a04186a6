#include "pullback/virtual_endo.hpp"

#include <array>
#include <deque>
#include <stdexcept>

namespace pullback {

namespace {

Word m(const char* s) { return parse_word(s, Context::ModuliFree2); }

int letter_index(Letter l) {
  switch (l) {
    case kA: return 0;
    case -kA: return 1;
    case kB: return 2;
    case -kB: return 3;
    default:
      throw std::invalid_argument("transducer expects a stored moduli letter");
  }
}

struct EmitTable {
  std::array<std::array<Word, 4>, 4> w;
  EmitTable() {
    // Rows S1, Sb, Sa, SA; columns a, A, b, B.  Each entry is the phi-image
    // of the Schreier factor of that (state, letter) pair.
    w[0] = {m("e"), m("e"), m("e"), m("AB")};
    w[1] = {m("b"), m("B"), m("B"), m("e")};
    w[2] = {m("b"), m("e"), m("ba"), m("b")};
    w[3] = {m("e"), m("B"), m("a"), m("A")};
  }
};

const EmitTable& emit_table() {
  static const EmitTable t;
  return t;
}

void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back() == static_cast<Letter>(-l)) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

}  // namespace

Word phi(const Word& w) {
  if (!in_H(w)) throw std::domain_error("phi: word is not in the subgroup H");
  const EmitTable& table = emit_table();
  std::vector<Letter> out;
  CosetState s = CosetState::S1;
  for (Letter l : w.letters()) {
    const Word& emitted = table.w[static_cast<int>(s)][letter_index(l)];
    for (Letter e : emitted.letters()) push_reduced(out, e);
    s = step(s, l);
  }
  return Word(Context::ModuliFree2, std::move(out));
}

Word generator_image(HGen g) {
  switch (g) {
    case HGen::G1: return m("b");
    case HGen::G2: return m("B");
    case HGen::G3: return m("AB");
    case HGen::G4: return m("b");
    case HGen::G5: return m("a");
  }
  throw std::logic_error("bad generator");
}

Word phi_via_generators(const Word& w) {
  RewriteResult r = rewrite(w);
  Word out(Context::ModuliFree2);
  for (const auto& sg : r.generators) {
    Word img = generator_image(sg.gen);
    out = concat(out, sg.sign > 0 ? img : invert(img));
  }
  return out;
}

Word phi_bar(const Word& w) {
  switch (left_coset(w)) {
    case LeftCoset::H: return phi(w);
    case LeftCoset::BInvH: return phi(concat(m("b"), w));
    case LeftCoset::AH: return phi(concat(m("A"), w));
    case LeftCoset::AInvH: return phi(concat(m("a"), w));
  }
  throw std::logic_error("bad left coset");
}

Word psi_bar(const Word& g) {
  switch (right_coset(g)) {
    case RightCoset::H: return phi(g);
    case RightCoset::HA: return concat(m("a"), phi(concat(g, m("A"))));
    case RightCoset::HAInv: return concat(m("A"), phi(concat(g, m("a"))));
    case RightCoset::HB: return concat(m("b"), phi(concat(g, m("B"))));
  }
  throw std::logic_error("bad right coset");
}

Word section_lift(const Word& w) {
  if (w.context() != Context::ModuliFree2)
    throw std::invalid_argument("section_lift expects a moduli word");
  static const Word sa = m("Aba");
  static const Word sb = m("baB");
  Word out(Context::ModuliFree2);
  for (Letter l : w.letters()) {
    switch (l) {
      case kA: out = concat(out, sa); break;
      case -kA: out = concat(out, invert(sa)); break;
      case kB: out = concat(out, sb); break;
      default: out = concat(out, invert(sb)); break;
    }
  }
  return out;
}

Word parabolic_word(const ParabolicForm& p) {
  if (p.exponent == 0) throw std::invalid_argument("parabolic exponent must be nonzero");
  if (p.base < kA || p.base > kD)
    throw std::invalid_argument("parabolic base must be one of a, b, c, d");
  if (p.exponent > 1000000 || p.exponent < -1000000)
    throw std::invalid_argument("parabolic exponent too large to expand");
  char basech = letter_char(p.base);
  Word core = pow(parse_word(std::string_view(&basech, 1), Context::ModuliFree2),
                  static_cast<long long>(p.exponent));
  return conjugate(core, p.conjugator);
}

ParabolicForm parse_parabolic(const Word& w) {
  if (w.context() != Context::ModuliFree2)
    throw std::invalid_argument("parse_parabolic expects a moduli word");
  if (w.empty()) throw std::invalid_argument("identity is not a parabolic form");
  std::deque<Letter> core(w.letters().begin(), w.letters().end());
  std::deque<Letter> conj;
  while (core.size() >= 2 && core.front() == static_cast<Letter>(-core.back())) {
    conj.push_front(core.back());
    core.pop_back();
    core.pop_front();
  }
  ParabolicForm p;
  p.conjugator = Word(Context::ModuliFree2,
                      std::vector<Letter>(conj.begin(), conj.end()));
  // Classify the cyclically reduced core.
  bool single = true;
  for (Letter l : core)
    if (l != core.front()) single = false;
  if (single) {
    Letter l = core.front();
    p.base = static_cast<Letter>(std::abs(l));
    p.exponent = static_cast<long long>(l > 0 ? core.size() : -core.size());
    return p;
  }
  // Alternating +-a / +-b of even length: a power of c = A B, d = B A,
  // or of their inverses C = b a, D = a b.
  if (core.size() % 2 == 0) {
    Letter first = core[0];
    Letter second = core[1];
    bool alternating = true;
    for (std::size_t i = 0; i < core.size(); ++i)
      if (core[i] != (i % 2 == 0 ? first : second)) alternating = false;
    if (alternating) {
      long long n = static_cast<long long>(core.size() / 2);
      if (first == -kA && second == -kB) {
        p.base = kC;
        p.exponent = n;
        return p;
      }
      if (first == kB && second == kA) {
        p.base = kC;
        p.exponent = -n;
        return p;
      }
      if (first == -kB && second == -kA) {
        p.base = kD;
        p.exponent = n;
        return p;
      }
      if (first == kA && second == kB) {
        p.base = kD;
        p.exponent = -n;
        return p;
      }
    }
  }
  throw std::invalid_argument("word is not a conjugated power of a, b, c or d");
}

ParabolicForm phi_parabolic(const ParabolicForm& p) {
  if (p.exponent % 3 != 0)
    throw std::domain_error("phi_parabolic requires an exponent divisible by 3");
  return parse_parabolic(phi(parabolic_word(p)));
}

ConjugatorTrace eliminate_conjugator(const ParabolicForm& start, std::size_t cap) {
  ParabolicForm cur = start;
  if (cur.base == kD) {
    // d = b^-1 c b, so a conjugated d-power is a conjugated c-power.
    cur.base = kC;
    cur.conjugator = concat(m("b"), cur.conjugator);
  }
  if (cap == 0) cap = 10 * (start.conjugator.length() + 3);
  ConjugatorTrace trace;
  int sign = cur.exponent < 0 ? -1 : 1;
  for (std::size_t round = 0; round < cap; ++round) {
    if (cur.conjugator.empty()) {
      trace.eliminated = true;
      return trace;
    }
    ParabolicForm probe = cur;
    probe.exponent = 3 * sign;
    ParabolicForm next = phi_parabolic(probe);
    sign = next.exponent < 0 ? -1 : 1;
    trace.steps.push_back(next);
    cur = next;
  }
  trace.eliminated = cur.conjugator.empty();
  return trace;
}

}  // namespace pullback
