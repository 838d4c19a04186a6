#include "pullback/twister.hpp"

#include <algorithm>

#include "pullback/virtual_endo.hpp"

namespace pullback {

namespace {

Word m(const char* s) { return parse_word(s, Context::ModuliFree2); }

std::optional<long long> match_family(const Word& w) {
  const auto& ls = w.letters();
  // k >= 0: a (ba)^k, i.e. a at even positions, b at odd ones.
  if (ls.size() % 2 == 1) {
    bool pos = true;
    for (std::size_t i = 0; i < ls.size(); ++i)
      if (ls[i] != (i % 2 == 0 ? kA : kB)) pos = false;
    if (pos && !ls.empty()) return static_cast<long long>(ls.size() / 2);
    // k <= -1: a(ba)^k reduces to B (AB)^(-k-1).
    bool neg = true;
    for (std::size_t i = 0; i < ls.size(); ++i)
      if (ls[i] != (i % 2 == 0 ? -kB : -kA)) neg = false;
    if (neg && !ls.empty()) return -1 - static_cast<long long>(ls.size() / 2);
  }
  return std::nullopt;
}

}  // namespace

std::optional<MElement> match_m(const Word& w) {
  if (w.context() != Context::ModuliFree2) return std::nullopt;
  MElement e;
  e.word = w;
  if (w.empty()) {
    e.tag = MElement::Tag::E;
    return e;
  }
  static const Word wb = m("b"), wA = m("A"), waaB = m("aaB"), wAbA = m("AbA"),
                    waB = m("aB"), wbb = m("bb");
  if (w == wb) e.tag = MElement::Tag::B;
  else if (w == wA) e.tag = MElement::Tag::AInv;
  else if (w == waaB) e.tag = MElement::Tag::AABInv;
  else if (w == wAbA) e.tag = MElement::Tag::AInvBAInv;
  else if (w == waB) e.tag = MElement::Tag::ABInv;
  else if (w == wbb) e.tag = MElement::Tag::BB;
  else if (auto k = match_family(w)) {
    e.tag = MElement::Tag::Family;
    e.k = *k;
  } else {
    return std::nullopt;
  }
  return e;
}

std::string m_element_name(const MElement& e) {
  switch (e.tag) {
    case MElement::Tag::E: return "e";
    case MElement::Tag::B: return "b";
    case MElement::Tag::AInv: return "A";
    case MElement::Tag::AABInv: return "aaB";
    case MElement::Tag::AInvBAInv: return "AbA";
    case MElement::Tag::ABInv: return "aB";
    case MElement::Tag::BB: return "bb";
    case MElement::Tag::Family:
      return "a(ba)^" + std::to_string(e.k);
  }
  return "?";
}

ReduceResult reduce_to_M(const Word& g, std::size_t cap) {
  if (cap == 0) cap = 10 * std::max<std::size_t>(g.length(), 1);
  ReduceResult r;
  Word cur = g;
  for (std::size_t steps = 0;; ++steps) {
    if (auto e = match_m(cur)) {
      r.element = *e;
      r.steps = steps;
      r.reached = true;
      r.final_word = cur;
      return r;
    }
    if (steps >= cap) break;
    cur = psi_bar(cur);
  }
  r.steps = cap;
  r.final_word = cur;
  return r;
}

const char* twist_kind_name(TwistKind k) {
  switch (k) {
    case TwistKind::RationalF: return "RationalF";
    case TwistKind::RationalG: return "RationalG";
    case TwistKind::Obstructed: return "Obstructed";
  }
  return "?";
}

TwistClass classify(const Word& g, long evidence_height) {
  ReduceResult r = reduce_to_M(g);
  if (!r.reached)
    throw CapExceeded("psi_bar iteration did not reach the limit set");
  TwistClass out;
  out.rep = r.element;
  out.steps = r.steps;
  switch (r.element.tag) {
    case MElement::Tag::E:
    case MElement::Tag::BB:
    case MElement::Tag::ABInv:
      out.kind = TwistKind::RationalF;
      break;
    case MElement::Tag::B:
    case MElement::Tag::AInv:
    case MElement::Tag::AABInv:
    case MElement::Tag::AInvBAInv:
      out.kind = TwistKind::RationalG;
      break;
    case MElement::Tag::Family:
      out.kind = TwistKind::Obstructed;
      out.k = r.element.k;
      break;
  }
  if (out.kind == TwistKind::Obstructed) return out;

  // Attractor evidence: one 2-cycle plus a fixed point for the f class, at
  // least two distinct 2-cycles for the g class.
  out.evidence = attractor_scan(make_sigma_twisted(r.element.word), evidence_height);
  out.has_evidence = true;
  std::size_t fixed = 0, two = 0;
  for (const auto& cyc : out.evidence.cycles) {
    if (cyc.size() == 1) ++fixed;
    if (cyc.size() == 2) ++two;
  }
  bool consistent = out.kind == TwistKind::RationalF
                        ? (two == 1 && fixed == 1 && out.evidence.cycles.size() == 2)
                        : (two >= 2);
  if (!consistent)
    throw std::logic_error("attractor evidence contradicts the class table");
  return out;
}

}  // namespace pullback
