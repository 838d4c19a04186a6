#include "pullback/words.hpp"

#include <cstdlib>
#include <stdexcept>

namespace pullback {

int stored_bases(Context ctx) {
  switch (ctx) {
    case Context::ModuliFree2: return 2;
    case Context::DynamicalRank3: return 3;
    case Context::FreeRank4: return 4;
  }
  throw std::logic_error("bad context");
}

char letter_char(Letter l) {
  static const char lower[] = {'?', 'a', 'b', 'c', 'd'};
  static const char upper[] = {'?', 'A', 'B', 'C', 'D'};
  int base = std::abs(l);
  if (base < 1 || base > 4) throw std::logic_error("bad letter");
  return l > 0 ? lower[base] : upper[base];
}

const char* context_name(Context ctx) {
  switch (ctx) {
    case Context::ModuliFree2: return "moduli-free-2";
    case Context::DynamicalRank3: return "dynamical-rank-3";
    case Context::FreeRank4: return "free-rank-4";
  }
  return "?";
}

namespace {

void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back() == static_cast<Letter>(-l)) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

// Expansion of the notational letters into the stored basis.
void push_expanded(std::vector<Letter>& out, Context ctx, Letter l) {
  int base = std::abs(l);
  if (base < 1 || base > 4) throw std::invalid_argument("invalid letter");
  if (base <= stored_bases(ctx)) {
    push_reduced(out, l);
    return;
  }
  if (ctx == Context::ModuliFree2) {
    if (l == kC) {  // c = A B
      push_reduced(out, -kA);
      push_reduced(out, -kB);
    } else if (l == -kC) {  // C = b a
      push_reduced(out, kB);
      push_reduced(out, kA);
    } else if (l == kD) {  // d = B A
      push_reduced(out, -kB);
      push_reduced(out, -kA);
    } else {  // D = a b
      push_reduced(out, kA);
      push_reduced(out, kB);
    }
    return;
  }
  // DynamicalRank3, letter d = B C A / D = a c b.
  if (l == kD) {
    push_reduced(out, -kB);
    push_reduced(out, -kC);
    push_reduced(out, -kA);
  } else {
    push_reduced(out, kA);
    push_reduced(out, kC);
    push_reduced(out, kB);
  }
}

}  // namespace

Word::Word(Context ctx, std::vector<Letter> letters) : ctx_(ctx) {
  ls_.reserve(letters.size());
  int nbases = stored_bases(ctx);
  for (Letter l : letters) {
    int base = std::abs(l);
    if (base < 1 || base > nbases)
      throw std::invalid_argument("letter outside the stored basis of the context");
    push_reduced(ls_, l);
  }
}

bool Word::operator<(const Word& o) const {
  if (ctx_ != o.ctx_) return ctx_ < o.ctx_;
  return ls_ < o.ls_;
}

std::size_t WordHash::operator()(const Word& w) const {
  std::size_t h = 1469598103934665603ull ^ static_cast<std::size_t>(w.context());
  for (Letter l : w.letters()) {
    h ^= static_cast<std::size_t>(static_cast<std::uint8_t>(l));
    h *= 1099511628211ull;
  }
  return h;
}

Word concat(const Word& u, const Word& v) {
  if (u.context() != v.context())
    throw std::invalid_argument("context mismatch in concat");
  std::vector<Letter> out = u.letters();
  out.reserve(out.size() + v.length());
  for (Letter l : v.letters()) push_reduced(out, l);
  return Word(u.context(), std::move(out));
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.length());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    out.push_back(static_cast<Letter>(-*it));
  return Word(w.context(), std::move(out));
}

Word conjugate(const Word& g, const Word& w) {
  return concat(concat(invert(w), g), w);
}

Word pow(const Word& g, long long n) {
  Word base = n < 0 ? invert(g) : g;
  long long reps = n < 0 ? -n : n;
  Word out(g.context());
  for (long long i = 0; i < reps; ++i) out = concat(out, base);
  return out;
}

Word parse_word(std::string_view text, Context ctx) {
  if (text.empty() || text == "e") return Word(ctx);
  std::vector<Letter> out;
  out.reserve(text.size());
  for (char ch : text) {
    Letter l;
    switch (ch) {
      case 'a': l = kA; break;
      case 'A': l = -kA; break;
      case 'b': l = kB; break;
      case 'B': l = -kB; break;
      case 'c': l = kC; break;
      case 'C': l = -kC; break;
      case 'd': l = kD; break;
      case 'D': l = -kD; break;
      default:
        throw std::invalid_argument(std::string("invalid character in word: '") + ch + "'");
    }
    push_expanded(out, ctx, l);
  }
  return Word(ctx, std::move(out));
}

std::string format_word(const Word& w) {
  if (w.empty()) return "e";
  std::string s;
  s.reserve(w.length());
  for (Letter l : w.letters()) s.push_back(letter_char(l));
  return s;
}

}  // namespace pullback
