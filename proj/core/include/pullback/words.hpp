#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pullback {

// Which letters form the free basis, and how the remaining letters expand.
//
//   ModuliFree2:    free on a, b.  c stands for a^-1 b^-1 and d for b^-1 a^-1;
//                   both expand on input and are never stored.
//   DynamicalRank3: free on a, b, c.  d stands for b^-1 c^-1 a^-1 (so that
//                   a c b d = 1) and expands on input.
//   FreeRank4:      free on a, b, c, d.  Nothing expands.
enum class Context : std::uint8_t { ModuliFree2, DynamicalRank3, FreeRank4 };

// Signed generator letter: +1..+4 = a,b,c,d; the negation is the inverse
// (rendered A,B,C,D).
using Letter = std::int8_t;

constexpr Letter kA = 1;  // a (alpha)
constexpr Letter kB = 2;  // b (beta)
constexpr Letter kC = 3;  // c (gamma)
constexpr Letter kD = 4;  // d (delta)

int stored_bases(Context ctx);          // 2, 3 or 4
char letter_char(Letter l);             // 'a'..'d' / 'A'..'D'
const char* context_name(Context ctx);

// A freely reduced word over the stored basis of its context.  The
// constructor reduces; letters outside the stored basis are rejected (use
// parse_word for the notational letters that expand).
class Word {
 public:
  Word() = default;
  explicit Word(Context ctx) : ctx_(ctx) {}
  Word(Context ctx, std::vector<Letter> letters);

  static Word identity(Context ctx) { return Word(ctx); }

  Context context() const { return ctx_; }
  const std::vector<Letter>& letters() const { return ls_; }
  std::size_t length() const { return ls_.size(); }
  bool empty() const { return ls_.empty(); }

  bool operator==(const Word& o) const { return ctx_ == o.ctx_ && ls_ == o.ls_; }
  bool operator!=(const Word& o) const { return !(*this == o); }
  bool operator<(const Word& o) const;

 private:
  Context ctx_ = Context::ModuliFree2;
  std::vector<Letter> ls_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const;
};

Word concat(const Word& u, const Word& v);
Word invert(const Word& w);
Word conjugate(const Word& g, const Word& w);  // w^-1 g w
Word pow(const Word& g, long long n);

// Parse "abA", "aBB", ... in the given context; "e" (or "") is the identity.
// Notational letters expand per the context rules before reduction.
Word parse_word(std::string_view text, Context ctx);

// Inverse of parse_word up to reduction/expansion; identity prints as "e".
std::string format_word(const Word& w);

}  // namespace pullback
