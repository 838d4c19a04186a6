#include "pullback/sampling.hpp"

#include "pullback/schreier.hpp"

namespace pullback {

Word random_reduced_word(std::mt19937_64& rng, Context ctx, std::size_t length) {
  int n = stored_bases(ctx);
  std::uniform_int_distribution<int> first(0, 2 * n - 1);
  std::uniform_int_distribution<int> rest(0, 2 * n - 2);
  std::vector<Letter> out;
  out.reserve(length);
  auto decode = [](int v) {
    Letter base = static_cast<Letter>(v / 2 + 1);
    return v % 2 == 0 ? base : static_cast<Letter>(-base);
  };
  for (std::size_t i = 0; i < length; ++i) {
    if (out.empty()) {
      out.push_back(decode(first(rng)));
      continue;
    }
    // Choose among the 2n-1 letters that do not cancel the last one.
    Letter forbidden = static_cast<Letter>(-out.back());
    int pick = rest(rng);
    Letter l = decode(pick);
    if (l == forbidden) l = decode(2 * n - 1);
    out.push_back(l);
  }
  return Word(ctx, std::move(out));
}

Word random_h_word(std::mt19937_64& rng, std::size_t max_length) {
  std::uniform_int_distribution<std::size_t> len(0, max_length);
  while (true) {
    Word w = random_reduced_word(rng, Context::ModuliFree2, len(rng));
    if (in_H(w)) return w;
  }
}

}  // namespace pullback
