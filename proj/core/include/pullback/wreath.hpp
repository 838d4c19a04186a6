#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pullback/projective.hpp"
#include "pullback/words.hpp"

namespace pullback {

// Permutation of {1..d}, stored 0-based.  Composition is left-first:
// (s * t)(i) = t(s(i)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(int degree);
  static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(img_.size()); }
  int map(int i) const { return img_[i]; }
  bool is_identity() const;

  Perm then(const Perm& t) const;  // left-first product
  Perm inverse() const;

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return !(*this == o); }

  std::string cycle_string() const;  // "(1 3)", "(1 2)(3 4)", identity: "()"

 private:
  std::vector<int> img_;
};

// Element of the wreath product: d sections (group words) and a permutation,
// multiplying by (g, s)(h, t) = (g_i h_{s(i)}, s t).
struct WreathElement {
  std::vector<Word> sections;
  Perm perm;

  bool operator==(const WreathElement& o) const {
    return sections == o.sections && perm == o.perm;
  }
  bool operator!=(const WreathElement& o) const { return !(*this == o); }
};

WreathElement wreath_identity(Context ctx, int degree);
WreathElement wreath_mul(const WreathElement& u, const WreathElement& v);
WreathElement wreath_inv(const WreathElement& u);

// A self-similar recursion: a wreath-product image for every stored basis
// letter of its context.
class Recursion {
 public:
  // Built-in recursions: "phi-moduli" (degree 4), "phi-f", "phi-g",
  // "phi-f-b2" (degree 3).
  static Recursion builtin(std::string_view name);
  static std::vector<std::string> builtin_names();

  // Text format:
  //   degree 3
  //   gen a = <e, e, b> (1 3)
  //   gen b = <B, e, CD> (1 3)
  //   gen c = <e, c, e> (2 3)
  // The declared generators must be a, b / a, b, c / a, b, c, d, which fixes
  // the word context; '#' starts a comment; the permutation part lists
  // cycles on 1..degree ("()" or nothing for the identity).
  static Recursion parse(std::istream& in);
  static Recursion from_file(const std::string& path);

  Context context() const { return ctx_; }
  int degree() const { return degree_; }
  const WreathElement& image(Letter base) const;

  WreathElement apply(const Word& w) const;
  Word restriction(const Word& w, std::string_view address) const;

  // The permutation induced on level-n strings; index encoding is
  // big-endian: the string x1..xn (level-1 letter first) has index
  // x1*d^(n-1) + ... + xn with letters 0-based.  Guarded to d^n <= 4^12.
  std::vector<int> act_level(const Word& w, int n) const;

 private:
  Context ctx_ = Context::ModuliFree2;
  int degree_ = 0;
  std::array<WreathElement, 4> images_;
};

std::string format_wreath(const WreathElement& e);  // "<e, b, ba, a> (1 2 4)"

// Order of a permutation given as an image vector (lcm of cycle lengths).
BigInt perm_order(const std::vector<int>& images);

// Bounded nucleus search: start from the generators and identity, close
// under first-level restrictions of pairwise products.  Stability proves the
// recursion contracting with the returned nucleus; hitting a cap returns
// contracting = false (unknown) with frontier statistics.
struct NucleusResult {
  bool contracting = false;
  std::vector<Word> nucleus;        // sorted; meaningful when contracting
  std::size_t rounds = 0;
  std::size_t max_length_seen = 0;
  std::vector<Word> longest_seen;   // a few longest elements, as a witness
};

NucleusResult nucleus_search(const Recursion& r, std::size_t max_size,
                             std::size_t max_rounds);

// For w in H: the degree-4 moduli recursion must fix letter 1 and its first
// section must equal phi(w).
bool phi_cross_check(const Word& w);

}  // namespace pullback
