#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

#include "pullback/words.hpp"

namespace pullback {

using BigInt = boost::multiprecision::cpp_int;

// Extended rational p/q: canonical with gcd(p,q)=1, q >= 0, and the point at
// infinity stored as 1/0.
struct ExtRational {
  BigInt num = 0;
  BigInt den = 1;

  ExtRational() = default;
  ExtRational(BigInt p, BigInt q);  // canonicalizes; rejects 0/0
  static ExtRational infinity() { return ExtRational(1, 0); }

  bool is_infinity() const { return den == 0; }
  BigInt height() const;  // max(|p|, |q|)

  bool operator==(const ExtRational& o) const { return num == o.num && den == o.den; }
  bool operator!=(const ExtRational& o) const { return !(*this == o); }
};

// Total order used for normalization: finite values numerically, 1/0 greatest.
bool operator<(const ExtRational& x, const ExtRational& y);

struct ExtRationalHash {
  std::size_t operator()(const ExtRational& x) const;
};

ExtRational parse_rational(std::string_view text);  // "p/q" or a bare integer
std::string format_rational(const ExtRational& x);
ExtRational reciprocal(const ExtRational& x);       // p/q -> q/p

// Unimodular integer matrix with a,d odd and b,c even (the level-2 congruence
// condition), sign-canonicalized so the first nonzero of (a,b,c,d) is
// positive.  det must be 1 after canonicalization.
struct MobiusMat {
  BigInt a = 1, b = 0, c = 0, d = 1;

  MobiusMat() = default;
  MobiusMat(BigInt a_, BigInt b_, BigInt c_, BigInt d_);

  bool operator==(const MobiusMat& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
  }
  bool operator!=(const MobiusMat& o) const { return !(*this == o); }
};

MobiusMat mul(const MobiusMat& m, const MobiusMat& n);
MobiusMat inverse(const MobiusMat& m);
ExtRational act(const MobiusMat& m, const ExtRational& x);  // (ap+bq) / (cp+dq)

// Generator matrices: a -> [[1,0],[-2,1]], b -> [[1,2],[0,1]] and inverses.
MobiusMat gen_matrix(Letter l);

// Anti-isomorphism onto the matrix group: the product of gen_matrix over the
// REVERSED letters, so word_to_matrix(uv) = word_to_matrix(v)*word_to_matrix(u).
MobiusMat word_to_matrix(const Word& w);  // moduli context only

// Right action x.w = act(word_to_matrix(w), x); satisfies (x.u).v = x.(uv).
ExtRational right_act(const ExtRational& x, const Word& w);

bool is_parabolic(const MobiusMat& m);  // trace^2 == 4
// Fixed point of a parabolic non-identity matrix: 1/0 if c==0,
// else (a-d)/(2c).
ExtRational fixed_point(const MobiusMat& m);

enum class ParityClass { OddOdd, OddEven, EvenOdd };
ParityClass parity_class(const ExtRational& x);
const char* parity_name(ParityClass p);

// Slope p/q -> boundary point -p/q.
ExtRational slope_to_boundary(const ExtRational& x);

}  // namespace pullback
