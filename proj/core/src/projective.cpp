#include "pullback/projective.hpp"

#include <boost/functional/hash.hpp>
#include <stdexcept>

namespace pullback {

using boost::multiprecision::gcd;

ExtRational::ExtRational(BigInt p, BigInt q) {
  if (p == 0 && q == 0) throw std::invalid_argument("0/0 is not a projective point");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  if (q == 0) {
    num = 1;
    den = 0;
    return;
  }
  BigInt g = gcd(abs(p), q);
  num = p / g;
  den = q / g;
}

BigInt ExtRational::height() const {
  BigInt a = abs(num);
  return a > den ? a : den;
}

bool operator<(const ExtRational& x, const ExtRational& y) {
  if (x.is_infinity()) return false;
  if (y.is_infinity()) return true;
  return x.num * y.den < y.num * x.den;
}

std::size_t ExtRationalHash::operator()(const ExtRational& x) const {
  std::size_t seed = 0;
  boost::hash_combine(seed, std::hash<BigInt>{}(x.num));
  boost::hash_combine(seed, std::hash<BigInt>{}(x.den));
  return seed;
}

ExtRational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  auto part = [&text](std::string_view s) {
    if (s.empty()) throw std::runtime_error("empty");
    return BigInt(std::string(s));
  };
  try {
    if (slash == std::string_view::npos) {
      return ExtRational(part(text), 1);
    }
    return ExtRational(part(text.substr(0, slash)), part(text.substr(slash + 1)));
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("invalid fraction: " + std::string(text));
  }
}

std::string format_rational(const ExtRational& x) {
  return x.num.str() + "/" + x.den.str();
}

ExtRational reciprocal(const ExtRational& x) {
  return ExtRational(x.den, x.num);
}

MobiusMat::MobiusMat(BigInt a_, BigInt b_, BigInt c_, BigInt d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
  const BigInt* first = &a;
  if (a == 0) first = b != 0 ? &b : (c != 0 ? &c : &d);
  if (*first < 0) {
    a = -a;
    b = -b;
    c = -c;
    d = -d;
  }
  if (a * d - b * c != 1)
    throw std::invalid_argument("matrix is not unimodular");
  if ((a & 1) == 0 || (d & 1) == 0 || (b & 1) != 0 || (c & 1) != 0)
    throw std::invalid_argument("matrix violates the level-2 parity pattern");
}

MobiusMat mul(const MobiusMat& m, const MobiusMat& n) {
  return MobiusMat(m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                   m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d);
}

MobiusMat inverse(const MobiusMat& m) {
  return MobiusMat(m.d, -m.b, -m.c, m.a);
}

ExtRational act(const MobiusMat& m, const ExtRational& x) {
  return ExtRational(m.a * x.num + m.b * x.den, m.c * x.num + m.d * x.den);
}

MobiusMat gen_matrix(Letter l) {
  switch (l) {
    case kA: return MobiusMat(1, 0, -2, 1);
    case -kA: return MobiusMat(1, 0, 2, 1);
    case kB: return MobiusMat(1, 2, 0, 1);
    case -kB: return MobiusMat(1, -2, 0, 1);
    default:
      throw std::invalid_argument("no generator matrix for this letter");
  }
}

MobiusMat word_to_matrix(const Word& w) {
  if (w.context() != Context::ModuliFree2)
    throw std::invalid_argument("word_to_matrix expects a moduli word");
  MobiusMat m;
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    m = mul(m, gen_matrix(*it));
  return m;
}

ExtRational right_act(const ExtRational& x, const Word& w) {
  return act(word_to_matrix(w), x);
}

bool is_parabolic(const MobiusMat& m) {
  BigInt t = m.a + m.d;
  return t * t == 4;
}

ExtRational fixed_point(const MobiusMat& m) {
  if (!is_parabolic(m) || m == MobiusMat())
    throw std::domain_error("fixed_point requires a parabolic non-identity matrix");
  if (m.c == 0) return ExtRational::infinity();
  return ExtRational(m.a - m.d, 2 * m.c);
}

ParityClass parity_class(const ExtRational& x) {
  bool podd = (x.num & 1) != 0;
  bool qodd = (x.den & 1) != 0;
  if (podd && qodd) return ParityClass::OddOdd;
  if (podd) return ParityClass::OddEven;
  return ParityClass::EvenOdd;
}

const char* parity_name(ParityClass p) {
  switch (p) {
    case ParityClass::OddOdd: return "odd/odd";
    case ParityClass::OddEven: return "odd/even";
    case ParityClass::EvenOdd: return "even/odd";
  }
  return "?";
}

ExtRational slope_to_boundary(const ExtRational& x) {
  return ExtRational(-x.num, x.den);
}

}  // namespace pullback
