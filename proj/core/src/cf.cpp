#include "pullback/cf.hpp"

#include <stdexcept>

namespace pullback {

MobiusMat mat_letter_matrix(MatLetter l) {
  switch (l) {
    case MatLetter::A: return gen_matrix(kA);
    case MatLetter::AInv: return gen_matrix(-kA);
    case MatLetter::B: return gen_matrix(kB);
    case MatLetter::BInv: return gen_matrix(-kB);
  }
  throw std::logic_error("bad mat letter");
}

MatLetter mat_letter_inverse(MatLetter l) {
  switch (l) {
    case MatLetter::A: return MatLetter::AInv;
    case MatLetter::AInv: return MatLetter::A;
    case MatLetter::B: return MatLetter::BInv;
    case MatLetter::BInv: return MatLetter::B;
  }
  throw std::logic_error("bad mat letter");
}

std::string mat_letter_name(MatLetter l) {
  switch (l) {
    case MatLetter::A: return "A";
    case MatLetter::AInv: return "A^-1";
    case MatLetter::B: return "B";
    case MatLetter::BInv: return "B^-1";
  }
  return "?";
}

Word mat_letters_to_word(const std::vector<MatLetter>& ls) {
  std::vector<Letter> out;
  out.reserve(ls.size());
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
    switch (*it) {
      case MatLetter::A: out.push_back(kA); break;
      case MatLetter::AInv: out.push_back(-kA); break;
      case MatLetter::B: out.push_back(kB); break;
      case MatLetter::BInv: out.push_back(-kB); break;
    }
  }
  return Word(Context::ModuliFree2, std::move(out));
}

namespace {

const ExtRational kZero(0, 1);
const ExtRational kOne(1, 1);
const ExtRational kMinusOne(-1, 1);

bool is_terminal(const ExtRational& x) {
  return x == kZero || x.is_infinity() || x == kOne;
}

void push_mat_reduced(std::vector<MatLetter>& out, MatLetter l) {
  if (!out.empty() && out.back() == mat_letter_inverse(l)) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

}  // namespace

Decomposition decompose(const ExtRational& start) {
  Decomposition d;
  ExtRational x = start;
  // Strict decrease of max(|p|,|q|) at every step but the last makes this a
  // generous bound; exceeding it would be a machine bug.
  BigInt guard = 2 * start.height() + 2;
  BigInt steps = 0;
  while (!is_terminal(x)) {
    if (++steps > guard) throw std::logic_error("expansion machine failed to terminate");
    if (x == kMinusOne) {
      x = act(gen_matrix(-kA), x);
      d.mat_letters.push_back(MatLetter::A);
      d.labels.push_back("-1/1:A");
    } else if (x.num < -x.den) {  // (-inf, -1)
      x = act(gen_matrix(kB), x);
      d.mat_letters.push_back(MatLetter::BInv);
      d.labels.push_back("(-inf,-1):B^-1");
    } else if (x.num < 0) {  // (-1, 0)
      x = act(gen_matrix(-kA), x);
      d.mat_letters.push_back(MatLetter::A);
      d.labels.push_back("(-1,0):A");
    } else if (x.num < x.den) {  // (0, 1)
      x = act(gen_matrix(kA), x);
      d.mat_letters.push_back(MatLetter::AInv);
      d.labels.push_back("(0,1):A^-1");
    } else {  // (1, inf)
      x = act(gen_matrix(-kB), x);
      d.mat_letters.push_back(MatLetter::B);
      d.labels.push_back("(1,inf):B");
    }
  }
  d.terminal = x;
  d.fund_word = mat_letters_to_word(d.mat_letters);
  return d;
}

ExtRational recompose(const Decomposition& d) {
  ExtRational x = d.terminal;
  for (auto it = d.mat_letters.rbegin(); it != d.mat_letters.rend(); ++it)
    x = act(mat_letter_matrix(*it), x);
  return x;
}

std::string cf_labels(const Decomposition& d) {
  std::string out = "[";
  for (const auto& tag : d.labels) {
    out += tag;
    out += ';';
  }
  out += format_rational(d.terminal);
  out += ']';
  return out;
}

Stabilizer stabilizer(const ExtRational& x) {
  Decomposition d = decompose(x);
  Stabilizer s;
  s.conjugator = d.mat_letters;
  if (d.terminal == kZero) {
    s.base = {MatLetter::A};
  } else if (d.terminal.is_infinity()) {
    s.base = {MatLetter::B};
  } else {
    // Terminal 1/1: the orbit representative is -1/1 = act(A, 1/1), fixed by
    // the parabolic A B; fold the extra A^-1 into the conjugator.
    push_mat_reduced(s.conjugator, MatLetter::AInv);
    s.base = {MatLetter::A, MatLetter::B};
  }
  return s;
}

MobiusMat stabilizer_matrix(const Stabilizer& s, long long power) {
  MobiusMat w;
  for (MatLetter l : s.conjugator) w = mul(w, mat_letter_matrix(l));
  MobiusMat core;
  for (MatLetter l : s.base) core = mul(core, mat_letter_matrix(l));
  if (power < 0) {
    core = inverse(core);
    power = -power;
  }
  MobiusMat mid;
  for (long long i = 0; i < power; ++i) mid = mul(mid, core);
  return mul(mul(w, mid), inverse(w));
}

}  // namespace pullback
