#include "pullback/wreath.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "pullback/schreier.hpp"
#include "pullback/virtual_endo.hpp"

namespace pullback {

Perm::Perm(int degree) : img_(degree) {
  std::iota(img_.begin(), img_.end(), 0);
}

Perm Perm::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Perm p(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i] - 1;
      int to = cyc[(i + 1) % cyc.size()] - 1;
      if (from < 0 || from >= degree || to < 0 || to >= degree)
        throw std::invalid_argument("cycle entry outside 1..degree");
      if (used[from]) throw std::invalid_argument("repeated point in cycles");
      used[from] = true;
      p.img_[from] = to;
    }
  }
  return p;
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Perm Perm::then(const Perm& t) const {
  if (degree() != t.degree()) throw std::invalid_argument("degree mismatch");
  Perm r(degree());
  for (int i = 0; i < degree(); ++i) r.img_[i] = t.img_[img_[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r(degree());
  for (int i = 0; i < degree(); ++i) r.img_[img_[i]] = i;
  return r;
}

std::string Perm::cycle_string() const {
  std::string out;
  std::vector<bool> seen(degree(), false);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    out += '(';
    int j = i;
    bool first = true;
    do {
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      seen[j] = true;
      j = img_[j];
      first = false;
    } while (j != i);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

WreathElement wreath_identity(Context ctx, int degree) {
  WreathElement e;
  e.sections.assign(degree, Word::identity(ctx));
  e.perm = Perm(degree);
  return e;
}

WreathElement wreath_mul(const WreathElement& u, const WreathElement& v) {
  int d = u.perm.degree();
  if (v.perm.degree() != d) throw std::invalid_argument("degree mismatch");
  WreathElement r;
  r.sections.reserve(d);
  for (int i = 0; i < d; ++i)
    r.sections.push_back(concat(u.sections[i], v.sections[u.perm.map(i)]));
  r.perm = u.perm.then(v.perm);
  return r;
}

WreathElement wreath_inv(const WreathElement& u) {
  int d = u.perm.degree();
  WreathElement r;
  r.perm = u.perm.inverse();
  r.sections.resize(d, Word::identity(u.sections.empty() ? Context::ModuliFree2
                                                         : u.sections[0].context()));
  for (int i = 0; i < d; ++i) r.sections[i] = invert(u.sections[r.perm.map(i)]);
  return r;
}

namespace {

const char* kBuiltins[][2] = {
    {"phi-moduli",
     "degree 4\n"
     "gen a = <ba, b, A, e> (1 3 4)\n"
     "gen b = <B, ba, e, a> (1 2 3)\n"},
    {"phi-f",
     "degree 3\n"
     "gen a = <e, e, b> (1 3)\n"
     "gen b = <B, e, CD> (1 3)\n"
     "gen c = <e, c, e> (2 3)\n"},
    {"phi-g",
     "degree 3\n"
     "gen a = <e, BDC, e> (1 2)\n"
     "gen b = <c, e, e> (1 2)\n"
     "gen c = <e, db, D> (2 3)\n"
     "gen d = <e, d, e> (2 3)\n"},
    {"phi-f-b2",
     "degree 3\n"
     "gen a = <e, e, b> (1 3)\n"
     "gen b = <a, e, e> (1 2)\n"
     "gen c = <e, c, e> (2 3)\n"
     "gen d = <e, c, AB> (2 3)\n"},
};

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

Recursion Recursion::builtin(std::string_view name) {
  for (const auto& entry : kBuiltins) {
    if (name == entry[0]) {
      std::istringstream in{std::string(entry[1])};
      return parse(in);
    }
  }
  throw std::invalid_argument("unknown built-in recursion: " + std::string(name));
}

std::vector<std::string> Recursion::builtin_names() {
  std::vector<std::string> names;
  for (const auto& entry : kBuiltins) names.emplace_back(entry[0]);
  return names;
}

Recursion Recursion::parse(std::istream& in) {
  int degree = 0;
  struct RawGen {
    char letter;
    std::vector<std::string> sections;
    std::vector<std::vector<int>> cycles;
  };
  std::vector<RawGen> raws;

  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = strip(line);
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    if (head == "degree") {
      if (!(ls >> degree) || degree < 2 || degree > 4)
        throw std::invalid_argument("degree must be 2, 3 or 4");
      continue;
    }
    if (head != "gen")
      throw std::invalid_argument("expected 'degree' or 'gen', got: " + line);
    if (degree == 0) throw std::invalid_argument("'degree' must come first");
    RawGen raw;
    std::string name, eq;
    ls >> name >> eq;
    if (name.size() != 1 || name[0] < 'a' || name[0] > 'd' || eq != "=")
      throw std::invalid_argument("expected 'gen <a..d> = ...': " + line);
    raw.letter = name[0];
    std::string rest;
    std::getline(ls, rest);
    auto lt = rest.find('<');
    auto gt = rest.find('>');
    if (lt == std::string::npos || gt == std::string::npos || gt < lt)
      throw std::invalid_argument("missing <...> section list: " + line);
    std::istringstream secs(rest.substr(lt + 1, gt - lt - 1));
    std::string tok;
    while (std::getline(secs, tok, ',')) raw.sections.push_back(strip(tok));
    // Cycles after '>': groups of integers in parentheses.
    std::string tail = rest.substr(gt + 1);
    std::size_t pos = 0;
    while ((pos = tail.find('(', pos)) != std::string::npos) {
      std::size_t close = tail.find(')', pos);
      if (close == std::string::npos)
        throw std::invalid_argument("unbalanced cycle parenthesis: " + line);
      std::istringstream cs(tail.substr(pos + 1, close - pos - 1));
      std::vector<int> cyc;
      int v;
      while (cs >> v) cyc.push_back(v);
      if (!cyc.empty()) raw.cycles.push_back(std::move(cyc));
      pos = close + 1;
    }
    raws.push_back(std::move(raw));
  }

  if (degree == 0) throw std::invalid_argument("missing 'degree' line");
  std::string letters;
  for (const auto& raw : raws) letters.push_back(raw.letter);
  std::sort(letters.begin(), letters.end());
  Context ctx;
  if (letters == "ab") ctx = Context::ModuliFree2;
  else if (letters == "abc") ctx = Context::DynamicalRank3;
  else if (letters == "abcd") ctx = Context::FreeRank4;
  else throw std::invalid_argument("generators must be a,b / a,b,c / a,b,c,d");

  Recursion r;
  r.ctx_ = ctx;
  r.degree_ = degree;
  for (const auto& raw : raws) {
    if (static_cast<int>(raw.sections.size()) != degree)
      throw std::invalid_argument("section count does not match the degree");
    WreathElement e;
    for (const auto& s : raw.sections) e.sections.push_back(parse_word(s, ctx));
    e.perm = Perm::from_cycles(degree, raw.cycles);
    r.images_[raw.letter - 'a'] = std::move(e);
  }
  return r;
}

Recursion Recursion::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open recursion file: " + path);
  return parse(in);
}

const WreathElement& Recursion::image(Letter base) const {
  int idx = base - 1;
  if (idx < 0 || idx >= stored_bases(ctx_))
    throw std::invalid_argument("no image for this letter");
  return images_[idx];
}

WreathElement Recursion::apply(const Word& w) const {
  if (w.context() != ctx_)
    throw std::invalid_argument("word context does not match the recursion");
  WreathElement acc = wreath_identity(ctx_, degree_);
  for (Letter l : w.letters()) {
    const WreathElement& img = image(static_cast<Letter>(l > 0 ? l : -l));
    acc = l > 0 ? wreath_mul(acc, img) : wreath_mul(acc, wreath_inv(img));
  }
  return acc;
}

Word Recursion::restriction(const Word& w, std::string_view address) const {
  Word cur = w;
  for (char ch : address) {
    int x = ch - '1';
    if (x < 0 || x >= degree_)
      throw std::invalid_argument("address letter outside 1..degree");
    cur = apply(cur).sections[x];
  }
  return cur;
}

namespace {

constexpr std::size_t kMaxLevelSize = 16777216;  // 4^12

void fill_level(const Recursion& r, const Word& w, int n, std::size_t in_prefix,
                std::size_t out_prefix, std::vector<int>& out,
                std::unordered_map<Word, WreathElement, WordHash>& memo) {
  if (n == 0) {
    out[in_prefix] = static_cast<int>(out_prefix);
    return;
  }
  auto it = memo.find(w);
  if (it == memo.end()) it = memo.emplace(w, r.apply(w)).first;
  const WreathElement& e = it->second;
  int d = r.degree();
  for (int x = 0; x < d; ++x)
    fill_level(r, e.sections[x], n - 1, in_prefix * d + x,
               out_prefix * d + e.perm.map(x), out, memo);
}

}  // namespace

std::vector<int> Recursion::act_level(const Word& w, int n) const {
  if (n < 0) throw std::invalid_argument("level must be nonnegative");
  std::size_t size = 1;
  for (int i = 0; i < n; ++i) {
    size *= degree_;
    if (size > kMaxLevelSize)
      throw std::invalid_argument("level too large (d^n capped at 4^12)");
  }
  std::vector<int> out(size, 0);
  std::unordered_map<Word, WreathElement, WordHash> memo;
  fill_level(*this, w, n, 0, 0, out, memo);
  return out;
}

std::string format_wreath(const WreathElement& e) {
  std::string out = "<";
  for (std::size_t i = 0; i < e.sections.size(); ++i) {
    if (i) out += ", ";
    out += format_word(e.sections[i]);
  }
  out += "> ";
  out += e.perm.cycle_string();
  return out;
}

BigInt perm_order(const std::vector<int>& images) {
  BigInt order = 1;
  std::vector<bool> seen(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (seen[i]) continue;
    BigInt len = 0;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = static_cast<std::size_t>(images[j]);
      ++len;
    }
    order = lcm(order, len);
  }
  return order;
}

NucleusResult nucleus_search(const Recursion& r, std::size_t max_size,
                             std::size_t max_rounds) {
  NucleusResult res;
  std::set<Word> nucleus;
  std::unordered_map<Word, WreathElement, WordHash> memo;
  auto eval = [&r, &memo](const Word& w) -> const WreathElement& {
    auto it = memo.find(w);
    if (it == memo.end()) it = memo.emplace(w, r.apply(w)).first;
    return it->second;
  };
  auto note = [&res](const Word& w) {
    if (w.length() > res.max_length_seen) {
      res.max_length_seen = w.length();
      res.longest_seen.clear();
    }
    if (w.length() == res.max_length_seen && res.longest_seen.size() < 4 &&
        std::find(res.longest_seen.begin(), res.longest_seen.end(), w) ==
            res.longest_seen.end())
      res.longest_seen.push_back(w);
  };

  nucleus.insert(Word::identity(r.context()));
  for (Letter base = 1; base <= stored_bases(r.context()); ++base) {
    char ch = letter_char(base);
    Word g = parse_word(std::string_view(&ch, 1), r.context());
    nucleus.insert(g);
    nucleus.insert(invert(g));
  }
  for (const Word& w : nucleus) note(w);

  std::vector<Word> fresh(nucleus.begin(), nucleus.end());
  while (!fresh.empty()) {
    if (res.rounds >= max_rounds) return res;  // not contracting within caps
    ++res.rounds;
    std::vector<Word> all(nucleus.begin(), nucleus.end());
    std::set<Word> next;
    auto probe = [&](const Word& u, const Word& v) {
      const WreathElement& e = eval(concat(u, v));
      for (const Word& s : e.sections) {
        if (!nucleus.count(s) && !next.count(s)) {
          note(s);
          next.insert(s);
        }
      }
    };
    for (const Word& u : fresh)
      for (const Word& v : all) {
        probe(u, v);
        probe(v, u);
      }
    for (const Word& w : next) {
      nucleus.insert(w);
      if (nucleus.size() > max_size) return res;  // size cap hit
    }
    fresh.assign(next.begin(), next.end());
  }
  res.contracting = true;
  res.nucleus.assign(nucleus.begin(), nucleus.end());
  return res;
}

bool phi_cross_check(const Word& w) {
  static const Recursion phi_rec = Recursion::builtin("phi-moduli");
  if (!in_H(w)) throw std::domain_error("phi_cross_check expects a word in H");
  WreathElement e = phi_rec.apply(w);
  return e.perm.map(0) == 0 && e.sections[0] == phi(w);
}

}  // namespace pullback
