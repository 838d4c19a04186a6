#include "pullback/boundary.hpp"

#include <algorithm>
#include <numeric>
#include <thread>
#include <unordered_map>

#include "pullback/schreier.hpp"
#include "pullback/virtual_endo.hpp"

namespace pullback {

namespace {

Word m(const char* s) { return parse_word(s, Context::ModuliFree2); }

const ExtRational kZero(0, 1);
const ExtRational kOne(1, 1);
const ExtRational kMinusOne(-1, 1);

ExtRational swap_terminal(const ExtRational& t) {
  if (t == kZero) return ExtRational::infinity();
  if (t.is_infinity()) return kZero;
  if (t == kOne) return kMinusOne;
  throw std::logic_error("not a machine terminal");
}

std::vector<ExtRational> normalize_cycle(std::vector<ExtRational> cycle) {
  auto least = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), least, cycle.end());
  return cycle;
}

bool cycle_less(const std::vector<ExtRational>& a, const std::vector<ExtRational>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

ExtRational sigma(const ExtRational& x) {
  Decomposition d = decompose(x);
  ExtRational start = swap_terminal(d.terminal);
  // Representatives of the same 1/0-family point differ by left beta-powers,
  // which cycle the cosets H -> (a^-1)H -> (b^-1)H.  The (a^-1)H row needs a
  // beta^-1 prefix so all three rows assign the point one value; this keeps
  // sigma representative-independent and equal to the stabilizer route.
  if (d.terminal.is_infinity() && left_coset(d.fund_word) == LeftCoset::AInvH)
    start = right_act(start, m("B"));
  return right_act(start, phi_bar(d.fund_word));
}

ExtRational sigma_via_stabilizer(const ExtRational& x) {
  Stabilizer s = stabilizer(x);
  // Fundamental-group word of conjugator . base^3 . conjugator^-1.
  std::vector<MatLetter> mats = s.conjugator;
  for (int i = 0; i < 3; ++i)
    mats.insert(mats.end(), s.base.begin(), s.base.end());
  for (auto it = s.conjugator.rbegin(); it != s.conjugator.rend(); ++it)
    mats.push_back(mat_letter_inverse(*it));
  Word cube = mat_letters_to_word(mats);
  Word image = phi(cube);
  return fixed_point(word_to_matrix(image));
}

ExtRational sigma_twisted(const Word& h, const ExtRational& x) {
  return sigma(act(inverse(word_to_matrix(h)), x));
}

SigmaFn make_sigma() {
  return [](const ExtRational& x) { return sigma(x); };
}

SigmaFn make_sigma_twisted(const Word& h) {
  MobiusMat pre = inverse(word_to_matrix(h));
  return [pre](const ExtRational& x) { return sigma(act(pre, x)); };
}

OrbitReport orbit(const SigmaFn& map, const ExtRational& seed, std::size_t cap) {
  OrbitReport r;
  r.seed = seed;
  std::vector<ExtRational> traj;
  std::unordered_map<ExtRational, std::size_t, ExtRationalHash> index;
  ExtRational x = seed;
  while (true) {
    auto it = index.find(x);
    if (it != index.end()) {
      r.tail.assign(traj.begin(), traj.begin() + it->second);
      r.cycle.assign(traj.begin() + it->second, traj.end());
      r.steps_to_cycle = it->second;
      return r;
    }
    if (traj.size() >= cap)
      throw CapExceeded("orbit exceeded cap of " + std::to_string(cap) + " steps");
    index.emplace(x, traj.size());
    traj.push_back(x);
    x = map(x);
  }
}

void for_each_reduced(long height, const std::function<void(const ExtRational&)>& fn) {
  if (height < 1) throw std::invalid_argument("height must be at least 1");
  fn(ExtRational::infinity());
  for (long q = 1; q <= height; ++q)
    for (long p = -height; p <= height; ++p)
      if (std::gcd(p < 0 ? -p : p, q) == 1) fn(ExtRational(p, q));
}

std::size_t count_reduced(long height) {
  std::size_t n = 0;
  for_each_reduced(height, [&n](const ExtRational&) { ++n; });
  return n;
}

namespace {

// Classifies every seed in [begin, end) of the seed list, memoizing the
// cycle id of every value encountered.  Cycle ids index local_cycles.
struct ScanWorker {
  const SigmaFn* map;
  std::size_t cap;
  bool check_parity;
  std::vector<std::vector<ExtRational>> cycles;
  std::array<std::vector<std::size_t>, 3> counts{};
  std::vector<ExtRational> exceptions;
  std::unordered_map<ExtRational, int, ExtRationalHash> cycle_of;

  int classify(const ExtRational& seed) {
    std::vector<ExtRational> path;
    std::unordered_map<ExtRational, std::size_t, ExtRationalHash> index;
    ExtRational x = seed;
    int cls = -1;
    while (true) {
      auto hit = cycle_of.find(x);
      if (hit != cycle_of.end()) {
        cls = hit->second;
        break;
      }
      auto rep = index.find(x);
      if (rep != index.end()) {
        std::vector<ExtRational> cyc(path.begin() + rep->second, path.end());
        cyc = normalize_cycle(std::move(cyc));
        cls = -1;
        for (std::size_t i = 0; i < cycles.size(); ++i)
          if (cycles[i] == cyc) cls = static_cast<int>(i);
        if (cls < 0) {
          cls = static_cast<int>(cycles.size());
          cycles.push_back(std::move(cyc));
        }
        break;
      }
      if (path.size() >= cap) return -1;
      index.emplace(x, path.size());
      path.push_back(x);
      x = (*map)(x);
    }
    for (const ExtRational& v : path) cycle_of.emplace(v, cls);
    return cls;
  }

  void run(const std::vector<ExtRational>& seeds, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const ExtRational& seed = seeds[i];
      int cls = classify(seed);
      if (cls < 0) {
        exceptions.push_back(seed);
        continue;
      }
      auto& row = counts[static_cast<int>(parity_class(seed))];
      if (row.size() <= static_cast<std::size_t>(cls)) row.resize(cls + 1, 0);
      ++row[cls];
      if (check_parity) {
        bool lands_fixed = cycles[cls].size() == 1 && cycles[cls][0] == kMinusOne;
        bool odd_odd = parity_class(seed) == ParityClass::OddOdd;
        if (lands_fixed != odd_odd) exceptions.push_back(seed);
      }
    }
  }
};

}  // namespace

AttractorSummary attractor_scan(const SigmaFn& map, long height, std::size_t cap,
                                int jobs, bool check_parity) {
  std::vector<ExtRational> seeds;
  for_each_reduced(height, [&seeds](const ExtRational& x) { seeds.push_back(x); });

  if (jobs < 1) jobs = 1;
  std::size_t n = seeds.size();
  std::size_t nworkers = std::min<std::size_t>(jobs, n);
  std::vector<ScanWorker> workers(nworkers);
  for (auto& w : workers) {
    w.map = &map;
    w.cap = cap;
    w.check_parity = check_parity;
  }
  if (nworkers == 1) {
    workers[0].run(seeds, 0, n);
  } else {
    std::vector<std::thread> threads;
    std::size_t chunk = (n + nworkers - 1) / nworkers;
    for (std::size_t i = 0; i < nworkers; ++i) {
      std::size_t b = i * chunk;
      std::size_t e = std::min(n, b + chunk);
      threads.emplace_back([&seeds, &workers, i, b, e] { workers[i].run(seeds, b, e); });
    }
    for (auto& t : threads) t.join();
  }

  // Merge into a deterministic summary: cycles sorted, counts remapped.
  AttractorSummary out;
  for (const auto& w : workers)
    for (const auto& cyc : w.cycles)
      if (std::find(out.cycles.begin(), out.cycles.end(), cyc) == out.cycles.end())
        out.cycles.push_back(cyc);
  std::sort(out.cycles.begin(), out.cycles.end(), cycle_less);
  for (auto& row : out.counts_by_parity) row.assign(out.cycles.size(), 0);
  for (const auto& w : workers) {
    std::vector<int> remap(w.cycles.size());
    for (std::size_t i = 0; i < w.cycles.size(); ++i) {
      auto it = std::find(out.cycles.begin(), out.cycles.end(), w.cycles[i]);
      remap[i] = static_cast<int>(it - out.cycles.begin());
    }
    for (int par = 0; par < 3; ++par)
      for (std::size_t i = 0; i < w.counts[par].size(); ++i)
        out.counts_by_parity[par][remap[i]] += w.counts[par][i];
    out.exceptions.insert(out.exceptions.end(), w.exceptions.begin(), w.exceptions.end());
  }
  std::sort(out.exceptions.begin(), out.exceptions.end());
  return out;
}

std::vector<ExtRational> preimage_family(const ExtRational& target, std::size_t k) {
  Decomposition d = decompose(target);
  ExtRational base(0, 1);
  Word u0(Context::ModuliFree2);
  if (d.terminal == kOne) {
    // sigma(1/1 . u) = -1/1 . phi(u) = 1/1 . (a phi(u)); solve phi(u) = A w.
    base = kOne;
    u0 = section_lift(concat(m("A"), d.fund_word));
  } else {
    base = swap_terminal(d.terminal);
    u0 = section_lift(d.fund_word);
  }
  static const Word kernel = m("bbaa");
  std::vector<ExtRational> out;
  out.reserve(k);
  for (std::size_t j = 0; j < k; ++j)
    out.push_back(right_act(base, concat(pow(kernel, static_cast<long long>(j)), u0)));
  return out;
}

bool verify_functional_equation(const ExtRational& x, const Word& w) {
  return sigma(right_act(x, w)) == right_act(sigma(x), phi(w));
}

}  // namespace pullback
