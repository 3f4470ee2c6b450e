#include "corkscrew/reduction.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>

#include "corkscrew/errors.hpp"

namespace corkscrew {

namespace {

const IntMatrix2 kR{1, 1, 0, 1};
const IntMatrix2 kL{1, 0, 1, 1};

bool congruent_to_identity_mod2(const IntMatrix2& m) {
  auto odd = [](const Integer& v) { return mpz_odd_p(v.get_mpz_t()) != 0; };
  return odd(m.p) && odd(m.s) && !odd(m.q) && !odd(m.r);
}

// One representative per class of SL(2, Z) / (+-level-2 group).
const std::vector<IntMatrix2>& coset_representatives() {
  static const std::vector<IntMatrix2> reps = {
      IntMatrix2{}, kR, kL, IntMatrix2{0, -1, 1, 0}, kR * kL, kL * kR,
  };
  return reps;
}

// Fredricksen-Kessler-Maiorana over {R < L} at fixed length n, pruned by
// prefix trace. Emits necklaces of every period.
void necklaces_of_length(std::size_t n, const Integer& max_trace,
                         const std::function<void(const std::string&, const IntMatrix2&)>& fn) {
  std::string buf(n, 'R');
  std::vector<IntMatrix2> prefix(n + 1);
  std::function<void(std::size_t, std::size_t)> gen = [&](std::size_t t, std::size_t p) {
    if (t == n) {
      if (n % p == 0) fn(buf, prefix[n]);
      return;
    }
    const char start = (t == 0) ? 'R' : buf[t - p];
    for (char c : {'R', 'L'}) {
      if (start == 'L' && c == 'R') continue;  // R < L
      buf[t] = c;
      prefix[t + 1] = prefix[t] * (c == 'R' ? kR : kL);
      if (prefix[t + 1].trace() > max_trace) continue;
      gen(t + 1, (c == start) ? p : t + 1);
    }
  };
  gen(0, 1);
}

}  // namespace

std::vector<std::string> positive_necklaces(const Integer& max_trace) {
  std::vector<std::string> out;
  // A word with both letters and n letters has trace >= n + 1.
  if (max_trace < 3) return out;
  const std::size_t n_max = static_cast<std::size_t>(Integer(max_trace - 1).get_ui());
  for (std::size_t n = 2; n <= n_max; ++n) {
    necklaces_of_length(n, max_trace, [&](const std::string& w, const IntMatrix2&) {
      if (w.find('R') != std::string::npos && w.find('L') != std::string::npos) out.push_back(w);
    });
  }
  return out;
}

std::vector<GeodesicClass> classes_up_to_trace(const Integer& max_trace) {
  std::set<CyclicWord> found;
  if (max_trace >= 3) {
    const std::size_t n_max = static_cast<std::size_t>(Integer(max_trace - 1).get_ui());
    for (std::size_t n = 2; n <= n_max; ++n) {
      necklaces_of_length(n, max_trace, [&](const std::string& w, const IntMatrix2& m) {
        if (w.find('R') == std::string::npos || w.find('L') == std::string::npos) return;
        if (!congruent_to_identity_mod2(m)) return;
        for (const IntMatrix2& c : coset_representatives()) {
          CyclicWord cls = canonicalize(decompose(c * m * c.inverse()));
          if (is_primitive(cls) && !is_peripheral(cls)) found.insert(cls);
        }
      });
    }
  }
  std::vector<GeodesicClass> out;
  out.reserve(found.size());
  for (const CyclicWord& w : found) {
    GeodesicClass g = GeodesicClass::make(w);
    if (g.trace > max_trace) throw IntegrityError("census produced " + w.str() + " above the trace bound");
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end(), [](const GeodesicClass& x, const GeodesicClass& y) {
    if (x.trace != y.trace) return x.trace < y.trace;
    return x.word < y.word;
  });
  return out;
}

StratumMin stratum_min_length(int n) {
  if (n < 2) throw DomainError("stratum_min_length needs n >= 2");
  const Integer bound = 4 * n - 2;
  auto census = classes_up_to_trace(bound);
  std::optional<std::pair<Integer, CyclicWord>> best;
  auto offer = [&](const Integer& t, const CyclicWord& w) {
    if (!best || t < best->first || (t == best->first && w < best->second)) best.emplace(t, w);
  };
  for (const auto& g : census) {
    const int len = static_cast<int>(g.word.size());
    if (len == n) offer(g.trace, g.word);
    // Powers g^m of length n: tr(g^m) from the Chebyshev recursion.
    if (len < n && n % len == 0) {
      const int m = n / len;
      Integer prev = 2, cur = g.trace;
      for (int i = 1; i < m; ++i) {
        Integer next = g.trace * cur - prev;
        prev = cur;
        cur = next;
      }
      if (cur <= bound) offer(cur, power(g.word, m));
    }
  }
  if (!best) throw IntegrityError("no hyperbolic word of length " + std::to_string(n) + " below trace 4n - 2");
  return StratumMin{n, best->first, geodesic_length(best->first), best->second};
}

}  // namespace corkscrew
