#include "nsg/apery.hpp"

#include <algorithm>

#include "nsg/errors.hpp"

namespace nsg {

namespace {

void require_not_naturals(const SemigroupView& v, const char* op) {
  if (v.is_naturals()) throw UndefinedForNaturals(op);
}

int depth_of(const SemigroupView& v) {
  return (v.conductor + v.multiplicity - 1) / v.multiplicity;
}

int offset_of(const SemigroupView& v) {
  return depth_of(v) * v.multiplicity - v.conductor;
}

}  // namespace

std::vector<int> apery_set_view(const SemigroupView& v) {
  if (v.is_naturals()) return {0};
  const int m = v.multiplicity;
  const int win = v.window();
  std::vector<int> out;
  out.reserve(m);
  std::vector<char> seen(m, 0);
  int found = 0;
  int r = 0;  // x mod m, tracked incrementally
  for (int x = 0; x < win && found < m; ++x) {
    if (!seen[r] && bits::test(v.words, x)) {
      seen[r] = 1;
      out.push_back(x);
      ++found;
    }
    if (++r == m) r = 0;
  }
  // [c, c+m) covers every residue class, so all m classes are found in-window.
  return out;
}

std::vector<int> apery_set(const NumericalSemigroup& s) { return apery_set_view(s.view()); }

int level(const NumericalSemigroup& s, int x) {
  const SemigroupView v = s.view();
  require_not_naturals(v, "level");
  if (x < 0 || x >= v.window()) {
    throw InvalidArgument("level is defined on [0, " + std::to_string(v.window()) + "), got " +
                          std::to_string(x));
  }
  return (x + offset_of(v)) / v.multiplicity;
}

AperyAnalysis apery_analysis_view(const SemigroupView& v, const std::uint64_t* dec_in) {
  require_not_naturals(v, "apery_analysis");
  const int m = v.multiplicity;
  const int win = v.window();
  const int q = depth_of(v);
  const int rho = offset_of(v);

  std::vector<std::uint64_t> dec_own;
  const std::uint64_t* dec = dec_in;
  if (!dec) {
    dec_own.resize(bits::words_for(win));
    decomposable_mask(v, dec_own.data());
    dec = dec_own.data();
  }

  AperyAnalysis a;
  a.apery_set = apery_set_view(v);
  a.levels.assign(q + 1, {});
  a.alpha.assign(q + 1, 0);
  a.alpha_prime.assign(q + 1, 0);
  a.alpha_second.assign(q + 1, 0);

  std::vector<char> in_apery(win, 0);
  std::vector<int> level_of(m, 0);
  for (std::size_t i = 0; i < a.apery_set.size(); ++i) {
    const int x = a.apery_set[i];
    const int lv = (x + rho) / m;
    in_apery[x] = 1;
    level_of[i] = lv;
    a.levels[lv].push_back(x);
    a.alpha[lv]++;
    if (x > 0) {
      if (bits::test(dec, x)) {
        a.alpha_second[lv]++;
      } else {
        a.alpha_prime[lv]++;
      }
    }
  }

  // Compressed elements: z = x + y in A with level(z) < level(x) + level(y).
  // Any decomposition of a decomposable Apery element uses Apery summands,
  // so the pair scan over A* is exhaustive. Level-1 summands can never
  // compress, and level sums past q+1 land outside the window.
  const int n = static_cast<int>(a.apery_set.size());
  std::vector<char> taken(win, 0);
  for (int i = 1; i < n; ++i) {
    const int li = level_of[i];
    if (li < 2) continue;
    if (li + 2 > q + 1) break;  // levels ascend with the sorted Apery set
    for (int j = i; j < n; ++j) {
      const int lj = level_of[j];
      if (li + lj > q + 1) break;
      if (lj < 2) continue;
      const int z = a.apery_set[i] + a.apery_set[j];
      if (z >= win) break;
      if (!in_apery[z] || taken[z]) continue;
      if ((z + rho) / m < li + lj) {
        taken[z] = 1;
        a.compressed.push_back(z);
        a.witnesses.push_back({z, a.apery_set[i], a.apery_set[j]});
      }
    }
  }
  std::sort(a.compressed.begin(), a.compressed.end());
  std::sort(a.witnesses.begin(), a.witnesses.end(),
            [](const AperyAnalysis::Witness& l, const AperyAnalysis::Witness& r) {
              return l.z < r.z;
            });
  return a;
}

AperyAnalysis apery_analysis(const NumericalSemigroup& s) {
  return apery_analysis_view(s.view(), nullptr);
}

Profile profile(const NumericalSemigroup& s) {
  require_not_naturals(s.view(), "profile");
  AperyAnalysis a = apery_analysis(s);
  Profile p;
  const int q = a.depth();
  for (int i = 1; i <= q - 1; ++i) p.entries.push_back(a.alpha[i]);
  return p;
}

LevelSlices level_slices(const NumericalSemigroup& s) {
  const SemigroupView v = s.view();
  require_not_naturals(v, "level_slices");
  const int q = depth_of(v);
  const int rho = offset_of(v);
  const int win = v.window();
  std::vector<std::uint64_t> dec(bits::words_for(win));
  decomposable_mask(v, dec.data());

  LevelSlices out;
  out.members.assign(q + 1, {});
  out.primitives.assign(q + 1, {});
  out.decomposables.assign(q + 1, {});
  for (int x = bits::next_set(v.words, 0, win); x != -1;
       x = bits::next_set(v.words, x + 1, win)) {
    const int lv = (x + rho) / v.multiplicity;
    out.members[lv].push_back(x);
    if (x == 0) continue;
    if (bits::test(dec.data(), x)) {
      out.decomposables[lv].push_back(x);
    } else {
      out.primitives[lv].push_back(x);
    }
  }
  return out;
}

std::vector<int> compressed_set(const NumericalSemigroup& s) {
  require_not_naturals(s.view(), "compressed_set");
  return apery_analysis(s).compressed;
}

namespace {

const AperyAnalysis require_formula_domain(const NumericalSemigroup& s) {
  const int q = s.depth();
  if (q < 2) throw FormulaDomain(q);
  return apery_analysis(s);
}

}  // namespace

long long left_count_from_profile(const NumericalSemigroup& s) {
  AperyAnalysis a = require_formula_domain(s);
  const int q = a.depth();
  long long total = 0;
  for (int i = 0; i < q; ++i) total += static_cast<long long>(q - i) * a.alpha[i];
  return total;
}

long long dq_count_from_profile(const NumericalSemigroup& s) {
  AperyAnalysis a = require_formula_domain(s);
  const int q = a.depth();
  long long total = a.alpha_second[q];
  for (int i = 0; i < q; ++i) total += a.alpha[i];
  return total;
}

long long p_left_count_from_profile(const NumericalSemigroup& s) {
  AperyAnalysis a = require_formula_domain(s);
  const int q = a.depth();
  long long total = 1;
  for (int i = 1; i < q; ++i) total += a.alpha_prime[i];
  return total;
}

}  // namespace nsg
