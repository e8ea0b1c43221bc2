#include "nsg/laws.hpp"

#include <algorithm>
#include <cctype>

#include "nsg/errors.hpp"

namespace nsg {

const AperyAnalysis& LawInput::apery() const {
  if (!apery_) apery_ = apery_analysis_view(view_, dec_);
  return *apery_;
}

const std::vector<std::vector<int>>& LawInput::member_slices() const {
  if (!slices_) {
    std::vector<std::vector<int>> slices(s_.q + 1);
    const int win = view_.window();
    for (int x = bits::next_set(view_.words, 0, win); x != -1;
         x = bits::next_set(view_.words, x + 1, win)) {
      slices[level_of(x)].push_back(x);
    }
    slices_ = std::move(slices);
  }
  return *slices_;
}

namespace {

std::string num(long long v) { return std::to_string(v); }

LawCheck pass() { return {LawStatus::Pass, {}}; }
LawCheck fail(std::string observed) { return {LawStatus::Fail, std::move(observed)}; }
LawCheck not_applicable() { return {LawStatus::NotApplicable, {}}; }

// --- slice addition rules -------------------------------------------------

LawCheck check_addition_rules(const LawInput& in) {
  if (in.view().is_naturals() || in.s().q < 2) return not_applicable();
  const int q = in.s().q;
  const int win = in.view().window();
  const auto& slices = in.member_slices();
  for (int i = 1; i <= q - 1; ++i) {
    for (int j = i; j <= q - 1; ++j) {
      for (std::size_t xi = 0; xi < slices[i].size(); ++xi) {
        const int x = slices[i][xi];
        const std::size_t y0 = (i == j) ? xi : 0;
        for (std::size_t yi = y0; yi < slices[j].size(); ++yi) {
          const int y = slices[j][yi];
          const int z = x + y;
          if (z >= win) break;
          const int lz = in.level_of(z);
          const bool ok = (i == 1) ? (lz == j + 1 || lz == j + 2)
                                   : (lz >= i + j - 1 && lz <= i + j + 1);
          if (!ok) {
            return fail("x=" + num(x) + " (slice " + num(i) + "), y=" + num(y) + " (slice " +
                        num(j) + "), x+y=" + num(z) + " lands in slice " + num(lz));
          }
        }
      }
    }
  }
  return pass();
}

// --- level function bounds ------------------------------------------------

LawCheck check_level_bounds(const LawInput& in) {
  if (in.view().is_naturals()) return not_applicable();
  const SemigroupView v = in.view();
  const int win = v.window();
  std::vector<int> members;
  for (int x = bits::next_set(v.words, 1, win); x != -1; x = bits::next_set(v.words, x + 1, win)) {
    members.push_back(x);
  }
  const int n = static_cast<int>(members.size());
  for (int i = 0; i < n; ++i) {
    const int x = members[i];
    const int lx = in.level_of(x);
    for (int j = i; j < n; ++j) {
      const int y = members[j];
      const int z = x + y;
      if (z >= win) break;
      const int ly = in.level_of(y);
      const int lz = in.level_of(z);
      if (lz <= std::max(lx, ly)) {
        return fail("level(" + num(x) + "+" + num(y) + ") = " + num(lz) +
                    " does not exceed max(" + num(lx) + "," + num(ly) + ")");
      }
      const bool ok = (lx == 1 || ly == 1) ? (lz == lx + ly || lz == lx + ly + 1)
                                           : (lz >= lx + ly - 1 && lz <= lx + ly + 1);
      if (!ok) {
        return fail("level(" + num(x) + ")=" + num(lx) + ", level(" + num(y) + ")=" + num(ly) +
                    ", level(" + num(z) + ")=" + num(lz));
      }
    }
  }
  // Equal shifted levels force the original levels within one of each other.
  for (int i = 0; i < n; ++i) {
    const int x = members[i];
    const int lx = in.level_of(x);
    for (int j = i + 1; j < n; ++j) {
      const int y = members[j];
      if (in.level_of(y) - lx < 2) continue;
      for (int k = 0; k < n; ++k) {
        const int a = members[k];
        if (a + y >= win) break;
        if (in.level_of(a + x) == in.level_of(a + y)) {
          return fail("a=" + num(a) + ", x=" + num(x) + ", y=" + num(y) +
                      ": level(a+x) = level(a+y) = " + num(in.level_of(a + x)) +
                      " but levels of x,y differ by " + num(in.level_of(y) - lx));
        }
      }
    }
  }
  return pass();
}

// --- decomposable Apery elements decompose inside the Apery set ------------

LawCheck check_downset(const LawInput& in) {
  if (in.view().is_naturals()) return not_applicable();
  const SemigroupView v = in.view();
  const int win = v.window();
  const AperyAnalysis& a = in.apery();
  std::vector<char> in_apery(win, 0);
  for (int x : a.apery_set) in_apery[x] = 1;

  for (int z : a.apery_set) {
    if (z == 0 || !bits::test(in.dec(), z)) continue;
    int decomps = 0;
    for (int x = bits::next_set(v.words, 1, win); x != -1 && 2 * x <= z;
         x = bits::next_set(v.words, x + 1, win)) {
      const int y = z - x;
      if (!v.contains(y)) continue;
      ++decomps;
      if (!in_apery[x] || !in_apery[y]) {
        return fail("z=" + num(z) + " = " + num(x) + "+" + num(y) +
                    " has a summand outside the Apery set");
      }
    }
    if (decomps == 0) {
      return fail("z=" + num(z) + " is marked decomposable but admits no decomposition");
    }
  }
  return pass();
}

// --- offset bounds --------------------------------------------------------

LawCheck check_offset_ge_compressed(const LawInput& in) {
  if (in.view().is_naturals()) return not_applicable();
  const auto& a = in.apery();
  if (in.s().rho < static_cast<long long>(a.compressed.size())) {
    return fail("rho=" + num(in.s().rho) + " < |C|=" + num(a.compressed.size()));
  }
  return pass();
}

LawCheck check_offset_ge_level_sums(const LawInput& in) {
  if (in.view().is_naturals() || in.s().q < 3) return not_applicable();
  const auto& a = in.apery();
  const int q = in.s().q;
  const int win = in.view().window();
  std::vector<char> in_level(win, 0);
  for (int i = 2; i <= q; ++i) {
    for (int j = i; i + j - 1 <= q; ++j) {
      const int k = i + j - 1;
      for (int z : a.levels[k]) in_level[z] = 1;
      std::vector<int> hits;
      for (int x : a.levels[i]) {
        for (int y : a.levels[j]) {
          const int z = x + y;
          if (z < win && in_level[z]) hits.push_back(z);
        }
      }
      for (int z : a.levels[k]) in_level[z] = 0;
      std::sort(hits.begin(), hits.end());
      hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
      if (in.s().rho < static_cast<long long>(hits.size())) {
        return fail("rho=" + num(in.s().rho) + " < |(A_" + num(i) + "+A_" + num(j) +
                    ") cap A_" + num(k) + "|=" + num(hits.size()));
      }
    }
  }
  return pass();
}

// --- Apery counting -------------------------------------------------------

LawCheck check_apery_count(const LawInput& in) {
  if (in.view().is_naturals()) return not_applicable();
  const auto& a = in.apery();
  long long total = 0;
  for (int x : a.alpha) total += x;
  if (a.alpha[0] != 1) return fail("alpha_0=" + num(a.alpha[0]));
  if (total != in.s().m || static_cast<int>(a.apery_set.size()) != in.s().m) {
    return fail("sum alpha_i=" + num(total) + ", |A|=" + num(a.apery_set.size()) +
                ", m=" + num(in.s().m));
  }
  return pass();
}

LawCheck check_embedding_from_levels(const LawInput& in) {
  if (in.s().q < 2) return not_applicable();
  const auto& a = in.apery();
  long long e = 1;
  for (int i = 1; i <= in.s().q; ++i) e += a.alpha_prime[i];
  if (e != in.s().e) {
    return fail("1 + sum alpha'_i = " + num(e) + " but e = " + num(in.s().e));
  }
  return pass();
}

LawCheck check_profile_formulas(const LawInput& in) {
  if (in.s().q < 2) return not_applicable();
  const auto& a = in.apery();
  const int q = in.s().q;
  long long left = 0, dq = a.alpha_second[q], pl = 1;
  for (int i = 0; i < q; ++i) {
    left += static_cast<long long>(q - i) * a.alpha[i];
    dq += a.alpha[i];
    if (i >= 1) pl += a.alpha_prime[i];
  }
  if (left != in.s().left || dq != in.s().dq || pl != in.s().p_left) {
    return fail("formula (L,Dq,PL)=(" + num(left) + "," + num(dq) + "," + num(pl) +
                "), direct (" + num(in.s().left) + "," + num(in.s().dq) + "," +
                num(in.s().p_left) + ")");
  }
  return pass();
}

// --- W and W0 -------------------------------------------------------------

LawCheck check_w_lower_bound(const LawInput& in) {
  const auto& s = in.s();
  const long long pq = s.e - s.p_left;  // |P_q|
  if (s.w < s.w0 || s.w - s.w0 != pq * (s.left - s.q)) {
    return fail("W=" + num(s.w) + ", W0=" + num(s.w0) + ", |P_q|(|L|-q)=" +
                num(pq * (s.left - s.q)));
  }
  return pass();
}

LawCheck check_w0_nonneg_depth_le_3(const LawInput& in) {
  if (in.s().q > 3) return not_applicable();
  if (in.s().w0 < 0) return fail("q=" + num(in.s().q) + ", W0=" + num(in.s().w0));
  return pass();
}

bool half_profile_empty(const LawInput& in) {
  const int h = (in.s().q + 1) / 2;
  const auto& a = in.apery();
  for (int i = 1; i <= h - 1; ++i) {
    if (a.alpha[i] != 0) return false;
  }
  return true;
}

LawCheck check_w0_nonneg_half_profile(const LawInput& in) {
  if (in.view().is_naturals() || in.s().q < 4 || !half_profile_empty(in)) {
    return not_applicable();
  }
  if (in.s().w0 < 0) return fail("q=" + num(in.s().q) + ", W0=" + num(in.s().w0));
  return pass();
}

LawCheck check_w0_ge_rho_p_dominant(const LawInput& in) {
  if (in.view().is_naturals() || in.s().q < 4) return not_applicable();
  const auto& a = in.apery();
  if (in.s().p_left < std::max<long long>(a.alpha_second[in.s().q], in.s().q)) {
    return not_applicable();
  }
  if (in.s().w0 < in.s().rho) {
    return fail("W0=" + num(in.s().w0) + " < rho=" + num(in.s().rho));
  }
  return pass();
}

LawCheck check_w0_nonneg_when_l_le_12(const LawInput& in) {
  if (in.s().left > 12) return not_applicable();
  if (in.s().w0 < 0) return fail("|L|=" + num(in.s().left) + ", W0=" + num(in.s().w0));
  return pass();
}

LawCheck check_alpha1_le_2_when_l_le_12(const LawInput& in) {
  if (in.view().is_naturals() || in.s().q < 4 || in.s().left > 12) return not_applicable();
  const auto& a = in.apery();
  if (a.alpha[1] > 2) return fail("|L|=" + num(in.s().left) + ", alpha_1=" + num(a.alpha[1]));
  return pass();
}

LawCheck check_deep_half_profile_empty(const LawInput& in) {
  if (in.s().q < 8 || in.s().left > 12) return not_applicable();
  if (!half_profile_empty(in)) {
    return fail("q=" + num(in.s().q) + ", |L|=" + num(in.s().left) +
                " but some alpha_i != 0 below ceil(q/2)");
  }
  return pass();
}

LawCheck check_wilf_nonneg(const LawInput& in) {
  if (in.s().w < 0) return fail("W=" + num(in.s().w));
  return pass();
}

LawCheck check_w0_nonneg(const LawInput& in) {
  if (in.s().w0 < 0) return fail("W0=" + num(in.s().w0));
  return pass();
}

const std::vector<Law> kLaws = {
    {"addition_rules",
     "S_1+S_j lands in slices j+1..j+2; S_i+S_j (i,j>=2) in slices i+j-1..i+j+1", check_addition_rules},
    {"level_bounds",
     "level(x+y) within one of level(x)+level(y), above both, and equal shifts differ by <= 1",
     check_level_bounds},
    {"downset_decompositions",
     "every decomposable Apery element splits, and only into Apery summands", check_downset},
    {"offset_ge_compressed", "rho >= |C|", check_offset_ge_compressed},
    {"offset_ge_level_sums", "rho >= |(A_i+A_j) cap A_{i+j-1}| for all i,j >= 2",
     check_offset_ge_level_sums},
    {"apery_count_sum", "alpha_0 = 1 and sum alpha_i = |A| = m", check_apery_count},
    {"embedding_from_levels", "e = 1 + sum of alpha'_i for i = 1..q (q >= 2)",
     check_embedding_from_levels},
    {"profile_count_formulas",
     "level-count formulas for |L|, |D_q|, |P cap L| match direct scans (q >= 2)",
     check_profile_formulas},
    {"w_lower_bound", "W >= W0 and W - W0 = |P_q| * (|L| - q) exactly", check_w_lower_bound},
    {"w0_nonneg_depth_le_3", "q <= 3 implies W0 >= 0", check_w0_nonneg_depth_le_3},
    {"w0_nonneg_half_profile",
     "q >= 4 with alpha_1..alpha_{ceil(q/2)-1} all zero implies W0 >= 0",
     check_w0_nonneg_half_profile},
    {"w0_ge_rho_p_dominant",
     "q >= 4 with |P cap L| >= max(alpha''_q, q) implies W0 >= rho", check_w0_ge_rho_p_dominant},
    {"w0_nonneg_when_L_le_12", "|L| <= 12 implies W0 >= 0", check_w0_nonneg_when_l_le_12},
    {"alpha1_le_2_when_L_le_12", "|L| <= 12 and q >= 4 imply alpha_1 <= 2",
     check_alpha1_le_2_when_l_le_12},
    {"deep_half_profile_empty",
     "q >= 8 and |L| <= 12 imply alpha_i = 0 for 1 <= i <= ceil(q/2)-1",
     check_deep_half_profile_empty},
    {"wilf_nonneg", "W >= 0", check_wilf_nonneg},
    {"w0_nonneg", "W0 >= 0", check_w0_nonneg},
};

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& ch : out) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return out;
}

}  // namespace

const std::vector<Law>& all_laws() { return kLaws; }

const Law* find_law(std::string_view name) {
  const std::string needle = to_lower(name);
  for (const Law& law : kLaws) {
    if (to_lower(law.name) == needle) return &law;
  }
  return nullptr;
}

std::vector<const Law*> resolve_laws(const std::vector<std::string>& names) {
  std::vector<const Law*> out;
  if (names.size() == 1 && to_lower(names[0]) == "all") {
    for (const Law& law : kLaws) out.push_back(&law);
    return out;
  }
  for (const std::string& name : names) {
    const Law* law = find_law(name);
    if (!law) throw InvalidArgument("unknown law name: " + name);
    out.push_back(law);
  }
  return out;
}

ViolationRecord make_violation(const Law& law, const std::vector<int>& gaps,
                               std::string observed) {
  return {std::string(law.name), gaps_notation(gaps), std::string(law.expected),
          std::move(observed)};
}

}  // namespace nsg
