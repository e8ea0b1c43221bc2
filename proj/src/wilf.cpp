#include "nsg/wilf.hpp"

#include <algorithm>
#include <array>

#include "nsg/errors.hpp"

namespace nsg {

namespace {

struct FlagName {
  WilfFlag flag;
  const char* name;
};

constexpr std::array<FlagName, 5> kFlagNames = {{
    {WilfFlag::DepthLE3, "DepthLE3"},
    {WilfFlag::HalfProfileEmpty, "HalfProfileEmpty"},
    {WilfFlag::PLeftDominates, "PLeftDominates"},
    {WilfFlag::LeftLE12, "LeftLE12"},
    {WilfFlag::DepthGE8Left12, "DepthGE8Left12"},
}};

}  // namespace

std::vector<std::string> flag_names(WilfFlagSet set) {
  std::vector<std::string> out;
  for (const auto& [flag, name] : kFlagNames) {
    if (has_flag(set, flag)) out.emplace_back(name);
  }
  return out;
}

WilfFlagSet flags_from_names(const std::vector<std::string>& names) {
  WilfFlagSet set = 0;
  for (const auto& n : names) {
    bool known = false;
    for (const auto& [flag, name] : kFlagNames) {
      if (n == name) {
        set |= static_cast<std::uint8_t>(flag);
        known = true;
        break;
      }
    }
    if (!known) throw InvalidArgument("unknown flag name: " + n);
  }
  return set;
}

ScalarInvariants scalar_invariants(const SemigroupView& v, const std::uint64_t* prim) {
  ScalarInvariants s;
  s.m = v.multiplicity;
  s.c = v.conductor;
  s.g = v.genus;
  if (v.is_naturals()) return s;  // m=1, e=1, everything else 0

  s.q = (s.c + s.m - 1) / s.m;
  s.rho = s.q * s.m - s.c;
  const int win = v.window();
  s.e = bits::popcount_range(prim, s.m, win);
  s.p_left = bits::popcount_range(prim, s.m, s.c);
  s.left = s.c - s.g;
  // S_q = [c, c+m) is all members, so |D_q| = m - |P_q|.
  s.dq = s.m - (s.e - s.p_left);
  s.w = static_cast<long long>(s.e) * s.left - s.c;
  s.w0 = s.p_left * s.left - static_cast<long long>(s.q) * s.dq + s.rho;
  return s;
}

ScalarInvariants scalar_invariants(const NumericalSemigroup& s) {
  const SemigroupView v = s.view();
  if (v.is_naturals()) return scalar_invariants(v, nullptr);
  const int nw = bits::words_for(v.window());
  std::vector<std::uint64_t> dec(nw), prim(nw);
  decomposable_mask(v, dec.data());
  primitive_mask(v, dec.data(), prim.data());
  return scalar_invariants(v, prim.data());
}

long long w_number(const NumericalSemigroup& s) { return scalar_invariants(s).w; }

long long w0_number(const NumericalSemigroup& s) { return scalar_invariants(s).w0; }

namespace {

WilfFlagSet compute_flags(const ScalarInvariants& s, const AperyAnalysis* a) {
  WilfFlagSet flags = 0;
  if (s.q <= 3) flags |= static_cast<std::uint8_t>(WilfFlag::DepthLE3);
  if (s.left <= 12) flags |= static_cast<std::uint8_t>(WilfFlag::LeftLE12);
  if (s.q >= 8 && s.left <= 12) flags |= static_cast<std::uint8_t>(WilfFlag::DepthGE8Left12);
  if (s.q >= 4 && a) {
    const int h = (s.q + 1) / 2;
    bool empty = true;
    for (int i = 1; i <= h - 1; ++i) {
      if (a->alpha[i] != 0) {
        empty = false;
        break;
      }
    }
    if (empty) flags |= static_cast<std::uint8_t>(WilfFlag::HalfProfileEmpty);
    if (s.p_left >= std::max<long long>(a->alpha_second[s.q], s.q)) {
      flags |= static_cast<std::uint8_t>(WilfFlag::PLeftDominates);
    }
  }
  return flags;
}

}  // namespace

WilfFlagSet sufficient_flags(const NumericalSemigroup& s) {
  const ScalarInvariants sc = scalar_invariants(s);
  if (s.is_naturals()) return compute_flags(sc, nullptr);
  const AperyAnalysis a = apery_analysis(s);
  return compute_flags(sc, &a);
}

WilfReport report_from_parts(const ScalarInvariants& s, const AperyAnalysis* apery) {
  WilfReport r;
  r.m = s.m;
  r.c = s.c;
  r.q = s.q;
  r.rho = s.rho;
  r.g = s.g;
  r.e = s.e;
  r.left_count = s.left;
  r.p_left_count = s.p_left;
  r.dq_count = s.dq;
  r.w = s.w;
  r.w0 = s.w0;
  if (apery) {
    for (int i = 1; i <= s.q - 1; ++i) r.profile.entries.push_back(apery->alpha[i]);
    r.c_size = static_cast<long long>(apery->compressed.size());
    if (s.q >= 2) {
      long long left = 0, dq = apery->alpha_second[s.q], pl = 1;
      for (int i = 0; i < s.q; ++i) {
        left += static_cast<long long>(s.q - i) * apery->alpha[i];
        dq += apery->alpha[i];
        if (i >= 1) pl += apery->alpha_prime[i];
      }
      if (left != s.left) throw InternalInconsistency("left_count formula vs direct scan");
      if (dq != s.dq) throw InternalInconsistency("dq_count formula vs direct scan");
      if (pl != s.p_left) throw InternalInconsistency("p_left_count formula vs direct scan");
    }
  }
  r.flags = compute_flags(s, apery);
  return r;
}

WilfReport report(const NumericalSemigroup& s) {
  if (s.is_naturals()) return report_from_parts(scalar_invariants(s), nullptr);
  const SemigroupView v = s.view();
  const int nw = bits::words_for(v.window());
  std::vector<std::uint64_t> dec(nw), prim(nw);
  decomposable_mask(v, dec.data());
  primitive_mask(v, dec.data(), prim.data());
  const ScalarInvariants sc = scalar_invariants(v, prim.data());
  const AperyAnalysis a = apery_analysis_view(v, dec.data());
  return report_from_parts(sc, &a);
}

}  // namespace nsg
