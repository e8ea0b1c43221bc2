#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nsg/apery.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

/// Descriptive flags for the sufficient conditions under which W0 >= 0 (or
/// W0 >= rho) is known to hold. They are never used to skip computing W0;
/// every semigroup gets the full definitional computation.
enum class WilfFlag : std::uint8_t {
  DepthLE3 = 1 << 0,         // q <= 3
  HalfProfileEmpty = 1 << 1, // q >= 4 and alpha_i = 0 for 1 <= i <= ceil(q/2)-1
  PLeftDominates = 1 << 2,   // q >= 4 and |P cap L| >= max(alpha_second_q, q)
  LeftLE12 = 1 << 3,         // |L| <= 12
  DepthGE8Left12 = 1 << 4,   // q >= 8 and |L| <= 12
};

using WilfFlagSet = std::uint8_t;

inline bool has_flag(WilfFlagSet set, WilfFlag f) {
  return set & static_cast<std::uint8_t>(f);
}

std::vector<std::string> flag_names(WilfFlagSet set);
WilfFlagSet flags_from_names(const std::vector<std::string>& names);

/// The scalar invariants that are cheap to read off the primitive mask:
/// everything needed for W = e|L| - c and W0 = |P cap L||L| - q|D_q| + rho.
struct ScalarInvariants {
  int m = 1, c = 0, q = 0, rho = 0, g = 0, e = 1;
  long long left = 0;     // |L| = c - g
  long long p_left = 0;   // |P cap L|
  long long dq = 0;       // |D_q| = |D cap [c, c+m)|
  long long w = 0;
  long long w0 = 0;
};

/// Computes the scalar block from a precomputed primitive mask over the window.
/// `prim` may be null for N only.
ScalarInvariants scalar_invariants(const SemigroupView& v, const std::uint64_t* prim);
ScalarInvariants scalar_invariants(const NumericalSemigroup& s);

/// All invariants of one semigroup. profile/c_size come from the Apery level
/// structure; for S = N the profile is empty and c_size is 0 by convention.
struct WilfReport {
  int m = 1, c = 0, q = 0, rho = 0, g = 0, e = 1;
  long long left_count = 0;
  long long p_left_count = 0;
  long long dq_count = 0;
  long long c_size = 0;
  Profile profile;
  long long w = 0;
  long long w0 = 0;
  WilfFlagSet flags = 0;

  friend bool operator==(const WilfReport&, const WilfReport&) = default;
};

/// W(S) = e|L| - c. Wilf's conjecture asserts this is never negative.
long long w_number(const NumericalSemigroup& s);

/// W0(S) = |P cap L| * |L| - q * |D_q| + rho, a lower bound for W(S) that can
/// be negative in rare cases. All quantities are direct scans; for q <= 1 this
/// is the literal formula with the scanned |D_q|, not the level-count version.
long long w0_number(const NumericalSemigroup& s);

WilfFlagSet sufficient_flags(const NumericalSemigroup& s);

/// Assembles the full report. When q >= 2 the level-count formulas for |L|,
/// |D_q| and |P cap L| are cross-checked against the direct scans; a mismatch
/// throws InternalInconsistency (it would mean a bug, never valid data).
WilfReport report(const NumericalSemigroup& s);

/// Worker for the enumeration hot path: builds the report from precomputed
/// scalars and Apery analysis (null for N).
WilfReport report_from_parts(const ScalarInvariants& s, const AperyAnalysis* apery);

}  // namespace nsg
