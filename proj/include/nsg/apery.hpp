#pragma once

#include <vector>

#include "nsg/semigroup.hpp"

namespace nsg {

/// The Apery set A = S \ (m + S) together with its level structure.
///
/// The window [0, c+m) splits into the intervals I_j = [j*m - rho, (j+1)*m - rho)
/// for j = 0..q; the level of x is the j with x in I_j. A_j = A intersect I_j,
/// alpha[j] = |A_j|, and alpha_prime / alpha_second count the primitive and
/// decomposable elements of each A_j (index 0 is always 0 there).
///
/// `compressed` lists the z in A that admit a decomposition z = x + y with
/// level(z) < level(x) + level(y); one witness pair is kept per element.
struct AperyAnalysis {
  std::vector<int> apery_set;               // ascending, |A| = m
  std::vector<std::vector<int>> levels;     // A_0..A_q
  std::vector<int> alpha;                   // size q+1
  std::vector<int> alpha_prime;             // size q+1, [0] = 0
  std::vector<int> alpha_second;            // size q+1, [0] = 0
  std::vector<int> compressed;              // ascending

  struct Witness {
    int z, x, y;
  };
  std::vector<Witness> witnesses;           // one per compressed element

  int depth() const { return static_cast<int>(alpha.size()) - 1; }
};

/// The tuple (alpha_1, ..., alpha_{q-1}); empty when q <= 1.
struct Profile {
  std::vector<int> entries;
  friend bool operator==(const Profile&, const Profile&) = default;
};

/// Members, primitives and decomposables of each interval I_j, j = 0..q.
struct LevelSlices {
  std::vector<std::vector<int>> members;       // S_j
  std::vector<std::vector<int>> primitives;    // P_j
  std::vector<std::vector<int>> decomposables; // D_j
};

std::vector<int> apery_set(const NumericalSemigroup& s);

/// Level of x, i.e. the j with j*m - rho <= x < (j+1)*m - rho. Defined on
/// [0, c+m) only; throws UndefinedForNaturals when S = N.
int level(const NumericalSemigroup& s, int x);

AperyAnalysis apery_analysis(const NumericalSemigroup& s);
Profile profile(const NumericalSemigroup& s);
LevelSlices level_slices(const NumericalSemigroup& s);
std::vector<int> compressed_set(const NumericalSemigroup& s);

/// |L| from the level counts: sum over i < q of (q - i) * alpha_i.
/// Requires q >= 2; the direct scan is always the ground truth and these
/// formula versions exist as cross-checks.
long long left_count_from_profile(const NumericalSemigroup& s);
/// |D_q| from the level counts: alpha_0 + ... + alpha_{q-1} + alpha_second_q.
long long dq_count_from_profile(const NumericalSemigroup& s);
/// |P intersect L| from the level counts: 1 + alpha_prime_1 + ... + alpha_prime_{q-1}.
long long p_left_count_from_profile(const NumericalSemigroup& s);

/// View-level worker used by the enumeration hot path. `dec` may be null, in
/// which case the decomposable mask is computed internally.
AperyAnalysis apery_analysis_view(const SemigroupView& v, const std::uint64_t* dec);
std::vector<int> apery_set_view(const SemigroupView& v);

}  // namespace nsg
