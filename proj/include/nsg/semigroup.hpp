#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nsg/bitops.hpp"

namespace nsg {

/// Depth q = ceil(c/m) and offset rho = q*m - c, so that c = q*m - rho with
/// rho in [0, m). Both are 0 for the full semigroup N (where c = 0).
struct DepthOffset {
  int depth = 0;
  int offset = 0;
  friend bool operator==(const DepthOffset&, const DepthOffset&) = default;
};

/// Non-owning membership window. Bit x of `words` tells whether x is a member,
/// for x in [0, conductor + multiplicity); every position at or beyond the
/// window is a member. Algorithms never read past the window, so owners may
/// keep arbitrary bits there.
struct SemigroupView {
  const std::uint64_t* words = nullptr;
  int conductor = 0;
  int multiplicity = 1;
  int genus = 0;

  int window() const { return conductor + multiplicity; }
  bool is_naturals() const { return conductor == 0; }
  bool contains(long long x) const {
    if (x < 0) return false;
    if (x >= window()) return true;
    return bits::test(words, static_cast<int>(x));
  }
};

/// A numerical semigroup: a submonoid of (N, +) with finite complement.
/// Canonical storage is a membership bitmap over the window [0, c+m); all
/// structure (primitives, Apery set) lives inside that window. Values are
/// immutable after construction and safe to share across threads.
///
/// Conventions for S = N: m = 1, c = 0, g = 0, depth = offset = 0. The
/// depth/offset convention at c = 0 is ours; the defining relation
/// c = q*m - rho forces q = 0 there and keeps every downstream formula total.
class NumericalSemigroup {
 public:
  /// Windows are capped at 2^31 positions.
  static constexpr long long kMaxWindow = (1LL << 31) - 1;

  /// The full semigroup N.
  static NumericalSemigroup naturals();

  /// Additive closure of {0} and the generators. Requires gcd = 1.
  /// Non-minimal generator lists are accepted and reduced.
  static NumericalSemigroup from_generators(const std::vector<long long>& gens);

  /// closure(<gens>) united with [tail_start, inf). Always a numerical
  /// semigroup; the conductor is recomputed and may come out below tail_start.
  static NumericalSemigroup from_generators_with_tail(const std::vector<long long>& gens,
                                                      long long tail_start);

  /// N minus the given gaps, if that complement is additively closed;
  /// otherwise throws NotClosed with a witness pair.
  static NumericalSemigroup from_gaps(const std::vector<long long>& gaps);

  bool contains(long long x) const { return view().contains(x); }

  int multiplicity() const { return multiplicity_; }
  int conductor() const { return conductor_; }
  int genus() const { return genus_; }
  /// c - 1; -1 for N.
  int frobenius() const { return conductor_ - 1; }
  bool is_naturals() const { return conductor_ == 0; }
  int window() const { return conductor_ + multiplicity_; }

  DepthOffset depth_offset() const;
  int depth() const { return depth_offset().depth; }
  int offset() const { return depth_offset().offset; }

  /// The gaps N \ S, ascending. Size equals the genus.
  std::vector<int> gaps() const;
  /// L = S intersect [0, c), ascending. Size equals c - g.
  std::vector<int> left_part() const;
  /// The minimal generating set, ascending. {1} for N.
  std::vector<int> primitives() const;
  int embedding_dimension() const;
  /// Decomposable elements (sums of two nonzero members) in [lo, hi),
  /// with 0 <= lo <= hi <= c+m.
  std::vector<int> decomposables_in(int lo, int hi) const;

  SemigroupView view() const { return {words_.data(), conductor_, multiplicity_, genus_}; }
  const std::vector<std::uint64_t>& words() const { return words_; }

  bool operator==(const NumericalSemigroup& o) const {
    return conductor_ == o.conductor_ && multiplicity_ == o.multiplicity_ && words_ == o.words_;
  }
  bool operator!=(const NumericalSemigroup& o) const { return !(*this == o); }

 private:
  NumericalSemigroup(std::vector<std::uint64_t> words, int conductor, int multiplicity, int genus)
      : words_(std::move(words)),
        conductor_(conductor),
        multiplicity_(multiplicity),
        genus_(genus) {}

  std::vector<std::uint64_t> words_;  // membership over [0, c+m), trimmed
  int conductor_ = 0;
  int multiplicity_ = 1;
  int genus_ = 0;
};

/// Fills `dec` (words_for(window) words) with the decomposable elements
/// S* + S* inside [0, window). `dec` is zeroed first.
void decomposable_mask(const SemigroupView& v, std::uint64_t* dec);

/// prim := members \ ({0} union dec), i.e. the primitives inside the window.
/// For S != N this is exactly the minimal generating set.
void primitive_mask(const SemigroupView& v, const std::uint64_t* dec, std::uint64_t* prim);

/// Parses the textual notation `gens=a,b,c`, `gens=a,b,c;tail=t` or
/// `gaps=g1,g2,...` (comma-separated, no spaces; `gaps=` denotes N).
NumericalSemigroup parse_notation(std::string_view text);

/// Canonical replayable encoding: `gaps=` followed by the ascending gap list.
std::string gaps_notation(const NumericalSemigroup& s);
std::string gaps_notation(const std::vector<int>& gaps);

}  // namespace nsg
