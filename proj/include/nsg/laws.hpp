#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nsg/apery.hpp"
#include "nsg/semigroup.hpp"
#include "nsg/wilf.hpp"

namespace nsg {

/// One semigroup found to break a law. Replayable standalone: parsing the gap
/// notation and re-running the law reproduces the violation deterministically.
struct ViolationRecord {
  std::string law;
  std::string notation;   // gaps=... encoding of the semigroup
  std::string expected;   // the relation that should hold
  std::string observed;   // the values that broke it

  friend bool operator==(const ViolationRecord&, const ViolationRecord&) = default;
};

/// Everything a law check may consume. The scalar block and window masks are
/// always present; the Apery analysis and per-level member lists are computed
/// on first use and cached for the node.
class LawInput {
 public:
  LawInput(SemigroupView view, const ScalarInvariants& scalars, const std::uint64_t* dec,
           const std::uint64_t* prim)
      : view_(view), s_(scalars), dec_(dec), prim_(prim) {}

  const SemigroupView& view() const { return view_; }
  const ScalarInvariants& s() const { return s_; }
  const std::uint64_t* dec() const { return dec_; }
  const std::uint64_t* prim() const { return prim_; }

  int level_of(int x) const { return (x + s_.rho) / s_.m; }

  const AperyAnalysis& apery() const;
  /// Members of S in [0, c+m) grouped by level (S_0 .. S_q), each ascending.
  const std::vector<std::vector<int>>& member_slices() const;

 private:
  SemigroupView view_;
  const ScalarInvariants& s_;
  const std::uint64_t* dec_;
  const std::uint64_t* prim_;
  mutable std::optional<AperyAnalysis> apery_;
  mutable std::optional<std::vector<std::vector<int>>> slices_;
};

enum class LawStatus { NotApplicable, Pass, Fail };

struct LawCheck {
  LawStatus status = LawStatus::NotApplicable;
  std::string observed;  // filled on Fail
};

/// A verifiable structural law. `check` returns NotApplicable when the
/// precondition does not hold for the semigroup, Pass/Fail otherwise.
struct Law {
  std::string_view name;
  std::string_view expected;  // human statement of the relation
  LawCheck (*check)(const LawInput&);
};

const std::vector<Law>& all_laws();

/// Case-insensitive lookup; nullptr when unknown.
const Law* find_law(std::string_view name);

/// Resolves a list of law names; the single entry "all" selects every law.
/// Throws InvalidArgument on unknown names.
std::vector<const Law*> resolve_laws(const std::vector<std::string>& names);

ViolationRecord make_violation(const Law& law, const std::vector<int>& gaps,
                               std::string observed);

}  // namespace nsg
