#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nsg/wilf.hpp"

namespace nsg {

/// Report fields a hunt predicate may reference. a1..a3 read the profile
/// entries (0 when the profile is shorter).
enum class Field : std::uint8_t {
  M, C, Q, Rho, G, E, L, PL, Dq, W, W0, Csize, A1, A2, A3,
};

/// A compiled boolean expression over report fields, e.g.
/// "L <= 12 && q >= 4 && a1 == 2". Operators: comparisons on integers,
/// && || ! on booleans, parentheses; C-like precedence, left-associative.
/// Field names are matched case-insensitively.
class Predicate {
 public:
  struct Instr {
    enum Op : std::uint8_t {
      PushConst, PushField, Lt, Le, Eq, Ne, Ge, Gt, And, Or, Not,
    };
    Op op;
    long long value = 0;  // PushConst
    Field field = Field::M;  // PushField
  };

  bool eval(const WilfReport& r) const;

  /// True when the predicate reads c_size or profile entries, which require
  /// the full Apery analysis rather than the scalar block.
  bool needs_full_report() const {
    constexpr std::uint32_t kFull = (1u << static_cast<int>(Field::Csize)) |
                                    (1u << static_cast<int>(Field::A1)) |
                                    (1u << static_cast<int>(Field::A2)) |
                                    (1u << static_cast<int>(Field::A3));
    return fields_used_ & kFull;
  }

  const std::string& text() const { return text_; }

 private:
  friend Predicate parse_predicate(std::string_view);
  std::vector<Instr> program_;
  std::uint32_t fields_used_ = 0;
  std::string text_;
};

/// Parses the predicate text; throws PredicateParse with position and token
/// on any lexical, syntactic or type error.
Predicate parse_predicate(std::string_view text);

}  // namespace nsg
