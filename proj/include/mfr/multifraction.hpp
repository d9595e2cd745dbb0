#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mfr/presentation.hpp"

namespace mfr {

  /// a1/a2/.../an, read as a1 a2^-1 a3 a4^-1 ... in the enveloping group.
  /// Indices are 1-based; index i is positive when odd.
  class Multifraction {
   public:
    Multifraction() = default;
    explicit Multifraction(std::vector<Element> entries)
        : entries_(std::move(entries)) {}

    std::size_t depth() const noexcept {
      return entries_.size();
    }
    bool empty() const noexcept {
      return entries_.empty();
    }
    /// 1-based.
    Element const& at(std::size_t i) const {
      return entries_.at(i - 1);
    }
    Element const& back() const {
      return entries_.back();
    }
    std::vector<Element> const& entries() const noexcept {
      return entries_;
    }

    friend bool operator==(Multifraction const&, Multifraction const&) = default;
    friend auto operator<=>(Multifraction const& a, Multifraction const& b) {
      return a.entries_ <=> b.entries_;
    }

   private:
    std::vector<Element> entries_;
  };

  struct RuleId {
    enum class Kind { rix, rtimes };

    Kind        kind  = Kind::rtimes;
    std::size_t level = 0;
    Element     parameter;

    static RuleId rix(std::size_t i, Element x) {
      return {Kind::rix, i, std::move(x)};
    }
    static RuleId rtimes() {
      return {};
    }

    friend bool operator==(RuleId const&, RuleId const&) = default;
  };

  /// The multifraction product: plain concatenation when a has even depth,
  /// otherwise the last entry of a is merged with the first entry of b.
  Multifraction mf_product(Monoid const& m, Multifraction const& a,
                           Multifraction const& b);

  /// Splits w = w1 w2^-1 w3 w4^-1 ... into positive blocks (w1 may be
  /// empty, the others are not).
  Multifraction parse_signed(Monoid const& m, SignedWord const& w);
  /// A signed word representing the same group element.
  SignedWord    to_signed(Multifraction const& a);

  /// `/`-separated entries; `[]` (or an empty string) is the empty
  /// multifraction.
  Multifraction parse_multifraction(Monoid const& m, std::string_view text);
  std::string   format(Monoid const& m, Multifraction const& a);

  struct RuleStep {
    Multifraction result;
    Element       x_prime;  // the complement pushed to level i-1 (1 for i = 1)
  };

  /// R_{i,x}. nullopt when not applicable; x = 1 returns a unchanged.
  /// Throws LevelOutOfRange unless 1 <= i < depth.
  std::optional<RuleStep> apply_R_step(Monoid const& m, Multifraction const& a,
                                       std::size_t i, Element const& x);
  std::optional<Multifraction> apply_R(Monoid const& m, Multifraction const& a,
                                       std::size_t i, Element const& x);

  /// Drops a trailing 1.
  std::optional<Multifraction> apply_Rtimes(Multifraction const& a);

  /// Checks the defining equalities of R_{i,x} between a and b = a.R_{i,x}.
  bool rule_equalities_hold(Monoid const& m, Multifraction const& a,
                            std::size_t i, Element const& x,
                            Element const& x_prime, Multifraction const& b);

  /// No R_{i,x} with x != 1 applies at level i.
  bool is_i_irreducible(Monoid const& m, Multifraction const& a, std::size_t i);
  /// No R_{i,x} with x != 1 applies at any level.
  bool is_irreducible(Monoid const& m, Multifraction const& a);
  /// Irreducible and the last entry is not 1.
  bool is_hat_irreducible(Monoid const& m, Multifraction const& a);

  /// Every R_{i,s} with s an atom, plus R_x when it applies.
  std::vector<std::pair<RuleId, Multifraction>>
  atom_reducts(Monoid const& m, Multifraction const& a);

  enum class MaxSearch {
    automatic,  // greedy when 3-Ore is known to hold, else fold
    fold,       // lcm of every admissible divisor
    greedy,     // ascend one atom at a time
  };

  struct MaxStep {
    Element       x;
    Element       x_prime;
    Multifraction result;
  };

  /// R_i^max: the largest x for which R_{i,x} applies, and the result.
  /// Throws ThreeOreViolation when the admissible divisors have no common
  /// multiple compatible with a_i.
  MaxStep R_i_max(Monoid const& m, Multifraction const& a, std::size_t i,
                  MaxSearch how = MaxSearch::automatic);

}  // namespace mfr
