#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "mfr/divisibility.hpp"

namespace mfr {

  struct OreReport {
    bool satisfies_right_3ore = true;
    bool satisfies_left_3ore  = true;
    bool satisfies_right_2ore = true;
    bool satisfies_left_2ore  = true;
    /// First pairwise-compatible triple of basics (shortlex order) with no
    /// common multiple. Right side is checked first.
    std::optional<std::array<Element, 3>> witness;
    bool                                  witness_on_left = false;
    BasicTable                            basics_used;
    /// The presentation is not of Artin-Tits type, so a passing verdict
    /// relies on the asserted gcd property.
    bool conditional_on_trust = false;

    bool satisfies_3ore() const noexcept {
      return satisfies_right_3ore && satisfies_left_3ore;
    }
    bool satisfies_2ore() const noexcept {
      return satisfies_right_2ore && satisfies_left_2ore;
    }
  };

  /// Checks the 3-Ore condition on basic elements. On success the monoid
  /// is marked as verified, which switches maximal reductions to the
  /// ascending search. `jobs` > 1 splits the triple scan across threads.
  OreReport check_3ore(Monoid const& m, std::size_t jobs = 1);

  /// (right, left): every pair of basics has a common multiple.
  std::pair<bool, bool> check_2ore(Monoid const& m);

  /// Every relation reads s t s ... = t s t ... with s != t, and no pair of
  /// atoms has two relations.
  bool is_artin_tits(Presentation const& p);

  enum class FcClass { fc, not_fc };

  /// FC iff 3-Ore holds on both sides. Throws NotArtinTits.
  FcClass classify_fc(Monoid const& m, std::size_t jobs = 1);

  struct SubsetReport {
    std::vector<AtomIndex> atoms;
    std::optional<Element> delta;  // global lcm, when it exists
  };

  struct FcDirectReport {
    FcClass                   verdict = FcClass::fc;
    std::vector<SubsetReport> subsets;  // pairwise compatible, size >= 2
  };

  inline constexpr std::size_t default_subset_cap = std::size_t{1} << 16;

  /// Looks for the global lcm of every pairwise-compatible set of atoms.
  /// Throws NotArtinTits, and SubsetBlowup when 2^|atoms| exceeds the cap.
  FcDirectReport check_fc_direct(Monoid const& m,
                                 std::size_t  subset_cap = default_subset_cap);

}  // namespace mfr
