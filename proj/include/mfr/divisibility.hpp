#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "mfr/presentation.hpp"

namespace mfr {

  /// Result of a conditional lcm computation.
  ///
  /// For a right lcm: lcm = a * right_complement = b * left_complement.
  /// For a left lcm:  lcm = right_complement * a = left_complement * b.
  ///
  /// In both cases the two complements have no common divisor on the far
  /// side; that coprimality is what certifies minimality of the multiple.
  struct LcmResult {
    Element lcm;
    Element left_complement;
    Element right_complement;

    friend bool operator==(LcmResult const&, LcmResult const&) = default;
  };

  struct BasicTable {
    std::vector<Element> right_basics;  // shortlex, includes 1
    std::vector<Element> left_basics;   // shortlex, includes 1
    std::size_t          C = 1;         // longest basic element

    /// Union of both families, shortlex.
    std::vector<Element> all() const;
  };

  bool left_divides(Monoid const& m, Element const& x, Element const& a);
  bool right_divides(Monoid const& m, Element const& x, Element const& a);

  /// The unique y with x * y = a.
  Element left_quotient(Monoid const& m, Element const& x, Element const& a);
  /// The unique y with y * x = a.
  Element right_quotient(Monoid const& m, Element const& x, Element const& a);

  /// Greatest common right divisor (right gcd).
  Element right_gcd(Monoid const& m, Element const& a, Element const& b);
  /// Greatest common left divisor (left gcd).
  Element left_gcd(Monoid const& m, Element const& a, Element const& b);

  /// Closes the atoms (and 1) under right complement, and separately
  /// under left complement. Throws BasicClosureDiverges past the caps.
  BasicTable basic_closure(Monoid const&  m,
                           std::size_t    size_cap,
                           std::size_t    length_cap);

  /// Right lcm a ∨ b, or nullopt when a and b have no common right
  /// multiple. Computed by composing lcms of basic elements along the
  /// atoms of a and b; each basic lcm comes from a bounded search.
  std::optional<LcmResult>
  right_lcm(Monoid const& m, Element const& a, Element const& b);

  /// Left lcm, computed in the opposite monoid.
  std::optional<LcmResult>
  left_lcm(Monoid const& m, Element const& a, Element const& b);

  /// Exhaustive bounded search: explores a * u for |u| <= bound and returns
  /// the shortest right multiple of `a` that `b` left-divides. Complete
  /// whenever bound >= C (|a| + |b|) - |a|. Independent of the grid route
  /// above, which makes it the oracle for it in tests.
  std::optional<LcmResult> search_right_lcm(Monoid const& m,
                                            Element const& a,
                                            Element const& b,
                                            std::size_t    bound);

  /// The bound C (|a| + |b|) - |a| for the search above.
  std::size_t lcm_search_bound(Monoid const& m,
                               Element const& a,
                               Element const& b);

  /// Syntactic right reversing of u^-1 v using the atom lcm relations.
  /// On success returns (v', u') with u v' == v u' as candidate
  /// complements; callers must verify. nullopt when a pair of atoms has no
  /// common multiple or the step cap is hit.
  std::optional<std::pair<Word, Word>> reverse_right(Monoid const& m,
                                                     Word const&   u,
                                                     Word const&   v,
                                                     std::size_t   step_cap);

  /// Atoms occurring in any word representing a. Requires every relation
  /// to have the same atoms on both sides.
  std::vector<AtomIndex> support(Monoid const& m, Element const& a);

}  // namespace mfr
