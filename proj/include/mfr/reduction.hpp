#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "mfr/multifraction.hpp"

namespace mfr {

  struct TraceStep {
    RuleId        rule;
    Multifraction snapshot;  // state after the rule
  };

  /// Nontrivial steps only.
  struct ReductionTrace {
    Multifraction          initial;
    std::vector<TraceStep> steps;
    Multifraction          final;
  };

  /// One scheduled R_i^max application of the universal strategy,
  /// recorded even when x = 1.
  struct ScheduledStep {
    std::size_t   level = 0;
    Element       x;
    Element       x_prime;
    Multifraction before;
    Multifraction after;
  };

  struct UniversalRun {
    Multifraction              result;
    ReductionTrace             trace;
    std::vector<ScheduledStep> schedule;
  };

  /// An R̂-irreducible multifraction.
  struct NormalForm {
    Multifraction mf;

    friend bool operator==(NormalForm const&, NormalForm const&) = default;
  };

  /// U(n): (1, ..., n-1) followed by U(n-2); empty for n <= 1.
  std::vector<std::size_t> universal_sequence(std::size_t n);

  /// Applies R_i^max along U(depth). Every step is checked against the
  /// rule equalities; a failure raises InconsistentTrace.
  UniversalRun reduce_universal(Monoid const& m, Multifraction const& a,
                                MaxSearch how = MaxSearch::automatic);

  /// reduce_universal, then trailing 1 entries are dropped.
  std::pair<NormalForm, ReductionTrace>
  reduce_hat(Monoid const& m, Multifraction const& a,
             MaxSearch how = MaxSearch::automatic);

  bool is_identity(Monoid const& m, SignedWord const& w);
  bool group_equal(Monoid const& m, SignedWord const& u, SignedWord const& v);

  std::size_t depth(NormalForm const& g) noexcept;
  /// Last entry. Throws TrivialElement for the empty normal form.
  Element     denominator(NormalForm const& g);

  NormalForm multiply_nf(Monoid const& m, NormalForm const& g,
                         NormalForm const& h);

  inline constexpr std::size_t default_node_cap = 200000;

  /// Explores every chain of atom reductions from `a` and returns the
  /// R̂-irreducible multifractions reached. Needs no 3-Ore assumption.
  std::set<Multifraction> naive_reduce(Monoid const& m, Multifraction const& a,
                                       std::size_t node_cap = default_node_cap);

  enum class Verdict { identity, not_identity, undecided };

  struct Decision {
    Verdict     verdict = Verdict::undecided;
    std::string method;
  };

  /// Word problem in the enveloping group. With `three_ore` the answer
  /// comes from the normal form; otherwise from the exponent sum and the
  /// exhaustive reduction tree, which can leave the question open.
  Decision decide_identity(Monoid const& m, SignedWord const& w, bool three_ore,
                           std::size_t node_cap = default_node_cap);

  /// One line per step: `R <i> <x> <snapshot>` or `Rx <snapshot>`.
  std::string serialize_trace(Monoid const& m, ReductionTrace const& t);

}  // namespace mfr
