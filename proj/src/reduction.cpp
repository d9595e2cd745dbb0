#include "mfr/reduction.hpp"

#include <vector>

namespace mfr {

  std::vector<std::size_t> universal_sequence(std::size_t n) {
    std::vector<std::size_t> out;
    for (; n > 1; n -= 2) {
      for (std::size_t i = 1; i < n; ++i) {
        out.push_back(i);
      }
    }
    return out;
  }

  UniversalRun reduce_universal(Monoid const& m, Multifraction const& a,
                                MaxSearch how) {
    UniversalRun run;
    run.trace.initial = a;
    Multifraction cur = a;
    for (auto i : universal_sequence(a.depth())) {
      auto step = R_i_max(m, cur, i, how);
      if (!step.x.is_identity()) {
        if (!rule_equalities_hold(m, cur, i, step.x, step.x_prime,
                                  step.result)) {
          throw InconsistentTrace("R" + std::to_string(i) + " with "
                                  + m.format(step.x) + " on "
                                  + format(m, cur)
                                  + " breaks the rule equalities");
        }
        run.trace.steps.push_back({RuleId::rix(i, step.x), step.result});
      }
      run.schedule.push_back({i, step.x, step.x_prime, cur, step.result});
      cur = std::move(step.result);
    }
    run.trace.final = cur;
    run.result      = std::move(cur);
    return run;
  }

  std::pair<NormalForm, ReductionTrace>
  reduce_hat(Monoid const& m, Multifraction const& a, MaxSearch how) {
    auto run   = reduce_universal(m, a, how);
    auto trace = std::move(run.trace);
    auto cur   = std::move(run.result);
    while (auto shorter = apply_Rtimes(cur)) {
      cur = std::move(*shorter);
      trace.steps.push_back({RuleId::rtimes(), cur});
    }
    if (!is_hat_irreducible(m, cur)) {
      throw IrreducibilityAssertionFailed("reduction of " + format(m, a)
                                          + " ended at the reducible "
                                          + format(m, cur));
    }
    trace.final = cur;
    return {NormalForm{std::move(cur)}, std::move(trace)};
  }

  bool is_identity(Monoid const& m, SignedWord const& w) {
    return reduce_hat(m, parse_signed(m, w)).first.mf.empty();
  }

  bool group_equal(Monoid const& m, SignedWord const& u, SignedWord const& v) {
    return reduce_hat(m, parse_signed(m, u)).first
           == reduce_hat(m, parse_signed(m, v)).first;
  }

  std::size_t depth(NormalForm const& g) noexcept {
    return g.mf.depth();
  }

  Element denominator(NormalForm const& g) {
    if (g.mf.empty()) {
      throw TrivialElement("the trivial element has no denominator");
    }
    return g.mf.back();
  }

  NormalForm multiply_nf(Monoid const& m, NormalForm const& g,
                         NormalForm const& h) {
    return reduce_hat(m, mf_product(m, g.mf, h.mf)).first;
  }

  std::set<Multifraction> naive_reduce(Monoid const& m, Multifraction const& a,
                                       std::size_t node_cap) {
    std::set<Multifraction>    seen{a};
    std::vector<Multifraction> todo{a};
    std::set<Multifraction>    leaves;
    while (!todo.empty()) {
      auto cur = std::move(todo.back());
      todo.pop_back();
      auto next = atom_reducts(m, cur);
      if (next.empty()) {
        leaves.insert(std::move(cur));
        continue;
      }
      for (auto& [rule, b] : next) {
        if (seen.insert(b).second) {
          if (seen.size() > node_cap) {
            throw NodeCapExceeded("reduction tree of " + format(m, a)
                                  + " exceeds " + std::to_string(node_cap)
                                  + " nodes");
          }
          todo.push_back(std::move(b));
        }
      }
    }
    return leaves;
  }

  Decision decide_identity(Monoid const& m, SignedWord const& w,
                           bool three_ore, std::size_t node_cap) {
    if (three_ore) {
      return {is_identity(m, w) ? Verdict::identity : Verdict::not_identity,
              "normal form"};
    }
    // Relations preserve length, so the exponent sum is a homomorphism
    // to the integers.
    long sum = 0;
    for (auto const& l : w) {
      sum += l.inverse ? -1 : 1;
    }
    if (sum != 0) {
      return {Verdict::not_identity, "exponent sum"};
    }
    try {
      auto leaves = naive_reduce(m, parse_signed(m, w), node_cap);
      if (leaves.count(Multifraction())) {
        return {Verdict::identity, "reduction tree"};
      }
      return {Verdict::undecided, "reduction tree"};
    } catch (NodeCapExceeded const&) {
      return {Verdict::undecided, "node cap"};
    }
  }

  std::string serialize_trace(Monoid const& m, ReductionTrace const& t) {
    std::string out;
    for (auto const& s : t.steps) {
      if (s.rule.kind == RuleId::Kind::rtimes) {
        out += "Rx ";
      } else {
        out += "R " + std::to_string(s.rule.level) + " "
               + m.format(s.rule.parameter) + " ";
      }
      out += format(m, s.snapshot);
      out += '\n';
    }
    return out;
  }

}  // namespace mfr
