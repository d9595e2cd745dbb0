#include "mfr/multifraction.hpp"

#include <algorithm>
#include <set>

#include "mfr/divisibility.hpp"

namespace mfr {

  namespace {

    std::string_view trim(std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
      }
      while (!s.empty() && (s.back() == ' ' || s.back() == '\t'
                            || s.back() == '\n' || s.back() == '\r')) {
        s.remove_suffix(1);
      }
      return s;
    }

    Multifraction replaced(Multifraction const& a, std::size_t i,
                           std::initializer_list<Element> fresh) {
      // Overwrites entries i, i+1, ... (1-based) with `fresh`.
      auto e = a.entries();
      std::size_t k = i - 1;
      for (auto const& x : fresh) {
        e.at(k++) = x;
      }
      return Multifraction(std::move(e));
    }

    /// Atoms s with s * y = a for some y (left) or y * s = a (right).
    std::vector<AtomIndex> atom_divisors(Monoid const& m, Element const& a,
                                         bool left) {
      std::set<AtomIndex> s;
      if (!a.is_identity()) {
        for (auto const& w : *m.equivalence_class(a.word())) {
          s.insert(static_cast<AtomIndex>(left ? w.front() : w.back()));
        }
      }
      return {s.begin(), s.end()};
    }

    std::vector<std::string> render(Monoid const& m,
                                    std::initializer_list<Element> xs) {
      std::vector<std::string> out;
      for (auto const& x : xs) {
        out.push_back(m.format(x));
      }
      return out;
    }

    // Even levels use left divisors of a_{i+1} and right lcms; odd levels
    // are the mirror image. These helpers hide the side.
    struct Side {
      bool left;  // true: x left-divides a_{i+1}

      Element extend(Monoid const& m, Element const& x, AtomIndex s) const {
        return left ? m.product(x, m.atom(s)) : m.product(m.atom(s), x);
      }
      Element strip(Monoid const& m, AtomIndex s, Element const& rest) const {
        return left ? left_quotient(m, m.atom(s), rest)
                    : right_quotient(m, m.atom(s), rest);
      }
      std::optional<LcmResult> lcm(Monoid const& m, Element const& x,
                                   Element const& y) const {
        return left ? right_lcm(m, x, y) : left_lcm(m, x, y);
      }
      std::shared_ptr<std::vector<Element> const>
      divisors(Monoid const& m, Element const& a) const {
        return left ? m.left_divisors(a) : m.right_divisors(a);
      }
    };

    Element fold_max(Monoid const& m, Multifraction const& a, std::size_t i,
                     Side side) {
      auto const& ai   = a.at(i);
      auto const& next = a.at(i + 1);
      Element     acc  = m.identity();
      for (auto const& x : *side.divisors(m, next)) {
        if (x.is_identity() || !side.lcm(m, x, ai)) {
          continue;
        }
        auto joined = side.lcm(m, acc, x);
        if (!joined) {
          throw NotGcdMonoid("divisors " + m.format(acc) + " and "
                             + m.format(x) + " of " + m.format(next)
                             + " have no lcm");
        }
        if (!side.lcm(m, joined->lcm, ai)) {
          throw ThreeOreViolation(
              "no common multiple of " + m.format(acc) + ", " + m.format(x)
                  + " and " + m.format(ai) + " at level "
                  + std::to_string(i),
              render(m, {acc, x, ai}));
        }
        acc = joined->lcm;
      }
      return acc;
    }

    Element greedy_max(Monoid const& m, Multifraction const& a,
                       std::size_t i, Side side) {
      auto const& ai   = a.at(i);
      Element     x    = m.identity();
      Element     rest = a.at(i + 1);
      for (bool grown = true; grown;) {
        grown = false;
        for (auto s : atom_divisors(m, rest, side.left)) {
          auto y = side.extend(m, x, s);
          if (side.lcm(m, y, ai)) {
            x     = y;
            rest  = side.strip(m, s, rest);
            grown = true;
            break;
          }
        }
      }
      return x;
    }

  }  // namespace

  Multifraction mf_product(Monoid const& m, Multifraction const& a,
                           Multifraction const& b) {
    if (a.empty()) {
      return b;
    }
    if (b.empty()) {
      return a;
    }
    auto e = a.entries();
    auto f = b.entries().begin();
    if (a.depth() % 2 == 1) {
      e.back() = m.product(e.back(), *f++);
    }
    e.insert(e.end(), f, b.entries().end());
    return Multifraction(std::move(e));
  }

  Multifraction parse_signed(Monoid const& m, SignedWord const& w) {
    std::vector<Word> blocks;
    if (w.empty()) {
      return {};
    }
    blocks.emplace_back();
    for (auto const& l : w) {
      bool const negative_block = blocks.size() % 2 == 0;
      if (l.inverse != negative_block) {
        blocks.emplace_back();
      }
      blocks.back() += static_cast<char>(l.atom);
    }
    std::vector<Element> entries;
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      auto& b = blocks[k];
      if (k % 2 == 1) {
        std::reverse(b.begin(), b.end());
      }
      entries.push_back(m.canonical(b));
    }
    return Multifraction(std::move(entries));
  }

  SignedWord to_signed(Multifraction const& a) {
    SignedWord out;
    for (std::size_t i = 1; i <= a.depth(); ++i) {
      auto const& w = a.at(i).word();
      if (i % 2 == 1) {
        for (char c : w) {
          out.push_back({static_cast<AtomIndex>(c), false});
        }
      } else {
        for (auto c = w.rbegin(); c != w.rend(); ++c) {
          out.push_back({static_cast<AtomIndex>(*c), true});
        }
      }
    }
    return out;
  }

  Multifraction parse_multifraction(Monoid const& m, std::string_view text) {
    text = trim(text);
    if (text.empty() || text == "[]") {
      return {};
    }
    std::vector<Element> entries;
    std::size_t          start = 0;
    for (std::size_t k = 0; k <= text.size(); ++k) {
      if (k == text.size() || text[k] == '/') {
        entries.push_back(m.parse_element(text.substr(start, k - start)));
        start = k + 1;
      }
    }
    return Multifraction(std::move(entries));
  }

  std::string format(Monoid const& m, Multifraction const& a) {
    if (a.empty()) {
      return "[]";
    }
    std::string out;
    for (auto const& e : a.entries()) {
      if (!out.empty()) {
        out += '/';
      }
      out += m.format(e);
    }
    return out;
  }

  std::optional<RuleStep> apply_R_step(Monoid const& m, Multifraction const& a,
                                       std::size_t i, Element const& x) {
    if (i < 1 || i >= a.depth()) {
      throw LevelOutOfRange("level " + std::to_string(i)
                            + " is out of range for depth "
                            + std::to_string(a.depth()));
    }
    if (x.is_identity()) {
      return RuleStep{a, m.identity()};
    }
    auto const& ai   = a.at(i);
    auto const& next = a.at(i + 1);
    if (i == 1) {
      if (!right_divides(m, x, ai) || !right_divides(m, x, next)) {
        return std::nullopt;
      }
      return RuleStep{replaced(a, 1, {right_quotient(m, x, ai),
                                      right_quotient(m, x, next)}),
                      m.identity()};
    }
    if (i % 2 == 0) {
      if (!left_divides(m, x, next)) {
        return std::nullopt;
      }
      auto r = right_lcm(m, x, ai);
      if (!r) {
        return std::nullopt;
      }
      // x * b_i = a_i * x' = x v a_i
      auto const& xp = r->left_complement;
      return RuleStep{replaced(a, i - 1, {m.product(a.at(i - 1), xp),
                                          r->right_complement,
                                          left_quotient(m, x, next)}),
                      xp};
    }
    if (!right_divides(m, x, next)) {
      return std::nullopt;
    }
    auto r = left_lcm(m, x, ai);
    if (!r) {
      return std::nullopt;
    }
    // b_i * x = x' * a_i
    auto const& xp = r->left_complement;
    return RuleStep{replaced(a, i - 1, {m.product(xp, a.at(i - 1)),
                                        r->right_complement,
                                        right_quotient(m, x, next)}),
                    xp};
  }

  std::optional<Multifraction> apply_R(Monoid const& m, Multifraction const& a,
                                       std::size_t i, Element const& x) {
    if (auto s = apply_R_step(m, a, i, x)) {
      return std::move(s->result);
    }
    return std::nullopt;
  }

  std::optional<Multifraction> apply_Rtimes(Multifraction const& a) {
    if (a.empty() || !a.back().is_identity()) {
      return std::nullopt;
    }
    auto e = a.entries();
    e.pop_back();
    return Multifraction(std::move(e));
  }

  bool rule_equalities_hold(Monoid const& m, Multifraction const& a,
                            std::size_t i, Element const& x,
                            Element const& x_prime, Multifraction const& b) {
    if (a.depth() != b.depth() || i < 1 || i >= a.depth()) {
      return false;
    }
    std::size_t const lo = i == 1 ? 1 : i - 1;
    for (std::size_t k = 1; k <= a.depth(); ++k) {
      if ((k < lo || k > i + 1) && a.at(k) != b.at(k)) {
        return false;
      }
    }
    if (i == 1) {
      return m.product(b.at(1), x) == a.at(1)
             && m.product(b.at(2), x) == a.at(2);
    }
    if (i % 2 == 0) {
      return m.product(x, b.at(i)) == m.product(a.at(i), x_prime)
             && m.product(x, b.at(i + 1)) == a.at(i + 1)
             && b.at(i - 1) == m.product(a.at(i - 1), x_prime);
    }
    return m.product(b.at(i), x) == m.product(x_prime, a.at(i))
           && m.product(b.at(i + 1), x) == a.at(i + 1)
           && b.at(i - 1) == m.product(x_prime, a.at(i - 1));
  }

  bool is_i_irreducible(Monoid const& m, Multifraction const& a,
                        std::size_t i) {
    if (i < 1 || i >= a.depth()) {
      return true;
    }
    auto const& ai   = a.at(i);
    auto const& next = a.at(i + 1);
    if (i == 1) {
      return right_gcd(m, ai, next).is_identity();
    }
    bool const left = i % 2 == 0;
    for (auto s : atom_divisors(m, next, left)) {
      auto x = m.atom(s);
      if (left ? right_lcm(m, x, ai).has_value()
               : left_lcm(m, x, ai).has_value()) {
        return false;
      }
    }
    return true;
  }

  bool is_irreducible(Monoid const& m, Multifraction const& a) {
    for (std::size_t i = 1; i < a.depth(); ++i) {
      if (!is_i_irreducible(m, a, i)) {
        return false;
      }
    }
    return true;
  }

  bool is_hat_irreducible(Monoid const& m, Multifraction const& a) {
    return (a.empty() || !a.back().is_identity()) && is_irreducible(m, a);
  }

  std::vector<std::pair<RuleId, Multifraction>>
  atom_reducts(Monoid const& m, Multifraction const& a) {
    std::vector<std::pair<RuleId, Multifraction>> out;
    for (std::size_t i = 1; i < a.depth(); ++i) {
      for (std::size_t s = 0; s < m.atom_count(); ++s) {
        auto x = m.atom(static_cast<AtomIndex>(s));
        if (auto b = apply_R(m, a, i, x)) {
          out.emplace_back(RuleId::rix(i, x), std::move(*b));
        }
      }
    }
    if (auto b = apply_Rtimes(a)) {
      out.emplace_back(RuleId::rtimes(), std::move(*b));
    }
    return out;
  }

  MaxStep R_i_max(Monoid const& m, Multifraction const& a, std::size_t i,
                  MaxSearch how) {
    if (i < 1) {
      throw LevelOutOfRange("levels start at 1");
    }
    if (i >= a.depth()) {
      return {m.identity(), m.identity(), a};
    }
    Element x;
    if (i == 1) {
      x = right_gcd(m, a.at(1), a.at(2));
    } else {
      Side side{i % 2 == 0};
      if (how == MaxSearch::automatic) {
        how = m.three_ore_verified() ? MaxSearch::greedy : MaxSearch::fold;
      }
      x = how == MaxSearch::greedy ? greedy_max(m, a, i, side)
                                   : fold_max(m, a, i, side);
    }
    auto b = apply_R_step(m, a, i, x);
    if (!b) {
      // x was built from admissible divisors, so this is a gcd failure.
      throw NotGcdMonoid("maximal reduction at level " + std::to_string(i)
                         + " does not apply");
    }
    return {std::move(x), std::move(b->x_prime), std::move(b->result)};
  }

}  // namespace mfr
