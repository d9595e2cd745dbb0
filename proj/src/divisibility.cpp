#include "mfr/divisibility.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "monoid_cache.hpp"

namespace mfr {

  namespace {

    template <typename Slice>
    bool divides(Monoid const& m, Element const& x, Element const& a,
                 Slice slice) {
      if (x.length() > a.length()) {
        return false;
      }
      if (x.is_identity() || x == a) {
        return true;
      }
      auto cx = m.equivalence_class(x.word());
      for (auto const& member : *m.equivalence_class(a.word())) {
        if (std::binary_search(cx->begin(), cx->end(),
                               slice(member, x.length()))) {
          return true;
        }
      }
      return false;
    }

    Word prefix(Word const& w, std::size_t k) {
      return w.substr(0, k);
    }
    Word suffix(Word const& w, std::size_t k) {
      return w.substr(w.size() - k);
    }

    // Everything in `a` outside a part matching x, for every member of the
    // class whose `slice` lies in class(x). All results must agree.
    template <typename Slice, typename Rest>
    Element quotient(Monoid const& m, Element const& x, Element const& a,
                     Slice slice, Rest rest) {
      if (x.is_identity()) {
        return a;
      }
      if (x.length() <= a.length()) {
        auto                             cx = m.equivalence_class(x.word());
        std::shared_ptr<std::vector<Word> const> first;
        for (auto const& member : *m.equivalence_class(a.word())) {
          if (!std::binary_search(cx->begin(), cx->end(),
                                  slice(member, x.length()))) {
            continue;
          }
          Word r = rest(member, x.length());
          if (!first) {
            first = m.equivalence_class(r);
          } else if (!std::binary_search(first->begin(), first->end(), r)) {
            throw AmbiguousQuotient("quotient of " + m.format(a) + " by "
                                    + m.format(x) + " is not unique");
          }
        }
        if (first) {
          return m.canonical(first->front());
        }
      }
      throw NotADivisor(m.format(x) + " does not divide " + m.format(a));
    }

    Element gcd_of(Monoid const& m, std::vector<Element> const& da,
                   std::vector<Element> const& db, bool right) {
      std::vector<Element> common;
      std::set_intersection(da.begin(), da.end(), db.begin(), db.end(),
                            std::back_inserter(common));
      // `common` is shortlex sorted and contains 1.
      Element const& top = common.back();
      auto const&    below = right ? *m.right_divisors(top) : *m.left_divisors(top);
      for (auto const& c : common) {
        if (!std::binary_search(below.begin(), below.end(), c)) {
          throw NotGcdMonoid("no greatest common divisor: " + m.format(c)
                             + " and " + m.format(top) + " are incomparable");
        }
      }
      return top;
    }

    LcmResult swapped(LcmResult const& r) {
      return {r.lcm, r.right_complement, r.left_complement};
    }

    /// Closure of {1} ∪ atoms under right complement in `m`. Pairs that
    /// had no lcm within the current bound are searched again whenever
    /// C grows, so every recorded absence is final for the final C.
    /// Fills the basic-lcm memo of `m`.
    std::pair<std::vector<Element>, std::size_t>
    right_closure(Monoid const& m, std::size_t size_cap,
                  std::size_t length_cap) {
      std::vector<Element> list{m.identity()};
      std::set<Element>    members{m.identity()};
      for (std::size_t s = 0; s < m.atom_count(); ++s) {
        auto e = m.atom(static_cast<AtomIndex>(s));
        if (members.insert(e).second) {
          list.push_back(e);
        }
      }
      // A relation s u = t v with s != t bounds the lcm of s and t by its
      // length, so the bound starts at the longest complement |u|.
      std::size_t C = 1;
      for (auto const& r : m.presentation().relations) {
        C = std::max(C, r.lhs.size() - 1);
      }
      std::size_t longest = 1;
      std::map<std::pair<std::size_t, std::size_t>, std::optional<LcmResult>>
          found;
      std::map<std::pair<std::size_t, std::size_t>, std::size_t> absent_at;

      auto add = [&](Element const& e) {
        if (!members.insert(e).second) {
          return;
        }
        list.push_back(e);
        longest = std::max(longest, e.length());
        C       = std::max(C, longest);
        if (list.size() > size_cap || longest > length_cap) {
          throw BasicClosureDiverges(
              "basic closure exceeds caps (" + std::to_string(list.size())
              + " elements, longest " + std::to_string(longest) + ")");
        }
      };

      bool changed = true;
      while (changed) {
        changed = false;
        for (std::size_t i = 0; i < list.size(); ++i) {
          for (std::size_t j = i + 1; j < list.size(); ++j) {
            auto key = std::pair{i, j};
            if (found.count(key)) {
              continue;
            }
            if (auto it = absent_at.find(key);
                it != absent_at.end() && it->second == C) {
              continue;
            }
            Element x = list[i];
            Element y = list[j];
            auto bound = C * (x.length() + y.length()) - x.length();
            auto r     = search_right_lcm(m, x, y, bound);
            if (!r) {
              absent_at[key] = C;
              continue;
            }
            found[key] = r;
            absent_at.erase(key);
            auto before = list.size();
            add(r->left_complement);
            add(r->right_complement);
            changed = changed || list.size() != before;
          }
        }
        // A larger C invalidates earlier negative answers.
        for (auto const& [key, c] : absent_at) {
          if (c != C) {
            changed = true;
            break;
          }
        }
      }

      auto& memo = m.cache().basic_lcms;
      for (std::size_t i = 0; i < list.size(); ++i) {
        memo.insert(pair_key(list[i].word(), list[i].word()),
                    LcmResult{list[i], m.identity(), m.identity()});
        for (std::size_t j = i + 1; j < list.size(); ++j) {
          std::optional<LcmResult> r;
          if (auto it = found.find({i, j}); it != found.end()) {
            r = it->second;
          }
          memo.insert(pair_key(list[i].word(), list[j].word()), r);
          memo.insert(pair_key(list[j].word(), list[i].word()),
                      r ? std::optional(swapped(*r)) : std::nullopt);
        }
      }
      std::sort(list.begin(), list.end());
      return {std::move(list), longest};
    }

    std::optional<LcmResult>
    basic_lcm(Monoid const& m, Element const& x, Element const& y) {
      auto key = pair_key(x.word(), y.word());
      if (auto hit = m.cache().basic_lcms.find(key)) {
        return *hit;
      }
      auto r = search_right_lcm(m, x, y, lcm_search_bound(m, x, y));
      m.cache().basic_lcms.insert(key, r);
      return r;
    }

    void certify(Monoid const& m, Element const& a, Element const& b,
                 LcmResult const& r) {
      if (!right_gcd(m, r.left_complement, r.right_complement).is_identity()) {
        throw NotConditionalLcm("complements of " + m.format(a) + " and "
                                + m.format(b)
                                + " share a right divisor: no lcm");
      }
    }

    std::optional<LcmResult> try_reversing(Monoid const& m, Element const& a,
                                           Element const& b) {
      auto cap = 10 * (a.length() + b.length());
      auto rev = reverse_right(m, a.word(), b.word(), cap);
      if (!rev) {
        return std::nullopt;
      }
      auto rc  = m.canonical(rev->first);
      auto lc  = m.canonical(rev->second);
      auto lcm = m.product(a, rc);
      if (lcm != m.product(b, lc)
          || !right_gcd(m, lc, rc).is_identity()) {
        return std::nullopt;
      }
      return LcmResult{lcm, lc, rc};
    }

  }  // namespace

  std::vector<Element> BasicTable::all() const {
    std::vector<Element> out;
    std::set_union(right_basics.begin(), right_basics.end(),
                   left_basics.begin(), left_basics.end(),
                   std::back_inserter(out));
    return out;
  }

  bool left_divides(Monoid const& m, Element const& x, Element const& a) {
    return divides(m, x, a, prefix);
  }

  bool right_divides(Monoid const& m, Element const& x, Element const& a) {
    return divides(m, x, a, suffix);
  }

  Element left_quotient(Monoid const& m, Element const& x, Element const& a) {
    return quotient(m, x, a, prefix, [](Word const& w, std::size_t k) {
      return w.substr(k);
    });
  }

  Element right_quotient(Monoid const& m, Element const& x, Element const& a) {
    return quotient(m, x, a, suffix, [](Word const& w, std::size_t k) {
      return w.substr(0, w.size() - k);
    });
  }

  Element right_gcd(Monoid const& m, Element const& a, Element const& b) {
    if (a == b) {
      return a;
    }
    if (a.is_identity() || b.is_identity()) {
      return m.identity();
    }
    return gcd_of(m, *m.right_divisors(a), *m.right_divisors(b), true);
  }

  Element left_gcd(Monoid const& m, Element const& a, Element const& b) {
    if (a == b) {
      return a;
    }
    if (a.is_identity() || b.is_identity()) {
      return m.identity();
    }
    return gcd_of(m, *m.left_divisors(a), *m.left_divisors(b), false);
  }

  BasicTable basic_closure(Monoid const& m, std::size_t size_cap,
                           std::size_t length_cap) {
    BasicTable t;
    auto [right, cr] = right_closure(m, size_cap, length_cap);
    auto [left_op, cl] = right_closure(m.opposite(), size_cap, length_cap);
    t.right_basics = std::move(right);
    for (auto const& e : left_op) {
      t.left_basics.push_back(m.from_opposite(e));
    }
    std::sort(t.left_basics.begin(), t.left_basics.end());
    t.C = std::max(cr, cl);
    return t;
  }

  BasicTable const& Monoid::basics() const {
    std::lock_guard lock(cache_->basics_mutex);
    if (!cache_->basics) {
      cache_->basics = std::make_unique<BasicTable>(basic_closure(
          *this, options_.basics_size_cap, options_.basics_length_cap));
    }
    return *cache_->basics;
  }

  std::size_t lcm_search_bound(Monoid const& m, Element const& a,
                               Element const& b) {
    return m.basics().C * (a.length() + b.length()) - a.length();
  }

  std::optional<LcmResult> search_right_lcm(Monoid const& m, Element const& a,
                                            Element const& b,
                                            std::size_t    bound) {
    std::set<Element> level{a};
    for (std::size_t depth = 0;; ++depth) {
      std::vector<Element> hits;
      if (a.length() + depth >= b.length()) {
        for (auto const& e : level) {
          if (left_divides(m, b, e)) {
            hits.push_back(e);
          }
        }
      }
      if (hits.size() > 1) {
        throw NotConditionalLcm("minimal common multiples of " + m.format(a)
                                + " and " + m.format(b) + " are not unique");
      }
      if (hits.size() == 1) {
        auto const& lcm = hits.front();
        return LcmResult{lcm, left_quotient(m, b, lcm), left_quotient(m, a, lcm)};
      }
      if (depth == bound) {
        return std::nullopt;
      }
      std::set<Element> next;
      for (auto const& e : level) {
        for (std::size_t s = 0; s < m.atom_count(); ++s) {
          next.insert(m.canonical(e.word() + static_cast<char>(s)));
        }
      }
      level = std::move(next);
    }
  }

  std::optional<LcmResult> right_lcm(Monoid const& m, Element const& a,
                                     Element const& b) {
    if (a == b || b.is_identity()) {
      return LcmResult{a, a == b ? m.identity() : a, m.identity()};
    }
    if (a.is_identity()) {
      return LcmResult{b, m.identity(), b};
    }
    auto key = pair_key(a.word(), b.word());
    if (auto hit = m.cache().right_lcms.find(key)) {
      return *hit;
    }

    std::optional<LcmResult> result;
    if (m.options().use_reversing) {
      result = try_reversing(m, a, b);
    }
    if (!result) {
      // Rows run over the atoms of a; each crosses the current right
      // complements of b, one basic lcm per cell.
      std::vector<Element> B;
      for (char c : b.word()) {
        B.push_back(m.atom(static_cast<AtomIndex>(c)));
      }
      Word a_side;
      bool exists = true;
      for (char s : a.word()) {
        Element cur = m.atom(static_cast<AtomIndex>(s));
        for (auto& z : B) {
          auto r = basic_lcm(m, cur, z);
          if (!r) {
            exists = false;
            break;
          }
          z   = r->right_complement;
          cur = r->left_complement;
        }
        if (!exists) {
          break;
        }
        a_side += cur.word();
      }
      if (exists) {
        Word b_side;
        for (auto const& z : B) {
          b_side += z.word();
        }
        auto rc  = m.canonical(b_side);
        auto lc  = m.canonical(a_side);
        auto lcm = m.product(a, rc);
        if (lcm != m.product(b, lc)) {
          throw NotConditionalLcm("lcm grid for " + m.format(a) + " and "
                                  + m.format(b) + " does not close");
        }
        result = LcmResult{lcm, lc, rc};
        certify(m, a, b, *result);
      }
    }
    m.cache().right_lcms.insert(key, result);
    m.cache().right_lcms.insert(pair_key(b.word(), a.word()),
                                result ? std::optional(swapped(*result))
                                       : std::nullopt);
    return result;
  }

  std::optional<LcmResult> left_lcm(Monoid const& m, Element const& a,
                                    Element const& b) {
    auto const& op = m.opposite();
    auto r = right_lcm(op, m.to_opposite(a), m.to_opposite(b));
    if (!r) {
      return std::nullopt;
    }
    return LcmResult{m.from_opposite(r->lcm), m.from_opposite(r->left_complement),
                     m.from_opposite(r->right_complement)};
  }

  std::optional<std::pair<Word, Word>> reverse_right(Monoid const& m,
                                                     Word const&   u,
                                                     Word const&   v,
                                                     std::size_t   step_cap) {
    SignedWord w;
    for (auto it = u.rbegin(); it != u.rend(); ++it) {
      w.push_back({static_cast<AtomIndex>(*it), true});
    }
    for (char c : v) {
      w.push_back({static_cast<AtomIndex>(c), false});
    }
    for (std::size_t steps = 0;; ++steps) {
      auto it = std::adjacent_find(w.begin(), w.end(),
                                   [](auto const& l, auto const& r) {
                                     return l.inverse && !r.inverse;
                                   });
      if (it == w.end()) {
        break;
      }
      if (steps >= step_cap) {
        return std::nullopt;
      }
      auto s = it->atom;
      auto t = std::next(it)->atom;
      SignedWord repl;
      if (s != t) {
        auto r = basic_lcm(m, m.atom(s), m.atom(t));
        if (!r) {
          return std::nullopt;
        }
        // s̄t = t' s'^-1 where s t' = t s'.
        for (char c : r->right_complement.word()) {
          repl.push_back({static_cast<AtomIndex>(c), false});
        }
        auto const& sp = r->left_complement.word();
        for (auto c = sp.rbegin(); c != sp.rend(); ++c) {
          repl.push_back({static_cast<AtomIndex>(*c), true});
        }
      }
      auto pos = it - w.begin();
      w.erase(it, it + 2);
      w.insert(w.begin() + pos, repl.begin(), repl.end());
    }
    Word pos_part;
    Word neg_part;
    for (auto const& l : w) {
      if (l.inverse) {
        neg_part.insert(neg_part.begin(), static_cast<char>(l.atom));
      } else {
        pos_part += static_cast<char>(l.atom);
      }
    }
    return std::pair{pos_part, neg_part};
  }

  std::vector<AtomIndex> support(Monoid const& m, Element const& a) {
    for (auto const& r : m.presentation().relations) {
      std::set<char> l(r.lhs.begin(), r.lhs.end());
      std::set<char> rr(r.rhs.begin(), r.rhs.end());
      if (l != rr) {
        throw SupportIllDefined("relation sides use different atoms");
      }
    }
    std::set<AtomIndex> s;
    for (char c : a.word()) {
      s.insert(static_cast<AtomIndex>(c));
    }
    return {s.begin(), s.end()};
  }

}  // namespace mfr
