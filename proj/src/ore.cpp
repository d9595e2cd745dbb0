#include "mfr/ore.hpp"

#include <algorithm>
#include <exception>
#include <set>
#include <thread>

namespace mfr {

  namespace {

    using Triple = std::array<std::size_t, 3>;
    using LcmFn  = std::optional<LcmResult> (*)(Monoid const&, Element const&,
                                               Element const&);

    /// Index of the first failing triple, scanning rows i in [lo, hi).
    std::optional<Triple>
    scan_rows(Monoid const& m, std::vector<Element> const& xs,
              std::vector<std::vector<std::optional<Element>>> const& lcm,
              LcmFn join, std::size_t lo, std::size_t hi, std::size_t step) {
      for (std::size_t i = lo; i < hi; i += step) {
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
          if (!lcm[i][j]) {
            continue;
          }
          for (std::size_t k = j + 1; k < xs.size(); ++k) {
            if (!lcm[i][k] || !lcm[j][k]) {
              continue;
            }
            if (!join(m, *lcm[i][j], xs[k])) {
              return Triple{i, j, k};
            }
          }
        }
      }
      return std::nullopt;
    }

    struct SideResult {
      bool                                  three_ore = true;
      bool                                  two_ore   = true;
      std::optional<std::array<Element, 3>> witness;
    };

    SideResult check_side(Monoid const& m, std::vector<Element> const& basics,
                          LcmFn join, std::size_t jobs) {
      std::vector<Element> xs;
      for (auto const& b : basics) {
        if (!b.is_identity()) {
          xs.push_back(b);
        }
      }
      SideResult out;
      std::vector<std::vector<std::optional<Element>>> lcm(
          xs.size(), std::vector<std::optional<Element>>(xs.size()));
      for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
          if (auto r = join(m, xs[i], xs[j])) {
            lcm[i][j] = r->lcm;
          } else {
            out.two_ore = false;
          }
        }
      }

      jobs = std::max<std::size_t>(1, std::min(jobs, xs.size()));
      std::vector<std::optional<Triple>> found(jobs);
      std::vector<std::exception_ptr>    errors(jobs);
      auto worker = [&](std::size_t w) {
        try {
          found[w] = scan_rows(m, xs, lcm, join, w, xs.size(), jobs);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      };
      if (jobs == 1) {
        worker(0);
      } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < jobs; ++w) {
          pool.emplace_back(worker, w);
        }
      }
      for (auto const& e : errors) {
        if (e) {
          std::rethrow_exception(e);
        }
      }
      std::optional<Triple> first;
      for (auto const& f : found) {
        if (f && (!first || *f < *first)) {
          first = f;
        }
      }
      if (first) {
        out.three_ore = false;
        out.witness = {xs[(*first)[0]], xs[(*first)[1]], xs[(*first)[2]]};
      }
      return out;
    }

    bool pair_has_relation(Presentation const& p, char s, char t) {
      for (auto const& r : p.relations) {
        std::set<char> letters(r.lhs.begin(), r.lhs.end());
        if (letters == std::set<char>{s, t}) {
          return true;
        }
      }
      return false;
    }

  }  // namespace

  OreReport check_3ore(Monoid const& m, std::size_t jobs) {
    OreReport rep;
    rep.basics_used          = m.basics();
    rep.conditional_on_trust = !is_artin_tits(m.presentation());
    auto right = check_side(m, rep.basics_used.right_basics, &right_lcm, jobs);
    auto left  = check_side(m, rep.basics_used.left_basics, &left_lcm, jobs);
    rep.satisfies_right_3ore = right.three_ore;
    rep.satisfies_right_2ore = right.two_ore;
    rep.satisfies_left_3ore  = left.three_ore;
    rep.satisfies_left_2ore  = left.two_ore;
    if (right.witness) {
      rep.witness = right.witness;
    } else if (left.witness) {
      rep.witness         = left.witness;
      rep.witness_on_left = true;
    }
    m.mark_three_ore_verified(rep.satisfies_3ore());
    return rep;
  }

  std::pair<bool, bool> check_2ore(Monoid const& m) {
    auto const& t    = m.basics();
    auto        side = [&](std::vector<Element> const& xs, LcmFn join) {
      for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
          if (!join(m, xs[i], xs[j])) {
            return false;
          }
        }
      }
      return true;
    };
    return {side(t.right_basics, &right_lcm), side(t.left_basics, &left_lcm)};
  }

  bool is_artin_tits(Presentation const& p) {
    std::set<std::set<char>> pairs;
    for (auto const& r : p.relations) {
      if (r.lhs.size() < 2 || r.lhs.size() != r.rhs.size()) {
        return false;
      }
      char s = r.lhs[0];
      char t = r.lhs[1];
      if (s == t) {
        return false;
      }
      for (std::size_t k = 0; k < r.lhs.size(); ++k) {
        if (r.lhs[k] != (k % 2 == 0 ? s : t)
            || r.rhs[k] != (k % 2 == 0 ? t : s)) {
          return false;
        }
      }
      if (!pairs.insert({s, t}).second) {
        return false;
      }
    }
    return true;
  }

  FcClass classify_fc(Monoid const& m, std::size_t jobs) {
    if (!is_artin_tits(m.presentation())) {
      throw NotArtinTits("relations are not of the form sts... = tst...");
    }
    return check_3ore(m, jobs).satisfies_3ore() ? FcClass::fc
                                                : FcClass::not_fc;
  }

  FcDirectReport check_fc_direct(Monoid const& m, std::size_t subset_cap) {
    auto const& p = m.presentation();
    if (!is_artin_tits(p)) {
      throw NotArtinTits("relations are not of the form sts... = tst...");
    }
    auto const n = m.atom_count();
    if (n >= 63 || (std::size_t{1} << n) > subset_cap) {
      throw SubsetBlowup("too many atom subsets to enumerate ("
                         + std::to_string(n) + " atoms)");
    }
    // Distinct atoms without a relation have no common multiple.
    auto compatible = [&](std::size_t s, std::size_t t) {
      return pair_has_relation(p, static_cast<char>(s), static_cast<char>(t))
             && right_lcm(m, m.atom(static_cast<AtomIndex>(s)),
                          m.atom(static_cast<AtomIndex>(t)));
    };
    FcDirectReport rep;
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      std::vector<AtomIndex> I;
      for (std::size_t s = 0; s < n; ++s) {
        if (mask >> s & 1) {
          I.push_back(static_cast<AtomIndex>(s));
        }
      }
      if (I.size() < 2) {
        continue;
      }
      bool pairwise = true;
      for (std::size_t x = 0; x < I.size() && pairwise; ++x) {
        for (std::size_t y = x + 1; y < I.size() && pairwise; ++y) {
          pairwise = compatible(I[x], I[y]);
        }
      }
      if (!pairwise) {
        continue;
      }
      std::optional<Element> delta = m.atom(I[0]);
      for (std::size_t x = 1; x < I.size() && delta; ++x) {
        auto r = right_lcm(m, *delta, m.atom(I[x]));
        delta  = r ? std::optional(r->lcm) : std::nullopt;
      }
      if (!delta) {
        rep.verdict = FcClass::not_fc;
      }
      rep.subsets.push_back({std::move(I), std::move(delta)});
    }
    std::sort(rep.subsets.begin(), rep.subsets.end(),
              [](auto const& a, auto const& b) {
                if (a.atoms.size() != b.atoms.size()) {
                  return a.atoms.size() < b.atoms.size();
                }
                return a.atoms < b.atoms;
              });
    return rep;
  }

}  // namespace mfr
