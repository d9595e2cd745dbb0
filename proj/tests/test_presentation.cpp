#include <doctest.h>

#include <algorithm>
#include <random>

#include "mfr/multifraction.hpp"
#include "oracles.hpp"

using namespace mfr;

namespace {
  Monoid braid3() {
    return Monoid(preset("braid:3"));
  }
}  // namespace

TEST_CASE("validation accepts homogeneous presentations") {
  CHECK_NOTHROW(validate_presentation(parse_presentation("atoms: a b\nrel: a b a = b a b\n")));
  CHECK_NOTHROW(validate_presentation(parse_presentation("atoms: a\n")));
}

TEST_CASE("validation rejects bad input") {
  SUBCASE("length-changing relation") {
    auto p = parse_presentation("atoms: a b\nrel: a = b a b\n");
    try {
      validate_presentation(p);
      FAIL("expected NonHomogeneousRelation");
    } catch (NonHomogeneousRelation const& e) {
      CHECK(e.relation() == "a = b a b");
    }
  }
  SUBCASE("empty side") {
    auto p = parse_presentation("atoms: a b\nrel: a b = 1\n");
    CHECK_THROWS_AS(validate_presentation(p), NonHomogeneousRelation);
  }
  SUBCASE("alphabet") {
    CHECK_THROWS_AS(validate_presentation(Presentation{}), EmptyAlphabet);
    CHECK_THROWS_AS(validate_presentation(parse_presentation("atoms: a a\n")),
                    DuplicateAtomName);
  }
  SUBCASE("unknown atom in relation") {
    CHECK_THROWS_AS(parse_presentation("atoms: a\nrel: a b = b a\n"),
                    UnknownAtom);
  }
  SUBCASE("syntax") {
    CHECK_THROWS_AS(parse_presentation("rel: a = a\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("atoms: a\nfoo: bar\n"), ParseError);
  }
}

TEST_CASE("relations are deduplicated up to swap and trivial ones dropped") {
  auto m = validate_presentation(parse_presentation(
      "atoms: a b\n"
      "rel: a b a = b a b   # braid\n"
      "rel: b a b = a b a\n"
      "rel: a b = a b\n"));
  CHECK(m.presentation().relations.size() == 1);
}

TEST_CASE("text format round trip") {
  auto p = preset("affine-A2");
  auto q = parse_presentation(write_presentation(p));
  CHECK(q.atoms == p.atoms);
  REQUIRE(q.relations.size() == p.relations.size());
  for (std::size_t i = 0; i < p.relations.size(); ++i) {
    CHECK(q.relations[i].lhs == p.relations[i].lhs);
    CHECK(q.relations[i].rhs == p.relations[i].rhs);
  }
  CHECK(q.asserted_gcd_monoid);
}

TEST_CASE("presets") {
  CHECK(preset("free:3").atoms.size() == 3);
  CHECK(preset("free:3").relations.empty());
  auto b4 = preset("braid:4");
  CHECK(b4.atoms.size() == 3);
  CHECK(b4.relations.size() == 3);
  auto r = preset("raag-abc");
  CHECK(r.atoms == std::vector<std::string>{"a", "b", "c"});
  CHECK(r.relations.size() == 2);
  CHECK(preset("raag:ab,bc").relations.size() == 2);
  CHECK(preset("raag:abcd:ab").atoms.size() == 4);
  CHECK_THROWS_AS(preset("braid:1"), ParseError);
  CHECK_THROWS_AS(preset("nope"), ParseError);
  CHECK(is_preset_name("affine-A2"));
  CHECK_FALSE(is_preset_name("./affine-A2.txt"));
}

TEST_CASE("equivalence classes") {
  auto m = braid3();
  auto f = Monoid(preset("free:2"));
  CHECK(*f.equivalence_class(f.parse_word("ab")) == std::vector<Word>{f.parse_word("ab")});
  auto cls = *m.equivalence_class(m.parse_word("aba"));
  CHECK(cls == std::vector<Word>{m.parse_word("aba"), m.parse_word("bab")});

  auto a2   = Monoid(preset("affine-A2"));
  auto abab = a2.equivalence_class(a2.parse_word("abab"));
  // Closed under every relation, length-preserving.
  for (auto const& w : *abab) {
    CHECK(w.size() == 4);
    for (auto const& r : a2.presentation().relations) {
      for (auto [from, to] : {std::pair{r.lhs, r.rhs}, std::pair{r.rhs, r.lhs}}) {
        for (auto pos = w.find(from); pos != Word::npos; pos = w.find(from, pos + 1)) {
          auto v = w;
          v.replace(pos, from.size(), to);
          CHECK(std::binary_search(abab->begin(), abab->end(), v));
        }
      }
    }
  }
  oracle::SmallMonoid o(a2.presentation(), 4);
  CHECK(abab->size() == o.cls(a2.parse_word("abab")).size());
}

TEST_CASE("class cap") {
  auto m = Monoid(preset("braid:4"), MonoidOptions{.class_cap = 3});
  CHECK_THROWS_AS(m.equivalence_class(m.parse_word("abacba")), ClassSizeExceeded);
}

TEST_CASE("words_equal and canonical") {
  auto m = braid3();
  CHECK(m.words_equal(m.parse_word("aba"), m.parse_word("bab")));
  CHECK_FALSE(m.words_equal(m.parse_word("ab"), m.parse_word("ba")));
  CHECK_FALSE(m.words_equal(m.parse_word("ab"), m.parse_word("aba")));
  CHECK(m.format(m.canonical(m.parse_word("bab"))) == "aba");
  CHECK(m.canonical(Word()).is_identity());
  auto f = Monoid(preset("free:2"));
  CHECK(f.format(f.parse_element("bba")) == "bba");
}

TEST_CASE("class properties on random words") {
  auto            m = Monoid(preset("braid:4"));
  std::mt19937    rng(11);
  oracle::SmallMonoid o(m.presentation(), 6);
  for (int t = 0; t < 300; ++t) {
    auto u = oracle::random_word(rng, 3, 6);
    auto v = oracle::random_word(rng, 3, 6);
    auto c = m.canonical(u);
    CHECK(m.canonical(c.word()) == c);
    CHECK(c.word() == o.canonical(u));
    CHECK(m.words_equal(u, v) == m.words_equal(v, u));
    CHECK(m.words_equal(u, v) == o.equal(u, v));
    for (auto const& w : *m.equivalence_class(u)) {
      CHECK(w.size() == u.size());
      CHECK(m.canonical(w) == c);
    }
  }
}

TEST_CASE("word syntax") {
  auto m = braid3();
  CHECK(m.format_word(m.parse_word("a b a")) == "aba");
  CHECK(m.format_word(m.parse_word("a.b")) == "ab");
  CHECK(m.parse_word("1").empty());
  CHECK(m.format_word(Word()) == "1");
  CHECK_THROWS_AS(m.parse_word("ax"), UnknownAtom);

  auto multi = Monoid(parse_presentation("atoms: x1 x2\nrel: x1 x2 = x2 x1\n"));
  auto w     = multi.parse_word("x1.x2.x2");
  CHECK(w.size() == 3);
  CHECK(multi.format_word(w) == "x1.x2.x2");
  auto s = multi.parse_signed_word("x1 x2^-1");
  REQUIRE(s.size() == 2);
  CHECK(s[1].inverse);
  CHECK(multi.format_signed_word(s) == "x1 x2^-1");
  CHECK_FALSE(multi.uses_case_inverses());
}

TEST_CASE("signed words") {
  auto m = braid3();
  CHECK(m.uses_case_inverses());
  auto w = m.parse_signed_word("a b a B A B");
  REQUIRE(w.size() == 6);
  CHECK(w[3].inverse);
  CHECK(m.format_signed_word(w) == "a b a B A B");
  CHECK(m.parse_signed_word("abaBAB") == w);
  CHECK(m.parse_signed_word("a^-1") == m.parse_signed_word("A"));
  CHECK(m.parse_signed_word("1").empty());
  CHECK(inverse(m.parse_signed_word("a B")) == m.parse_signed_word("b A"));
}

TEST_CASE("parse_signed block decomposition") {
  auto m = Monoid(preset("free:3"));
  auto parse = [&](char const* s) {
    return format(m, parse_signed(m, m.parse_signed_word(s)));
  };
  CHECK(parse("A") == "1/a");
  CHECK(parse("a b") == "ab");
  CHECK(parse("a B c") == "a/b/c");
  CHECK(parse("") == "[]");
  CHECK(parse("a B A c") == "a/ab/c");

  std::mt19937 rng(5);
  for (int t = 0; t < 200; ++t) {
    auto w  = oracle::random_signed(rng, 3, 10);
    auto mf = parse_signed(m, w);
    // Blocks after the first are nonempty.
    for (std::size_t i = 2; i <= mf.depth(); ++i) {
      CHECK_FALSE(mf.at(i).is_identity());
    }
    if (!w.empty()) {
      CHECK((mf.depth() % 2 == 0) == w.back().inverse);
    }
    // In a free monoid the blocks are the words themselves.
    CHECK(to_signed(mf) == w);
  }
}
