#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "mfr/errors.hpp"

namespace mfr {

  /// A positive word. Each character is an atom index, not a printable
  /// letter, so lexicographic comparison follows the declared atom order.
  using Word = std::string;
  using AtomIndex = std::uint8_t;

  /// Upper bound on alphabet size imposed by the `Word` encoding.
  inline constexpr std::size_t max_atoms = 255;

  struct SignedLetter {
    AtomIndex atom = 0;
    bool      inverse = false;

    friend bool operator==(SignedLetter const&, SignedLetter const&) = default;
  };

  using SignedWord = std::vector<SignedLetter>;

  /// The formal inverse: reverse the letters and flip every sign.
  SignedWord inverse(SignedWord const& w);

  struct Relation {
    Word lhs;
    Word rhs;
  };

  /// Raw, unvalidated presentation <atoms | relations>+.
  struct Presentation {
    std::vector<std::string> atoms;
    std::vector<Relation>    relations;
    // Cancellativity and the gcd property cannot be verified in general;
    // these record what the author of the presentation vouches for.
    bool asserted_gcd_monoid  = false;
    bool asserted_cancellative = false;
  };

  /// An element of the monoid, held as its canonical representative: the
  /// lexicographically least word of its equivalence class.
  class Element {
   public:
    Element() = default;

    Word const& word() const noexcept {
      return word_;
    }
    std::size_t length() const noexcept {
      return word_.size();
    }
    bool is_identity() const noexcept {
      return word_.empty();
    }

    friend bool operator==(Element const&, Element const&) = default;
    // Shortlex: shorter first, then lexicographic in atom order.
    friend std::strong_ordering operator<=>(Element const& x,
                                            Element const& y) noexcept {
      if (auto c = x.word_.size() <=> y.word_.size(); c != 0) {
        return c;
      }
      return x.word_ <=> y.word_;
    }

   private:
    friend class Monoid;
    explicit Element(Word w) : word_(std::move(w)) {}
    Word word_;
  };

  struct MonoidOptions {
    std::size_t class_cap = 100000;
    std::size_t basics_size_cap = 10000;
    std::size_t basics_length_cap = 64;
    // Try syntactic reversing before the exact lcm computation.
    bool use_reversing = false;
  };

  struct BasicTable;
  struct MonoidCache;

  /// A validated presentation together with the caches every algorithm
  /// shares. Read-mostly: all public member functions are safe to call
  /// concurrently, caches are internally synchronized.
  class Monoid {
   public:
    explicit Monoid(Presentation raw, MonoidOptions options = {});
    Monoid(Monoid&&) noexcept;
    Monoid& operator=(Monoid&&) noexcept;
    ~Monoid();

    Presentation const& presentation() const noexcept {
      return presentation_;
    }
    MonoidOptions const& options() const noexcept {
      return options_;
    }
    std::size_t atom_count() const noexcept {
      return presentation_.atoms.size();
    }
    std::string const& atom_name(AtomIndex a) const {
      return presentation_.atoms.at(a);
    }
    Element atom(AtomIndex a) const;
    Element identity() const {
      return Element();
    }

    /// Every word equivalent to `w`, sorted lexicographically.
    std::shared_ptr<std::vector<Word> const>
    equivalence_class(Word const& w) const;

    bool  words_equal(Word const& u, Word const& v) const;
    Element canonical(Word const& w) const;
    Element product(Element const& x, Element const& y) const {
      return canonical(x.word() + y.word());
    }

    /// Sorted in shortlex order; includes 1 and `a` itself.
    std::shared_ptr<std::vector<Element> const>
    left_divisors(Element const& a) const;
    std::shared_ptr<std::vector<Element> const>
    right_divisors(Element const& a) const;

    /// The monoid presented by the reversed relations. Left notions in
    /// this monoid are right notions in the opposite one.
    Monoid const& opposite() const;
    /// Transports an element to the opposite monoid (and back: the
    /// operation is an involution up to canonicalization).
    Element to_opposite(Element const& x) const;
    Element from_opposite(Element const& x) const;

    /// The closure of the atoms under complement; computed on first use.
    BasicTable const& basics() const;

    /// Set once the 3-Ore condition has been verified on this monoid;
    /// enables the ascending search for maximal reductions.
    void mark_three_ore_verified(bool verified) const noexcept;
    bool three_ore_verified() const noexcept;

    // Text conversion.
    Word        parse_word(std::string_view text) const;
    Element     parse_element(std::string_view text) const {
      return canonical(parse_word(text));
    }
    std::string format_word(Word const& w) const;
    std::string format(Element const& x) const {
      return format_word(x.word());
    }
    SignedWord  parse_signed_word(std::string_view text) const;
    std::string format_signed_word(SignedWord const& w) const;
    /// True when every atom is a single lowercase ASCII letter, enabling
    /// the uppercase-for-inverse input convention.
    bool        uses_case_inverses() const noexcept;

    MonoidCache& cache() const noexcept {
      return *cache_;
    }

   private:
    Presentation                 presentation_;
    MonoidOptions                options_;
    std::unique_ptr<MonoidCache> cache_;
  };

  /// Checks homogeneity and alphabet sanity, then builds the monoid.
  Monoid validate_presentation(Presentation raw, MonoidOptions options = {});

  // Line-oriented text format:
  //   atoms: a b c
  //   rel: a b a = b a b
  //   trust: gcd cancellative
  // `#` starts a comment.
  Presentation parse_presentation(std::string_view text);
  std::string  write_presentation(Presentation const& p);

  /// Built-in presets: free:<n>, braid:<n>, raag:<edges> or
  /// raag:<atoms>:<edges>, raag-abc, affine-A2.
  bool         is_preset_name(std::string_view name);
  Presentation preset(std::string_view name);

  /// A preset name, or else a path to a presentation file.
  Presentation load_presentation(std::string const& source);

}  // namespace mfr
