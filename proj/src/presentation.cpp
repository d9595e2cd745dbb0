#include "mfr/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_set>

#include "monoid_cache.hpp"

namespace mfr {

  namespace {

    std::string_view trim(std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
      }
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
      }
      return s;
    }

    std::vector<std::string> split_ws(std::string_view s) {
      std::vector<std::string> out;
      std::istringstream       in{std::string(s)};
      std::string              tok;
      while (in >> tok) {
        out.push_back(tok);
      }
      return out;
    }

    std::vector<std::string> split_on(std::string_view s, char sep) {
      std::vector<std::string> out;
      std::size_t              start = 0;
      for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
          out.emplace_back(s.substr(start, i - start));
          start = i + 1;
        }
      }
      return out;
    }

    bool single_char_atoms(Presentation const& p) {
      return std::all_of(p.atoms.begin(), p.atoms.end(), [](auto const& a) {
        return a.size() == 1;
      });
    }

    std::string render_relation(Presentation const& p, Relation const& r) {
      auto side = [&](Word const& w) {
        std::string out;
        for (char c : w) {
          auto i = static_cast<unsigned char>(c);
          if (!out.empty()) {
            out += ' ';
          }
          out += i < p.atoms.size() ? p.atoms[i] : "?";
        }
        return out.empty() ? std::string("1") : out;
      };
      return side(r.lhs) + " = " + side(r.rhs);
    }

    std::optional<AtomIndex> find_atom(Presentation const& p,
                                       std::string_view    name) {
      for (std::size_t i = 0; i < p.atoms.size(); ++i) {
        if (p.atoms[i] == name) {
          return static_cast<AtomIndex>(i);
        }
      }
      return std::nullopt;
    }

    AtomIndex require_atom(Presentation const& p, std::string_view name) {
      if (auto a = find_atom(p, name)) {
        return *a;
      }
      throw UnknownAtom("unknown atom '" + std::string(name) + "'");
    }

    void validate(Presentation& p) {
      if (p.atoms.empty()) {
        throw EmptyAlphabet("a presentation needs at least one atom");
      }
      if (p.atoms.size() > max_atoms) {
        throw ParseError("at most 255 atoms are supported");
      }
      std::set<std::string> seen;
      for (auto const& a : p.atoms) {
        if (a.empty() || a == "1"
            || a.find_first_of(" \t/.^=#") != std::string::npos) {
          throw ParseError("invalid atom name '" + a + "'");
        }
        if (!seen.insert(a).second) {
          throw DuplicateAtomName("duplicate atom name '" + a + "'");
        }
      }
      std::vector<Relation> kept;
      std::set<std::pair<Word, Word>> keys;
      for (auto const& r : p.relations) {
        for (Word const* side : {&r.lhs, &r.rhs}) {
          for (char c : *side) {
            if (static_cast<unsigned char>(c) >= p.atoms.size()) {
              throw UnknownAtom("relation uses an undeclared atom");
            }
          }
        }
        if (r.lhs.size() != r.rhs.size() || r.lhs.empty()) {
          auto text = render_relation(p, r);
          throw NonHomogeneousRelation(
              "relation " + text + " is not length-preserving", text);
        }
        if (r.lhs == r.rhs) {
          continue;
        }
        auto key = std::minmax(r.lhs, r.rhs);
        if (keys.insert({key.first, key.second}).second) {
          kept.push_back(r);
        }
      }
      p.relations = std::move(kept);
    }

  }  // namespace

  SignedWord inverse(SignedWord const& w) {
    SignedWord out(w.rbegin(), w.rend());
    for (auto& l : out) {
      l.inverse = !l.inverse;
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Monoid
  ////////////////////////////////////////////////////////////////////////

  Monoid::Monoid(Presentation raw, MonoidOptions options)
      : presentation_(std::move(raw)),
        options_(options),
        cache_(std::make_unique<MonoidCache>()) {
    validate(presentation_);
  }

  Monoid::Monoid(Monoid&&) noexcept            = default;
  Monoid& Monoid::operator=(Monoid&&) noexcept = default;
  Monoid::~Monoid()                            = default;

  Monoid validate_presentation(Presentation raw, MonoidOptions options) {
    return Monoid(std::move(raw), options);
  }

  Element Monoid::atom(AtomIndex a) const {
    if (a >= atom_count()) {
      throw UnknownAtom("atom index out of range");
    }
    return Element(Word(1, static_cast<char>(a)));
  }

  std::shared_ptr<std::vector<Word> const>
  Monoid::equivalence_class(Word const& w) const {
    if (auto hit = cache_->classes.find(w)) {
      return {*hit, &(*hit)->members};
    }
    for (char c : w) {
      if (static_cast<unsigned char>(c) >= atom_count()) {
        throw UnknownAtom("word uses an undeclared atom");
      }
    }
    std::unordered_set<Word> seen{w};
    std::deque<Word>         todo{w};
    while (!todo.empty()) {
      Word cur = std::move(todo.front());
      todo.pop_front();
      for (auto const& r : presentation_.relations) {
        for (auto [from, to] : {std::pair{&r.lhs, &r.rhs},
                                std::pair{&r.rhs, &r.lhs}}) {
          for (auto pos = cur.find(*from); pos != Word::npos;
               pos      = cur.find(*from, pos + 1)) {
            Word next = cur;
            next.replace(pos, from->size(), *to);
            if (seen.insert(next).second) {
              if (seen.size() > options_.class_cap) {
                throw ClassSizeExceeded("equivalence class of a word of length "
                                        + std::to_string(w.size())
                                        + " exceeds the cap of "
                                        + std::to_string(options_.class_cap));
              }
              todo.push_back(std::move(next));
            }
          }
        }
      }
    }
    auto info = std::make_shared<ClassInfo>();
    info->members.assign(seen.begin(), seen.end());
    std::sort(info->members.begin(), info->members.end());
    std::shared_ptr<ClassInfo const> shared = info;
    for (auto const& member : info->members) {
      cache_->classes.insert(member, shared);
    }
    return {shared, &shared->members};
  }

  bool Monoid::words_equal(Word const& u, Word const& v) const {
    if (u.size() != v.size()) {
      return false;
    }
    if (u == v) {
      return true;
    }
    auto cls = equivalence_class(u);
    return std::binary_search(cls->begin(), cls->end(), v);
  }

  Element Monoid::canonical(Word const& w) const {
    if (presentation_.relations.empty() || w.size() < 2) {
      for (char c : w) {
        if (static_cast<unsigned char>(c) >= atom_count()) {
          throw UnknownAtom("word uses an undeclared atom");
        }
      }
      return Element(w);
    }
    return Element(equivalence_class(w)->front());
  }

  namespace {
    template <typename Slice>
    std::shared_ptr<DivisorList const> collect_divisors(Monoid const& m,
                                                        Element const& a,
                                                        Slice slice) {
      std::set<Element> found;
      auto              cls = m.equivalence_class(a.word());
      for (auto const& member : *cls) {
        for (std::size_t k = 0; k <= member.size(); ++k) {
          found.insert(m.canonical(slice(member, k)));
        }
      }
      return std::make_shared<DivisorList const>(found.begin(), found.end());
    }
  }  // namespace

  std::shared_ptr<std::vector<Element> const>
  Monoid::left_divisors(Element const& a) const {
    if (auto hit = cache_->left_divisors.find(a.word())) {
      return *hit;
    }
    auto d = collect_divisors(*this, a, [](Word const& w, std::size_t k) {
      return w.substr(0, k);
    });
    cache_->left_divisors.insert(a.word(), d);
    return d;
  }

  std::shared_ptr<std::vector<Element> const>
  Monoid::right_divisors(Element const& a) const {
    if (auto hit = cache_->right_divisors.find(a.word())) {
      return *hit;
    }
    auto d = collect_divisors(*this, a, [](Word const& w, std::size_t k) {
      return w.substr(w.size() - k);
    });
    cache_->right_divisors.insert(a.word(), d);
    return d;
  }

  Monoid const& Monoid::opposite() const {
    std::call_once(cache_->opposite_once, [this] {
      Presentation op = presentation_;
      for (auto& r : op.relations) {
        std::reverse(r.lhs.begin(), r.lhs.end());
        std::reverse(r.rhs.begin(), r.rhs.end());
      }
      cache_->opposite = std::make_unique<Monoid>(std::move(op), options_);
    });
    return *cache_->opposite;
  }

  Element Monoid::to_opposite(Element const& x) const {
    Word w(x.word().rbegin(), x.word().rend());
    return opposite().canonical(w);
  }

  Element Monoid::from_opposite(Element const& x) const {
    Word w(x.word().rbegin(), x.word().rend());
    return canonical(w);
  }

  void Monoid::mark_three_ore_verified(bool verified) const noexcept {
    cache_->three_ore_verified = verified;
  }

  bool Monoid::three_ore_verified() const noexcept {
    return cache_->three_ore_verified;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text conversion
  ////////////////////////////////////////////////////////////////////////

  bool Monoid::uses_case_inverses() const noexcept {
    return std::all_of(presentation_.atoms.begin(),
                       presentation_.atoms.end(),
                       [](auto const& a) {
                         return a.size() == 1
                                && std::islower(static_cast<unsigned char>(a[0]));
                       });
  }

  Word Monoid::parse_word(std::string_view text) const {
    text = trim(text);
    if (text.empty() || text == "1") {
      return {};
    }
    Word out;
    if (text.find_first_of(" \t.") != std::string_view::npos) {
      std::string spaced(text);
      std::replace(spaced.begin(), spaced.end(), '.', ' ');
      for (auto const& tok : split_ws(spaced)) {
        if (tok != "1") {
          out += static_cast<char>(require_atom(presentation_, tok));
        }
      }
      return out;
    }
    if (auto a = find_atom(presentation_, text)) {
      return Word(1, static_cast<char>(*a));
    }
    if (!single_char_atoms(presentation_)) {
      throw UnknownAtom("unknown atom '" + std::string(text) + "'");
    }
    for (char c : text) {
      out += static_cast<char>(require_atom(presentation_, std::string(1, c)));
    }
    return out;
  }

  std::string Monoid::format_word(Word const& w) const {
    if (w.empty()) {
      return "1";
    }
    bool const  compact = single_char_atoms(presentation_);
    std::string out;
    for (char c : w) {
      if (!compact && !out.empty()) {
        out += '.';
      }
      out += presentation_.atoms.at(static_cast<unsigned char>(c));
    }
    return out;
  }

  SignedWord Monoid::parse_signed_word(std::string_view text) const {
    SignedWord out;
    bool const case_inv = uses_case_inverses();
    bool const compact  = single_char_atoms(presentation_);
    for (auto const& tok : split_ws(text)) {
      if (tok == "1") {
        continue;
      }
      constexpr std::string_view inv_suffix = "^-1";
      if (tok.size() > inv_suffix.size() && tok.ends_with(inv_suffix)) {
        auto name = tok.substr(0, tok.size() - inv_suffix.size());
        out.push_back({require_atom(presentation_, name), true});
        continue;
      }
      if (auto a = find_atom(presentation_, tok)) {
        out.push_back({*a, false});
        continue;
      }
      if (!compact) {
        throw UnknownAtom("unknown atom '" + tok + "'");
      }
      for (char c : tok) {
        if (auto a = find_atom(presentation_, std::string(1, c))) {
          out.push_back({*a, false});
        } else if (case_inv && std::isupper(static_cast<unsigned char>(c))) {
          auto lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
          out.push_back({require_atom(presentation_, std::string(1, lower)), true});
        } else {
          throw UnknownAtom("unknown letter '" + std::string(1, c) + "'");
        }
      }
    }
    return out;
  }

  std::string Monoid::format_signed_word(SignedWord const& w) const {
    if (w.empty()) {
      return "1";
    }
    bool const  case_inv = uses_case_inverses();
    std::string out;
    for (auto const& l : w) {
      if (!out.empty()) {
        out += ' ';
      }
      auto const& name = presentation_.atoms.at(l.atom);
      if (!l.inverse) {
        out += name;
      } else if (case_inv) {
        out += static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
      } else {
        out += name + "^-1";
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text format and presets
  ////////////////////////////////////////////////////////////////////////

  Presentation parse_presentation(std::string_view text) {
    Presentation p;
    bool         have_atoms = false;
    std::size_t  lineno     = 0;
    for (auto const& raw : split_on(text, '\n')) {
      ++lineno;
      std::string_view line = raw;
      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      line = trim(line);
      if (line.empty()) {
        continue;
      }
      auto colon = line.find(':');
      if (colon == std::string_view::npos) {
        throw ParseError("line " + std::to_string(lineno)
                         + ": expected 'key: value'");
      }
      auto key   = trim(line.substr(0, colon));
      auto value = trim(line.substr(colon + 1));
      if (key == "atoms") {
        if (have_atoms) {
          throw ParseError("line " + std::to_string(lineno)
                           + ": atoms declared twice");
        }
        p.atoms    = split_ws(value);
        have_atoms = true;
      } else if (key == "rel") {
        if (!have_atoms) {
          throw ParseError("line " + std::to_string(lineno)
                           + ": relation before atoms");
        }
        auto eq = value.find('=');
        if (eq == std::string_view::npos) {
          throw ParseError("line " + std::to_string(lineno)
                           + ": relation needs '='");
        }
        Relation r;
        for (auto const& t : split_ws(value.substr(0, eq))) {
          if (t != "1") {
            r.lhs += static_cast<char>(require_atom(p, t));
          }
        }
        for (auto const& t : split_ws(value.substr(eq + 1))) {
          if (t != "1") {
            r.rhs += static_cast<char>(require_atom(p, t));
          }
        }
        p.relations.push_back(std::move(r));
      } else if (key == "trust") {
        for (auto const& t : split_ws(value)) {
          if (t == "gcd") {
            p.asserted_gcd_monoid = true;
          } else if (t == "cancellative") {
            p.asserted_cancellative = true;
          } else {
            throw ParseError("line " + std::to_string(lineno)
                             + ": unknown trust flag '" + t + "'");
          }
        }
      } else {
        throw ParseError("line " + std::to_string(lineno) + ": unknown key '"
                         + std::string(key) + "'");
      }
    }
    return p;
  }

  std::string write_presentation(Presentation const& p) {
    std::string out = "atoms:";
    for (auto const& a : p.atoms) {
      out += ' ' + a;
    }
    out += '\n';
    for (auto const& r : p.relations) {
      out += "rel: " + render_relation(p, r) + '\n';
    }
    if (p.asserted_gcd_monoid || p.asserted_cancellative) {
      out += "trust:";
      if (p.asserted_gcd_monoid) {
        out += " gcd";
      }
      if (p.asserted_cancellative) {
        out += " cancellative";
      }
      out += '\n';
    }
    return out;
  }

  namespace {

    std::size_t parse_count(std::string_view s, std::string_view what) {
      std::size_t n = 0;
      if (s.empty()) {
        throw ParseError("missing count in preset '" + std::string(what) + "'");
      }
      for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          throw ParseError("bad count in preset '" + std::string(what) + "'");
        }
        n = 10 * n + static_cast<std::size_t>(c - '0');
        if (n > 1000) {
          throw ParseError("count too large in preset '" + std::string(what)
                           + "'");
        }
      }
      return n;
    }

    std::vector<std::string> letters(std::size_t n) {
      if (n > 26) {
        throw ParseError("presets support at most 26 atoms");
      }
      std::vector<std::string> out;
      for (std::size_t i = 0; i < n; ++i) {
        out.emplace_back(1, static_cast<char>('a' + i));
      }
      return out;
    }

    Word alternating(AtomIndex s, AtomIndex t, std::size_t len) {
      Word w;
      for (std::size_t i = 0; i < len; ++i) {
        w += static_cast<char>(i % 2 == 0 ? s : t);
      }
      return w;
    }

    Presentation raag(std::string_view atom_list, std::string_view edges) {
      Presentation              p;
      std::set<char>            used;
      std::vector<std::string>  pairs;
      for (auto const& e : split_on(edges, ',')) {
        if (e.empty()) {
          continue;
        }
        if (e.size() != 2 || e[0] == e[1]) {
          throw ParseError("raag edges are pairs of distinct letters: '" + e
                           + "'");
        }
        pairs.push_back(e);
        used.insert(e[0]);
        used.insert(e[1]);
      }
      for (char c : atom_list) {
        used.insert(c);
      }
      for (char c : used) {
        if (!std::islower(static_cast<unsigned char>(c))) {
          throw ParseError("raag atoms are lowercase letters");
        }
        p.atoms.emplace_back(1, c);
      }
      for (auto const& e : pairs) {
        auto s = require_atom(p, std::string(1, e[0]));
        auto t = require_atom(p, std::string(1, e[1]));
        p.relations.push_back({alternating(s, t, 2), alternating(t, s, 2)});
      }
      p.asserted_gcd_monoid   = true;
      p.asserted_cancellative = true;
      return p;
    }

  }  // namespace

  bool is_preset_name(std::string_view name) {
    return name.starts_with("free:") || name.starts_with("braid:")
           || name.starts_with("raag:") || name == "raag-abc"
           || name == "affine-A2";
  }

  Presentation preset(std::string_view name) {
    Presentation p;
    if (name.starts_with("free:")) {
      p.atoms = letters(parse_count(name.substr(5), name));
    } else if (name.starts_with("braid:")) {
      auto strands = parse_count(name.substr(6), name);
      if (strands < 2) {
        throw ParseError("braid presets need at least 2 strands");
      }
      p.atoms = letters(strands - 1);
      for (std::size_t i = 0; i < p.atoms.size(); ++i) {
        for (std::size_t j = i + 1; j < p.atoms.size(); ++j) {
          auto s = static_cast<AtomIndex>(i);
          auto t = static_cast<AtomIndex>(j);
          auto m = (j == i + 1) ? 3 : 2;
          p.relations.push_back({alternating(s, t, m), alternating(t, s, m)});
        }
      }
    } else if (name.starts_with("raag:")) {
      auto body  = name.substr(5);
      auto colon = body.find(':');
      if (colon == std::string_view::npos) {
        return raag("", body);
      }
      return raag(body.substr(0, colon), body.substr(colon + 1));
    } else if (name == "raag-abc") {
      return raag("abc", "ab,bc");
    } else if (name == "affine-A2") {
      p.atoms = letters(3);
      p.relations.push_back({alternating(0, 1, 3), alternating(1, 0, 3)});
      p.relations.push_back({alternating(1, 2, 3), alternating(2, 1, 3)});
      p.relations.push_back({alternating(2, 0, 3), alternating(0, 2, 3)});
    } else {
      throw ParseError("unknown preset '" + std::string(name) + "'");
    }
    // Artin-Tits monoids are gcd-monoids.
    p.asserted_gcd_monoid   = true;
    p.asserted_cancellative = true;
    return p;
  }

  Presentation load_presentation(std::string const& source) {
    if (is_preset_name(source)) {
      return preset(source);
    }
    std::ifstream in(source);
    if (!in) {
      throw ParseError("'" + source + "' is neither a preset nor a readable file");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_presentation(buf.str());
  }

}  // namespace mfr
