#include "mfr/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mfr/divisibility.hpp"

namespace mfr {

  char const* to_string(NodeRole r) noexcept {
    switch (r) {
      case NodeRole::boundary: return "boundary";
      case NodeRole::interior: return "interior";
      case NodeRole::spring: return "spring";
      case NodeRole::well: return "well";
      case NodeRole::four_prong: return "four-prong";
    }
    return "?";
  }

  std::size_t DiagramGraph::count(NodeRole r) const {
    return static_cast<std::size_t>(std::count_if(
        nodes.begin(), nodes.end(), [r](auto const& n) { return n.role == r; }));
  }

  ////////////////////////////////////////////////////////////////////////
  // Universal reduction diagram
  ////////////////////////////////////////////////////////////////////////

  namespace {

    bool complements_coprime(Monoid const& m, ScheduledStep const& s) {
      auto i = s.level;
      if (i == 1 || s.x.is_identity()) {
        return true;
      }
      auto const& bi = s.after.at(i);
      return (i % 2 == 0 ? right_gcd(m, bi, s.x_prime)
                         : left_gcd(m, bi, s.x_prime))
          .is_identity();
    }

  }  // namespace

  DiagramGraph emit_universal_diagram(Monoid const& m, UniversalRun const& run) {
    DiagramGraph g;
    auto const&  a = run.trace.initial;
    auto const   n = a.depth();
    // f[k] is the frontier vertex between entries k and k+1.
    std::vector<std::string> f;
    for (std::size_t k = 0; k <= n; ++k) {
      f.push_back("b" + std::to_string(k));
    }
    if (n > 0) {
      f[n] = f[0];
    }
    g.base_point = f[0];
    for (std::size_t k = 0; k < std::max<std::size_t>(n, 1); ++k) {
      g.nodes.push_back({f[k], NodeRole::boundary});
      g.boundary.push_back(f[k]);
    }
    for (std::size_t k = 1; k <= n; ++k) {
      if (k % 2 == 1) {
        g.edges.push_back({f[k - 1], f[k], a.at(k)});
      } else {
        g.edges.push_back({f[k], f[k - 1], a.at(k)});
      }
    }

    std::size_t t = 0;
    for (auto const& s : run.schedule) {
      ++t;
      auto const i = s.level;
      if (!rule_equalities_hold(m, s.before, i, s.x, s.x_prime, s.after)
          || !complements_coprime(m, s)) {
        throw InconsistentTrace("tile " + std::to_string(t) + " (level "
                                + std::to_string(i) + ") does not commute");
      }
      auto const& b = s.after;
      auto        w = "t" + std::to_string(t) + "w";
      g.nodes.push_back({w, NodeRole::interior});
      if (i == 1) {
        g.edges.push_back({f[0], w, b.at(1)});
        g.edges.push_back({f[2], w, b.at(2)});
        g.edges.push_back({w, f[1], s.x});
        f[1] = w;
      } else {
        auto u = "t" + std::to_string(t) + "u";
        g.nodes.push_back({u, NodeRole::interior});
        if (i % 2 == 0) {
          g.edges.push_back({f[i], w, s.x});
          g.edges.push_back({w, u, b.at(i)});
          g.edges.push_back({f[i - 1], u, s.x_prime});
          g.edges.push_back({w, f[i + 1], b.at(i + 1)});
        } else {
          g.edges.push_back({f[i + 1], w, b.at(i + 1)});
          g.edges.push_back({w, f[i], s.x});
          g.edges.push_back({u, f[i - 1], s.x_prime});
          g.edges.push_back({u, w, b.at(i)});
        }
        f[i - 1] = u;
        f[i]     = w;
      }
    }
    g.tiles = t;
    return g;
  }

  DiagramGraph emit_universal_diagram(Monoid const& m, Multifraction const& a) {
    return emit_universal_diagram(m, reduce_universal(m, a));
  }

  ////////////////////////////////////////////////////////////////////////
  // Universal shapes
  ////////////////////////////////////////////////////////////////////////

  DiagramGraph gamma_shape(std::size_t n) {
    if (n < 4 || n % 2 != 0) {
      throw BadDepth("universal shapes need an even depth of at least 4, got "
                     + std::to_string(n));
    }
    DiagramGraph g;
    g.base_point = "star";
    // Boundary vertices alternate source (even position) and sink (odd
    // position); that polarity is their role once they become interior.
    std::map<std::string, NodeRole> polarity;
    std::map<std::string, std::size_t> index;
    auto add_node = [&](std::string id, NodeRole role) {
      index[id] = g.nodes.size();
      g.nodes.push_back({std::move(id), role});
    };
    auto add_edge = [&](std::string const& x, std::string const& y) {
      // Oriented from spring to well.
      if (polarity.at(x) == NodeRole::spring) {
        g.edges.push_back({x, y, std::nullopt});
      } else {
        g.edges.push_back({y, x, std::nullopt});
      }
    };
    auto set_boundary = [&](std::vector<std::string> b) {
      for (std::size_t k = 0; k < b.size(); ++k) {
        polarity[b[k]] = k % 2 == 0 ? NodeRole::spring : NodeRole::well;
      }
      g.boundary = std::move(b);
    };

    add_node("star", NodeRole::boundary);
    std::vector<std::string> first{"star"};
    for (int k = 1; k <= 3; ++k) {
      auto id = "g4o" + std::to_string(k);
      add_node(id, NodeRole::boundary);
      first.push_back(id);
    }
    set_boundary(first);
    for (std::size_t k = 0; k < 4; ++k) {
      add_edge(first[k], first[(k + 1) % 4]);
    }
    add_node("g4c1", NodeRole::four_prong);
    for (auto const& v : first) {
      g.edges.push_back({"g4c1", v, std::nullopt});
    }
    g.tiles = 1;

    for (std::size_t d = 6; d <= n; d += 2) {
      auto const tag = "g" + std::to_string(d);
      // u[0..d-2] walks the old boundary and returns to the base point.
      auto u = g.boundary;
      u.push_back(g.base_point);
      std::vector<std::string> o;
      for (std::size_t k = 0; k <= d - 2; ++k) {
        o.push_back(tag + "o" + std::to_string(k));
        add_node(o.back(), NodeRole::boundary);
      }
      std::vector<std::string> outer{g.base_point};
      outer.insert(outer.end(), o.begin(), o.end());
      auto old_polarity = polarity;
      for (std::size_t k = 1; k + 1 < u.size(); ++k) {
        g.nodes[index.at(u[k])].role = old_polarity.at(u[k]);
      }
      set_boundary(outer);
      for (std::size_t k = 0; k <= d - 2; ++k) {
        add_edge(u[k], o[k]);
      }
      for (std::size_t k = 1; k <= d - 2; ++k) {
        add_edge(o[k - 1], o[k]);
        auto c = tag + "c" + std::to_string(k);
        add_node(c, NodeRole::four_prong);
        for (auto const* v : {&u[k - 1], &u[k], &o[k], &o[k - 1]}) {
          g.edges.push_back({c, *v, std::nullopt});
        }
        ++g.tiles;
      }
    }
    return g;
  }

  ////////////////////////////////////////////////////////////////////////
  // DOT
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::string quoted(std::string const& s) {
      std::string out = "\"";
      for (char c : s) {
        if (c == '"' || c == '\\') {
          out += '\\';
        }
        out += c;
      }
      return out + '"';
    }
  }  // namespace

  std::string render_dot(DiagramGraph const& g, Monoid const* m) {
    std::string out = "digraph mfr {\n";
    out += "  rankdir=LR;\n";
    out += "  node [shape=circle, label=\"\", width=0.15];\n";
    auto base = g.base_point.empty() ? std::string("b0") : g.base_point;
    bool base_listed = false;
    for (auto const& n : g.nodes) {
      out += "  " + quoted(n.id) + " [comment=" + quoted(to_string(n.role));
      if (n.id == base) {
        out += ", shape=doublecircle, xlabel=\"*\"";
        base_listed = true;
      } else if (n.role == NodeRole::four_prong) {
        out += ", shape=square";
      } else if (n.role == NodeRole::spring || n.role == NodeRole::well) {
        out += ", style=filled";
      }
      out += "];\n";
    }
    if (!base_listed) {
      out += "  " + quoted(base)
             + " [comment=\"boundary\", shape=doublecircle, xlabel=\"*\"];\n";
    }
    std::set<std::string> centers;
    for (auto const& n : g.nodes) {
      if (n.role == NodeRole::four_prong) {
        centers.insert(n.id);
      }
    }
    for (auto const& e : g.edges) {
      out += "  " + quoted(e.from) + " -> " + quoted(e.to);
      if (centers.count(e.from)) {
        out += " [dir=none, style=dotted]";
      } else if (m) {
        out += " [label=" + quoted(m->format(*e.label)) + "]";
      }
      out += ";\n";
    }
    out += "}\n";
    return out;
  }

}  // namespace mfr
