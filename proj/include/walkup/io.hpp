#pragma once

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "walkup/complex.hpp"
#include "walkup/constructor.hpp"

namespace walkup {

struct parse_error : std::runtime_error {
  parse_error(std::size_t line, std::size_t column, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line(line),
        column(column) {}
  std::size_t line;
  std::size_t column;  // 1-based
};

namespace detail {

struct Token {
  std::string_view text;
  std::size_t column;
};

inline std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

inline bool is_comment_or_blank(std::string_view line) {
  auto toks = tokenize(line);
  return toks.empty() || toks.front().text.front() == '#';
}

inline long long parse_int(const Token& t, std::size_t line_no, const char* what) {
  long long v = 0;
  auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc() || p != t.text.data() + t.text.size() || v < 0)
    throw parse_error(line_no, t.column, std::string("expected a non-negative integer ") + what + ", got '" +
                                             std::string(t.text) + "'");
  return v;
}

template <class Fn>
void for_each_content_line(std::istream& in, Fn&& fn) {
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (is_comment_or_blank(line)) continue;
    fn(no, tokenize(line));
  }
}

}  // namespace detail

// One facet per line, vertex ids separated by spaces; '#' starts a comment line.
inline Complex read_facets(std::istream& in) {
  std::vector<Face> facets;
  detail::for_each_content_line(in, [&](std::size_t no, const std::vector<detail::Token>& toks) {
    Face f;
    for (const auto& t : toks) {
      auto v = detail::parse_int(t, no, "vertex id");
      if (v > 0x7fffffff) throw parse_error(no, t.column, "vertex id too large");
      f.push_back(static_cast<Vertex>(v));
    }
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) throw parse_error(no, 1, "repeated vertex in facet");
    facets.push_back(std::move(f));
  });
  if (facets.empty()) throw parse_error(1, 1, "no facets");
  return Complex(std::move(facets));
}

inline Complex read_facets(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_facets(in);
}

// Canonical form: facets in canonical order, one per line.
inline void write_facets(std::ostream& out, const Complex& k) {
  for (const auto& f : k.facets()) {
    for (std::size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << f[i];
    out << '\n';
  }
}

inline std::string facets_to_string(const Complex& k) {
  std::ostringstream out;
  write_facets(out, k);
  return out.str();
}

// Header "d n |V(G)|", then "e u v" edge lines, then n lines "t i v1 v2 ...".
inline TreeFamily read_tree_family(std::istream& in) {
  TreeFamily f;
  bool have_header = false;
  long long n = 0, nv = 0;
  std::vector<bool> seen_tree;
  detail::for_each_content_line(in, [&](std::size_t no, const std::vector<detail::Token>& toks) {
    if (!have_header) {
      if (toks.size() != 3) throw parse_error(no, 1, "header must be 'd n |V(G)|'");
      f.d = static_cast<int>(detail::parse_int(toks[0], no, "d"));
      n = detail::parse_int(toks[1], no, "n");
      nv = detail::parse_int(toks[2], no, "|V(G)|");
      f.host = HostGraph(static_cast<std::size_t>(nv));
      f.trees.assign(static_cast<std::size_t>(n), {});
      seen_tree.assign(static_cast<std::size_t>(n), false);
      have_header = true;
      return;
    }
    if (toks[0].text == "e") {
      if (toks.size() != 3) throw parse_error(no, toks[0].column, "edge line must be 'e u v'");
      auto u = detail::parse_int(toks[1], no, "vertex");
      auto v = detail::parse_int(toks[2], no, "vertex");
      if (u >= nv) throw parse_error(no, toks[1].column, "vertex out of range");
      if (v >= nv) throw parse_error(no, toks[2].column, "vertex out of range");
      if (u == v) throw parse_error(no, toks[2].column, "loop edge");
      f.host.add_edge(static_cast<int>(u), static_cast<int>(v));
    } else if (toks[0].text == "t") {
      if (toks.size() < 2) throw parse_error(no, toks[0].column, "tree line must be 't i v1 v2 ...'");
      auto i = detail::parse_int(toks[1], no, "tree index");
      if (i >= n) throw parse_error(no, toks[1].column, "tree index out of range");
      if (seen_tree[i]) throw parse_error(no, toks[1].column, "tree listed twice");
      seen_tree[i] = true;
      std::vector<int> t;
      for (std::size_t k = 2; k < toks.size(); ++k) {
        auto v = detail::parse_int(toks[k], no, "vertex");
        if (v >= nv) throw parse_error(no, toks[k].column, "vertex out of range");
        t.push_back(static_cast<int>(v));
      }
      std::sort(t.begin(), t.end());
      f.trees[i] = std::move(t);
    } else {
      throw parse_error(no, toks[0].column, "expected 'e' or 't' line");
    }
  });
  if (!have_header) throw parse_error(1, 1, "missing header");
  for (long long i = 0; i < n; ++i)
    if (!seen_tree[i]) throw parse_error(1, 1, "tree " + std::to_string(i) + " missing");
  f.host.finalize();
  return f;
}

inline void write_tree_family(std::ostream& out, const TreeFamily& f) {
  out << f.d << ' ' << f.trees.size() << ' ' << f.host.size() << '\n';
  for (auto [u, v] : f.host.edges()) out << "e " << u << ' ' << v << '\n';
  for (std::size_t i = 0; i < f.trees.size(); ++i) {
    out << "t " << i;
    for (int v : f.trees[i]) out << ' ' << v;
    out << '\n';
  }
}

// A labelled vertex token: class name followed by its index, e.g. "b12".
inline OrbitPresentation::Label parse_label(std::string_view tok, const std::vector<std::string>& classes, int m) {
  std::size_t split = tok.size();
  while (split > 0 && tok[split - 1] >= '0' && tok[split - 1] <= '9') --split;
  if (split == 0 || split == tok.size()) throw std::domain_error("malformed label '" + std::string(tok) + "'");
  std::string_view cls = tok.substr(0, split);
  auto it = std::find(classes.begin(), classes.end(), cls);
  if (it == classes.end()) throw std::domain_error("unknown label class in '" + std::string(tok) + "'");
  int idx = 0;
  std::from_chars(tok.data() + split, tok.data() + tok.size(), idx);
  if (idx >= m) throw std::domain_error("label index out of range in '" + std::string(tok) + "'");
  return {static_cast<int>(it - classes.begin()), idx};
}

// Header "m class1 class2 ...", then one basic facet per line as labelled
// tokens, e.g. "a0 a1 a2 b0 b1 c0".
inline OrbitPresentation read_orbit_presentation(std::istream& in) {
  OrbitPresentation p;
  bool have_header = false;
  detail::for_each_content_line(in, [&](std::size_t no, const std::vector<detail::Token>& toks) {
    if (!have_header) {
      if (toks.size() < 2) throw parse_error(no, 1, "header must be 'm class...'");
      p.m = static_cast<int>(detail::parse_int(toks[0], no, "group order"));
      if (p.m < 1) throw parse_error(no, toks[0].column, "group order must be positive");
      for (std::size_t i = 1; i < toks.size(); ++i) p.classes.emplace_back(toks[i].text);
      have_header = true;
      return;
    }
    std::vector<OrbitPresentation::Label> facet;
    for (const auto& t : toks) {
      try {
        facet.push_back(parse_label(t.text, p.classes, p.m));
      } catch (const std::domain_error& e) {
        throw parse_error(no, t.column, e.what());
      }
    }
    p.basic.push_back(std::move(facet));
  });
  if (!have_header) throw parse_error(1, 1, "missing header");
  return p;
}

inline void write_orbit_presentation(std::ostream& out, const OrbitPresentation& p) {
  out << p.m;
  for (const auto& c : p.classes) out << ' ' << c;
  out << '\n';
  for (std::size_t b = 0; b < p.basic.size(); ++b) {
    if (b < p.names.size()) out << "# " << p.names[b] << '\n';
    for (std::size_t i = 0; i < p.basic[b].size(); ++i)
      out << (i ? " " : "") << p.classes[p.basic[b][i].cls] << p.basic[b][i].index;
    out << '\n';
  }
}

}  // namespace walkup
