#include "dot_reader.hpp"

#include <algorithm>
#include <cctype>

namespace dot {

namespace {

enum class Tok { Id, LBrace, RBrace, LBracket, RBracket, Equals, Semi, Comma, Arrow, Dash, End };

struct Token {
  Tok kind;
  std::string text;
  bool quoted = false;
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  Token next() {
    skip();
    if (i_ >= s_.size()) return {Tok::End, ""};
    const char c = s_[i_];
    switch (c) {
      case '{': ++i_; return {Tok::LBrace, "{"};
      case '}': ++i_; return {Tok::RBrace, "}"};
      case '[': ++i_; return {Tok::LBracket, "["};
      case ']': ++i_; return {Tok::RBracket, "]"};
      case '=': ++i_; return {Tok::Equals, "="};
      case ';': ++i_; return {Tok::Semi, ";"};
      case ',': ++i_; return {Tok::Comma, ","};
      case '"': return quoted();
      default: break;
    }
    if (c == '-' && i_ + 1 < s_.size() && (s_[i_ + 1] == '>' || s_[i_ + 1] == '-')) {
      i_ += 2;
      return s_[i_ - 1] == '>' ? Token{Tok::Arrow, "->"} : Token{Tok::Dash, "--"};
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-') {
      const auto start = i_;
      while (i_ < s_.size()) {
        const char d = s_[i_];
        if (!(std::isalnum(static_cast<unsigned char>(d)) || d == '_' || d == '.')) {
          if (d == '-' && i_ == start) {
            ++i_;
            continue;
          }
          break;
        }
        ++i_;
      }
      return {Tok::Id, std::string(s_.substr(start, i_ - start))};
    }
    throw SyntaxError("unexpected character '" + std::string(1, c) + "' at offset " +
                      std::to_string(i_));
  }

 private:
  void skip() {
    while (i_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[i_]))) {
        ++i_;
      } else if (s_.substr(i_, 2) == "//" || s_[i_] == '#') {
        while (i_ < s_.size() && s_[i_] != '\n') ++i_;
      } else if (s_.substr(i_, 2) == "/*") {
        const auto end = s_.find("*/", i_ + 2);
        if (end == std::string_view::npos) throw SyntaxError("unterminated comment");
        i_ = end + 2;
      } else {
        break;
      }
    }
  }

  Token quoted() {
    ++i_;
    std::string out;
    while (i_ < s_.size() && s_[i_] != '"') {
      if (s_[i_] == '\\' && i_ + 1 < s_.size()) {
        const char e = s_[i_ + 1];
        if (e == '"' || e == '\\') {
          out += e;
          i_ += 2;
          continue;
        }
      }
      out += s_[i_++];
    }
    if (i_ >= s_.size()) throw SyntaxError("unterminated string");
    ++i_;
    return {Tok::Id, out, true};
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) { advance(); }

  Graph run() {
    Graph g;
    if (is_keyword("strict")) {
      g.strict = true;
      advance();
    }
    if (is_keyword("digraph")) {
      g.directed = true;
    } else if (!is_keyword("graph")) {
      throw SyntaxError("expected 'graph' or 'digraph'");
    }
    advance();
    if (tok_.kind == Tok::Id) {
      g.name = tok_.text;
      advance();
    }
    expect(Tok::LBrace);
    while (tok_.kind != Tok::RBrace) {
      if (tok_.kind == Tok::End) throw SyntaxError("missing '}'");
      statement(g);
      if (tok_.kind == Tok::Semi) advance();
    }
    advance();
    if (tok_.kind != Tok::End) throw SyntaxError("trailing input after graph");
    return g;
  }

 private:
  bool is_keyword(std::string_view kw) const {
    if (tok_.kind != Tok::Id || tok_.quoted || tok_.text.size() != kw.size()) return false;
    return std::equal(kw.begin(), kw.end(), tok_.text.begin(),
                      [](char a, char b) { return a == std::tolower(static_cast<unsigned char>(b)); });
  }

  void advance() { tok_ = lex_.next(); }

  void expect(Tok kind) {
    if (tok_.kind != kind) throw SyntaxError("unexpected token '" + tok_.text + "'");
    advance();
  }

  std::string id() {
    if (tok_.kind != Tok::Id) throw SyntaxError("expected an id, got '" + tok_.text + "'");
    auto out = tok_.text;
    advance();
    return out;
  }

  Attributes attr_list() {
    Attributes out;
    while (tok_.kind == Tok::LBracket) {
      advance();
      while (tok_.kind != Tok::RBracket) {
        auto key = id();
        expect(Tok::Equals);
        out[key] = id();
        if (tok_.kind == Tok::Comma || tok_.kind == Tok::Semi) advance();
      }
      advance();
    }
    return out;
  }

  static void mention(Graph& g, const std::string& n) {
    if (g.node_attributes.emplace(n, Attributes{}).second) g.nodes.push_back(n);
  }

  void statement(Graph& g) {
    if (tok_.kind == Tok::LBrace || is_keyword("subgraph"))
      throw SyntaxError("subgraphs are not supported");
    if (is_keyword("graph") || is_keyword("node") || is_keyword("edge")) {
      const bool graph_attrs = is_keyword("graph");
      advance();
      auto attrs = attr_list();
      if (graph_attrs) g.graph_attributes.insert(attrs.begin(), attrs.end());
      return;
    }
    auto first = id();
    if (tok_.kind == Tok::Equals) {
      advance();
      g.graph_attributes[first] = id();
      return;
    }
    std::vector<std::string> chain = {first};
    while (tok_.kind == Tok::Arrow || tok_.kind == Tok::Dash) {
      if ((tok_.kind == Tok::Arrow) != g.directed)
        throw SyntaxError("edge operator does not match graph type");
      advance();
      chain.push_back(id());
    }
    auto attrs = attr_list();
    for (const auto& n : chain) mention(g, n);
    if (chain.size() == 1) {
      g.node_attributes[first].insert(attrs.begin(), attrs.end());
      return;
    }
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
      g.edges.push_back({chain[i], chain[i + 1], attrs});
  }

  Lexer lex_;
  Token tok_{Tok::End, ""};
};

}  // namespace

bool Graph::has_edge(const std::string& from, const std::string& to) const {
  return std::any_of(edges.begin(), edges.end(), [&](const Edge& e) {
    return (e.from == from && e.to == to) || (!directed && e.from == to && e.to == from);
  });
}

Graph parse(std::string_view text) { return Parser(text).run(); }

}  // namespace dot
