#include "gamecrit/dsl.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

#include "gamecrit/graph6.hpp"

namespace gamecrit {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Graph parse() {
    Graph g = expr();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("graph spec error at position " +
                                std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool try_keyword(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  int number() {
    skip_space();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a number");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  Graph expr() {
    skip_space();
    if (try_keyword("cone")) {
      expect('(');
      Graph inner = expr();
      expect(')');
      return cone(inner);
    }
    if (try_keyword("union")) {
      expect('(');
      Graph a = expr();
      expect(',');
      Graph b = expr();
      expect(')');
      return disjoint_union(a, b);
    }
    if (try_keyword("glue")) {
      expect('(');
      Graph a = expr();
      expect(',');
      Graph b = expr();
      expect(')');
      return identify_universal_pair(a, b);
    }
    if (try_keyword("C4plus")) return c4_plus();
    if (try_keyword("fig1")) return fig1_graph();
    if (try_keyword("KmM")) return complete_bipartite_minus_matching(number());
    if (try_keyword("K")) {
      int m = number();
      skip_space();
      // "K<m>,<n>" only when a digit follows the comma; otherwise the comma
      // belongs to an enclosing union(...) or glue(...).
      if (pos_ + 1 < text_.size() && text_[pos_] == ',') {
        size_t after = pos_ + 1;
        while (after < text_.size() && std::isspace(static_cast<unsigned char>(text_[after])))
          ++after;
        if (after < text_.size() && std::isdigit(static_cast<unsigned char>(text_[after]))) {
          ++pos_;
          return complete_bipartite(m, number());
        }
      }
      return complete(m);
    }
    if (try_keyword("P")) return path(number());
    if (try_keyword("C")) return cycle(number());
    fail("expected a graph expression");
  }

  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace

Graph parse_graph_spec(std::string_view text) { return Parser(text).parse(); }

Graph parse_graph_argument(std::string_view text) {
  try {
    return parse_graph_spec(text);
  } catch (const std::invalid_argument& dsl_error) {
    try {
      return parse_graph6(text);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument(std::string("not a graph expression or graph6 record (") +
                                  dsl_error.what() + ")");
    }
  }
}

}  // namespace gamecrit
