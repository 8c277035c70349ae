#include "rxmeet/parse.hpp"

#include <cctype>

namespace rxmeet {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr run() {
    NodePtr r = parse_regex();
    skip_ws();
    if (!at_end()) {
      if (peek() == '|')
        fail("alternation must be bracketed");
      fail("unexpected character");
    }
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, pos_);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool starts_atom() {
    skip_ws();
    if (at_end()) return false;
    char c = peek();
    return c == '[' || c == '(' || c == '#' ||
           letter_from_char(c).has_value();
  }

  // regex := factor+
  NodePtr parse_regex() {
    std::vector<NodePtr> factors;
    if (!starts_atom()) fail("expected a regexp");
    while (starts_atom()) factors.push_back(parse_factor());
    return concat(std::move(factors));
  }

  // factor := atom count? ('+' | '*')*
  // count := digits ['+']; "y3" is yyy and "y3+" is the open run yy(y+),
  // i.e. at least three repetitions of the atom.
  NodePtr parse_factor() {
    NodePtr a = parse_atom();
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t start = pos_;
      long n = 0;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        n = n * 10 + (peek() - '0');
        if (n > 1'000'000L) {
          pos_ = start;
          fail("run count out of range");
        }
        ++pos_;
      }
      if (n == 0) {
        pos_ = start;
        fail("run count must be positive");
      }
      bool open = !at_end() && peek() == '+';
      if (open) ++pos_;
      long closed_copies = open ? n - 1 : n;
      std::vector<NodePtr> parts;
      parts.reserve(static_cast<std::size_t>(closed_copies) + (open ? 1 : 0));
      for (long i = 0; i < closed_copies; ++i) parts.push_back(a);
      if (open) parts.push_back(plus(a));
      a = concat(std::move(parts));
    }
    for (;;) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c == '+') {
        a = plus(std::move(a));
        ++pos_;
      } else if (c == '*') {
        a = star(std::move(a));
        ++pos_;
      } else {
        break;
      }
    }
    return a;
  }

  NodePtr parse_atom() {
    skip_ws();
    if (at_end()) fail("expected a letter or group");
    char c = peek();
    if (c == '[' || c == '(') {
      char close = c == '[' ? ']' : ')';
      std::size_t open_pos = pos_;
      ++pos_;
      std::vector<NodePtr> branches;
      branches.push_back(parse_regex());
      skip_ws();
      while (!at_end() && peek() == '|') {
        ++pos_;
        branches.push_back(parse_regex());
        skip_ws();
      }
      if (at_end() || peek() != close) {
        pos_ = open_pos;
        fail(std::string("unbalanced '") + c + "'");
      }
      ++pos_;
      return alt(std::move(branches));
    }
    if (c == '#') {
      std::size_t start = pos_++;
      std::size_t digits = 0;
      long value = 0;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        value = value * 10 + (peek() - '0');
        if (value > 1'000'000'000L) {
          pos_ = start;
          fail("letter id out of range");
        }
        ++digits;
        ++pos_;
      }
      if (digits == 0) {
        pos_ = start;
        fail("'#' must be followed by digits");
      }
      return leaf(static_cast<LetterId>(value));
    }
    if (auto id = letter_from_char(c)) {
      ++pos_;
      return leaf(*id);
    }
    fail("unexpected character");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void render_into(const NodePtr& n, std::string& out) {
  switch (n->kind) {
    case NodeKind::Leaf:
      out += letter_display(n->letter);
      return;
    case NodeKind::Concat: {
      // Maximal letter runs print with a count ("yyy" -> y3, "yy y+" -> y3+);
      // adjacent pointer-identical alternation groups likewise ([x|y]3).
      const std::vector<NodePtr>& ks = n->kids;
      std::size_t i = 0;
      while (i < ks.size()) {
        const NodePtr& k = ks[i];
        if (k->kind == NodeKind::Leaf && letter_is_printable(k->letter)) {
          const LetterId c = k->letter;
          std::size_t j = i;
          while (j < ks.size() && ks[j]->kind == NodeKind::Leaf &&
                 ks[j]->letter == c)
            ++j;
          std::size_t m = j - i;
          const bool open = j < ks.size() && ks[j]->kind == NodeKind::Plus &&
                            ks[j]->kids[0]->kind == NodeKind::Leaf &&
                            ks[j]->kids[0]->letter == c;
          if (open) {
            ++j;
            ++m;
          }
          if (m >= 2) {
            out += letter_display(c);
            out += std::to_string(m);
            if (open) out += '+';
          } else {
            out += letter_display(c);
          }
          i = j;
          continue;
        }
        if (k->kind == NodeKind::Alt) {
          std::size_t j = i;
          while (j < ks.size() && ks[j] == k) ++j;  // shared-subtree repeats
          render_into(k, out);
          if (j - i >= 2) out += std::to_string(j - i);
          i = j;
          continue;
        }
        render_into(k, out);
        ++i;
      }
      return;
    }
    case NodeKind::Alt: {
      out += '[';
      bool first = true;
      for (const NodePtr& k : n->kids) {
        if (!first) out += '|';
        first = false;
        render_into(k, out);
      }
      out += ']';
      return;
    }
    case NodeKind::Plus:
    case NodeKind::Star: {
      const NodePtr& kid = n->kids[0];
      if (kid->kind == NodeKind::Concat) {
        out += '(';
        render_into(kid, out);
        out += ')';
      } else {
        render_into(kid, out);  // leaves, groups and postfix chains self-delimit
      }
      out += n->kind == NodeKind::Plus ? '+' : '*';
      return;
    }
  }
}

}  // namespace

NodePtr parse(std::string_view text) { return Parser(text).run(); }

std::string render(const NodePtr& n) {
  std::string out;
  render_into(n, out);
  return out;
}

}  // namespace rxmeet
