#include "gnorm/io.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "gnorm/error.hpp"

namespace gnorm {
namespace {

struct Token {
  std::string text;
  int line = 0;
  int column = 0;
  bool eof() const { return text.empty(); }
};

// Whitespace-separated tokens with line/column tracking; '#' comments run
// to end of line. Also supports raw rest-of-line reads for label text.
class Lexer {
 public:
  explicit Lexer(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    src_ = buf.str();
  }

  Token next() {
    skip_blanks_and_comments();
    Token t;
    t.line = line_;
    t.column = col_;
    while (pos_ < src_.size() && !std::isspace(uchar(src_[pos_])) && src_[pos_] != '#') {
      t.text.push_back(src_[pos_]);
      advance();
    }
    return t;
  }

  Token peek() {
    const std::size_t pos = pos_;
    const int line = line_, col = col_;
    Token t = next();
    pos_ = pos;
    line_ = line;
    col_ = col;
    return t;
  }

  // Rest of the current line (after skipping horizontal space), trimmed,
  // with any '#' comment removed. Leaves the cursor past the newline.
  std::string rest_of_line() {
    while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t')) advance();
    std::string out;
    while (pos_ < src_.size() && src_[pos_] != '\n' && src_[pos_] != '#') {
      out.push_back(src_[pos_]);
      advance();
    }
    if (pos_ < src_.size() && src_[pos_] == '#') {
      while (pos_ < src_.size() && src_[pos_] != '\n') advance();
    }
    if (pos_ < src_.size()) advance();  // consume the newline
    while (!out.empty() && std::isspace(uchar(out.back()))) out.pop_back();
    return out;
  }

  int line() const { return line_; }
  int column() const { return col_; }

  // True when the next token (if any) starts on a line beyond `line`.
  bool next_is_past_line(int line) {
    Token t = peek();
    return t.eof() || t.line > line;
  }

 private:
  static unsigned char uchar(char c) { return static_cast<unsigned char>(c); }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_blanks_and_comments() {
    while (pos_ < src_.size()) {
      if (std::isspace(uchar(src_[pos_]))) {
        advance();
      } else if (src_[pos_] == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  std::string src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

int parse_int(const Token& t, const char* what) {
  if (t.eof()) {
    throw parse_error(std::string("unexpected end of input, expected ") + what, t.line, t.column);
  }
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(t.text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != t.text.size()) {
    throw parse_error(std::string("expected ") + what + ", got '" + t.text + "'", t.line,
                      t.column);
  }
  if (value < -1000000000L || value > 1000000000L) {
    throw parse_error(std::string(what) + " out of range: '" + t.text + "'", t.line, t.column);
  }
  return int(value);
}

}  // namespace

Perm parse_cycles(const std::string& text, int degree, int line_for_errors) {
  if (degree < 1) throw group_error(errc::bad_parameter, "degree must be positive");
  Perm result = identity_perm(degree);
  std::size_t i = 0;
  const auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  if (i >= text.size()) {
    throw parse_error("empty generator line", line_for_errors, int(i) + 1);
  }
  while (i < text.size()) {
    if (text[i] != '(') {
      throw parse_error(std::string("expected '(', got '") + text[i] + "'", line_for_errors,
                        int(i) + 1);
    }
    ++i;
    std::vector<int> cycle;
    for (;;) {
      skip_space();
      if (i >= text.size()) {
        throw parse_error("unterminated cycle", line_for_errors, int(i) + 1);
      }
      if (text[i] == ')') {
        ++i;
        break;
      }
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start) {
        throw parse_error(std::string("expected point or ')', got '") + text[i] + "'",
                          line_for_errors, int(i) + 1);
      }
      const int pt = std::stoi(text.substr(start, i - start));
      if (pt >= degree) {
        throw parse_error("point " + std::to_string(pt) + " out of range for degree " +
                              std::to_string(degree),
                          line_for_errors, int(start) + 1);
      }
      for (int prev : cycle) {
        if (prev == pt) {
          throw parse_error("point " + std::to_string(pt) + " repeated within a cycle",
                            line_for_errors, int(start) + 1);
        }
      }
      cycle.push_back(pt);
    }
    if (cycle.size() == 1) {
      throw parse_error("cycle of length 1 is not meaningful; use () for the identity",
                        line_for_errors, int(i));
    }
    if (!cycle.empty()) {
      Perm step = identity_perm(degree);
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        step[cycle[k]] = cycle[(k + 1) % cycle.size()];
      }
      result = compose(result, step);
    }
    skip_space();
  }
  return result;
}

FiniteGroup read_cayley(std::istream& in, int order_cap) {
  Lexer lex(in);
  Token header = lex.next();
  if (header.text != "cayley") {
    throw parse_error("expected 'cayley' header, got '" + header.text + "'", header.line,
                      header.column);
  }
  const int order = parse_int(lex.next(), "group order");
  if (order < 1) {
    throw parse_error("group order must be positive, got " + std::to_string(order), header.line,
                      header.column);
  }
  if (order > order_cap) {
    throw group_error(errc::order_cap_exceeded,
                      "table order " + std::to_string(order) + " exceeds cap " +
                          std::to_string(order_cap));
  }
  std::vector<element_t> flat;
  flat.reserve(std::size_t(order) * order);
  for (std::size_t k = 0; k < std::size_t(order) * order; ++k) {
    Token t = lex.next();
    const int v = parse_int(t, "table entry");
    if (v < 0 || v >= order) {
      throw parse_error("table entry " + std::to_string(v) + " out of range [0, " +
                            std::to_string(order) + ")",
                        t.line, t.column);
    }
    flat.push_back(element_t(v));
  }
  std::vector<std::string> labels;
  bool any_label = false;
  for (;;) {
    Token t = lex.next();
    if (t.eof()) break;
    if (t.text != "label") {
      throw parse_error("expected 'label' or end of input, got '" + t.text + "'", t.line,
                        t.column);
    }
    Token idx_tok = lex.next();
    const int idx = parse_int(idx_tok, "label index");
    if (idx < 0 || idx >= order) {
      throw parse_error("label index " + std::to_string(idx) + " out of range", idx_tok.line,
                        idx_tok.column);
    }
    const std::string text = lex.rest_of_line();
    if (text.empty()) {
      throw parse_error("label text is empty", idx_tok.line, idx_tok.column);
    }
    if (!any_label) {
      labels.assign(std::size_t(order), std::string());
      any_label = true;
    }
    labels[std::size_t(idx)] = text;
  }
  if (any_label) {
    for (int i = 0; i < order; ++i) {
      if (labels[std::size_t(i)].empty()) labels[std::size_t(i)] = std::to_string(i);
    }
  }
  FiniteGroup g = FiniteGroup::from_flat_table(order, flat);
  if (any_label) g.set_labels(std::move(labels));
  return g;
}

FiniteGroup read_permutation_group(std::istream& in, int order_cap) {
  Lexer lex(in);
  Token header = lex.next();
  if (header.text != "perm") {
    throw parse_error("expected 'perm' header, got '" + header.text + "'", header.line,
                      header.column);
  }
  const int degree = parse_int(lex.next(), "degree");
  if (degree < 1) {
    throw parse_error("degree must be positive, got " + std::to_string(degree), header.line,
                      header.column);
  }
  std::vector<Perm> gens;
  for (;;) {
    Token probe = lex.peek();
    if (probe.eof()) break;
    const int line = probe.line;
    // Collect everything on this physical line: cycles may contain spaces,
    // so gather tokens until the line number changes.
    std::string text;
    while (!lex.next_is_past_line(line)) {
      Token t = lex.next();
      if (!text.empty()) text.push_back(' ');
      text += t.text;
    }
    gens.push_back(parse_cycles(text, degree, line));
  }
  if (gens.empty()) {
    throw parse_error("no generators given", lex.line(), lex.column());
  }
  return FiniteGroup::from_permutation_generators(degree, gens, order_cap);
}

FiniteGroup read_group(std::istream& in, int order_cap) {
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  {
    std::istringstream sniff(text);
    Lexer lex(sniff);
    Token first = lex.peek();
    std::istringstream replay(text);
    if (first.text == "cayley") return read_cayley(replay, order_cap);
    if (first.text == "perm") return read_permutation_group(replay, order_cap);
    throw parse_error("unrecognized header '" + first.text + "' (expected 'cayley' or 'perm')",
                      first.line, first.column);
  }
}

FiniteGroup read_group_file(const std::string& path, int order_cap) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw group_error(errc::io_failure, "cannot open '" + path + "' for reading");
  }
  return read_group(in, order_cap);
}

void write_cayley(std::ostream& out, const FiniteGroup& g) {
  out << "cayley " << g.order() << "\n";
  for (element_t i = 0; i < g.order(); ++i) {
    for (element_t j = 0; j < g.order(); ++j) {
      if (j) out << ' ';
      out << g.mul(i, j);
    }
    out << "\n";
  }
  if (g.has_labels()) {
    for (element_t i = 0; i < g.order(); ++i) {
      out << "label " << i << ' ' << g.label(i) << "\n";
    }
  }
}

}  // namespace gnorm
