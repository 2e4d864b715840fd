#include <cctype>

#include "idealgraph/error.hpp"
#include "idealgraph/lpa.hpp"

namespace idealgraph {

namespace {

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(' || c == ')' || c == '[' ||
         c == ']';
}

bool is_number(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ == text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  std::string_view name() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    if (start == pos_) fail("expected a name");
    return text_.substr(start, pos_ - start);
  }
  std::size_t mark() const { return pos_; }
  void reset(std::size_t p) { pos_ = p; }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::parse_error, what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Generator lookup(const Graph& g, std::string_view name, bool starred) {
  if (!starred) {
    if (auto v = g.find_vertex(name)) return Generator::of_vertex(*v);
  }
  if (auto e = g.find_edge(name)) return starred ? Generator::of_star(*e) : Generator::of_edge(*e);
  throw Error(Errc::unknown_generator, "unknown generator '" + std::string(name) + (starred ? "!'" : "'"));
}

Word parse_factors(const Graph& g, Lexer& lex, std::string_view first) {
  Word out;
  std::string_view name = first;
  for (;;) {
    bool starred = lex.accept('!');
    out.push_back(lookup(g, name, starred));
    if (!lex.accept('.')) break;
    name = lex.name();
  }
  return out;
}

}  // namespace

std::string format_word(const Graph& g, const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '.';
    const auto& x = w[i];
    if (x.kind == GeneratorKind::vertex) {
      out += g.name(x.vertex);
    } else {
      out += g.edge_name(x.edge);
      if (x.kind == GeneratorKind::star) out += '!';
    }
  }
  return out;
}

Word parse_word(const Graph& g, std::string_view text) {
  Lexer lex(text);
  Word w = parse_factors(g, lex, lex.name());
  if (!lex.done()) lex.fail("unexpected character");
  return w;
}

RawExpression LeavittAlgebra::parse_raw(std::string_view text) const {
  Lexer lex(text);
  RawExpression out;
  bool first = true;
  while (first || !lex.done()) {
    bool negative = false;
    if (lex.accept('-'))
      negative = true;
    else if (!first && !lex.accept('+'))
      lex.fail("expected + or -");
    first = false;

    Scalar coeff = scalar(1);
    std::optional<Word> word;
    std::size_t here = lex.mark();
    std::string_view head = lex.name();
    if (is_number(head) && (lex.peek() == '*' || lex.peek() == '/' || !graph_.find_vertex(head))) {
      std::string number(head);
      if (lex.accept('/')) number += "/" + std::string(lex.name());
      coeff = Scalar::parse(field_, number);
      if (lex.accept('*')) {
        word = parse_factors(graph_, lex, lex.name());
      } else if (coeff.is_zero()) {
        continue;
      } else {
        lex.reset(here);
        lex.fail("bare scalar other than 0");
      }
    } else {
      word = parse_factors(graph_, lex, head);
    }
    if (negative) coeff = -coeff;
    out.push_back(RawTerm{coeff, std::move(*word)});
  }
  return out;
}

LpaElement LeavittAlgebra::parse(std::string_view text) const { return normal_form(parse_raw(text)); }

std::string LeavittAlgebra::format(const Monomial& m) const {
  if (m.alpha.is_vertex() && m.beta.is_vertex()) return graph_.name(m.alpha.source());
  std::string out;
  for (const auto& e : m.alpha.edges()) {
    if (!out.empty()) out += '.';
    out += graph_.edge_name(e);
  }
  auto beta = m.beta.edges();
  for (auto it = beta.rbegin(); it != beta.rend(); ++it) {
    if (!out.empty()) out += '.';
    out += graph_.edge_name(*it) + "!";
  }
  return out;
}

std::string LeavittAlgebra::format(const LpaElement& x) const {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : x.terms()) {
    bool negative = field_.is_rational() ? sgn(c.value()) < 0 : c.is_minus_one();
    Scalar magnitude = negative ? -c : c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (!magnitude.is_one()) out += magnitude.to_string() + " * ";
    out += format(m);
  }
  return out;
}

}  // namespace idealgraph
