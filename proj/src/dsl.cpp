#include "ampcal/dsl.hpp"

#include <cctype>
#include <cstdlib>
#include <optional>
#include <span>
#include <vector>

#include "ampcal/error.hpp"

namespace ampcal {

namespace {

enum class Tok {
  ident,
  number,
  arrow,
  pipe,
  lbrace,
  rbrace,
  langle,
  rangle,
  equals,
  plus,
  minus,
  end,
};

struct Token {
  Tok kind;
  std::string text;
  int line = 1;
  int col = 1;
  double value = 0.0;
  bool imag = false;  // number carried an 'i' suffix
};

[[noreturn]] void fail(int line, int col, std::string message) {
  throw Error(Errc::syntax, Diagnostic{line, col, std::move(message)});
}

bool ident_char(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  return std::isalnum(u) || c == '_';
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto push = [&](Tok kind, std::string text, int l, int c) {
    out.push_back(Token{kind, std::move(text), l, c});
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++col;
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') ++i;
      continue;
    }
    int tl = line, tc = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && ident_char(src[j])) ++j;
      push(Tok::ident, std::string(src.substr(i, j - i)), tl, tc);
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && i + 1 < src.size() &&
         std::isdigit(static_cast<unsigned char>(src[i + 1])))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])))
        ++j;
      if (j < src.size() && src[j] == '.') {
        ++j;
        while (j < src.size() &&
               std::isdigit(static_cast<unsigned char>(src[j])))
          ++j;
      }
      if (j < src.size() && (src[j] == 'e' || src[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < src.size() && (src[k] == '+' || src[k] == '-')) ++k;
        if (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) {
          ++k;
          while (k < src.size() &&
                 std::isdigit(static_cast<unsigned char>(src[k])))
            ++k;
          j = k;
        }
      }
      std::string text(src.substr(i, j - i));
      Token t{Tok::number, text, tl, tc};
      t.value = std::strtod(text.c_str(), nullptr);
      if (j < src.size() && src[j] == 'i' &&
          (j + 1 >= src.size() || !ident_char(src[j + 1]))) {
        t.imag = true;
        ++j;
      }
      out.push_back(std::move(t));
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    switch (c) {
      case '-':
        if (i + 1 < src.size() && src[i + 1] == '>') {
          push(Tok::arrow, "->", tl, tc);
          i += 2;
          col += 2;
        } else {
          push(Tok::minus, "-", tl, tc);
          ++i;
          ++col;
        }
        continue;
      case '+': push(Tok::plus, "+", tl, tc); break;
      case '|': push(Tok::pipe, "|", tl, tc); break;
      case '{': push(Tok::lbrace, "{", tl, tc); break;
      case '}': push(Tok::rbrace, "}", tl, tc); break;
      case '<': push(Tok::langle, "<", tl, tc); break;
      case '>': push(Tok::rangle, ">", tl, tc); break;
      case '=': push(Tok::equals, "=", tl, tc); break;
      default:
        fail(tl, tc, std::string("unexpected character '") + c + "'");
    }
    ++i;
    ++col;
  }
  push(Tok::end, "", line, col);
  return out;
}

const char* describe(const Token& t) {
  return t.kind == Tok::end ? "end of input" : t.text.c_str();
}

// ---------------------------------------------------------------------------
// Diagram parsing

struct NodeSyn {
  bool is_ident = true;
  int line = 1, col = 1;
  std::optional<StateLabel> label;                // is_ident
  std::vector<std::vector<NodeSyn>> branches;     // braces node
};

class DiagramParser {
 public:
  explicit DiagramParser(std::vector<Token> tokens)
      : tokens_(std::move(tokens)) {}

  std::vector<NodeSyn> parse() {
    std::vector<NodeSyn> nodes;
    nodes.push_back(parse_node());
    if (peek().kind != Tok::arrow) {
      fail(peek().line, peek().col,
           "expected '->' (a diagram needs at least two states)");
    }
    while (peek().kind == Tok::arrow) {
      ++pos_;
      nodes.push_back(parse_node());
    }
    if (peek().kind != Tok::end) {
      fail(peek().line, peek().col,
           std::string("expected '->' or end of diagram, found '") +
               describe(peek()) + "'");
    }
    return nodes;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  NodeSyn parse_node() {
    const Token& t = peek();
    if (t.kind == Tok::ident) {
      ++pos_;
      NodeSyn n;
      n.line = t.line;
      n.col = t.col;
      n.label = StateLabel(t.text);
      return n;
    }
    if (t.kind == Tok::lbrace) {
      ++pos_;
      NodeSyn n;
      n.is_ident = false;
      n.line = t.line;
      n.col = t.col;
      n.branches.push_back(parse_branch());
      if (peek().kind != Tok::pipe) {
        fail(peek().line, peek().col,
             "expected '|' (a parallel group needs at least two branches)");
      }
      while (peek().kind == Tok::pipe) {
        ++pos_;
        n.branches.push_back(parse_branch());
      }
      if (peek().kind != Tok::rbrace) {
        fail(peek().line, peek().col,
             std::string("expected '|' or '}', found '") + describe(peek()) +
                 "'");
      }
      ++pos_;
      return n;
    }
    fail(t.line, t.col,
         std::string("expected a state label or '{', found '") + describe(t) +
             "'");
  }

  std::vector<NodeSyn> parse_branch() {
    std::vector<NodeSyn> nodes;
    nodes.push_back(parse_node());
    while (peek().kind == Tok::arrow) {
      ++pos_;
      nodes.push_back(parse_node());
    }
    return nodes;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// Builds the process tree for the chain entry -> nodes..., where exit_state,
// when present, is the junction the chain must reach (used for branches).
ExprPtr build_chain(const StateLabel& entry, std::span<const NodeSyn> nodes,
                    const std::optional<StateLabel>& exit_state) {
  std::vector<ExprPtr> segments;
  StateLabel prev = entry;
  bool exit_reached = false;
  std::size_t i = 0;
  while (i < nodes.size()) {
    const NodeSyn& n = nodes[i];
    if (n.is_ident) {
      segments.push_back(atomic(prev, *n.label));
      prev = *n.label;
      ++i;
      continue;
    }
    std::optional<StateLabel> q;
    bool consumed_next = false;
    if (i + 1 < nodes.size()) {
      const NodeSyn& next = nodes[i + 1];
      if (!next.is_ident) {
        fail(next.line, next.col,
             "parallel groups must be separated by a state label");
      }
      q = next.label;
      consumed_next = true;
    } else if (exit_state) {
      q = exit_state;
    } else {
      fail(n.line, n.col, "a parallel group may not end a diagram");
    }
    std::vector<ExprPtr> branch_exprs;
    branch_exprs.reserve(n.branches.size());
    for (const auto& b : n.branches) {
      branch_exprs.push_back(build_chain(prev, b, q));
    }
    segments.push_back(parallel(std::move(branch_exprs)));
    prev = *q;
    if (!consumed_next) exit_reached = true;
    i += consumed_next ? 2 : 1;
  }
  if (exit_state && !exit_reached) {
    segments.push_back(atomic(prev, *exit_state));
  }
  ExprPtr acc = segments.back();
  for (std::size_t k = segments.size() - 1; k-- > 0;) {
    acc = series(segments[k], acc);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Printing

void flatten_spine(const ProcessExpr& e, std::vector<const ProcessExpr*>& out) {
  if (const auto* s = std::get_if<SeriesComp>(&e.node())) {
    flatten_spine(*s->first, out);
    flatten_spine(*s->second, out);
  } else {
    out.push_back(&e);
  }
}

std::string render_braces(const ParallelComp& p, const StateLabel& from,
                          const StateLabel& to);

// The node text of one branch: the intermediate states between the group's
// endpoints, which the grammar requires to be nonempty.
std::string render_branch(const ProcessExpr& b, const StateLabel& from,
                          const StateLabel& to) {
  std::vector<const ProcessExpr*> segs;
  flatten_spine(b, segs);
  std::vector<std::string> parts;
  for (std::size_t j = 0; j < segs.size(); ++j) {
    bool last = j + 1 == segs.size();
    if (const auto* a = std::get_if<AtomicStep>(&segs[j]->node())) {
      if (!last) parts.push_back(a->to.str());
    } else {
      const auto& pp = std::get<ParallelComp>(segs[j]->node());
      Endpoints pe = endpoints(*segs[j]);
      parts.push_back(render_braces(pp, pe.from, pe.to));
      if (!last) parts.push_back(pe.to.str());
    }
  }
  if (parts.empty()) {
    throw Error(Errc::unprintable,
                "a parallel branch from " + from.str() + " to " + to.str() +
                    " has no intermediate state and cannot be written");
  }
  std::string out = parts.front();
  for (std::size_t j = 1; j < parts.size(); ++j) out += " -> " + parts[j];
  return out;
}

std::string render_braces(const ParallelComp& p, const StateLabel& from,
                          const StateLabel& to) {
  std::string out = "{";
  for (std::size_t i = 0; i < p.branches.size(); ++i) {
    if (i) out += " | ";
    out += render_branch(*p.branches[i], from, to);
  }
  out += "}";
  return out;
}

}  // namespace

ExprPtr parse_diagram(std::string_view source) {
  DiagramParser parser(lex(source));
  std::vector<NodeSyn> nodes = parser.parse();
  if (!nodes.front().is_ident) {
    fail(nodes.front().line, nodes.front().col,
         "a parallel group may not begin a diagram");
  }
  return build_chain(*nodes.front().label,
                     std::span<const NodeSyn>(nodes).subspan(1), std::nullopt);
}

std::string print_diagram(const ProcessExpr& e) {
  if (auto violation = validate(e)) {
    throw Error(Errc::unprintable,
                "expression violates structural invariants: " + *violation);
  }
  std::vector<const ProcessExpr*> segs;
  flatten_spine(e, segs);
  std::string out = endpoints(e).from.str();
  for (const ProcessExpr* seg : segs) {
    if (const auto* a = std::get_if<AtomicStep>(&seg->node())) {
      out += " -> " + a->to.str();
    } else {
      const auto& p = std::get<ParallelComp>(seg->node());
      Endpoints pe = endpoints(*seg);
      out += " -> " + render_braces(p, pe.from, pe.to) + " -> " + pe.to.str();
    }
  }
  return out;
}

AmplitudeTable parse_amp_table(std::string_view source) {
  std::vector<Token> tokens = lex(source);
  AmplitudeTable table;
  std::size_t pos = 0;
  auto peek = [&]() -> const Token& { return tokens[pos]; };
  auto expect = [&](Tok kind, const char* what) -> const Token& {
    const Token& t = tokens[pos];
    if (t.kind != kind) {
      fail(t.line, t.col,
           std::string("expected ") + what + ", found '" + describe(t) + "'");
    }
    ++pos;
    return t;
  };
  while (peek().kind != Tok::end) {
    const int entry_line = peek().line;
    const int entry_col = peek().col;
    auto same_line = [&]() {
      if (peek().kind != Tok::end && peek().line != entry_line) {
        fail(peek().line, peek().col, "an entry must fit on one line");
      }
    };
    expect(Tok::langle, "'<'");
    same_line();
    const Token& to_tok = expect(Tok::ident, "a state label");
    same_line();
    expect(Tok::pipe, "'|'");
    same_line();
    const Token& from_tok = expect(Tok::ident, "a state label");
    same_line();
    expect(Tok::rangle, "'>'");
    same_line();
    expect(Tok::equals, "'='");
    same_line();

    double sign = 1.0;
    if (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      sign = peek().kind == Tok::minus ? -1.0 : 1.0;
      ++pos;
      same_line();
    }
    const Token& re_tok = expect(Tok::number, "a number");
    if (re_tok.imag) {
      fail(re_tok.line, re_tok.col,
           "the real part must come first; write RE(+|-)IMi");
    }
    double re = sign * re_tok.value;
    double im = 0.0;
    if (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      same_line();
      double im_sign = peek().kind == Tok::minus ? -1.0 : 1.0;
      ++pos;
      same_line();
      const Token& im_tok = expect(Tok::number, "an imaginary part like 0.4i");
      if (!im_tok.imag) {
        fail(im_tok.line, im_tok.col,
             "expected an imaginary part with an 'i' suffix, like 0.4i");
      }
      im = im_sign * im_tok.value;
    }
    if (peek().kind != Tok::end && peek().line == entry_line) {
      fail(peek().line, peek().col,
           std::string("unexpected trailing text '") + describe(peek()) + "'");
    }
    try {
      table.insert(StateLabel(from_tok.text), StateLabel(to_tok.text),
                   Amp(re, im));
    } catch (const Error& err) {
      throw Error(err.code(),
                  Diagnostic{entry_line, entry_col, err.what()});
    }
  }
  return table;
}

}  // namespace ampcal
