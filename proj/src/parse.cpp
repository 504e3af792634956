#include "deglab/parse.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <vector>

#include "deglab/error.hpp"

namespace deglab {

namespace {

struct Lexer {
  const std::string& text;
  size_t pos = 0;
  int line = 1, col = 1;

  explicit Lexer(const std::string& t) : text(t) {}

  [[noreturn]] void error(const std::string& msg) const {
    fail(Errc::SyntaxError,
         msg + " at line " + std::to_string(line) + ", column " + std::to_string(col));
  }

  void advance() {
    if (text[pos] == '\n') {
      line++;
      col = 1;
    } else {
      col++;
    }
    pos++;
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) advance();
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool try_consume(char c) {
    if (peek() == c) {
      advance();
      return true;
    }
    return false;
  }

  // Two-character lookahead for "->".
  bool try_consume_arrow() {
    skip_ws();
    if (pos + 1 < text.size() && text[pos] == '-' && text[pos + 1] == '>') {
      advance();
      advance();
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!try_consume(c)) error(std::string("expected '") + c + "' (" + what + ")");
  }

  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  bool at_ident() { return ident_char(peek()); }

  std::string ident() {
    skip_ws();
    if (pos >= text.size() || !ident_char(text[pos])) error("expected an identifier");
    std::string out;
    while (pos < text.size() && ident_char(text[pos])) {
      out += text[pos];
      advance();
    }
    return out;
  }
};

TypePtr parse_type_expr(Lexer& lx) {
  TypePtr lhs;
  if (lx.try_consume('(')) {
    lhs = parse_type_expr(lx);
    lx.expect(')', "to close type");
  } else {
    lhs = Type::base(lx.ident());
  }
  if (lx.try_consume_arrow()) return Type::arrow(lhs, parse_type_expr(lx));
  return lhs;
}

struct Binder {
  std::string name;
  TypePtr type;
};

struct Parser {
  Lexer lx;
  const TypeEnv& ctx;
  std::vector<Binder> binders;  // innermost last

  Parser(const std::string& text, const TypeEnv& c) : lx(text), ctx(c) {}

  TermPtr variable(const std::string& name) {
    for (size_t i = binders.size(); i-- > 0;) {
      if (binders[i].name == name)
        return Term::bound_var(static_cast<int>(binders.size() - 1 - i));
    }
    auto it = ctx.find(name);
    TypePtr ty = it != ctx.end() ? it->second : Type::base("0");
    return Term::free_var(name, ty);
  }

  TermPtr atom() {
    if (lx.try_consume('(')) {
      TermPtr t = term();
      lx.expect(')', "to close term");
      return t;
    }
    return variable(lx.ident());
  }

  // atom followed by any number of [mem] wrappers
  TermPtr item() {
    TermPtr t = atom();
    while (lx.try_consume('[')) {
      TermPtr m = term();
      lx.expect(']', "to close wrapper");
      t = Term::wrap(t, m);
    }
    return t;
  }

  TermPtr term() {
    if (lx.try_consume('\\')) {
      std::string name = lx.ident();
      lx.expect(':', "binder annotation");
      TypePtr ty = parse_type_expr(lx);
      lx.expect('.', "after binder");
      binders.push_back({name, ty});
      TermPtr body = term();
      binders.pop_back();
      return Term::abs(name, ty, body);
    }
    TermPtr t = item();
    while (lx.at_ident() || lx.peek() == '(') t = Term::app(t, item());
    return t;
  }
};

// ---- Printing ----------------------------------------------------------------

void collect_free_names(const TermPtr& t, std::set<std::string>& out) {
  switch (t->kind()) {
    case TermKind::FreeVar:
      out.insert(t->var_name());
      return;
    case TermKind::BoundVar:
      return;
    case TermKind::Abs:
      collect_free_names(t->body(), out);
      return;
    case TermKind::App:
      collect_free_names(t->fun(), out);
      collect_free_names(t->arg(), out);
      return;
    case TermKind::Wrap:
      collect_free_names(t->wrap_body(), out);
      collect_free_names(t->mem(), out);
      return;
  }
}

// Precedence levels: 0 = term, 1 = application lhs, 2 = application rhs /
// wrapper body, wrappers themselves print as postfix at level 2.
void print_rec(const TermPtr& t, int level, std::vector<std::string>& names,
               const std::set<std::string>& taken, std::string& out) {
  switch (t->kind()) {
    case TermKind::FreeVar:
      out += t->var_name();
      return;
    case TermKind::BoundVar: {
      int k = t->index();
      if (k < static_cast<int>(names.size())) {
        out += names[names.size() - 1 - k];
      } else {
        out += "?" + std::to_string(k);  // dangling index; not printable syntax
      }
      return;
    }
    case TermKind::Abs: {
      std::string name = t->binder_hint().empty() ? "x" : t->binder_hint();
      if (taken.count(name) ||
          std::find(names.begin(), names.end(), name) != names.end()) {
        int i = 1;
        std::string fresh;
        do {
          fresh = name + std::to_string(i++);
        } while (taken.count(fresh) ||
                 std::find(names.begin(), names.end(), fresh) != names.end());
        name = fresh;
      }
      bool parens = level > 0;
      if (parens) out += "(";
      out += "\\" + name + ":" + to_string(t->binder_type()) + ". ";
      names.push_back(name);
      print_rec(t->body(), 0, names, taken, out);
      names.pop_back();
      if (parens) out += ")";
      return;
    }
    case TermKind::App: {
      bool parens = level > 1;
      if (parens) out += "(";
      print_rec(t->fun(), 1, names, taken, out);
      out += " ";
      print_rec(t->arg(), 2, names, taken, out);
      if (parens) out += ")";
      return;
    }
    case TermKind::Wrap: {
      bool parens = level > 2;
      if (parens) out += "(";
      print_rec(t->wrap_body(), 2, names, taken, out);
      out += "[";
      print_rec(t->mem(), 0, names, taken, out);
      out += "]";
      if (parens) out += ")";
      return;
    }
  }
}

}  // namespace

TypePtr parse_type(const std::string& text) {
  Lexer lx(text);
  TypePtr t = parse_type_expr(lx);
  if (!lx.at_end()) lx.error("trailing input after type");
  return t;
}

TermPtr parse_term(const std::string& text, const TypeEnv& ctx) {
  Parser p(text, ctx);
  TermPtr t = p.term();
  if (!p.lx.at_end()) p.lx.error("trailing input after term");
  return t;
}

TypeEnv parse_ctx(const std::string& text) {
  TypeEnv env;
  Lexer lx(text);
  if (lx.at_end()) return env;
  for (;;) {
    std::string name = lx.ident();
    lx.expect(':', "context entry");
    // A type extends until ',' or end of input.
    env[name] = parse_type_expr(lx);
    if (lx.at_end()) return env;
    lx.expect(',', "between context entries");
  }
}

std::string print_type(const TypePtr& t) { return to_string(t); }

std::string print_term(const TermPtr& t) {
  std::set<std::string> taken;
  collect_free_names(t, taken);
  std::vector<std::string> names;
  std::string out;
  print_rec(t, 0, names, taken, out);
  return out;
}

}  // namespace deglab
