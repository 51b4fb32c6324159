#include "qwlab/terms.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <utility>

#include "qwlab/error.hpp"

namespace qwlab {

Term Term::var(std::string name, SourcePos pos) {
  Term t;
  t.kind = TermKind::Var;
  t.name = std::move(name);
  t.pos = pos;
  return t;
}

Term Term::zero(SourcePos pos) {
  Term t;
  t.kind = TermKind::Zero;
  t.pos = pos;
  return t;
}

Term Term::one(SourcePos pos) {
  Term t;
  t.kind = TermKind::One;
  t.pos = pos;
  return t;
}

Term Term::star(Term inner, SourcePos pos) {
  Term t;
  t.kind = TermKind::Star;
  t.args.push_back(std::move(inner));
  t.pos = pos;
  return t;
}

Term Term::bin(BinOp op, Term lhs, Term rhs, SourcePos pos) {
  Term t;
  t.kind = TermKind::Bin;
  t.op = op;
  t.args.push_back(std::move(lhs));
  t.args.push_back(std::move(rhs));
  t.pos = pos;
  return t;
}

bool operator==(const Term& a, const Term& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case TermKind::Var:
      return a.name == b.name;
    case TermKind::Zero:
    case TermKind::One:
      return true;
    case TermKind::Star:
      return a.args[0] == b.args[0];
    case TermKind::Bin:
      return a.op == b.op && a.args[0] == b.args[0] && a.args[1] == b.args[1];
  }
  return false;
}

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok {
  Ident, Zero, One, LParen, RParen, Comma, Star, StarCall,
  Imp, Join, Meet, Odot, Oplus, Eq, Leq, LeqQ, Turnstile, End,
};

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      const SourcePos at = pos_;
      if (i_ >= src_.size()) {
        out.push_back({Tok::End, "", at});
        return out;
      }
      out.push_back(next(at));
    }
  }

 private:
  bool starts(std::string_view s) const { return src_.substr(i_, s.size()) == s; }

  void advance(std::size_t bytes) {
    for (std::size_t k = 0; k < bytes && i_ < src_.size(); ++k, ++i_) {
      const auto c = static_cast<unsigned char>(src_[i_]);
      if (c == '\n') {
        ++pos_.line;
        pos_.column = 1;
      } else if ((c & 0xC0) != 0x80) {
        ++pos_.column;  // count code points, not bytes
      }
    }
  }

  void skip_space() {
    while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) advance(1);
  }

  bool take(std::string_view s) {
    if (!starts(s)) return false;
    advance(s.size());
    return true;
  }

  // After a "<=" or "≤": an immediately following Q (optionally written _Q)
  // not continuing an identifier turns the relation into <=Q.
  Tok relation_suffix() {
    std::size_t skip = 0;
    if (starts("_Q")) skip = 2;
    else if (starts("Q")) skip = 1;
    if (skip && (i_ + skip >= src_.size() || !ident_char(src_[i_ + skip]))) {
      advance(skip);
      return Tok::LeqQ;
    }
    return Tok::Leq;
  }

  Token next(SourcePos at) {
    struct Sym {
      std::string_view text;
      Tok kind;
    };
    // Longest spellings first.
    static const Sym symbols[] = {
        {"(*)", Tok::Odot}, {"(+)", Tok::Oplus}, {"|-", Tok::Turnstile}, {"->", Tok::Imp},
        {"/\\", Tok::Meet}, {"\\/", Tok::Join},  {"→", Tok::Imp},    {"⊙", Tok::Odot},
        {"⊕", Tok::Oplus}, {"⋒", Tok::Meet}, {"⊓", Tok::Meet},
        {"⊎", Tok::Join},  {"⊔", Tok::Join}, {"⊢", Tok::Turnstile},
        {"(", Tok::LParen}, {")", Tok::RParen}, {",", Tok::Comma}, {"*", Tok::Star},
        {"∗", Tok::Star}, {"=", Tok::Eq},
    };
    if (take("<=") || take("≤")) {
      const Tok k = relation_suffix();
      return {k, k == Tok::LeqQ ? "<=Q" : "<=", at};
    }
    for (const auto& s : symbols) {
      if (take(s.text)) return {s.kind, std::string(s.text), at};
    }
    const char c = src_[i_];
    if (c == '0' || c == '1') {
      if (i_ + 1 < src_.size() && ident_char(src_[i_ + 1])) {
        throw ParseError("malformed constant", at.line, at.column);
      }
      advance(1);
      return {c == '0' ? Tok::Zero : Tok::One, std::string(1, c), at};
    }
    if (ident_start(c)) {
      std::size_t j = i_;
      while (j < src_.size() && ident_char(src_[j])) ++j;
      std::string word(src_.substr(i_, j - i_));
      advance(j - i_);
      if (word == "meet") return {Tok::Meet, word, at};
      if (word == "join") return {Tok::Join, word, at};
      if (word == "odot") return {Tok::Odot, word, at};
      if (word == "oplus") return {Tok::Oplus, word, at};
      if (word == "star") return {Tok::StarCall, word, at};
      return {Tok::Ident, word, at};
    }
    // Report the whole code point for non-ASCII input.
    std::size_t len = 1;
    while (i_ + len < src_.size() && (static_cast<unsigned char>(src_[i_ + len]) & 0xC0) == 0x80) {
      ++len;
    }
    throw ParseError("unknown operator token '" + std::string(src_.substr(i_, len)) + "'",
                     at.line, at.column);
  }

  std::string_view src_;
  std::size_t i_ = 0;
  SourcePos pos_;
};

// ---------------------------------------------------------------------------
// Parser

std::optional<BinOp> mid_op(Tok t) {
  switch (t) {
    case Tok::Join: return BinOp::Join;
    case Tok::Meet: return BinOp::Meet;
    case Tok::Odot: return BinOp::Odot;
    case Tok::Oplus: return BinOp::Oplus;
    default: return std::nullopt;
  }
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(Lexer(src).run()) {}

  Statement statement() {
    std::vector<Atom> atoms{atom()};
    while (peek().kind == Tok::Comma) {
      ++k_;
      atoms.push_back(atom());
    }
    Statement s;
    if (peek().kind == Tok::Turnstile) {
      ++k_;
      s.premises = std::move(atoms);
      s.conclusion = atom();
    } else if (atoms.size() == 1) {
      s.conclusion = std::move(atoms.front());
    } else {
      fail("expected '|-' after premises");
    }
    expect(Tok::End, "end of input");
    return s;
  }

  Term whole_term() {
    Term t = term();
    expect(Tok::End, "end of input");
    return t;
  }

 private:
  const Token& peek() const { return toks_[k_]; }

  [[noreturn]] void fail(const std::string& what) const {
    const Token& t = peek();
    const std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(what + ", found " + found, t.pos.line, t.pos.column);
  }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what);
    ++k_;
  }

  Atom atom() {
    Atom a;
    a.lhs = term();
    switch (peek().kind) {
      case Tok::Eq: a.rel = Relation::Eq; break;
      case Tok::Leq: a.rel = Relation::Leq; break;
      case Tok::LeqQ: a.rel = Relation::LeqQ; break;
      default: fail("expected '=', '<=' or '<=Q'");
    }
    ++k_;
    a.rhs = term();
    return a;
  }

  Term term() {
    Term lhs = mid();
    if (peek().kind == Tok::Imp) {
      const SourcePos at = peek().pos;
      ++k_;
      return Term::bin(BinOp::Imp, std::move(lhs), term(), at);
    }
    return lhs;
  }

  Term mid() {
    Term acc = postfix();
    std::optional<BinOp> chain;
    while (auto op = mid_op(peek().kind)) {
      if (chain && *chain != *op) {
        fail("mixing different infix operators requires parentheses");
      }
      chain = op;
      const SourcePos at = peek().pos;
      ++k_;
      acc = Term::bin(*op, std::move(acc), postfix(), at);
    }
    return acc;
  }

  Term postfix() {
    Term t = primary();
    while (peek().kind == Tok::Star) {
      const SourcePos at = peek().pos;
      ++k_;
      t = Term::star(std::move(t), at);
    }
    return t;
  }

  Term primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Ident:
        ++k_;
        return Term::var(t.text, t.pos);
      case Tok::Zero:
        ++k_;
        return Term::zero(t.pos);
      case Tok::One:
        ++k_;
        return Term::one(t.pos);
      case Tok::LParen: {
        ++k_;
        Term inner = term();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::StarCall: {
        const SourcePos at = t.pos;
        ++k_;
        expect(Tok::LParen, "'(' after star");
        Term inner = term();
        expect(Tok::RParen, "')'");
        return Term::star(std::move(inner), at);
      }
      default:
        fail("expected a variable, constant or '('");
    }
  }

  std::vector<Token> toks_;
  std::size_t k_ = 0;
};

// ---------------------------------------------------------------------------
// Compiled evaluation: postfix program over variable slots.

enum class Ins : std::uint8_t { Var, Zero, One, Star, Imp, Join, Meet, Odot, Oplus };

struct Instr {
  Ins op;
  int slot;
};

struct Program {
  std::vector<Instr> code;

  Elem run(const Model& m, const Elem* vals) const {
    Elem stack[64];
    int top = 0;
    for (const auto& in : code) {
      switch (in.op) {
        case Ins::Var: stack[top++] = vals[in.slot]; break;
        case Ins::Zero: stack[top++] = m.zero(); break;
        case Ins::One: stack[top++] = m.unit(); break;
        case Ins::Star: stack[top - 1] = m.star(stack[top - 1]); break;
        default: {
          const Elem r = stack[--top];
          Elem& l = stack[top - 1];
          switch (in.op) {
            case Ins::Imp: l = m.imp(l, r); break;
            case Ins::Join: l = m.join(l, r); break;
            case Ins::Meet: l = m.meet(l, r); break;
            case Ins::Odot: l = m.odot(l, r); break;
            case Ins::Oplus: l = m.oplus(l, r); break;
            default: break;
          }
        }
      }
    }
    return stack[0];
  }
};

int depth_needed(const Term& t) {
  switch (t.kind) {
    case TermKind::Star: return depth_needed(t.args[0]);
    case TermKind::Bin:
      return std::max(depth_needed(t.args[0]), 1 + depth_needed(t.args[1]));
    default: return 1;
  }
}

void compile_into(const Term& t, const std::vector<std::string>& vars, Program& p) {
  switch (t.kind) {
    case TermKind::Var: {
      const auto it = std::lower_bound(vars.begin(), vars.end(), t.name);
      if (it == vars.end() || *it != t.name) {
        throw EvaluationError("unbound variable '" + t.name + "'");
      }
      p.code.push_back({Ins::Var, static_cast<int>(it - vars.begin())});
      return;
    }
    case TermKind::Zero: p.code.push_back({Ins::Zero, 0}); return;
    case TermKind::One: p.code.push_back({Ins::One, 0}); return;
    case TermKind::Star:
      compile_into(t.args[0], vars, p);
      p.code.push_back({Ins::Star, 0});
      return;
    case TermKind::Bin: {
      compile_into(t.args[0], vars, p);
      compile_into(t.args[1], vars, p);
      static constexpr Ins map[] = {Ins::Imp, Ins::Join, Ins::Meet, Ins::Odot, Ins::Oplus};
      p.code.push_back({map[static_cast<int>(t.op)], 0});
      return;
    }
  }
}

Program compile(const Term& t, const std::vector<std::string>& vars) {
  if (depth_needed(t) > 64) throw EvaluationError("term nesting too deep to evaluate");
  Program p;
  compile_into(t, vars, p);
  return p;
}

struct CompiledAtom {
  Relation rel;
  Program lhs;
  Program rhs;

  bool holds(const Model& m, const Elem* vals) const {
    const Elem l = lhs.run(m, vals);
    const Elem r = rhs.run(m, vals);
    switch (rel) {
      case Relation::Eq: return l == r;
      case Relation::Leq: return m.leq(l, r);
      case Relation::LeqQ: return m.leq_q(l, r);
    }
    return false;
  }
};

CompiledAtom compile(const Atom& a, const std::vector<std::string>& vars) {
  return {a.rel, compile(a.lhs, vars), compile(a.rhs, vars)};
}

void collect(const Term& t, std::set<std::string>& out) {
  if (t.kind == TermKind::Var) out.insert(t.name);
  for (const auto& a : t.args) collect(a, out);
}

std::string_view op_text(BinOp op) {
  switch (op) {
    case BinOp::Imp: return "->";
    case BinOp::Join: return "\\/";
    case BinOp::Meet: return "/\\";
    case BinOp::Odot: return "(*)";
    case BinOp::Oplus: return "(+)";
  }
  return "?";
}

std::string render_operand(const Term& t) {
  std::string s = render(t);
  return t.kind == TermKind::Bin ? "(" + s + ")" : s;
}

}  // namespace

Statement parse_statement(std::string_view text) { return Parser(text).statement(); }

Term parse_term(std::string_view text) { return Parser(text).whole_term(); }

std::string render(const Term& t) {
  switch (t.kind) {
    case TermKind::Var: return t.name;
    case TermKind::Zero: return "0";
    case TermKind::One: return "1";
    case TermKind::Star: return render_operand(t.args[0]) + "*";
    case TermKind::Bin:
      return render_operand(t.args[0]) + " " + std::string(op_text(t.op)) + " " +
             render_operand(t.args[1]);
  }
  return "";
}

std::string render(const Atom& a) {
  const char* rel = a.rel == Relation::Eq ? " = " : a.rel == Relation::Leq ? " <= " : " <=Q ";
  return render(a.lhs) + rel + render(a.rhs);
}

std::string render(const Statement& s) {
  std::string out;
  for (std::size_t i = 0; i < s.premises.size(); ++i) {
    if (i) out += ", ";
    out += render(s.premises[i]);
  }
  if (!s.premises.empty()) out += " |- ";
  return out + render(s.conclusion);
}

std::vector<std::string> free_variables(const Term& t) {
  std::set<std::string> vars;
  collect(t, vars);
  return {vars.begin(), vars.end()};
}

std::vector<std::string> free_variables(const Statement& s) {
  std::set<std::string> vars;
  for (const auto& a : s.premises) {
    collect(a.lhs, vars);
    collect(a.rhs, vars);
  }
  collect(s.conclusion.lhs, vars);
  collect(s.conclusion.rhs, vars);
  return {vars.begin(), vars.end()};
}

Elem eval(const Model& m, const Term& t, const Env& env) {
  switch (t.kind) {
    case TermKind::Var: {
      const auto it = env.find(t.name);
      if (it == env.end()) throw EvaluationError("unbound variable '" + t.name + "'");
      if (it->second < 0 || it->second >= m.size()) {
        throw EvaluationError("variable '" + t.name + "' bound to an out-of-range element");
      }
      return it->second;
    }
    case TermKind::Zero: return m.zero();
    case TermKind::One: return m.unit();
    case TermKind::Star: return m.star(eval(m, t.args[0], env));
    case TermKind::Bin: {
      const Elem l = eval(m, t.args[0], env);
      const Elem r = eval(m, t.args[1], env);
      switch (t.op) {
        case BinOp::Imp: return m.imp(l, r);
        case BinOp::Join: return m.join(l, r);
        case BinOp::Meet: return m.meet(l, r);
        case BinOp::Odot: return m.odot(l, r);
        case BinOp::Oplus: return m.oplus(l, r);
      }
    }
  }
  return m.zero();
}

bool holds(const Model& m, const Atom& a, const Env& env) {
  const Elem l = eval(m, a.lhs, env);
  const Elem r = eval(m, a.rhs, env);
  switch (a.rel) {
    case Relation::Eq: return l == r;
    case Relation::Leq: return m.leq(l, r);
    case Relation::LeqQ: return m.leq_q(l, r);
  }
  return false;
}

StatementOutcome check_statement(const Model& m, const Statement& s) {
  StatementOutcome out;
  out.variables = free_variables(s);
  std::vector<CompiledAtom> premises;
  premises.reserve(s.premises.size());
  for (const auto& a : s.premises) premises.push_back(compile(a, out.variables));
  const CompiledAtom conclusion = compile(s.conclusion, out.variables);

  const int k = static_cast<int>(out.variables.size());
  const int n = m.size();
  std::vector<Elem> vals(static_cast<std::size_t>(k), 0);
  while (true) {
    const bool premised = std::all_of(premises.begin(), premises.end(),
                                      [&](const CompiledAtom& p) { return p.holds(m, vals.data()); });
    if (premised && !conclusion.holds(m, vals.data())) {
      out.status = Status::Fail;
      out.witness = vals;
      return out;
    }
    int pos = k - 1;
    while (pos >= 0 && ++vals[pos] == n) vals[pos--] = 0;
    if (pos < 0) break;
  }
  out.status = Status::Pass;
  return out;
}

}  // namespace qwlab
