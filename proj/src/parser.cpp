#include "luk/parser.hpp"

#include "luk/errors.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

namespace luk {

namespace {

enum class Tok {
  Ident,
  Zero,
  One,
  MinusOne,
  Half,
  Plus,
  Minus,
  Tilde,
  OPlus,
  OTimes,
  Arrow,
  Join,
  Meet,
  LParen,
  RParen,
  Eq,
  Le,
  Lt,
  Bang,
  Amp,
  Bar,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src, std::size_t line) : src_(src), line_(line) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    std::size_t i = 0;
    while (true) {
      while (i < src_.size() && std::isspace(static_cast<unsigned char>(src_[i]))) ++i;
      if (i >= src_.size()) {
        out.push_back({Tok::End, "", i});
        return out;
      }
      std::size_t start = i;
      char c = src_[i];
      auto rest = src_.substr(i);
      auto emit = [&](Tok k, std::size_t len) {
        out.push_back({k, std::string(src_.substr(start, len)), start});
        i = start + len;
      };
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t j = i;
        while (j < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_')) ++j;
        emit(Tok::Ident, j - i);
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t j = i;
        while (j < src_.size() && (std::isdigit(static_cast<unsigned char>(src_[j])) || src_[j] == '/')) ++j;
        std::string_view num = src_.substr(i, j - i);
        if (num == "0") emit(Tok::Zero, 1);
        else if (num == "1") emit(Tok::One, 1);
        else if (num == "1/2") emit(Tok::Half, 3);
        else fail("numeral '" + std::string(num) + "' is not a constant of any language", start);
      } else if (rest.starts_with("(+)")) {
        emit(Tok::OPlus, 3);
      } else if (rest.starts_with("(*)")) {
        emit(Tok::OTimes, 3);
      } else if (rest.starts_with("->")) {
        emit(Tok::Arrow, 2);
      } else if (rest.starts_with("-1") &&
                 (rest.size() == 2 || !(std::isdigit(static_cast<unsigned char>(rest[2])) || rest[2] == '/'))) {
        emit(Tok::MinusOne, 2);
      } else if (rest.starts_with("\\/")) {
        emit(Tok::Join, 2);
      } else if (rest.starts_with("/\\")) {
        emit(Tok::Meet, 2);
      } else if (rest.starts_with("<=")) {
        emit(Tok::Le, 2);
      } else {
        switch (c) {
          case '+': emit(Tok::Plus, 1); break;
          case '-': emit(Tok::Minus, 1); break;
          case '~': emit(Tok::Tilde, 1); break;
          case '(': emit(Tok::LParen, 1); break;
          case ')': emit(Tok::RParen, 1); break;
          case '=': emit(Tok::Eq, 1); break;
          case '<': emit(Tok::Lt, 1); break;
          case '!': emit(Tok::Bang, 1); break;
          case '&': emit(Tok::Amp, 1); break;
          case '|': emit(Tok::Bar, 1); break;
          default: fail(std::string("unexpected character '") + c + "'", start);
        }
      }
    }
  }

 private:
  [[noreturn]] void fail(const std::string& what, std::size_t pos) {
    throw SyntaxError(what, line_, pos + 1);
  }

  std::string_view src_;
  std::size_t line_;
};

class Parser {
 public:
  Parser(std::string_view src, Signature sig, std::size_t line)
      : tokens_(Lexer(src, line).run()), sig_(sig), line_(line) {}

  Formula formula_eof() {
    Formula f = formula();
    expect(Tok::End, "end of input");
    return f;
  }

  Term term_eof() {
    Term t = term();
    expect(Tok::End, "end of input");
    return t;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  bool at(Tok k) const { return peek().kind == k; }

  [[noreturn]] void fail(const std::string& what) {
    const Token& t = peek();
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw SyntaxError("expected " + what + ", found " + found, line_, t.pos + 1);
  }

  void expect(Tok k, const std::string& what) {
    if (!at(k)) fail(what);
    ++pos_;
  }

  void require(Op op) {
    if (!permits(sig_, op)) {
      throw SignatureError(std::to_string(line_) + ":" + std::to_string(peek().pos + 1) + ": operator '" +
                           std::string(op_symbol(op)) + "' is not in language " + std::string(signature_tag(sig_)));
    }
  }

  Formula formula() {
    Formula f = conj();
    while (at(Tok::Bar)) {
      ++pos_;
      f = Formula::bor(f, conj());
    }
    return f;
  }

  Formula conj() {
    Formula f = lit();
    while (at(Tok::Amp)) {
      ++pos_;
      f = Formula::band(f, lit());
    }
    return f;
  }

  Formula lit() {
    if (at(Tok::Bang)) {
      ++pos_;
      return Formula::bnot(lit());
    }
    if (at(Tok::LParen)) {
      // "(" opens either a parenthesized term of an atom or a subformula.
      std::size_t save = pos_;
      try {
        return atom();
      } catch (const SyntaxError&) {
        pos_ = save;
      }
      ++pos_;
      Formula f = formula();
      expect(Tok::RParen, "')'");
      return f;
    }
    return atom();
  }

  Formula atom() {
    Term lhs = term();
    Rel rel;
    switch (peek().kind) {
      case Tok::Eq: rel = Rel::Eq; break;
      case Tok::Le: rel = Rel::Le; break;
      case Tok::Lt: rel = Rel::Lt; break;
      default: fail("relation '=', '<=' or '<'");
    }
    ++pos_;
    Term rhs = term();
    return Formula::atom(sig_, lhs, rel, rhs);
  }

  std::optional<Op> binop() const {
    switch (peek().kind) {
      case Tok::Plus: return Op::Plus;
      case Tok::Join: return Op::Join;
      case Tok::Meet: return Op::Meet;
      case Tok::OPlus: return Op::OPlus;
      case Tok::OTimes: return Op::OTimes;
      case Tok::Arrow: return Op::Implies;
      default: return std::nullopt;
    }
  }

  Term term() {
    Term t = lterm();
    while (auto op = binop()) {
      require(*op);
      ++pos_;
      t = Term::binary(*op, t, lterm());
    }
    return t;
  }

  Term lterm() {
    switch (peek().kind) {
      case Tok::Minus:
        require(Op::Neg);
        ++pos_;
        return Term::unary(Op::Neg, lterm());
      case Tok::Tilde:
        require(Op::Not);
        ++pos_;
        return Term::unary(Op::Not, lterm());
      case Tok::LParen: {
        ++pos_;
        Term t = term();
        expect(Tok::RParen, "')'");
        return t;
      }
      case Tok::Ident: {
        Term t = Term::var(peek().text);
        ++pos_;
        return t;
      }
      case Tok::Zero: return constant(Op::Zero);
      case Tok::One: return constant(Op::One);
      case Tok::MinusOne: return constant(Op::MinusOne);
      case Tok::Half: return constant(Op::Half);
      default: fail("a term");
    }
  }

  Term constant(Op op) {
    require(op);
    ++pos_;
    return Term::constant(op);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  Signature sig_;
  std::size_t line_;
};

bool needs_parens_as_operand(const Term& t) { return t.op() == Op::MinusOne; }

void print_term_to(const Term& t, std::string& out) {
  switch (arity(t.op())) {
    case 0:
      out += t.is_var() ? t.name() : std::string(op_symbol(t.op()));
      return;
    case 1:
      out += op_symbol(t.op());
      if (needs_parens_as_operand(t.child(0))) {
        out += '(';
        print_term_to(t.child(0), out);
        out += ')';
      } else {
        print_term_to(t.child(0), out);
      }
      return;
    default:
      out += '(';
      print_term_to(t.left(), out);
      out += ' ';
      out += op_symbol(t.op());
      out += ' ';
      print_term_to(t.right(), out);
      out += ')';
  }
}

void print_formula_to(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom: out += print_atom(f.atom()); return;
    case Formula::Kind::Not:
      out += "!(";
      print_formula_to(f.child(0), out);
      out += ')';
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      out += '(';
      print_formula_to(f.child(0), out);
      out += f.kind() == Formula::Kind::And ? ") & (" : ") | (";
      print_formula_to(f.child(1), out);
      out += ')';
      return;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

void flatten_conj(const Formula& f, std::vector<Formula>& out) {
  if (f.kind() == Formula::Kind::And) {
    flatten_conj(f.child(0), out);
    flatten_conj(f.child(1), out);
  } else {
    out.push_back(f);
  }
}

}  // namespace

Term parse_term(std::string_view text, Signature sig) {
  Term t = normalize(Parser(text, sig, 1).term_eof());
  check_signature(t, sig);
  return t;
}

Formula parse_formula(std::string_view text, Signature sig) {
  Formula f = normalize(Parser(text, sig, 1).formula_eof());
  check_signature(f);
  return f;
}

std::string print_term(const Term& t) {
  std::string out;
  print_term_to(t, out);
  return out;
}

std::string print_atom(const Atom& a) {
  return print_term(a.lhs) + " " + std::string(rel_symbol(a.rel)) + " " + print_term(a.rhs);
}

std::string print_formula(const Formula& f) {
  std::string out;
  print_formula_to(f, out);
  return out;
}

Formula FormulaFile::conjunction() const {
  if (formulas.empty()) throw Error("formula file contains no formulas");
  return Formula::conj(formulas);
}

FormulaFile parse_formula_file(std::string_view text) {
  std::size_t line_no = 0;
  std::optional<Signature> sig;
  std::vector<Formula> formulas;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    std::string_view line = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    ++line_no;
    if (!sig) {
      std::string_view header = trim(line);
      if (!header.starts_with("#lang"))
        throw SyntaxError("first line must be '#lang ab|pab|mv|mvhalf'", line_no, 1);
      header.remove_prefix(5);
      header = trim(strip_comment(header));
      try {
        sig = parse_signature(header);
      } catch (const Error& e) {
        throw SyntaxError(e.what(), line_no, 7);
      }
    } else {
      std::string_view body = strip_comment(line);
      if (!trim(body).empty()) {
        Formula f = normalize(Parser(body, *sig, line_no).formula_eof());
        check_signature(f);
        formulas.push_back(f);
      }
    }
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  if (!sig) throw SyntaxError("empty input; expected '#lang' header", 1, 1);
  return FormulaFile{*sig, std::move(formulas)};
}

FormulaFile read_formula_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_formula_file(ss.str());
}

std::string format_formula_file(const Formula& f, const std::vector<std::string>& header_comments) {
  std::string out = "#lang " + std::string(signature_tag(f.sig())) + "\n";
  for (const auto& c : header_comments) out += "# " + c + "\n";
  std::vector<Formula> parts;
  flatten_conj(f, parts);
  for (const auto& p : parts) out += print_formula(p) + "\n";
  return out;
}

Assignment parse_assignment(std::string_view text) {
  Assignment v;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    std::string_view line = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    ++line_no;
    std::string_view body = trim(strip_comment(line));
    if (!body.empty()) {
      auto eq = body.find('=');
      if (eq == std::string_view::npos) throw SyntaxError("expected 'name = p/q'", line_no, 1);
      std::string name(trim(body.substr(0, eq)));
      bool ok = !name.empty() && (std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_');
      for (char c : name) ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
      if (!ok) throw SyntaxError("bad variable name '" + name + "'", line_no, 1);
      try {
        v[name] = parse_rational(trim(body.substr(eq + 1)));
      } catch (const Error& e) {
        throw SyntaxError(e.what(), line_no, eq + 2);
      }
    }
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  return v;
}

std::string format_assignment(const Assignment& v) {
  std::string out;
  for (const auto& [name, value] : v) out += name + " = " + to_string(value) + "\n";
  return out;
}

}  // namespace luk
