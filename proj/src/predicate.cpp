#include "nsg/predicate.hpp"

#include <array>
#include <cctype>
#include <charconv>

#include "nsg/errors.hpp"

namespace nsg {

namespace {

long long field_value(Field f, const WilfReport& r) {
  switch (f) {
    case Field::M: return r.m;
    case Field::C: return r.c;
    case Field::Q: return r.q;
    case Field::Rho: return r.rho;
    case Field::G: return r.g;
    case Field::E: return r.e;
    case Field::L: return r.left_count;
    case Field::PL: return r.p_left_count;
    case Field::Dq: return r.dq_count;
    case Field::W: return r.w;
    case Field::W0: return r.w0;
    case Field::Csize: return r.c_size;
    case Field::A1: return r.profile.entries.size() >= 1 ? r.profile.entries[0] : 0;
    case Field::A2: return r.profile.entries.size() >= 2 ? r.profile.entries[1] : 0;
    case Field::A3: return r.profile.entries.size() >= 3 ? r.profile.entries[2] : 0;
  }
  return 0;
}

struct FieldName {
  const char* name;
  Field field;
};

constexpr std::array<FieldName, 15> kFields = {{
    {"m", Field::M}, {"c", Field::C}, {"q", Field::Q}, {"rho", Field::Rho},
    {"g", Field::G}, {"e", Field::E}, {"l", Field::L}, {"pl", Field::PL},
    {"dq", Field::Dq}, {"w", Field::W}, {"w0", Field::W0}, {"csize", Field::Csize},
    {"a1", Field::A1}, {"a2", Field::A2}, {"a3", Field::A3},
}};

std::string lowered(std::string_view s) {
  std::string out(s);
  for (char& ch : out) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return out;
}

enum class TokKind { Int, Ident, Op, LParen, RParen, End };

struct Token {
  TokKind kind;
  std::string_view text;
  std::size_t pos;
  long long value = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }
  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ >= text_.size()) {
      current_ = {TokKind::End, "end of input", pos_, 0};
      return;
    }
    const std::size_t start = pos_;
    const char ch = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Token t{TokKind::Int, text_.substr(start, pos_ - start), start, 0};
      auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), t.value);
      if (ec != std::errc()) {
        throw PredicateParse(start, std::string(t.text), "integer literal out of range");
      }
      current_ = t;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      current_ = {TokKind::Ident, text_.substr(start, pos_ - start), start, 0};
      return;
    }
    if (ch == '(') {
      ++pos_;
      current_ = {TokKind::LParen, text_.substr(start, 1), start, 0};
      return;
    }
    if (ch == ')') {
      ++pos_;
      current_ = {TokKind::RParen, text_.substr(start, 1), start, 0};
      return;
    }
    static constexpr std::string_view kTwoChar[] = {"<=", ">=", "==", "!=", "&&", "||"};
    for (std::string_view op : kTwoChar) {
      if (text_.substr(pos_, 2) == op) {
        pos_ += 2;
        current_ = {TokKind::Op, text_.substr(start, 2), start, 0};
        return;
      }
    }
    if (ch == '<' || ch == '>' || ch == '!') {
      ++pos_;
      current_ = {TokKind::Op, text_.substr(start, 1), start, 0};
      return;
    }
    throw PredicateParse(start, std::string(1, ch), "unexpected character");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_{TokKind::End, "", 0, 0};
};

enum class Type { Int, Bool };

// Recursive-descent parser emitting a postfix program while type-checking.
class Parser {
 public:
  Parser(std::string_view text, Predicate& out) : lex_(text), out_(out) {}

  void run() {
    Type t = parse_or();
    const Token& tok = lex_.peek();
    if (tok.kind != TokKind::End) {
      throw PredicateParse(tok.pos, std::string(tok.text), "unexpected trailing input");
    }
    if (t != Type::Bool) {
      throw PredicateParse(0, out_.text_, "predicate must be a boolean expression");
    }
  }

 private:
  Type parse_or() {
    Type t = parse_and();
    while (lex_.peek().kind == TokKind::Op && lex_.peek().text == "||") {
      Token op = lex_.take();
      require_bool(t, op);
      require_bool(parse_and(), op);
      emit({Predicate::Instr::Or});
      t = Type::Bool;
    }
    return t;
  }

  Type parse_and() {
    Type t = parse_cmp();
    while (lex_.peek().kind == TokKind::Op && lex_.peek().text == "&&") {
      Token op = lex_.take();
      require_bool(t, op);
      require_bool(parse_cmp(), op);
      emit({Predicate::Instr::And});
      t = Type::Bool;
    }
    return t;
  }

  Type parse_cmp() {
    Type t = parse_primary();
    const Token& tok = lex_.peek();
    if (tok.kind == TokKind::Op && tok.text != "&&" && tok.text != "||" && tok.text != "!") {
      Token op = lex_.take();
      if (t != Type::Int) {
        throw PredicateParse(op.pos, std::string(op.text),
                             "comparison needs integer operands");
      }
      Type rhs = parse_primary();
      if (rhs != Type::Int) {
        throw PredicateParse(op.pos, std::string(op.text),
                             "comparison needs integer operands");
      }
      emit({cmp_op(op)});
      return Type::Bool;
    }
    return t;
  }

  Type parse_primary() {
    Token tok = lex_.take();
    switch (tok.kind) {
      case TokKind::Int:
        emit({Predicate::Instr::PushConst, tok.value});
        return Type::Int;
      case TokKind::Ident: {
        const std::string name = lowered(tok.text);
        for (const auto& [fname, field] : kFields) {
          if (name == fname) {
            emit({Predicate::Instr::PushField, 0, field});
            out_.fields_used_ |= 1u << static_cast<int>(field);
            return Type::Int;
          }
        }
        throw PredicateParse(tok.pos, std::string(tok.text), "unknown field name");
      }
      case TokKind::LParen: {
        Type t = parse_or();
        Token close = lex_.take();
        if (close.kind != TokKind::RParen) {
          throw PredicateParse(close.pos, std::string(close.text), "expected ')'");
        }
        return t;
      }
      case TokKind::Op:
        if (tok.text == "!") {
          require_bool(parse_primary(), tok);
          emit({Predicate::Instr::Not});
          return Type::Bool;
        }
        throw PredicateParse(tok.pos, std::string(tok.text), "expected a value");
      case TokKind::RParen:
      case TokKind::End:
        throw PredicateParse(tok.pos, std::string(tok.text), "expected a value");
    }
    throw PredicateParse(tok.pos, std::string(tok.text), "expected a value");
  }

  static Predicate::Instr::Op cmp_op(const Token& op) {
    if (op.text == "<") return Predicate::Instr::Lt;
    if (op.text == "<=") return Predicate::Instr::Le;
    if (op.text == "==") return Predicate::Instr::Eq;
    if (op.text == "!=") return Predicate::Instr::Ne;
    if (op.text == ">=") return Predicate::Instr::Ge;
    if (op.text == ">") return Predicate::Instr::Gt;
    throw PredicateParse(op.pos, std::string(op.text), "unknown operator");
  }

  void require_bool(Type t, const Token& op) {
    if (t != Type::Bool) {
      throw PredicateParse(op.pos, std::string(op.text), "operator needs boolean operands");
    }
  }

  void emit(Predicate::Instr i) {
    out_.program_.push_back(i);
    if (out_.program_.size() > 512) {
      throw PredicateParse(0, "", "predicate too large");
    }
  }

  Lexer lex_;
  Predicate& out_;
};

}  // namespace

Predicate parse_predicate(std::string_view text) {
  Predicate p;
  p.text_ = std::string(text);
  Parser parser(text, p);
  parser.run();
  return p;
}

bool Predicate::eval(const WilfReport& r) const {
  long long stack[520];  // program length is capped at 512 instructions
  int top = 0;
  for (const Instr& in : program_) {
    switch (in.op) {
      case Instr::PushConst: stack[top++] = in.value; break;
      case Instr::PushField: stack[top++] = field_value(in.field, r); break;
      case Instr::Lt: top--; stack[top - 1] = stack[top - 1] < stack[top]; break;
      case Instr::Le: top--; stack[top - 1] = stack[top - 1] <= stack[top]; break;
      case Instr::Eq: top--; stack[top - 1] = stack[top - 1] == stack[top]; break;
      case Instr::Ne: top--; stack[top - 1] = stack[top - 1] != stack[top]; break;
      case Instr::Ge: top--; stack[top - 1] = stack[top - 1] >= stack[top]; break;
      case Instr::Gt: top--; stack[top - 1] = stack[top - 1] > stack[top]; break;
      case Instr::And: top--; stack[top - 1] = stack[top - 1] && stack[top]; break;
      case Instr::Or: top--; stack[top - 1] = stack[top - 1] || stack[top]; break;
      case Instr::Not: stack[top - 1] = !stack[top - 1]; break;
    }
  }
  return stack[0] != 0;
}

}  // namespace nsg
