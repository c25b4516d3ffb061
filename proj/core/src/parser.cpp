#include "flowgraph/parser.hpp"

#include <utility>

#include "flowgraph/lexer.hpp"

namespace flowgraph {

namespace {

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : toks_(tokens) {}

  ClassDecl parse_class() {
    ClassDecl cls;
    cls.pos = peek_pos();
    if (at(TokenKind::Keyword, "public")) {
      cls.is_public = true;
      advance();
    }
    expect(TokenKind::Keyword, "class");
    cls.name = expect_ident("class name");
    expect(TokenKind::Punct, "{");
    while (!at(TokenKind::Punct, "}")) {
      cls.methods.push_back(parse_method());
    }
    expect(TokenKind::Punct, "}");
    if (!at_end()) fail("end of input");
    return cls;
  }

  std::unique_ptr<Stmt> parse_single_statement() {
    auto s = parse_stmt();
    if (!at_end()) fail("end of input");
    return s;
  }

  std::unique_ptr<Expr> parse_single_expression() {
    auto e = parse_expr();
    if (!at_end()) fail("end of input");
    return e;
  }

 private:
  const std::vector<Token>& toks_;
  size_t pos_ = 0;

  bool at_end() const { return pos_ >= toks_.size(); }

  const Token* peek(size_t k = 0) const {
    return pos_ + k < toks_.size() ? &toks_[pos_ + k] : nullptr;
  }

  SourcePos peek_pos() const {
    if (const Token* t = peek()) return t->pos;
    if (!toks_.empty()) {
      const Token& last = toks_.back();
      return {last.pos.line, last.pos.column + static_cast<int>(last.lexeme.size())};
    }
    return {1, 1};
  }

  bool at(TokenKind kind, std::string_view text) const {
    const Token* t = peek();
    return t && t->kind == kind && t->lexeme == text;
  }

  bool at_type() const {
    return at(TokenKind::Keyword, "int") || at(TokenKind::Keyword, "boolean") ||
           at(TokenKind::Keyword, "void");
  }

  const Token& advance() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& expected) const {
    std::string got = at_end() ? "end of input" : "'" + peek()->lexeme + "'";
    throw ParseError("expected " + expected + ", found " + got, peek_pos());
  }

  const Token& expect(TokenKind kind, std::string_view text) {
    if (!at(kind, text)) fail("'" + std::string(text) + "'");
    return advance();
  }

  std::string expect_ident(const std::string& what) {
    const Token* t = peek();
    if (!t || t->kind != TokenKind::Identifier) fail(what);
    return advance().lexeme;
  }

  std::string parse_type() {
    if (!at_type()) fail("type ('int', 'boolean' or 'void')");
    return advance().lexeme;
  }

  Method parse_method() {
    Method m;
    m.pos = peek_pos();
    while (at(TokenKind::Keyword, "public") || at(TokenKind::Keyword, "private") ||
           at(TokenKind::Keyword, "static")) {
      m.modifiers.push_back(advance().lexeme);
    }
    m.return_type = parse_type();
    m.name = expect_ident("method name");
    expect(TokenKind::Punct, "(");
    if (!at(TokenKind::Punct, ")")) {
      for (;;) {
        Param p;
        p.pos = peek_pos();
        p.type_name = parse_type();
        p.name = expect_ident("parameter name");
        m.params.push_back(std::move(p));
        if (at(TokenKind::Punct, ",")) {
          advance();
          continue;
        }
        break;
      }
    }
    expect(TokenKind::Punct, ")");
    m.body = parse_block();
    return m;
  }

  std::unique_ptr<Stmt> make_stmt(StmtKind kind, SourcePos pos) {
    auto s = std::make_unique<Stmt>();
    s->kind = kind;
    s->pos = pos;
    return s;
  }

  std::unique_ptr<Stmt> parse_block() {
    auto s = make_stmt(StmtKind::Block, peek_pos());
    expect(TokenKind::Punct, "{");
    while (!at(TokenKind::Punct, "}")) {
      if (at_end()) fail("'}'");
      s->stmts.push_back(parse_stmt());
    }
    expect(TokenKind::Punct, "}");
    return s;
  }

  std::unique_ptr<Stmt> parse_stmt() {
    if (at(TokenKind::Punct, "{")) return parse_block();
    if (at_type()) return parse_var_decl();
    if (at(TokenKind::Keyword, "if")) return parse_if();
    if (at(TokenKind::Keyword, "while")) return parse_while();
    if (at(TokenKind::Keyword, "return")) return parse_return();
    if (at(TokenKind::Keyword, "break")) return parse_jump(StmtKind::Break);
    if (at(TokenKind::Keyword, "continue")) return parse_jump(StmtKind::Continue);
    const Token* t = peek();
    const Token* colon = peek(1);
    if (t && t->kind == TokenKind::Identifier && colon &&
        colon->is(TokenKind::Punct, ":")) {
      return parse_labeled();
    }
    return parse_expr_stmt();
  }

  std::unique_ptr<Stmt> parse_var_decl() {
    auto s = make_stmt(StmtKind::VarDecl, peek_pos());
    s->type_name = parse_type();
    s->name = expect_ident("variable name");
    if (at(TokenKind::Operator, "=")) {
      advance();
      s->expr = parse_expr();
    }
    expect(TokenKind::Punct, ";");
    return s;
  }

  std::unique_ptr<Stmt> parse_if() {
    auto s = make_stmt(StmtKind::If, peek_pos());
    expect(TokenKind::Keyword, "if");
    expect(TokenKind::Punct, "(");
    s->expr = parse_expr();
    expect(TokenKind::Punct, ")");
    s->then_branch = parse_stmt();
    if (at(TokenKind::Keyword, "else")) {
      advance();
      s->else_branch = parse_stmt();
    }
    return s;
  }

  std::unique_ptr<Stmt> parse_while() {
    auto s = make_stmt(StmtKind::While, peek_pos());
    expect(TokenKind::Keyword, "while");
    expect(TokenKind::Punct, "(");
    s->expr = parse_expr();
    expect(TokenKind::Punct, ")");
    s->body = parse_stmt();
    return s;
  }

  std::unique_ptr<Stmt> parse_return() {
    auto s = make_stmt(StmtKind::Return, peek_pos());
    expect(TokenKind::Keyword, "return");
    if (!at(TokenKind::Punct, ";")) s->expr = parse_expr();
    expect(TokenKind::Punct, ";");
    return s;
  }

  std::unique_ptr<Stmt> parse_jump(StmtKind kind) {
    auto s = make_stmt(kind, peek_pos());
    advance();  // break / continue
    const Token* t = peek();
    if (t && t->kind == TokenKind::Identifier) s->name = advance().lexeme;
    expect(TokenKind::Punct, ";");
    return s;
  }

  // Labels only annotate while statements.
  std::unique_ptr<Stmt> parse_labeled() {
    auto s = make_stmt(StmtKind::Labeled, peek_pos());
    s->name = expect_ident("label");
    expect(TokenKind::Punct, ":");
    if (!at(TokenKind::Keyword, "while")) fail("'while' after label");
    s->body = parse_while();
    return s;
  }

  std::unique_ptr<Stmt> parse_expr_stmt() {
    auto s = make_stmt(StmtKind::ExprStmt, peek_pos());
    s->expr = parse_expr();
    expect(TokenKind::Punct, ";");
    return s;
  }

  std::unique_ptr<Expr> make_expr(ExprKind kind, SourcePos pos) {
    auto e = std::make_unique<Expr>();
    e->kind = kind;
    e->pos = pos;
    return e;
  }

  std::unique_ptr<Expr> parse_expr() { return parse_assignment(); }

  bool at_assign_op(size_t k) const {
    const Token* t = peek(k);
    return t && t->kind == TokenKind::Operator &&
           (t->lexeme == "=" || t->lexeme == "+=" || t->lexeme == "-=");
  }

  std::unique_ptr<Expr> parse_assignment() {
    const Token* t = peek();
    if (t && t->kind == TokenKind::Identifier && at_assign_op(1)) {
      auto e = make_expr(ExprKind::Assign, t->pos);
      e->name = advance().lexeme;
      e->op = advance().lexeme;
      e->rhs = parse_assignment();
      return e;
    }
    return parse_equality();
  }

  std::unique_ptr<Expr> parse_binary_chain(
      std::unique_ptr<Expr> (Parser::*next)(),
      std::initializer_list<std::string_view> ops) {
    auto lhs = (this->*next)();
    for (;;) {
      const Token* t = peek();
      bool matched = false;
      if (t && t->kind == TokenKind::Operator) {
        for (auto op : ops) {
          if (t->lexeme == op) {
            matched = true;
            break;
          }
        }
      }
      if (!matched) return lhs;
      auto e = make_expr(ExprKind::Binary, lhs->pos);
      e->op = advance().lexeme;
      e->lhs = std::move(lhs);
      e->rhs = (this->*next)();
      lhs = std::move(e);
    }
  }

  std::unique_ptr<Expr> parse_equality() {
    return parse_binary_chain(&Parser::parse_relational, {"==", "!="});
  }

  std::unique_ptr<Expr> parse_relational() {
    return parse_binary_chain(&Parser::parse_additive, {"<", ">", "<=", ">="});
  }

  std::unique_ptr<Expr> parse_additive() {
    return parse_binary_chain(&Parser::parse_multiplicative, {"+", "-"});
  }

  std::unique_ptr<Expr> parse_multiplicative() {
    return parse_binary_chain(&Parser::parse_unary, {"*", "/", "%"});
  }

  std::unique_ptr<Expr> parse_unary() {
    if (at(TokenKind::Operator, "-") || at(TokenKind::Operator, "!")) {
      auto e = make_expr(ExprKind::Unary, peek_pos());
      e->op = advance().lexeme;
      e->lhs = parse_unary();
      return e;
    }
    return parse_postfix();
  }

  std::unique_ptr<Expr> parse_postfix() {
    auto operand = parse_primary();
    if (at(TokenKind::Operator, "++") || at(TokenKind::Operator, "--")) {
      auto e = make_expr(ExprKind::PostfixIncDec, operand->pos);
      e->op = advance().lexeme;
      e->lhs = std::move(operand);
      return e;
    }
    return operand;
  }

  std::unique_ptr<Expr> parse_primary() {
    const Token* t = peek();
    if (!t) fail("expression");
    if (t->kind == TokenKind::IntLiteral) {
      auto e = make_expr(ExprKind::IntLit, t->pos);
      e->literal = advance().lexeme;
      return e;
    }
    if (t->is(TokenKind::Keyword, "true") || t->is(TokenKind::Keyword, "false")) {
      auto e = make_expr(ExprKind::BoolLit, t->pos);
      e->bool_value = advance().lexeme == "true";
      return e;
    }
    if (t->is(TokenKind::Punct, "(")) {
      advance();
      auto inner = parse_expr();
      expect(TokenKind::Punct, ")");
      inner->parenthesized = true;
      return inner;
    }
    if (t->kind == TokenKind::Identifier) {
      const Token* paren = peek(1);
      if (paren && paren->is(TokenKind::Punct, "(")) {
        auto e = make_expr(ExprKind::Call, t->pos);
        e->name = advance().lexeme;
        advance();  // (
        if (!at(TokenKind::Punct, ")")) {
          for (;;) {
            e->args.push_back(parse_expr());
            if (at(TokenKind::Punct, ",")) {
              advance();
              continue;
            }
            break;
          }
        }
        expect(TokenKind::Punct, ")");
        return e;
      }
      auto e = make_expr(ExprKind::VarRef, t->pos);
      e->name = advance().lexeme;
      return e;
    }
    fail("expression");
  }
};

}  // namespace

ClassDecl parse_program(const std::vector<Token>& tokens) {
  Parser parser(tokens);
  ClassDecl cls = parser.parse_class();
  check_bindings(cls);
  return cls;
}

ClassDecl parse_program(std::string_view source) {
  return parse_program(tokenize(source));
}

std::unique_ptr<Stmt> parse_statement(std::string_view source) {
  auto tokens = tokenize(source);
  Parser parser(tokens);
  return parser.parse_single_statement();
}

std::unique_ptr<Expr> parse_expression(std::string_view source) {
  auto tokens = tokenize(source);
  Parser parser(tokens);
  return parser.parse_single_expression();
}

}  // namespace flowgraph
