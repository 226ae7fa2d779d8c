#include "sc/expr.hpp"

#include <algorithm>
#include <cctype>

#include "sc/geometry.hpp"

namespace sc {

namespace {

const std::vector<std::string> kIdentifiers = {
    "x",    "y",  "psi", "R",     "DR",  "Psi1",     "Psi2",   "E2",
    "E4",   "E6", "theta", "phi", "phitilde", "lambda", "q"};

const std::vector<std::string> kOperators = {"D", "Dt", "Dz", "Dtau", "Dphi"};

struct Token {
    enum class Kind { number, ident, op, punct, end };
    Kind kind;
    std::string text;
    long number = 0;
    int col = 0;  // 1-based
};

class Lexer {
  public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }
    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        int col = static_cast<int>(pos_) + 1;
        if (pos_ >= src_.size()) {
            tok_ = {Token::Kind::end, "", 0, col};
            return;
        }
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            std::string text = src_.substr(start, pos_ - start);
            tok_ = {Token::Kind::number, text, std::stol(text), col};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            std::string text = src_.substr(start, pos_ - start);
            bool is_op = std::find(kOperators.begin(), kOperators.end(), text) != kOperators.end();
            tok_ = {is_op ? Token::Kind::op : Token::Kind::ident, text, 0, col};
            return;
        }
        if (std::string("+-*/^()").find(c) != std::string::npos) {
            ++pos_;
            tok_ = {Token::Kind::punct, std::string(1, c), 0, col};
            return;
        }
        throw SyntaxError(1, col, std::string("unexpected character '") + c + "'");
    }

    const std::string& src_;
    size_t pos_ = 0;
    Token tok_;
};

class Parser {
  public:
    explicit Parser(const std::string& src) : lex_(src) {}

    ExprPtr parse() {
        ExprPtr e = sum();
        const Token& t = lex_.peek();
        if (t.kind != Token::Kind::end)
            throw SyntaxError(1, t.col, "unexpected trailing input '" + t.text + "'");
        return e;
    }

  private:
    ExprPtr sum() {
        ExprPtr e = product();
        while (true) {
            const Token& t = lex_.peek();
            if (t.kind == Token::Kind::punct && (t.text == "+" || t.text == "-")) {
                bool add = t.text == "+";
                lex_.next();
                ExprPtr r = product();
                auto n = std::make_shared<Expr>();
                n->kind = add ? Expr::Kind::add : Expr::Kind::sub;
                n->lhs = e;
                n->rhs = r;
                e = n;
            } else {
                return e;
            }
        }
    }

    ExprPtr product() {
        ExprPtr e = unary();
        while (true) {
            const Token& t = lex_.peek();
            if (t.kind == Token::Kind::punct && (t.text == "*" || t.text == "/")) {
                bool mul = t.text == "*";
                lex_.next();
                ExprPtr r = unary();
                auto n = std::make_shared<Expr>();
                n->kind = mul ? Expr::Kind::mul : Expr::Kind::div;
                n->lhs = e;
                n->rhs = r;
                e = n;
            } else {
                return e;
            }
        }
    }

    ExprPtr unary() {
        const Token& t = lex_.peek();
        if (t.kind == Token::Kind::punct && t.text == "-") {
            lex_.next();
            auto n = std::make_shared<Expr>();
            n->kind = Expr::Kind::neg;
            n->lhs = unary();
            return n;
        }
        return power();
    }

    ExprPtr power() {
        ExprPtr base = atom();
        const Token& t = lex_.peek();
        if (t.kind == Token::Kind::punct && t.text == "^") {
            lex_.next();
            int sign = 1;
            Token e = lex_.peek();
            if (e.kind == Token::Kind::punct && e.text == "-") {
                lex_.next();
                sign = -1;
                e = lex_.peek();
            }
            if (e.kind != Token::Kind::number)
                throw SyntaxError(1, e.col, "expected integer exponent");
            lex_.next();
            auto n = std::make_shared<Expr>();
            n->kind = Expr::Kind::pow;
            n->lhs = base;
            n->exponent = static_cast<int>(sign * e.number);
            return n;
        }
        return base;
    }

    ExprPtr atom() {
        Token t = lex_.peek();
        if (t.kind == Token::Kind::number) {
            lex_.next();
            auto n = std::make_shared<Expr>();
            n->kind = Expr::Kind::number;
            n->value = Rat(t.number);
            return n;
        }
        if (t.kind == Token::Kind::op) {
            lex_.next();
            const Token& open = lex_.peek();
            if (!(open.kind == Token::Kind::punct && open.text == "("))
                throw SyntaxError(1, open.col, "expected '(' after " + t.text);
            lex_.next();
            ExprPtr arg = sum();
            const Token& close = lex_.peek();
            if (!(close.kind == Token::Kind::punct && close.text == ")"))
                throw SyntaxError(1, close.col, "expected ')'");
            lex_.next();
            auto n = std::make_shared<Expr>();
            n->kind = Expr::Kind::apply;
            n->name = t.text;
            n->lhs = arg;
            return n;
        }
        if (t.kind == Token::Kind::ident) {
            lex_.next();
            if (std::find(kIdentifiers.begin(), kIdentifiers.end(), t.text) ==
                kIdentifiers.end())
                throw UnknownIdentifier(t.text);
            auto n = std::make_shared<Expr>();
            n->kind = Expr::Kind::ident;
            n->name = t.text;
            return n;
        }
        if (t.kind == Token::Kind::punct && t.text == "(") {
            lex_.next();
            ExprPtr e = sum();
            const Token& close = lex_.peek();
            if (!(close.kind == Token::Kind::punct && close.text == ")"))
                throw SyntaxError(1, close.col, "expected ')'");
            lex_.next();
            return e;
        }
        throw SyntaxError(1, t.col,
                          t.kind == Token::Kind::end
                              ? "unexpected end of input"
                              : "unexpected token '" + t.text + "'");
    }

    Lexer lex_;
};

}  // namespace

ExprPtr parse_expr(const std::string& src) { return Parser(src).parse(); }

std::string Expr::str() const {
    switch (kind) {
        case Kind::number: return value.get_str();
        case Kind::ident: return name;
        case Kind::add: return "(" + lhs->str() + " + " + rhs->str() + ")";
        case Kind::sub: return "(" + lhs->str() + " - " + rhs->str() + ")";
        case Kind::mul: return "(" + lhs->str() + " * " + rhs->str() + ")";
        case Kind::div: return "(" + lhs->str() + " / " + rhs->str() + ")";
        case Kind::pow:
            return "(" + lhs->str() + "^" + std::to_string(exponent) + ")";
        case Kind::neg: return "(-" + lhs->str() + ")";
        case Kind::apply: return name + "(" + lhs->str() + ")";
    }
    return "?";
}

SuperField eval_expr(const Expr& e, const Chart& ch) {
    switch (e.kind) {
        case Expr::Kind::number:
            return SuperField::from_qseries(QSeries(Scalar(e.value)));
        case Expr::Kind::ident: {
            const std::string& n = e.name;
            if (n == "x") return ch.x();
            if (n == "y") return ch.y();
            if (n == "psi") return ch.psi();
            if (n == "R") return ch.R();
            if (n == "DR") return ch.DnR(1);
            if (n == "Psi1") return ch.Psi1();
            if (n == "Psi2") return ch.Psi2();
            if (n == "E2" || n == "E4" || n == "E6")
                return SuperField::from_qseries(
                    eisenstein(n[1] - '0', ch.params().nq));
            if (n == "theta") return SuperField::theta();
            if (n == "phi") return SuperField::phi();
            if (n == "phitilde") return ch.phitilde();
            if (n == "lambda") return SuperField::z_pow(0, Scalar::lambda_pow(1));
            if (n == "q") return SuperField::from_qseries(
                QSeries::q_pow(1).truncated(ch.params().nq));
            throw UnknownIdentifier(n);
        }
        case Expr::Kind::add:
            return eval_expr(*e.lhs, ch) + eval_expr(*e.rhs, ch);
        case Expr::Kind::sub:
            return eval_expr(*e.lhs, ch) - eval_expr(*e.rhs, ch);
        case Expr::Kind::mul:
            return eval_expr(*e.lhs, ch) * eval_expr(*e.rhs, ch);
        case Expr::Kind::div:
            return eval_expr(*e.lhs, ch) *
                   eval_expr(*e.rhs, ch).inv(ch.params().nz);
        case Expr::Kind::pow: {
            SuperField b = eval_expr(*e.lhs, ch);
            int n = e.exponent;
            if (n < 0) {
                b = b.inv(ch.params().nz);
                n = -n;
            }
            SuperField r = SuperField::one();
            for (int i = 0; i < n; ++i) r = r * b;
            return r;
        }
        case Expr::Kind::neg: return -eval_expr(*e.lhs, ch);
        case Expr::Kind::apply: {
            SuperField a = eval_expr(*e.lhs, ch);
            if (e.name == "D") return a.D();
            if (e.name == "Dt") return ch.Dt(a);
            if (e.name == "Dz") return a.d_z();
            if (e.name == "Dtau") return D_tau(a, ch);
            if (e.name == "Dphi") return D_phi(a, ch);
            throw UnknownIdentifier(e.name);
        }
    }
    throw Error("unreachable expression kind");
}

const std::vector<std::string>& known_identifiers() { return kIdentifiers; }

}  // namespace sc
