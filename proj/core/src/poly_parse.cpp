#include <cctype>

#include "expr_ast.hpp"
#include "pwavg/errors.hpp"
#include "pwavg/param_poly.hpp"

namespace pwavg {
namespace ast {

namespace {

struct Lexer {
    const std::string& s;
    size_t pos = 0;

    void skip() {
        while (pos < s.size() && isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip();
        return pos >= s.size();
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }
    char get() {
        skip();
        return s[pos++];
    }
};

struct Parser {
    Lexer lex;

    NodePtr make(Kind k) {
        auto n = std::make_unique<Node>();
        n->kind = k;
        return n;
    }

    NodePtr parse_atom() {
        char c = lex.peek();
        if (c == '(') {
            lex.get();
            NodePtr e = parse_expr();
            if (lex.peek() != ')') throw ParseError("expected ')'");
            lex.get();
            return e;
        }
        if (isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (!lex.eof() &&
                   (isdigit(static_cast<unsigned char>(lex.s[lex.pos])) || lex.s[lex.pos] == '.'))
                num += lex.s[lex.pos++];
            auto n = make(Kind::Num);
            n->num = rat_parse(num);
            return n;
        }
        if (isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (!lex.eof() && (isalnum(static_cast<unsigned char>(lex.s[lex.pos])) ||
                                  lex.s[lex.pos] == '_'))
                name += lex.s[lex.pos++];
            auto n = make(Kind::Sym);
            n->name = name;
            return n;
        }
        throw ParseError(std::string("unexpected character '") + c + "'");
    }

    NodePtr parse_factor() {
        char c = lex.peek();
        if (c == '-') {
            lex.get();
            auto n = make(Kind::Neg);
            n->a = parse_factor();
            return n;
        }
        if (c == '+') {
            lex.get();
            return parse_factor();
        }
        NodePtr base = parse_atom();
        if (lex.peek() == '^') {
            lex.get();
            bool neg = false;
            if (lex.peek() == '-') {
                lex.get();
                neg = true;
            }
            if (!isdigit(static_cast<unsigned char>(lex.peek())))
                throw ParseError("expected integer exponent");
            int e = 0;
            while (!lex.eof() && isdigit(static_cast<unsigned char>(lex.s[lex.pos])))
                e = e * 10 + (lex.s[lex.pos++] - '0');
            auto n = make(Kind::Pow);
            n->exp = neg ? -e : e;
            n->a = std::move(base);
            return n;
        }
        return base;
    }

    NodePtr parse_term() {
        NodePtr acc = parse_factor();
        for (;;) {
            char c = lex.peek();
            if (c == '*' || c == '/') {
                lex.get();
                auto n = make(c == '*' ? Kind::Mul : Kind::Div);
                n->a = std::move(acc);
                n->b = parse_factor();
                acc = std::move(n);
            } else break;
        }
        return acc;
    }

    NodePtr parse_expr() {
        NodePtr acc = parse_term();
        for (;;) {
            char c = lex.peek();
            if (c == '+' || c == '-') {
                lex.get();
                auto n = make(c == '+' ? Kind::Add : Kind::Sub);
                n->a = std::move(acc);
                n->b = parse_term();
                acc = std::move(n);
            } else break;
        }
        return acc;
    }
};

} // namespace

NodePtr parse_expression(const std::string& text) {
    Parser p{Lexer{text}};
    NodePtr e = p.parse_expr();
    if (!p.lex.eof()) throw ParseError("trailing input at '" + text.substr(p.lex.pos) + "'");
    return e;
}

} // namespace ast

namespace {

ParamPoly eval_poly(const ast::Node& n) {
    using ast::Kind;
    switch (n.kind) {
        case Kind::Num: return ParamPoly::constant(n.num);
        case Kind::Sym: {
            if (n.name == "pi" || n.name == "Pi") return ParamPoly::var(pi_symbol());
            return ParamPoly::var(sym(n.name));
        }
        case Kind::Add: return eval_poly(*n.a) + eval_poly(*n.b);
        case Kind::Sub: return eval_poly(*n.a) - eval_poly(*n.b);
        case Kind::Mul: return eval_poly(*n.a) * eval_poly(*n.b);
        case Kind::Div: {
            ParamPoly d = eval_poly(*n.b);
            if (!d.is_constant() || d.is_zero())
                throw ParseError("division only by nonzero constants in polynomial context");
            ParamPoly a = eval_poly(*n.a);
            a.scale(Rat(1) / d.constant_value());
            return a;
        }
        case Kind::Neg: return -eval_poly(*n.a);
        case Kind::Pow: {
            if (n.exp < 0) throw ParseError("negative exponent in polynomial context");
            ParamPoly b = eval_poly(*n.a);
            ParamPoly r = ParamPoly::constant(1);
            for (int i = 0; i < n.exp; ++i) r *= b;
            return r;
        }
    }
    throw ParseError("bad expression node");
}

} // namespace

ParamPoly ParamPoly::parse(const std::string& text) {
    return eval_poly(*ast::parse_expression(text));
}

} // namespace pwavg
