#include "ospbi/ncparser.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace ospbi {

ParseError::ParseError(const std::string& what, size_t pos)
    : std::runtime_error(what + " (at offset " + std::to_string(pos) + ")"), position(pos) {}

namespace {

struct Token {
    enum class Kind { Num, Gen, Param, Op, End };
    Kind kind;
    std::string text;  // rational literal, or single op char in text[0]
    Gen gen = Gen::Ap;
    int param = 0;
    size_t pos = 0;
};

std::optional<Gen> lookup_gen(const std::string& s) {
    if (s == "A+") return Gen::Ap;
    if (s == "A0") return Gen::A0;
    if (s == "A-") return Gen::Am;
    if (s == "P") return Gen::P;
    if (s == "Q") return Gen::Q;
    if (s == "K1") return Gen::K1;
    if (s == "K2") return Gen::K2;
    if (s == "K3") return Gen::K3;
    if (s == "W1") return Gen::W1;
    if (s == "W2") return Gen::W2;
    if (s == "W3") return Gen::W3;
    if (s == "C") return Gen::Cas;
    return std::nullopt;
}

class Lexer {
public:
    explicit Lexer(const std::string& text) : s_(text) {}

    Token next() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        size_t start = i_;
        if (i_ >= s_.size()) return {Token::Kind::End, "", Gen::Ap, 0, start};
        char ch = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::string num;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
                num += s_[i_++];
            if (i_ < s_.size() && s_[i_] == '/') {
                size_t slash = i_;
                ++i_;
                if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_])))
                    throw ParseError("expected digits after '/'", slash + 1);
                num += '/';
                while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
                    num += s_[i_++];
            }
            return {Token::Kind::Num, num, Gen::Ap, 0, start};
        }
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            std::string ident;
            while (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_])))
                ident += s_[i_++];
            // A+ and A- are two-character generator names
            if (ident == "A" && i_ < s_.size() && (s_[i_] == '+' || s_[i_] == '-'))
                ident += s_[i_++];
            if (ident == "m2" || ident == "m3" || ident == "m4")
                return {Token::Kind::Param, ident, Gen::Ap, ident[1] - '0', start};
            if (auto g = lookup_gen(ident)) return {Token::Kind::Gen, ident, *g, 0, start};
            throw ParseError("unknown identifier '" + ident + "'", start);
        }
        if (std::string("+-*^(){}[],").find(ch) != std::string::npos) {
            ++i_;
            return {Token::Kind::Op, std::string(1, ch), Gen::Ap, 0, start};
        }
        throw ParseError(std::string("unexpected character '") + ch + "'", start);
    }

private:
    const std::string& s_;
    size_t i_ = 0;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) { advance(); }

    NCExpr run() {
        NCExpr e = expr();
        if (tok_.kind != Token::Kind::End) throw ParseError("unexpected trailing input", tok_.pos);
        return e;
    }

private:
    Lexer lex_;
    Token tok_;

    void advance() { tok_ = lex_.next(); }

    bool is_op(char c) const { return tok_.kind == Token::Kind::Op && tok_.text[0] == c; }

    void expect_op(char c, const char* what) {
        if (!is_op(c)) throw ParseError(std::string("expected '") + c + "' " + what, tok_.pos);
        advance();
    }

    NCExpr expr() {
        bool neg = false;
        if (is_op('-')) {
            neg = true;
            advance();
        }
        NCExpr e = term();
        if (neg) e = -e;
        while (is_op('+') || is_op('-')) {
            bool minus = is_op('-');
            advance();
            NCExpr t = term();
            if (minus)
                e -= t;
            else
                e += t;
        }
        return e;
    }

    NCExpr term() {
        NCExpr f = factor();
        while (is_op('*')) {
            advance();
            f = f * factor();
        }
        return f;
    }

    NCExpr factor() {
        NCExpr a = atom();
        if (is_op('^')) {
            advance();
            if (is_op('-')) throw ParseError("negative exponent", tok_.pos);
            if (tok_.kind != Token::Kind::Num || tok_.text.find('/') != std::string::npos)
                throw ParseError("exponent must be an unsigned integer", tok_.pos);
            unsigned long n = std::stoul(tok_.text);
            advance();
            NCExpr p = NCExpr::one();
            for (unsigned long i = 0; i < n; ++i) p = p * a;
            return p;
        }
        return a;
    }

    NCExpr atom() {
        switch (tok_.kind) {
            case Token::Kind::Num: {
                NCExpr e = NCExpr::constant(Rational::parse(tok_.text));
                advance();
                return e;
            }
            case Token::Kind::Gen: {
                NCExpr e = NCExpr::gen(tok_.gen);
                advance();
                return e;
            }
            case Token::Kind::Param: {
                NCExpr e = NCExpr::param(tok_.param);
                advance();
                return e;
            }
            case Token::Kind::Op: {
                if (is_op('(')) {
                    advance();
                    NCExpr e = expr();
                    expect_op(')', "to close '('");
                    return e;
                }
                if (is_op('{')) {
                    advance();
                    NCExpr a = expr();
                    expect_op(',', "between anticommutator arguments");
                    NCExpr b = expr();
                    expect_op('}', "to close '{'");
                    return anticommutator(a, b);
                }
                if (is_op('[')) {
                    advance();
                    NCExpr a = expr();
                    expect_op(',', "between commutator arguments");
                    NCExpr b = expr();
                    expect_op(']', "to close '['");
                    return commutator(a, b);
                }
                break;
            }
            case Token::Kind::End:
                break;
        }
        throw ParseError("expected an operand", tok_.pos);
    }
};

}  // namespace

NCExpr parse_expression(const std::string& text) { return Parser(text).run(); }

}  // namespace ospbi
