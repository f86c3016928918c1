#include "gcs4/expr.hpp"

#include <cctype>
#include <stdexcept>

namespace gcs4 {
namespace {

// Recursive descent over a token cursor.  Grammar, loosest first:
//   or      := and ("||" and)*
//   and     := not ("&&" not)*
//   not     := "!" not | cmp
//   cmp     := sum (("=="|"!="|"<="|">="|"<"|">") sum)?
//   sum     := term (("+"|"-") term)*
//   term    := factor (("*"|"/") factor)*
//   factor  := "-" factor | atom
//   atom    := number | name | "abs" "(" or ")" | "(" or ")" | true | false
// A cmp without an operator is only valid where a boolean is not required;
// eval_predicate demands the final value be boolean, eval_scalar demands a
// scalar.
struct Value {
    bool is_bool = false;
    bool b = false;
    Rational r;
};

class Parser {
public:
    Parser(const std::string& src, const ParamMap& params) : src_(src), params_(params) {}

    Value parse() {
        Value v = parse_or();
        skip_ws();
        if (pos_ != src_.size())
            throw std::invalid_argument("expr: trailing input at '" + src_.substr(pos_) + "'");
        return v;
    }

private:
    const std::string& src_;
    const ParamMap& params_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool eat(const char* tok) {
        skip_ws();
        std::size_t len = std::string(tok).size();
        if (src_.compare(pos_, len, tok) == 0) {
            // Do not split an identifier or a longer operator.
            if (std::isalpha(static_cast<unsigned char>(tok[0]))) {
                std::size_t end = pos_ + len;
                if (end < src_.size() &&
                    (std::isalnum(static_cast<unsigned char>(src_[end])) || src_[end] == '_'))
                    return false;
            }
            pos_ += len;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("expr: " + what + " in '" + src_ + "'");
    }

    Rational scalar(const Value& v) {
        if (v.is_bool) fail("expected a scalar, found a boolean");
        return v.r;
    }

    bool boolean(const Value& v) {
        if (!v.is_bool) fail("expected a boolean, found a scalar");
        return v.b;
    }

    Value parse_or() {
        Value lhs = parse_and();
        while (eat("||")) {
            Value rhs = parse_and();
            lhs = {true, boolean(lhs) || boolean(rhs), Rational(0)};
        }
        return lhs;
    }

    Value parse_and() {
        Value lhs = parse_not();
        while (eat("&&")) {
            Value rhs = parse_not();
            lhs = {true, boolean(lhs) && boolean(rhs), Rational(0)};
        }
        return lhs;
    }

    Value parse_not() {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == '!' &&
            (pos_ + 1 >= src_.size() || src_[pos_ + 1] != '=')) {
            ++pos_;
            Value v = parse_not();
            return {true, !boolean(v), Rational(0)};
        }
        return parse_cmp();
    }

    Value parse_cmp() {
        Value lhs = parse_sum();
        const char* ops[] = {"==", "!=", "<=", ">=", "<", ">"};
        for (const char* op : ops) {
            if (eat(op)) {
                Rational a = scalar(lhs), b = scalar(parse_sum());
                bool res = false;
                std::string o(op);
                if (o == "==") res = a == b;
                else if (o == "!=") res = a != b;
                else if (o == "<=") res = a <= b;
                else if (o == ">=") res = a >= b;
                else if (o == "<") res = a < b;
                else res = a > b;
                return {true, res, Rational(0)};
            }
        }
        return lhs;
    }

    Value parse_sum() {
        Value lhs = parse_term();
        for (;;) {
            if (eat("+")) {
                Value rhs = parse_term();
                lhs = {false, false, scalar(lhs) + scalar(rhs)};
            } else if (peek() == '-' && !lookahead_is_cmp_rhs()) {
                ++pos_;
                Value rhs = parse_term();
                lhs = {false, false, scalar(lhs) - scalar(rhs)};
            } else {
                return lhs;
            }
        }
    }

    // '-' at sum level is always binary subtraction; the helper exists only
    // to keep the call sites uniform.
    bool lookahead_is_cmp_rhs() { return false; }

    Value parse_term() {
        Value lhs = parse_factor();
        for (;;) {
            if (eat("*")) {
                Value rhs = parse_factor();
                lhs = {false, false, scalar(lhs) * scalar(rhs)};
            } else if (peek() == '/') {
                ++pos_;
                Rational d = scalar(parse_factor());
                if (d.is_zero()) fail("division by zero");
                lhs = {false, false, scalar(lhs) / d};
            } else {
                return lhs;
            }
        }
    }

    Value parse_factor() {
        if (eat("-")) {
            Value v = parse_factor();
            return {false, false, -scalar(v)};
        }
        return parse_atom();
    }

    Value parse_atom() {
        skip_ws();
        if (pos_ >= src_.size()) fail("unexpected end of input");
        char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            Value v = parse_or();
            if (!eat(")")) fail("missing ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            if (pos_ < src_.size() && src_[pos_] == '.')
                fail("decimal literals are not supported; use p/q");
            return {false, false, Rational::from_string(src_.substr(start, pos_ - start))};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            std::string name = src_.substr(start, pos_ - start);
            if (name == "true") return {true, true, Rational(0)};
            if (name == "false") return {true, false, Rational(0)};
            if (name == "abs") {
                if (!eat("(")) fail("abs expects '('");
                Value v = parse_or();
                if (!eat(")")) fail("missing ')' after abs");
                return {false, false, scalar(v).abs()};
            }
            auto it = params_.find(name);
            if (it == params_.end()) fail("unknown name '" + name + "'");
            return {false, false, it->second};
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

Rational eval_scalar(const std::string& expr, const ParamMap& params) {
    Parser p(expr, params);
    Value v = p.parse();
    if (v.is_bool) throw std::invalid_argument("expr: expected a scalar result: " + expr);
    return v.r;
}

bool eval_predicate(const std::string& expr, const ParamMap& params) {
    Parser p(expr, params);
    Value v = p.parse();
    if (!v.is_bool) throw std::invalid_argument("expr: expected a boolean result: " + expr);
    return v.b;
}

}  // namespace gcs4
