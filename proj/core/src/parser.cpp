#include <fano3lab/errors.hpp>
#include <fano3lab/polynomial.hpp>

#include <algorithm>
#include <cctype>

namespace fano3lab {

namespace {

class Parser {
public:
    Parser(const std::string& s, const std::vector<std::string>& vars, unsigned conductor)
        : s_(s), vars_(vars), n_(conductor) {}

    MultiPoly run() {
        MultiPoly r = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        raise("ParseError", why + " at offset " + std::to_string(pos_) + " in '" + s_ + "'",
              {{"offset", std::to_string(pos_)}});
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    MultiPoly expr() {
        MultiPoly acc = term();
        for (;;) {
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    MultiPoly term() {
        MultiPoly acc = unary();
        for (;;) {
            if (eat('*')) {
                acc = acc * unary();
            } else if (eat('/')) {
                MultiPoly d = unary();
                if (!d.is_constant()) fail("division by a non-constant");
                CycNum c = d.constant_value();
                if (c.is_zero()) raise("DivisionByZero", "division by zero in '" + s_ + "'");
                acc = c.inverse() * acc;
            } else {
                return acc;
            }
        }
    }

    MultiPoly unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    MultiPoly power() {
        MultiPoly base = atom();
        if (!eat('^')) return base;
        skip();
        bool neg = eat('-');
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer exponent");
        std::string digits = s_.substr(start, pos_ - start);
        if (digits.size() > 6) fail("exponent too large");
        unsigned e = static_cast<unsigned>(std::stoul(digits));
        if (neg) {
            if (!base.is_constant()) fail("negative power of a non-constant");
            CycNum c = base.constant_value();
            if (c.is_zero()) fail("negative power of zero");
            return MultiPoly::constant(vars_, c.pow(-static_cast<long>(e)));
        }
        return base.pow(e);
    }

    MultiPoly atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            MultiPoly r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return MultiPoly::constant(vars_, CycNum(Integer(s_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string id = s_.substr(start, pos_ - start);
            auto it = std::find(vars_.begin(), vars_.end(), id);
            if (it != vars_.end()) return MultiPoly::variable(vars_, it - vars_.begin());
            if (id == "z") return MultiPoly::constant(vars_, CycNum::zeta(n_));
            pos_ = start;
            fail("unknown identifier '" + id + "'");
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    std::vector<std::string> vars_;
    unsigned n_;
    std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_polynomial(const std::string& text, const std::vector<std::string>& vars, unsigned conductor) {
    return Parser(text, vars, conductor).run();
}

CycNum parse_scalar(const std::string& text, unsigned conductor) {
    return parse_polynomial(text, {}, conductor).constant_value();
}

BinaryForm parse_binary_form(const std::string& text, int degree, unsigned conductor) {
    MultiPoly p = parse_polynomial(text, {"x", "y"}, conductor);
    if (p.is_zero()) {
        if (degree < 0) raise("ParseError", "zero form has no degree; state it explicitly");
        return BinaryForm::zero(degree);
    }
    BinaryForm f = to_binary_form(p);
    if (degree >= 0 && static_cast<int>(f.degree()) != degree)
        raise("ParseError", "expected a form of degree " + std::to_string(degree) + ", got degree " +
                                std::to_string(f.degree()));
    return f;
}

}  // namespace fano3lab
