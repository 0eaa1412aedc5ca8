#include "fibrant/exactpoly.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace fibrant::poly {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class Parser {
public:
    Parser(std::string_view text, const std::map<std::string, Rational>& params)
        : s_(text), params_(params) {}

    MultiPoly run() {
        MultiPoly p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return p;
    }

private:
    std::string_view s_;
    const std::map<std::string, Rational>& params_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
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
        while (true) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                return acc;
        }
    }

    MultiPoly term() {
        MultiPoly acc = unary();
        while (true) {
            if (eat('*')) {
                acc *= unary();
            } else if (eat('/')) {
                MultiPoly d = unary();
                if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
                acc = acc / d.constant_term();
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
        if (eat('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected a nonnegative integer exponent");
            return pow(base, std::stol(std::string(s_.substr(start, pos_ - start))));
        }
        return base;
    }

    MultiPoly atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            MultiPoly p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return MultiPoly(Rational(Integer(std::string(s_.substr(start, pos_ - start)))));
        }
        if (ident_start(c)) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            auto it = params_.find(name);
            if (it != params_.end()) return MultiPoly(it->second);
            return MultiPoly::var(name);
        }
        fail("unexpected character");
    }
};

std::string coefficient_text(const Rational& c) {
    if (c.get_den() == 1) return c.get_num().get_str();
    return "(" + c.get_str() + ")";
}

}  // namespace

MultiPoly parse(std::string_view text, const std::map<std::string, Rational>& params) {
    return Parser(text, params).run();
}

std::string to_string(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    const auto& vars = p.variables();
    std::ostringstream out;
    bool first = true;
    for (auto& [e, c] : p.terms()) {
        bool neg = c < 0;
        Rational mag = abs(c);
        if (first)
            out << (neg ? "-" : "");
        else
            out << (neg ? " - " : " + ");
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            out << coefficient_text(mag);
        else if (mag == 1)
            out << mono;
        else
            out << coefficient_text(mag) << "*" << mono;
    }
    return out.str();
}

}  // namespace fibrant::poly
