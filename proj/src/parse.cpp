#include "blowup/poly.hpp"

#include <cctype>

namespace blowup {

namespace {

// expr    := ['-'|'+'] product (('+'|'-') product)*
// product := factor (['*'] factor)*
// factor  := integer | variable ['^' nat] | '(' expr ')' ['^' nat]
class Parser {
public:
    Parser(const std::string& src, RingPtr ring) : s_(src), ring_(std::move(ring)) {}

    Polynomial run() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("unexpected character '" + std::string(1, s_[pos_]) + "'", pos_);
        return p;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool eat(char c) {
        if (peek(c)) { ++pos_; return true; }
        return false;
    }

    Polynomial expr() {
        bool negate = false;
        if (eat('-')) negate = true;
        else eat('+');
        Polynomial acc = product();
        if (negate) acc = neg(acc);
        for (;;) {
            if (eat('+')) acc = add(acc, product());
            else if (eat('-')) acc = sub(acc, product());
            else break;
        }
        return acc;
    }

    bool starts_factor() {
        skip_ws();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) ||
               std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '(';
    }

    Polynomial product() {
        Polynomial acc = factor();
        for (;;) {
            if (eat('*')) acc = mul(acc, factor());
            else if (starts_factor()) acc = mul(acc, factor());
            else break;
        }
        return acc;
    }

    uint64_t nat() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw ParseError("expected number", pos_);
        uint64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > (1ULL << 62)) throw ParseError("integer literal too large", pos_);
            ++pos_;
        }
        return v;
    }

    Polynomial factor() {
        skip_ws();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            uint64_t v = nat();
            return Polynomial::constant(ring_, static_cast<int64_t>(v % ring_->field().characteristic()));
        }
        if (c == '(') {
            size_t open = pos_;
            ++pos_;
            Polynomial inner = expr();
            if (!eat(')')) throw ParseError("unbalanced parenthesis", open);
            if (eat('^')) return pow(inner, static_cast<uint32_t>(nat()));
            return inner;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            size_t idx = ring_->var_index(name);
            if (idx == static_cast<size_t>(-1))
                throw ParseError("unknown variable '" + name + "'", start);
            uint16_t exp = 1;
            if (eat('^')) {
                uint64_t e = nat();
                if (e > UINT16_MAX) throw ParseError("exponent too large", pos_);
                exp = static_cast<uint16_t>(e);
            }
            if (exp == 0) return Polynomial::constant(ring_, 1);
            return Polynomial::variable(ring_, idx, exp);
        }
        throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
    }

    const std::string& s_;
    RingPtr ring_;
    size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(const std::string& src, const RingPtr& ring) {
    return Parser(src, ring).run();
}

} // namespace blowup
