#pragma once

#include "shrinker/rational.hpp"

#include <cctype>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace shrinker {

// Recursive-descent reader for "c * x^a * y^b + ..." style text over any ring P.
// Identifiers are resolved by the caller; "/" is only allowed before an integer.
template <class P>
class PolyReader {
public:
    using Resolver = std::function<std::optional<P>(std::string_view)>;
    using Constant = std::function<P(const BigRat&)>;

    PolyReader(std::string_view text, Resolver resolve, Constant constant)
        : s_(text), resolve_(std::move(resolve)), constant_(std::move(constant)) {}

    P parse() {
        P out = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("polynomial text: " + why + " at offset " + std::to_string(pos_) + " in '" +
                                    std::string(s_) + "'");
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
    std::string digits() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return std::string(s_.substr(start, pos_ - start));
    }

    P expr() {
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        P out = term();
        if (neg) out = constant_(BigRat(-1)) * out;
        for (;;) {
            if (eat('+')) out = out + term();
            else if (eat('-')) out = out - term();
            else return out;
        }
    }
    P term() {
        P out = factor();
        for (;;) {
            if (eat('*')) {
                out = out * factor();
            } else if (eat('/')) {
                BigInt d(digits(), 10);
                if (d == 0) fail("division by zero");
                out = constant_(BigRat(1, 1) / BigRat(d)) * out;
            } else {
                return out;
            }
        }
    }
    P factor() {
        P base = primary();
        if (eat('^')) {
            unsigned long e = std::stoul(digits());
            P out = constant_(BigRat(1));
            for (unsigned long i = 0; i < e; ++i) out = out * base;
            return out;
        }
        return base;
    }
    P primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            P inner = expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return constant_(BigRat(BigInt(digits(), 10)));
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            auto name = s_.substr(start, pos_ - start);
            auto v = resolve_(name);
            if (!v) {
                pos_ = start;
                fail("unknown identifier '" + std::string(name) + "'");
            }
            return *v;
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    Resolver resolve_;
    Constant constant_;
};

}  // namespace shrinker
