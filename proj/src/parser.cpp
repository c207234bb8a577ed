#include "cotlift/parser.hpp"

#include "cotlift/error.hpp"

#include <cctype>

namespace cotlift {

namespace {

// Recursive-descent parser, evaluating straight into FiberScalar.
class Parser {
public:
    Parser(const std::string& text, int dim, bool allow_momenta)
        : text_(text), dim_(dim), allow_momenta_(allow_momenta) {}

    FiberScalar parse() {
        FiberScalar v = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return v;
    }

private:
    FiberScalar expr() {
        FiberScalar v = term();
        while (true) {
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                v += term();
            } else if (peek() == '-') {
                ++pos_;
                v -= term();
            } else {
                return v;
            }
        }
    }

    FiberScalar term() {
        FiberScalar v = factor();
        while (true) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                v *= factor();
            } else if (peek() == '/') {
                ++pos_;
                size_t at = pos_;
                FiberScalar d = factor();
                try {
                    v = v / d;
                } catch (const input_error& e) {
                    fail_at(e.what(), at);
                }
            } else {
                return v;
            }
        }
    }

    FiberScalar factor() {
        skip_ws();
        bool neg = false;
        while (peek() == '+' || peek() == '-') {
            if (peek() == '-') neg = !neg;
            ++pos_;
            skip_ws();
        }
        FiberScalar v = atom();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            if (!std::isdigit(peek())) fail("expected a non-negative integer exponent after '^'");
            long e = read_integer();
            FiberScalar r(1);
            for (long i = 0; i < e; ++i) r *= v;
            v = std::move(r);
        }
        return neg ? -v : v;
    }

    FiberScalar atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            FiberScalar v = expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return v;
        }
        if (std::isdigit(c)) return FiberScalar(Rat(read_integer()));
        if (c == 'x' || c == 'p') {
            ++pos_;
            if (!std::isdigit(peek())) fail("expected a coordinate index");
            long idx = read_integer();
            if (idx < 1 || idx > dim_)
                fail("coordinate index " + std::to_string(idx) + " out of range 1.." + std::to_string(dim_));
            if (c == 'x') return FiberScalar(BaseScalar::variable(static_cast<int>(idx) - 1));
            if (!allow_momenta_) fail("momentum coordinates are not allowed here");
            return FiberScalar::momentum(static_cast<int>(idx) - 1);
        }
        if (c == '\0') fail("unexpected end of expression");
        fail(std::string("unexpected character '") + c + "'");
        return FiberScalar(); // unreachable
    }

    long read_integer() {
        long v = 0;
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1000000000L) fail_at("integer literal too large", start);
            ++pos_;
        }
        return v;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }
    [[noreturn]] void fail_at(const std::string& msg, size_t at) const {
        int line = 1, col = 1;
        for (size_t i = 0; i < at && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw parse_error(msg + " in \"" + text_ + "\"", line, col);
    }

    const std::string& text_;
    int dim_;
    bool allow_momenta_;
    size_t pos_ = 0;
};

} // namespace

FiberScalar parse_fiber(const std::string& text, int dim) {
    if (dim < 1 || dim > kMaxDim)
        throw input_error("dimension " + std::to_string(dim) + " outside the supported range 1.." +
                          std::to_string(kMaxDim));
    return Parser(text, dim, true).parse();
}

BaseScalar parse_base(const std::string& text, int dim) {
    if (dim < 1 || dim > kMaxDim)
        throw input_error("dimension " + std::to_string(dim) + " outside the supported range 1.." +
                          std::to_string(kMaxDim));
    FiberScalar f = Parser(text, dim, false).parse();
    return f.base_value();
}

} // namespace cotlift
