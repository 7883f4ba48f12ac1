#include "jcm/cli/tau_expr.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <optional>
#include <string>

#include "jcm/error.hpp"

namespace jcm::cli {
namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Radians parse() {
        skip_ws();
        if (at_end()) fail("empty expression");
        Radians total = term();
        for (;;) {
            skip_ws();
            if (at_end()) break;
            const char op = text_[pos_];
            if (op != '+' && op != '-') fail("expected '+' or '-'");
            ++pos_;
            skip_ws();
            const Radians rhs = term();
            total = op == '+' ? total + rhs : total - rhs;
        }
        return total;
    }

private:
    struct Literal {
        std::string digits;
        std::optional<Rational> exact;  // set when the literal has no exponent
        double value = 0.0;
    };

    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorCode::ParseError, what + " at position " + std::to_string(pos_) + " in '" +
                                               std::string(text_) + "'");
    }

    bool at_end() const { return pos_ >= text_.size(); }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool accept(std::string_view token) {
        if (text_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    Radians term() {
        bool negative = false;
        if (accept("-")) negative = true;
        else (void)accept("+");
        skip_ws();
        Radians value = factor();
        return negative ? -value : value;
    }

    Radians factor() {
        if (accept("pi")) return Radians::pi_times(Rational{1, 1} * divisor());
        if (at_end() || !(std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
            fail("expected a number or 'pi'");
        }
        const Literal lit = literal();
        skip_ws();
        const bool star = accept("*");
        skip_ws();
        if (accept("pi")) {
            if (!lit.exact) fail("coefficient of pi must not use an exponent");
            return Radians::pi_times(*lit.exact * divisor());
        }
        if (star) fail("expected 'pi' after '*'");
        const Rational div = divisor();
        if (lit.exact && lit.exact->num == 0) return Radians::pi_times(0);
        return Radians(lit.value * div.to_double());
    }

    // Optional "/Q", returned as 1/Q.
    Rational divisor() {
        skip_ws();
        if (!accept("/")) return Rational{1, 1};
        skip_ws();
        const std::size_t begin = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (begin == pos_) fail("expected an integer denominator");
        std::int64_t q = 0;
        const auto [ptr, ec] = std::from_chars(text_.data() + begin, text_.data() + pos_, q);
        if (ec != std::errc{} || ptr != text_.data() + pos_) fail("denominator out of range");
        if (q == 0) fail("zero denominator");
        return Rational::make(1, q);
    }

    Literal literal() {
        const std::size_t begin = pos_;
        std::int64_t mantissa = 0;
        std::int64_t scale = 1;
        bool exact = true;
        bool fraction = false;
        bool any_digit = false;
        while (!at_end()) {
            const char c = text_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                any_digit = true;
                if (mantissa > (INT64_MAX - 9) / 10 || (fraction && scale > INT64_MAX / 10)) {
                    exact = false;
                } else {
                    mantissa = mantissa * 10 + (c - '0');
                    if (fraction) scale *= 10;
                }
            } else if (c == '.' && !fraction) {
                fraction = true;
            } else {
                break;
            }
            ++pos_;
        }
        if (!any_digit) fail("malformed number");
        if (!at_end() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            exact = false;
            ++pos_;
            if (!at_end() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
            const std::size_t exp_begin = pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (exp_begin == pos_) fail("malformed exponent");
        }
        Literal lit;
        lit.digits = std::string(text_.substr(begin, pos_ - begin));
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(lit.digits.data(), lit.digits.data() + lit.digits.size(), value);
        if (ec != std::errc{} || ptr != lit.digits.data() + lit.digits.size()) fail("malformed number");
        lit.value = value;
        if (exact) lit.exact = Rational::make(mantissa, scale);
        return lit;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Radians parse_tau(std::string_view text) { return Parser(text).parse(); }

}  // namespace jcm::cli
