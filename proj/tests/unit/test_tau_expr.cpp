#include <cmath>
#include <numbers>

#include "jcm/cli/tau_expr.hpp"
#include "support.hpp"

using jcm::ErrorCode;
using jcm::Rational;
using jcm::cli::parse_tau;

namespace {

Rational exact(std::string_view text) {
    const auto r = parse_tau(text);
    EXPECT_TRUE(r.exact()) << text;
    return r.exact() ? *r.pi_multiple() : Rational{};
}

}  // namespace

TEST(TauExpr, SpecialTimesAreExact) {
    EXPECT_EQ(exact("0"), Rational::make(0, 1));
    EXPECT_EQ(exact("pi"), Rational::make(1, 1));
    EXPECT_EQ(exact("pi/8"), Rational::make(1, 8));
    EXPECT_EQ(exact("pi/8-pi/24000"), Rational::make(2999, 24000));
    EXPECT_EQ(exact("pi/4"), Rational::make(1, 4));
    EXPECT_EQ(exact("pi/2"), Rational::make(1, 2));
    EXPECT_EQ(exact("pi/24"), Rational::make(1, 24));
    EXPECT_EQ(exact("pi/4+pi/800"), Rational::make(201, 800));
}

TEST(TauExpr, CoefficientForms) {
    EXPECT_EQ(exact("3pi/800"), Rational::make(3, 800));
    EXPECT_EQ(exact("3*pi/800"), Rational::make(3, 800));
    EXPECT_EQ(exact("3 * pi / 800"), Rational::make(3, 800));
    EXPECT_EQ(exact("0.25pi"), Rational::make(1, 4));
    EXPECT_EQ(exact("2.5*pi/10"), Rational::make(1, 4));
    EXPECT_EQ(exact("-pi/4"), Rational::make(-1, 4));
    EXPECT_EQ(exact(" pi/4 - 6pi/800 "), Rational::make(194, 800));
    EXPECT_EQ(exact("0 + pi"), Rational::make(1, 1));
}

TEST(TauExpr, PlainNumbersAreInexact) {
    const auto a = parse_tau("0.785");
    EXPECT_FALSE(a.exact());
    EXPECT_EQ(a.value(), 0.785);
    const auto b = parse_tau("1.5/3");
    EXPECT_FALSE(b.exact());
    EXPECT_EQ(b.value(), 0.5);
    EXPECT_EQ(parse_tau("1e-3").value(), 1e-3);
    const auto mixed = parse_tau("pi/4+0.001");
    EXPECT_FALSE(mixed.exact());
    EXPECT_DOUBLE_EQ(mixed.value(), std::numbers::pi / 4 + 0.001);
}

TEST(TauExpr, MalformedInputs) {
    for (const char* bad : {"", "   ", "pie", "pi/", "pi/0", "pi/x", "1e", "2*", "2*3", "pi+", "pi pi", "1.2.3",
                            "1e3pi", "tau", "pi/8-", "pi/99999999999999999999"}) {
        SCOPED_TRACE(bad);
        EXPECT_JCM_ERROR(parse_tau(bad), ErrorCode::ParseError);
    }
}
