#include <masure/valued_field.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace masure;

namespace {

FieldConfig F(long long p) { return FieldConfig::laurent(p); }
FieldConfig Q(long long p) { return FieldConfig::padic(p); }
FieldElement E(const FieldConfig& f, const std::string& s) { return parse_expr(f, s); }

FieldElement random_element(std::mt19937_64& g, const FieldConfig& f) {
    std::uniform_int_distribution<long long> c(0, f.p - 1), e(-3, 3), n(1, 3);
    auto poly = [&] {
        FieldElement s = FieldElement::zero(f);
        long long terms = n(g);
        for (long long k = 0; k < terms; ++k) s += FieldElement::from_int(f, c(g)) * FieldElement::pi_pow(f, e(g));
        return s;
    };
    FieldElement num = poly(), den = poly();
    if (den.is_zero()) den = FieldElement::one(f);
    return num / den;
}

}  // namespace

TEST(ValuedField, ArithmeticExamples) {
    EXPECT_EQ(E(F(3), "t+1") * E(F(3), "t-1"), E(F(3), "t^2-1"));
    FieldElement q = E(F(2), "1") / E(F(2), "1-t");
    EXPECT_EQ(q * E(F(2), "1-t"), FieldElement::one(F(2)));
    EXPECT_EQ(q.str(), "(1)/(1+t) mod 2");
    EXPECT_EQ(E(Q(2), "3/4") + E(Q(2), "1/4"), FieldElement::one(Q(2)));
    EXPECT_THROW(FieldElement::one(F(5)) / FieldElement::zero(F(5)), DomainError);
    EXPECT_THROW(FieldElement::zero(Q(7)).inverse(), DomainError);
}

TEST(ValuedField, ValuationExamples) {
    EXPECT_EQ(E(F(2), "t^2+t^5").valuation(), (Valuation{2, false}));
    EXPECT_EQ(E(Q(2), "12").valuation(), (Valuation{2, false}));
    EXPECT_TRUE(FieldElement::zero(F(3)).valuation().is_inf());
    EXPECT_EQ(E(Q(5), "6/125").valuation(), (Valuation{-3, false}));
    EXPECT_EQ(E(F(3), "1/(t^2+t^3)").valuation(), (Valuation{-2, false}));
}

TEST(ValuedField, ResidueExamples) {
    EXPECT_EQ(E(F(3), "1+t").residue(), 1);
    EXPECT_EQ((E(F(2), "1") / E(F(2), "1-t")).residue(), 1);
    EXPECT_THROW(E(Q(5), "6/5").residue(), DomainError);
    EXPECT_EQ(E(Q(5), "7/3").residue(), 4);  // 7 * 3^{-1} = 2 * 2 mod 5
}

TEST(ValuedField, MatrixValuationExamples) {
    auto f = F(2);
    EXPECT_EQ(matrix_valuation(torus(E(f, "t^-1"))).v, -1);
    EXPECT_EQ(matrix_valuation(Mat2::identity(f)).v, 0);
    EXPECT_EQ(matrix_valuation(x_plus(E(f, "t^-3"))).v, -3);
    Mat2 z{FieldElement::zero(f), FieldElement::zero(f), FieldElement::zero(f), FieldElement::zero(f)};
    EXPECT_THROW(matrix_valuation(z), DomainError);
}

TEST(ValuedField, TailReduceExamples) {
    auto f = F(2);
    EXPECT_EQ(tail_reduce(E(f, "1") / E(f, "1-t"), 3).value, E(f, "1+t+t^2"));
    EXPECT_TRUE(tail_reduce(E(f, "t^5"), 3).is_zero());
    EXPECT_EQ(tail_reduce(E(f, "t^-2+t^4"), 0).value, E(f, "t^-2"));
    // Rational cutoffs keep the integer exponents below them.
    EXPECT_EQ(tail_reduce(E(f, "t^-2+t^-1+t"), Rat(-1) / 2).value, E(f, "t^-2+t^-1"));
    // p-adic digits: -1 = Σ (p-1) p^k.
    EXPECT_EQ(tail_reduce(E(Q(3), "-1"), 3).value, E(Q(3), "26"));
}

TEST(ValuedField, ValuationLawsOnRandomElements) {
    std::mt19937_64 g(11);
    for (auto f : {F(2), F(3), F(5), Q(2), Q(3)})
        for (int k = 0; k < 60; ++k) {
            FieldElement a = random_element(g, f), b = random_element(g, f);
            if (a.is_zero() || b.is_zero()) continue;
            EXPECT_EQ((a * b).valuation().v, a.valuation().v + b.valuation().v);
            Valuation s = (a + b).valuation();
            EXPECT_GE(s, min(a.valuation(), b.valuation()));
            if (a.valuation() != b.valuation()) { EXPECT_EQ(s, min(a.valuation(), b.valuation())); }
            if (a.valuation().v >= 0 && b.valuation().v >= 0) {
                EXPECT_EQ((a * b).residue(), (a.residue() * b.residue()) % f.p);
            }
        }
}

TEST(ValuedField, TailReduceIsIdempotentAndAdditive) {
    std::mt19937_64 g(12);
    for (auto f : {F(2), F(3), Q(2), Q(5)})
        for (int k = 0; k < 60; ++k) {
            FieldElement a = random_element(g, f), b = random_element(g, f);
            Rat cut = Rat(static_cast<long long>(g() % 9) - 4) / Rat(static_cast<long long>(g() % 3) + 1);
            Tail ta = tail_reduce(a, cut), tb = tail_reduce(b, cut);
            EXPECT_EQ(tail_reduce(ta.value, cut).value, ta.value);
            EXPECT_EQ(tail_reduce(a + b, cut).value, tail_reduce(ta.value + tb.value, cut).value);
            FieldElement rest = a - ta.value;
            EXPECT_TRUE(rest.is_zero() || Rat(rest.valuation().v) >= cut);
        }
}

TEST(ValuedField, TextRoundTrip) {
    std::mt19937_64 g(13);
    for (auto f : {F(2), F(3), F(7), Q(2), Q(3)})
        for (int k = 0; k < 40; ++k) {
            FieldElement a = random_element(g, f);
            EXPECT_EQ(parse_element(a.str()), a);
            EXPECT_EQ(parse_element(a.str()).str(), a.str());
            EXPECT_EQ(parse_expr(f, a.expr()), a);
        }
    EXPECT_EQ(parse_element("(1+t^2+2*t^5)/(1) mod 3"), E(F(3), "1+t^2+2*t^5"));
    EXPECT_EQ(parse_element("3/4 @ p=2"), E(Q(2), "3/4"));
}

TEST(ValuedField, ConfigurationErrors) {
    EXPECT_THROW(FieldConfig::laurent(4), DomainError);
    EXPECT_THROW(FieldConfig::parse("R"), DomainError);
    EXPECT_EQ(FieldConfig::parse("F_3(t)"), F(3));
    EXPECT_EQ(FieldConfig::parse("Q_5"), Q(5));
    EXPECT_THROW(E(F(2), "1") + E(F(3), "1"), DomainError);
}
