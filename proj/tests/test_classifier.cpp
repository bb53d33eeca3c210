#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "qosc/classifier.hpp"
#include "qosc/errors.hpp"
#include "qosc/spectrum.hpp"

using namespace qosc;

namespace {

std::set<Family> families_of(const std::vector<RepClass>& classes) {
    std::set<Family> out;
    for (const RepClass& r : classes) {
        out.insert(r.family);
    }
    return out;
}

// Independent oracle: decides which families exist at (q, B) by iterating the
// recurrence from trial head/tail vectors, without the classifier's case analysis.
struct BruteForce {
    double q;
    double nu0;
    double b;
    long window = 60;

    double source(long n) const { return std::pow(q, -nu0 - static_cast<double>(n)) * (1.0 + parity_sign(n) * b); }

    std::vector<double> forward(double lambda0) const {
        std::vector<double> out{lambda0};
        for (long n = 0; n < window; ++n) {
            out.push_back(q * out.back() + source(n));
        }
        return out; // out[k] = lambda_k
    }
    std::vector<double> backward(double lambda0) const {
        std::vector<double> out{lambda0};
        for (long n = -1; n >= -window; --n) {
            out.push_back((out.back() - source(n)) / q);
        }
        return out; // out[k] = lambda_{-k}
    }

    std::set<Family> families() const {
        std::set<Family> out;
        const double tiny = 1e-10;
        // lowest weight: a Psi_0 = 0
        const auto up = forward(0.0);
        if (std::abs(up[1]) <= tiny) {
            out.insert(Family::OneDimensional);
        } else if (up[1] > 0 && std::abs(up[2]) <= tiny) {
            out.insert(Family::TwoDimensionalEven);
        } else if (std::all_of(up.begin() + 1, up.end(), [](double v) { return v > 0; })) {
            out.insert(Family::Fock);
        }
        // highest weight: a^+ Psi_0 = 0, i.e. lambda_1 = 0 solved for lambda0
        const double top = -source(0) / q;
        if (top > tiny) {
            const auto down = backward(top);
            if (std::abs(down[1]) <= tiny * std::max(1.0, top)) {
                out.insert(Family::TwoDimensionalOdd);
            } else if (std::all_of(down.begin(), down.end(), [](double v) { return v > 0; })) {
                out.insert(Family::AntiFock);
            }
        }
        // both directions: a large lambda0 keeps the spectrum positive whenever any lambda0 can
        const auto up_big = forward(100.0);
        const auto down_big = backward(100.0);
        const auto positive = [](double v) { return v > 0; };
        if (std::all_of(up_big.begin(), up_big.end(), positive) &&
            std::all_of(down_big.begin(), down_big.end(), positive)) {
            out.insert(Family::Unbounded);
        }
        return out;
    }
};

bool far_from_boundaries(double q, double b) {
    const double margin = 0.05;
    if (std::abs(b + 1.0) < margin) {
        return false;
    }
    return q > 1.0 || (std::abs(b - b_star(q)) > margin && std::abs(b + b_star(q)) > margin);
}

} // namespace

TEST(Thresholds, Examples) {
    const ThresholdSet a = thresholds(make_params(0.5, 1.0), 0.0, 0.0);
    EXPECT_NEAR(a.b_star, -5.0 / 3.0, 1e-15);
    EXPECT_NEAR(a.d_plus, -2.0 / 3.0, 1e-15);
    EXPECT_NEAR(a.d_minus, -2.0 / 3.0, 1e-15);
    const ThresholdSet b = thresholds(make_params(2.0, 1.0), 0.0, 0.0);
    EXPECT_NEAR(b.b_star, 5.0 / 3.0, 1e-15);
    EXPECT_NEAR(b.d_plus, 2.0 / 3.0, 1e-15);
    const ThresholdSet c = thresholds(make_params(0.5, 1.0), 0.0, -5.0 / 3.0);
    EXPECT_NEAR(c.d_minus, 0.0, 1e-15);
    EXPECT_NEAR(c.d_plus, -4.0 / 3.0, 1e-15);
}

TEST(Thresholds, BStarSign) {
    for (double q : {0.1, 0.5, 0.99}) {
        EXPECT_LT(b_star(q), -1.0);
    }
    for (double q : {1.01, 2.0, 10.0}) {
        EXPECT_GT(b_star(q), 1.0);
    }
}

TEST(EnumerateClasses, Examples) {
    const auto fock = enumerate_classes(make_params(2.0, 1.0), 0.0, 0.5);
    ASSERT_EQ(fock.size(), 1u);
    EXPECT_EQ(fock[0].family, Family::Fock);
    EXPECT_EQ(*fock[0].forced_lambda0, 0.0);
    EXPECT_EQ(*fock[0].index_lo, 0);
    EXPECT_FALSE(fock[0].index_hi.has_value());

    EXPECT_EQ(families_of(enumerate_classes(make_params(0.5, 1.0), 0.0, -1.0)),
              std::set<Family>{Family::OneDimensional});
    EXPECT_EQ(families_of(enumerate_classes(make_params(0.5, 1.0), 0.0, -5.0 / 3.0)),
              std::set<Family>{Family::TwoDimensionalOdd});

    const auto anti = enumerate_classes(make_params(0.5, 1.0), 0.0, -2.0);
    ASSERT_EQ(anti.size(), 1u);
    EXPECT_EQ(anti[0].family, Family::AntiFock);
    EXPECT_NEAR(*anti[0].forced_lambda0, 2.0, 1e-15);
    EXPECT_EQ(*anti[0].index_hi, 0);

    const auto mixed = enumerate_classes(make_params(0.5, 1.0), 0.0, 0.5);
    ASSERT_EQ(mixed.size(), 2u);
    EXPECT_EQ(mixed[0].family, Family::Fock);
    EXPECT_EQ(mixed[1].family, Family::Unbounded);
    ASSERT_TRUE(mixed[1].lambda0_constraint.has_value());
    EXPECT_NEAR(mixed[1].lambda0_constraint->min, 7.0 / 15.0, 1e-15); // 2/3 - 0.2
    EXPECT_FALSE(mixed[1].lambda0_constraint->strict);
}

TEST(EnumerateClasses, EdgeOfUnboundedRegionIsStrict) {
    const auto cls = enumerate_classes(make_params(0.5, 1.0), 0.0, 5.0 / 3.0);
    ASSERT_EQ(cls.size(), 2u);
    EXPECT_EQ(cls[0].family, Family::TwoDimensionalEven);
    EXPECT_EQ(cls[1].family, Family::Unbounded);
    EXPECT_TRUE(cls[1].lambda0_constraint->strict);
}

TEST(EnumerateClasses, EmptyRegions) {
    EXPECT_TRUE(enumerate_classes(make_params(2.0, 1.0), 0.0, -2.0).empty());
    EXPECT_TRUE(enumerate_classes(make_params(0.5, 1.0), 0.0, 3.0).empty());
}

TEST(EnumerateClasses, OnlyUnboundedBetweenBStarAndMinusOne) {
    EXPECT_EQ(families_of(enumerate_classes(make_params(0.5, 1.0), 0.0, -1.3)), std::set<Family>{Family::Unbounded});
}

TEST(ClassifyLabel, Examples) {
    EXPECT_EQ(classify_label(make_params(2.0, 1.0), make_label(0, 1, 0)).family, Family::Fock);
    EXPECT_EQ(classify_label(make_params(0.5, 1.0), make_label(0, 0, 1)).family, Family::Unbounded);
    EXPECT_THROW(classify_label(make_params(2.0, 1.0), make_label(0, 1, 0.3)), NoRepresentation);
}

TEST(ClassifyLabel, PicksTheFamilyMatchingLambda0) {
    const AlgebraParams p = make_params(0.5, 1.0);
    EXPECT_EQ(classify_label(p, make_label(0, 0.5, 0)).family, Family::Fock);
    EXPECT_EQ(classify_label(p, make_label(0, 0.5, 7.0 / 15.0)).family, Family::Unbounded); // e0 = 0
    EXPECT_THROW(classify_label(p, make_label(0, 0.5, 0.3)), NoRepresentation);
    EXPECT_EQ(classify_label(p, make_label(0, 5.0 / 3.0, 0)).family, Family::TwoDimensionalEven);
    // at B = -B* the strict edge e0 = 0 is exactly the even two-dimensional head
    EXPECT_EQ(classify_label(p, make_label(0, 5.0 / 3.0, 1e-3)).family, Family::Unbounded);
    EXPECT_EQ(classify_label(p, make_label(0, -5.0 / 3.0, 4.0 / 3.0)).family, Family::TwoDimensionalOdd);
    // B = B* and B = -1 list only their finite family
    EXPECT_THROW(classify_label(p, make_label(0, -5.0 / 3.0, 3.0)), NoRepresentation);
    EXPECT_THROW(classify_label(p, make_label(0, -1.0, 3.0)), NoRepresentation);
}

TEST(ClassifyLabel, RenumberedLabelGetsDiagnostic) {
    const AlgebraParams p = make_params(2.0, 1.0);
    const double lambda2 = lambda_closed(p, make_label(0, 1, 0), 2);
    try {
        classify_label(p, make_label(0, 1, lambda2));
        FAIL() << "expected NoRepresentation";
    } catch (const NoRepresentation& e) {
        const std::string msg = e.what();
        EXPECT_NE(msg.find("Fock requires lambda0 = 0"), std::string::npos) << msg;
        EXPECT_NE(msg.find("canonical"), std::string::npos) << msg;
    }
}

TEST(ClassifyLabel, BoundaryEpsilonIsConfigurable) {
    const AlgebraParams p = make_params(2.0, 1.0);
    const RepLabel near_one_dim = make_label(0, -1.0 + 1e-8, 0);
    EXPECT_EQ(classify_label(p, near_one_dim).family, Family::Fock);
    Tolerances loose;
    loose.boundary = 1e-6;
    EXPECT_EQ(classify_label(p, near_one_dim, loose).family, Family::OneDimensional);
}

TEST(ClassifierOracle, InteriorGridMatchesBruteForce) {
    int compared = 0;
    for (double q : {0.2, 0.35, 0.5, 0.65, 0.8, 1.25, 1.6, 2.0, 3.0, 4.0}) {
        for (int i = 0; i <= 160; ++i) {
            const double b = -4.0 + 0.05 * i + 0.0123;
            if (!far_from_boundaries(q, b)) {
                continue;
            }
            for (double nu0 : {-0.7, 0.0, 1.3}) {
                const auto got = families_of(enumerate_classes(make_params(q, 1.0), nu0, b));
                const auto oracle = BruteForce{q, nu0, b}.families();
                ASSERT_EQ(got, oracle) << "q=" << q << " B=" << b << " nu0=" << nu0;
                ++compared;
            }
        }
    }
    EXPECT_GT(compared, 3000);
}

TEST(ClassifierOracle, BoundaryPointsMatchBruteForce) {
    for (double q : {0.3, 0.5, 0.75}) {
        const AlgebraParams p = make_params(q, 1.0);
        for (double nu0 : {0.0, 0.4}) {
            const double bs = b_star(q);
            EXPECT_EQ(families_of(enumerate_classes(p, nu0, bs)), std::set<Family>{Family::TwoDimensionalOdd});
            EXPECT_TRUE((BruteForce{q, nu0, bs}.families().count(Family::TwoDimensionalOdd)));
            EXPECT_TRUE(families_of(enumerate_classes(p, nu0, -bs)).count(Family::TwoDimensionalEven));
            EXPECT_TRUE((BruteForce{q, nu0, -bs}.families().count(Family::TwoDimensionalEven)));
            EXPECT_TRUE((BruteForce{q, nu0, -1.0}.families().count(Family::OneDimensional)));
        }
    }
    EXPECT_TRUE((BruteForce{2.0, 0.0, -1.0}.families().count(Family::OneDimensional)));
}

TEST(ClassifierProperty, ExhaustiveAndConsistentWithClassifyLabel) {
    const auto check = [](double q, double b) {
        const AlgebraParams p = make_params(q, 1.0);
        const double nu0 = 0.25;
        for (const RepClass& rep : enumerate_classes(p, nu0, b)) {
            double lambda0 = 0.0;
            if (rep.forced_lambda0) {
                lambda0 = *rep.forced_lambda0;
            } else {
                lambda0 = std::max(0.0, rep.lambda0_constraint->min) + 0.5;
            }
            const RepClass got = classify_label(p, make_label(nu0, b, lambda0));
            ASSERT_EQ(got.family, rep.family) << "q=" << q << " B=" << b;
        }
    };
    for (int iq = 1; iq < 40; ++iq) {
        for (int ib = 0; ib <= 80; ++ib) {
            check(iq / 40.0, -4.0 + 0.1 * ib);
            check(1.0 + 3.0 * iq / 40.0, -4.0 + 0.1 * ib);
        }
    }
}

TEST(ClassifierProperty, ClassesHaveNonnegativeSpectra) {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> qlo(0.1, 0.95), qhi(1.05, 4.0), bd(-4.0, 4.0), nu(-2.0, 2.0);
    for (int i = 0; i < 2000; ++i) {
        const double q = i % 2 ? qlo(rng) : qhi(rng);
        const double nu0 = nu(rng);
        const double b = i % 7 == 0 ? -1.0 : (i % 11 == 0 ? b_star(q) : bd(rng));
        const AlgebraParams p = make_params(q, 1.0);
        for (const RepClass& rep : enumerate_classes(p, nu0, b)) {
            const double lambda0 = rep.forced_lambda0 ? std::max(0.0, *rep.forced_lambda0)
                                                      : std::max(0.0, rep.lambda0_constraint->min) + 1.0;
            const RepLabel label = make_label(nu0, b, lambda0);
            const long lo = std::max(-60L, rep.index_lo.value_or(-60));
            const long hi = std::min(60L, rep.index_hi.value_or(60));
            for (long n = lo; n <= hi; ++n) {
                ASSERT_GE(lambda_closed(p, label, n), -1e-9 * std::max(1.0, lambda_scale(p, label, n)))
                    << family_name(rep.family) << " q=" << q << " B=" << b << " n=" << n;
            }
        }
    }
}

TEST(ClassifierProperty, BoundaryAnnihilation) {
    for (double q : {0.2, 0.5, 0.9}) {
        const AlgebraParams p = make_params(q, 1.0);
        for (double nu0 : {-1.0, 0.0, 0.6}) {
            const double bs = b_star(q);
            // anti-Fock: lambda_1 = 0
            const RepClass anti = enumerate_classes(p, nu0, bs - 0.7).front();
            ASSERT_EQ(anti.family, Family::AntiFock);
            EXPECT_NEAR(lambda_closed(p, make_label(nu0, bs - 0.7, *anti.forced_lambda0), 1), 0.0,
                        1e-9 * std::max(1.0, *anti.forced_lambda0));
            // odd two-dimensional: lambda_-1 = lambda_1 = 0, lambda_0 = 2 q^{-nu0}/(1/q - q)
            const RepClass odd = enumerate_classes(p, nu0, bs).front();
            const RepLabel odd_label = make_label(nu0, bs, *odd.forced_lambda0);
            EXPECT_NEAR(*odd.forced_lambda0, 2.0 * std::pow(q, -nu0) / (1.0 / q - q), 1e-12);
            EXPECT_NEAR(lambda_closed(p, odd_label, -1), 0.0, 1e-9 * *odd.forced_lambda0);
            EXPECT_NEAR(lambda_closed(p, odd_label, 1), 0.0, 1e-9 * *odd.forced_lambda0);
            // even two-dimensional: lambda_0 = lambda_2 = 0, lambda_1 = 2 q^{-nu0-1}/(1/q - q)
            const RepLabel even_label = make_label(nu0, -bs, 0.0);
            const double l1 = 2.0 * std::pow(q, -nu0 - 1.0) / (1.0 / q - q);
            EXPECT_NEAR(lambda_closed(p, even_label, 1), l1, 1e-12 * l1);
            EXPECT_NEAR(lambda_closed(p, even_label, 2), 0.0, 1e-9 * l1);
        }
    }
}

TEST(ClassifierProperty, LimitSurvivalFamilies) {
    for (double q : {0.1, 0.5, 0.9, 0.999, 1.001, 1.5, 3.0}) {
        EXPECT_EQ(families_of(enumerate_classes(make_params(q, 1.0), 0.3, -1.0)),
                  std::set<Family>{Family::OneDimensional});
    }
    for (double q : {1.001, 1.1, 2.0, 4.0}) {
        for (int ib = 0; ib <= 80; ++ib) {
            for (Family f : families_of(enumerate_classes(make_params(q, 1.0), 0.0, -4.0 + 0.1 * ib))) {
                EXPECT_TRUE(f == Family::OneDimensional || f == Family::Fock);
            }
        }
    }
}

TEST(Equivalence, Examples) {
    const AlgebraParams p = make_params(0.5, 1.0);
    const RepLabel a = make_label(0, 0.5, 1);
    EXPECT_TRUE(equivalent(p, a, make_label(1, -0.5, 2)));
    EXPECT_EQ(equivalence_shift(p, a, make_label(1, -0.5, 2)), 1);
    EXPECT_TRUE(equivalent(p, a, a));
    EXPECT_FALSE(equivalent(p, a, make_label(0.5, 0.5, 1)));
}

TEST(Equivalence, RejectsNonUnboundedLabels) {
    const AlgebraParams p = make_params(0.5, 1.0);
    EXPECT_THROW(equivalent(p, make_label(0, 0.5, 0), make_label(0, 0.5, 1)), NotUnbounded); // Fock
    EXPECT_THROW(equivalent(p, make_label(0, 0.5, 0.1), make_label(0, 0.5, 1)), NotUnbounded); // no rep
    EXPECT_THROW(equivalent(make_params(2.0, 1.0), make_label(0, 1, 0), make_label(0, 1, 0)), NotUnbounded);
}

TEST(EquivalenceProperty, IsAnEquivalenceRelationAndShiftsSpectra) {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> qd(0.3, 0.9), nu(-1.0, 1.0), frac(-0.95, 0.95), extra(0.05, 3.0);
    std::uniform_int_distribution<long> shift(-5, 5);
    for (int i = 0; i < 200; ++i) {
        const AlgebraParams p = make_params(qd(rng), 1.0);
        const double b = frac(rng) * -b_star(p.q());
        const double nu0 = nu(rng);
        const auto cls = enumerate_classes(p, nu0, b);
        const RepClass& unb = cls.back();
        ASSERT_EQ(unb.family, Family::Unbounded);
        const RepLabel x = make_label(nu0, b, std::max(0.0, unb.lambda0_constraint->min) + extra(rng));
        const long m = shift(rng), k = shift(rng);
        const RepLabel y = shift_label(p, x, m);
        const RepLabel z = shift_label(p, y, k);

        EXPECT_TRUE(equivalent(p, x, x));
        EXPECT_EQ(equivalence_shift(p, x, y), m);
        EXPECT_EQ(equivalence_shift(p, y, x), -m);
        EXPECT_EQ(equivalence_shift(p, y, z), k);
        EXPECT_EQ(equivalence_shift(p, x, z), m + k);

        for (long n = -15; n <= 15; ++n) {
            const double expect = lambda_closed(p, x, n + m);
            EXPECT_NEAR(lambda_closed(p, y, n), expect, 1e-9 * std::max(1.0, std::abs(expect)));
        }
        const RepLabel perturbed(y.nu0(), y.b(), y.lambda0() + 1e-3);
        EXPECT_FALSE(equivalent(p, x, perturbed));
    }
}

TEST(ParseFamily, AcceptsCliSpellings) {
    EXPECT_EQ(parse_family("one-dim"), Family::OneDimensional);
    EXPECT_EQ(parse_family("TwoDimensionalOdd"), Family::TwoDimensionalOdd);
    EXPECT_EQ(parse_family("two-dim-even"), Family::TwoDimensionalEven);
    EXPECT_EQ(parse_family("anti-fock"), Family::AntiFock);
    EXPECT_EQ(parse_family("Fock"), Family::Fock);
    EXPECT_EQ(parse_family("unbounded"), Family::Unbounded);
    EXPECT_FALSE(parse_family("three-dim").has_value());
    for (Family f : {Family::OneDimensional, Family::TwoDimensionalOdd, Family::TwoDimensionalEven, Family::Fock,
                     Family::AntiFock, Family::Unbounded}) {
        EXPECT_EQ(parse_family(family_name(f)), f);
    }
}
