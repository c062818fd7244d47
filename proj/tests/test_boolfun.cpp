#include <doctest.h>

#include <map>

#include "linlab/boolfun.hpp"
#include "oracles.hpp"

using namespace linlab;

namespace {

QuadraticFn quad_from_bits(std::size_t n, std::uint64_t coeff_bits) {
    return QuadraticFn::from_coeffs(n, F2Vector::from_index(moment_dim(n), coeff_bits));
}

// x1*x2 at a given dimension.
QuadraticFn product_fn(std::size_t n) {
    F2Vector pairs(pair_count(n));
    pairs.set(pair_index(n, 0, 1), true);
    return QuadraticFn(F2Vector(n), pairs);
}

}  // namespace

TEST_CASE("moment vector layout") {
    CHECK(moment_vector(F2Vector::from_bits({0, 0})) == F2Vector::from_bits({0, 0, 0}));
    CHECK(moment_vector(F2Vector::from_bits({1, 1})) == F2Vector::from_bits({1, 1, 1}));
    CHECK(moment_vector(F2Vector::unit(3, 0)) ==
          F2Vector::from_bits({1, 0, 0, 0, 0, 0}));
    // Pairs come after the coordinates, lexicographically.
    F2Vector x = F2Vector::from_bits({1, 0, 1});
    F2Vector mu = moment_vector(x);
    CHECK(mu.get(0));
    CHECK_FALSE(mu.get(1));
    CHECK(mu.get(2));
    CHECK_FALSE(mu.get(3 + pair_index(3, 0, 1)));
    CHECK(mu.get(3 + pair_index(3, 0, 2)));
    CHECK_FALSE(mu.get(3 + pair_index(3, 1, 2)));
}

TEST_CASE("evaluation matches the coefficient dot product exhaustively") {
    for (std::size_t n = 1; n <= 4; ++n) {
        std::uint64_t functions = std::uint64_t(1) << moment_dim(n);
        for (std::uint64_t c = 0; c < functions; ++c) {
            QuadraticFn f = quad_from_bits(n, c);
            F2Vector coeffs = f.coeffs();
            CHECK(coeffs.to_index() == c);
            for (std::uint64_t xi = 0; xi < (std::uint64_t(1) << n); ++xi) {
                F2Vector x = F2Vector::from_index(n, xi);
                int direct = f(x);
                int via_moment = coeffs.dot(moment_vector(x)) ? 1 : 0;
                int oracle = oracles::eval_quad_bits(n, oracles::quad_b_part(n, c),
                                                     oracles::quad_pair_part(n, c), xi);
                CHECK(direct == via_moment);
                CHECK(direct == oracle);
            }
        }
    }
}

TEST_CASE("quadratic evaluation basics") {
    QuadraticFn f = product_fn(2);
    CHECK(f(F2Vector::from_bits({1, 1})) == 1);
    CHECK(f(F2Vector::from_bits({1, 0})) == 0);
    CHECK(f(F2Vector(2)) == 0);

    // x1*x2 + x1 at (1,1): 1 + 1 = 0.
    F2Vector b = F2Vector::unit(2, 0);
    F2Vector pairs(1);
    pairs.set(0, true);
    QuadraticFn g(b, pairs);
    CHECK(g(F2Vector::from_bits({1, 1})) == 0);

    CHECK_THROWS_AS(g(F2Vector(3)), std::invalid_argument);
}

TEST_CASE("every quadratic vanishes at zero") {
    for (std::size_t n = 1; n <= 3; ++n) {
        for (std::uint64_t c = 0; c < (std::uint64_t(1) << moment_dim(n)); ++c)
            CHECK(quad_from_bits(n, c)(F2Vector(n)) == 0);
    }
}

TEST_CASE("derivative of a linear function is constant") {
    LinearFn f(F2Vector::from_bits({1, 0, 1}));
    TruthTable table = to_truth_table(f);
    for (std::uint64_t yi = 0; yi < 8; ++yi) {
        F2Vector y = F2Vector::from_index(3, yi);
        TruthTable d = derivative(table, y);
        for (std::size_t idx = 0; idx < d.size(); ++idx) CHECK(d.at(idx) == f(y));
    }
}

TEST_CASE("derivative of x1*x2 along e1 is x2") {
    TruthTable table = to_truth_table(product_fn(2));
    TruthTable d = derivative(table, F2Vector::unit(2, 0));
    // Expect g(x) = x2.
    for (std::uint64_t xi = 0; xi < 4; ++xi) CHECK(d.at(xi) == int((xi >> 1) & 1));
}

TEST_CASE("third derivatives of quadratics vanish exhaustively") {
    for (std::size_t n = 1; n <= 3; ++n) {
        std::uint64_t functions = std::uint64_t(1) << moment_dim(n);
        std::uint64_t points = std::uint64_t(1) << n;
        for (std::uint64_t c = 0; c < functions; ++c) {
            TruthTable table = to_truth_table(quad_from_bits(n, c));
            for (std::uint64_t yi = 0; yi < points; ++yi)
                for (std::uint64_t zi = 0; zi < points; ++zi)
                    for (std::uint64_t wi = 0; wi < points; ++wi) {
                        TruthTable d3 = derivative(
                            derivative(derivative(table, F2Vector::from_index(n, yi)),
                                       F2Vector::from_index(n, zi)),
                            F2Vector::from_index(n, wi));
                        bool zero = true;
                        for (std::size_t idx = 0; idx < d3.size(); ++idx)
                            if (d3.at(idx)) zero = false;
                        CHECK(zero);
                    }
        }
    }
}

TEST_CASE("agreement") {
    TruthTable f = to_truth_table(product_fn(2));
    CHECK(agreement(f, f) == Rational(1));

    TruthTable complement(2);
    for (std::size_t i = 0; i < 4; ++i) complement.set(i, 1 - f.at(i));
    CHECK(agreement(f, complement) == Rational(1));  // |0 - 1| under the signed definition

    TruthTable zero(2);
    CHECK(agreement(f, zero) == Rational(1, 2));  // agrees on 3 of 4 inputs

    CHECK_THROWS_AS(agreement(f, TruthTable(3)), std::invalid_argument);
}

TEST_CASE("walsh spectrum of linear functions is a point mass") {
    for (std::uint64_t a = 0; a < 8; ++a) {
        LinearFn f(F2Vector::from_index(3, a));
        WalshSpectrum spec = walsh_spectrum(to_truth_table(f));
        for (std::uint64_t b = 0; b < 8; ++b)
            CHECK(spec.coef[b] == (a == b ? Rational(1) : Rational(0)));
    }
}

TEST_CASE("walsh spectrum of x1*x2 is flat at 1/2") {
    WalshSpectrum spec = walsh_spectrum(to_truth_table(product_fn(2)));
    for (const Rational& c : spec.coef) CHECK(c.abs() == Rational(1, 2));
}

TEST_CASE("walsh spectrum matches direct summation on random tables") {
    Rng rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 1 + draw_below(rng, 4);
        TruthTable t(n);
        std::vector<int> plain(t.size());
        for (std::size_t i = 0; i < t.size(); ++i) {
            int bit = static_cast<int>(draw_bits(rng, 1));
            t.set(i, bit);
            plain[i] = bit;
        }
        WalshSpectrum spec = walsh_spectrum(t);
        std::vector<std::int64_t> direct = oracles::walsh_direct(plain);
        Rational square_sum(0);
        for (std::size_t a = 0; a < t.size(); ++a) {
            CHECK(spec.coef[a] ==
                  Rational(direct[a], static_cast<std::int64_t>(t.size())));
            square_sum += spec.coef[a] * spec.coef[a];
        }
        CHECK(square_sum == Rational(1));  // Parseval, exactly
    }
}

TEST_CASE("distance to linear") {
    CHECK(distance_to_linear(to_truth_table(LinearFn(F2Vector::from_bits({1, 0})))) ==
          Rational(1));
    CHECK(distance_to_linear(to_truth_table(product_fn(2))) == Rational(1, 2));

    // x1x2 + x3x4: rank(B) = 4, so the best agreement is 1/4.
    F2Vector pairs(pair_count(4));
    pairs.set(pair_index(4, 0, 1), true);
    pairs.set(pair_index(4, 2, 3), true);
    QuadraticFn f(F2Vector(4), pairs);
    CHECK(distance_to_linear(to_truth_table(f)) == Rational(1, 4));
}

TEST_CASE("fourier profile against the full transform, exhaustively at n <= 4") {
    for (std::size_t n = 1; n <= 4; ++n) {
        for (std::uint64_t c = 0; c < (std::uint64_t(1) << moment_dim(n)); ++c) {
            QuadraticFn f = quad_from_bits(n, c);
            FourierProfile p = fourier_profile(f);
            CHECK(p.support == std::uint64_t(1) << p.rank_b);
            CHECK(p.magnitude == Rational::pow2(-static_cast<int>(p.rank_b / 2)));

            WalshSpectrum spec = walsh_spectrum(to_truth_table(f));
            CHECK(spec.support() == p.support);
            CHECK(spec.max_abs() == p.magnitude);
            for (const Rational& coef : spec.coef) {
                if (!coef.is_zero()) CHECK(coef.abs() == p.magnitude);
            }
        }
    }
}

TEST_CASE("fourier profile special cases") {
    FourierProfile lin = fourier_profile(QuadraticFn(F2Vector::unit(3, 1), F2Vector(3)));
    CHECK(lin.rank_b == 0);
    CHECK(lin.support == 1);
    CHECK(lin.magnitude == Rational(1));

    FourierProfile prod = fourier_profile(product_fn(2));
    CHECK(prod.rank_b == 2);
    CHECK(prod.support == 4);
    CHECK(prod.magnitude == Rational(1, 2));

    F2Vector pairs(pair_count(4));
    pairs.set(pair_index(4, 0, 1), true);
    pairs.set(pair_index(4, 2, 3), true);
    FourierProfile two = fourier_profile(QuadraticFn(F2Vector(4), pairs));
    CHECK(two.rank_b == 4);
    CHECK(two.support == 16);
    CHECK(two.magnitude == Rational(1, 4));
}

TEST_CASE("samplers are uniform within 3 sigma") {
    Rng rng(2024);
    const int draws = 10000;

    std::map<std::uint64_t, int> lin_counts;
    for (int i = 0; i < draws; ++i) ++lin_counts[sample_linear(1, rng).coeffs().to_index()];
    // p = 1/2, sigma = sqrt(N/4) = 50.
    for (std::uint64_t a = 0; a < 2; ++a) {
        CHECK(lin_counts[a] > 5000 - 150);
        CHECK(lin_counts[a] < 5000 + 150);
    }

    std::map<std::uint64_t, int> quad_counts;
    for (int i = 0; i < draws; ++i) ++quad_counts[sample_quadratic(2, rng).coeffs().to_index()];
    // 8 functions at n=2; p = 1/8, sigma ~ 33.
    for (std::uint64_t c = 0; c < 8; ++c) {
        CHECK(quad_counts[c] > 1250 - 99);
        CHECK(quad_counts[c] < 1250 + 99);
    }
}

TEST_CASE("samplers are deterministic given the seed") {
    for (std::uint64_t seed : {1ULL, 7ULL, 123456789ULL}) {
        Rng a(seed), b(seed);
        for (int i = 0; i < 100; ++i) {
            CHECK(sample_linear(5, a) == sample_linear(5, b));
            CHECK(sample_quadratic(5, a) == sample_quadratic(5, b));
        }
    }
}

TEST_CASE("function literals round trip") {
    Rng rng(55);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + draw_below(rng, 8);
        LinearFn lf = sample_linear(n, rng);
        FnLiteral parsed = parse_fn_literal(to_literal(lf));
        REQUIRE(std::holds_alternative<LinearFn>(parsed));
        CHECK(std::get<LinearFn>(parsed) == lf);

        QuadraticFn qf = sample_quadratic(n, rng);
        FnLiteral qparsed = parse_fn_literal(to_literal(qf));
        REQUIRE(std::holds_alternative<QuadraticFn>(qparsed));
        CHECK(std::get<QuadraticFn>(qparsed) == qf);
    }
}

TEST_CASE("function literal errors") {
    CHECK_THROWS_AS(parse_fn_literal("nope"), std::invalid_argument);
    CHECK_THROWS_AS(parse_fn_literal("linear:2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_fn_literal("linear:2:zz"), std::invalid_argument);
    CHECK_THROWS_AS(parse_fn_literal("quad:2:1"), std::invalid_argument);
    // Stray high bit: n=2 has one hex digit for a, values above 3 are invalid.
    CHECK_THROWS_AS(parse_fn_literal("linear:2:7"), std::invalid_argument);
}

TEST_CASE("quadratic dependence is moment dependence, with equal coefficients") {
    // Sets {x_i} where sum a_i f(x_i) = 0 for all quadratics are exactly
    // the sets whose moment vectors obey the same linear relation. The
    // function check is exhaustive at n <= 4 and sampled at n = 5.
    Rng rng(404);
    for (int trial = 0; trial < 1000; ++trial) {
        std::size_t n = 1 + draw_below(rng, 5);
        std::size_t k = 1 + draw_below(rng, 4);
        std::vector<F2Vector> xs;
        for (std::size_t i = 0; i < k; ++i) xs.push_back(random_vector(rng, n));
        std::uint64_t coeffs = 1 + draw_below(rng, (std::uint64_t(1) << k) - 1);

        F2Vector mu_sum(moment_dim(n));
        for (std::size_t i = 0; i < k; ++i)
            if ((coeffs >> i) & 1) mu_sum ^= moment_vector(xs[i]);
        bool moment_relation = mu_sum.is_zero();

        auto relation_under = [&](const QuadraticFn& f) {
            int acc = 0;
            for (std::size_t i = 0; i < k; ++i)
                if ((coeffs >> i) & 1) acc ^= f(xs[i]);
            return acc == 0;
        };

        bool function_relation = true;
        if (n <= 4) {
            for (std::uint64_t c = 0; c < (std::uint64_t(1) << moment_dim(n)); ++c) {
                if (!relation_under(quad_from_bits(n, c))) {
                    function_relation = false;
                    break;
                }
            }
        } else {
            for (int sample = 0; sample < 2000; ++sample) {
                if (!relation_under(sample_quadratic(n, rng))) {
                    function_relation = false;
                    break;
                }
            }
        }
        // A sampled check can only break one way: a moment relation implies
        // the function relation outright.
        if (moment_relation || n <= 4) CHECK(moment_relation == function_relation);
        else CHECK_FALSE(function_relation);
    }
}
