#include <doctest.h>

#include <cmath>
#include <random>

#include "skinning/errors.hpp"
#include "skinning/tower.hpp"
#include "test_util.hpp"

using namespace skinning;
using test_util::random_tower;
using test_util::random_wide_double;
using test_util::towers_close;

TEST_CASE("from_real canonical forms") {
    const TowerReal zero = TowerReal::from_real(0.0);
    CHECK(zero.is_zero());
    CHECK(zero.sign() == 0);
    CHECK(zero.level() == 0);
    CHECK(zero.mag() == 0.0);
    CHECK_FALSE(zero.recip());

    const TowerReal one = TowerReal::from_real(1.0);
    CHECK(one.sign() == 1);
    CHECK_FALSE(one.recip());
    CHECK(one.level() == 0);
    CHECK(one.mag() == 1.0);

    const TowerReal tiny = TowerReal::from_real(1e-300);
    CHECK(tiny.sign() == 1);
    CHECK(tiny.recip());
    CHECK(tiny.level() == 0);
    CHECK(tiny.mag() == 1.0 / 1e-300);

    const TowerReal neg = TowerReal::from_real(-2.5);
    CHECK(neg.sign() == -1);
    CHECK(neg.mag() == 2.5);

    // Above exp(700) the level-0 band ends.
    const TowerReal big = TowerReal::from_real(1.5e304);
    CHECK(big.level() == 1);
    CHECK(big.mag() == doctest::Approx(std::log(1.5e304)).epsilon(1e-15));

    CHECK_THROWS_AS(TowerReal::from_real(std::nan("")), DomainError);
    CHECK_THROWS_AS(TowerReal::from_real(std::numeric_limits<double>::infinity()), DomainError);
}

TEST_CASE("normalization is idempotent and unique") {
    // exp^1(10) is below the level band: collapses to the plain value.
    const TowerReal x = TowerReal::from_parts(1, false, 1, 10.0);
    CHECK(x.level() == 0);
    CHECK(x.mag() == std::exp(10.0));
    // a sub-one magnitude flips to the reciprocal
    const TowerReal y = TowerReal::from_parts(1, false, 0, 0.1353352832366127);  // ~e^-2
    CHECK(y.recip());
    CHECK(y.level() == 0);
    CHECK(y.mag() == 1.0 / 0.1353352832366127);

    CHECK_THROWS_AS(TowerReal::from_parts(1, false, 0, -1.0), DomainError);
    CHECK_THROWS_AS(TowerReal::from_parts(1, true, 0, 0.0), DomainError);
}

TEST_CASE("ln_of drops one level exactly") {
    const TowerReal e1000 = exp_of(TowerReal::from_real(1000.0));
    CHECK(e1000.level() == 1);
    CHECK(ln_of(e1000) == TowerReal::from_real(1000.0));

    // exp^2-scale value: ln is an exact level shift.
    const TowerReal inner = exp_of(TowerReal::from_real(10.6916));
    CHECK(inner.level() == 0);
    CHECK(inner.mag() == doctest::Approx(43984.82644930956).epsilon(1e-15));
    const TowerReal outer = exp_of(inner);
    CHECK(outer.level() == 1);
    CHECK(ln_of(outer) == inner);

    // reciprocal: ln(1/x) = -ln(x), exact at level >= 1
    const TowerReal r = TowerReal::from_parts(1, true, 1, 800.0);
    CHECK(ln_of(r) == TowerReal::from_real(-800.0));

    CHECK_THROWS_AS(ln_of(TowerReal::from_real(0.0)), DomainError);
    CHECK_THROWS_AS(ln_of(TowerReal::from_real(-1.0)), DomainError);
    CHECK(ln_of(TowerReal::from_real(1.0)).is_zero());
}

TEST_CASE("exp_of examples") {
    CHECK(exp_of(TowerReal::from_real(0.0)) == TowerReal::from_real(1.0));

    const TowerReal up = exp_of(TowerReal::from_real(1000.0));
    CHECK(up.level() == 1);
    CHECK_FALSE(up.recip());
    CHECK(up.mag() == 1000.0);

    const TowerReal down = exp_of(TowerReal::from_real(-43991.0));
    CHECK(down.level() == 1);
    CHECK(down.recip());
    CHECK(down.mag() == 43991.0);
    CHECK(ln_of(down) == TowerReal::from_real(-43991.0));

    // exact inverse at level >= 1
    const TowerReal x = TowerReal::from_parts(1, false, 2, 1234.5);
    CHECK(exp_of(ln_of(x)) == x);
}

TEST_CASE("mul examples") {
    const TowerReal a = TowerReal::from_parts(1, false, 1, 1000.0);
    CHECK(mul(a, a) == TowerReal::from_parts(1, false, 1, 2000.0));

    const TowerReal x = TowerReal::from_parts(1, false, 1, 777.0);
    const TowerReal rx = TowerReal::from_parts(1, true, 1, 777.0);
    CHECK(mul(x, rx) == TowerReal::from_real(1.0));

    // dominance: a factor whose log sits below the resolution of the larger
    // log is absorbed entirely
    const TowerReal huge = TowerReal::from_parts(1, false, 2, 1000.0);
    const TowerReal small = TowerReal::from_parts(1, false, 1, 5000.0);
    CHECK(mul(huge, small) == huge);

    CHECK(mul(TowerReal::from_real(-2.0), TowerReal::from_real(3.0)) ==
          TowerReal::from_real(-6.0));
    CHECK(mul(TowerReal::from_real(-2.0), TowerReal::from_real(-3.0)) ==
          TowerReal::from_real(6.0));
    CHECK(mul(TowerReal::from_real(0.0), huge).is_zero());

    // exact level-0 products, straight and reciprocal
    CHECK(mul(TowerReal::from_real(0.25), TowerReal::from_real(0.5)) ==
          TowerReal::from_real(0.125));
    CHECK(mul(TowerReal::from_real(8.0), TowerReal::from_real(0.25)) ==
          TowerReal::from_real(2.0));
    // overflow of the level-0 band routes through logs
    const TowerReal b = TowerReal::from_real(1e300);
    const TowerReal p = mul(b, b);
    CHECK(p.level() == 1);
    CHECK(p.mag() == doctest::Approx(2.0 * std::log(1e300)).epsilon(1e-15));
}

TEST_CASE("cmp is a total order matching real values") {
    const TowerReal big = exp_of(exp_of(TowerReal::from_real(10.69)));  // e^(e^10.69)
    const TowerReal e700 = TowerReal::from_parts(1, false, 1, 700.0);
    CHECK(cmp(big, e700) == Ordering::Greater);

    CHECK(cmp(TowerReal::from_parts(1, true, 1, 800.0),
              TowerReal::from_parts(1, true, 1, 750.0)) == Ordering::Less);  // e^-800 < e^-750
    CHECK(cmp(big, big) == Ordering::Equal);

    CHECK(cmp(TowerReal::from_real(-5.0), TowerReal::from_real(0.0)) == Ordering::Less);
    CHECK(cmp(TowerReal::from_real(0.0), TowerReal::from_real(5.0)) == Ordering::Less);
    CHECK(cmp(TowerReal::from_parts(-1, false, 1, 1000.0), TowerReal::from_real(-5.0)) ==
          Ordering::Less);
    CHECK(cmp(TowerReal::from_real(0.9), TowerReal::from_real(1.0)) == Ordering::Less);
    CHECK(cmp(TowerReal::from_real(1.0), TowerReal::from_real(1.1)) == Ordering::Less);
}

TEST_CASE("render formatting contract") {
    CHECK(render(TowerReal::from_real(0.0)) == "0");
    CHECK(render(TowerReal::from_real(1.0)) == "1");
    CHECK(render(TowerReal::from_real(0.25)) == "1/4 ≈ 0.25");

    const TowerReal r = exp_of(TowerReal::from_real(-283937.2));
    CHECK(render(r) == "exp(-283937.2) ≈ 10^(-123312.4)");

    const TowerReal two = exp_of(exp_of(TowerReal::from_real(1000.0)));
    CHECK(render(two) == "exp^2(1000)");
    CHECK(render(TowerReal::from_parts(1, true, 2, 1000.0)) == "1/exp^2(1000)");
    CHECK(render(TowerReal::from_real(-2.5)) == "-2.5");
}

TEST_CASE("parse inverts render bit-for-bit") {
    std::mt19937_64 rng(20240817);
    for (int i = 0; i < 10000; ++i) {
        const TowerReal x = random_tower(rng, 4);
        const TowerReal back = parse_tower(render(x));
        REQUIRE(back == x);
    }
    CHECK(parse_tower("0") == TowerReal::from_real(0.0));
    CHECK(parse_tower(" exp(-5) ") == exp_of(TowerReal::from_real(-5.0)));
    CHECK_THROWS_AS(parse_tower(""), ParseError);
    CHECK_THROWS_AS(parse_tower("garbage"), ParseError);
    CHECK_THROWS_AS(parse_tower("exp("), ParseError);
    CHECK_THROWS_AS(parse_tower("exp^1(5)"), ParseError);
}

TEST_CASE("property: order embedding against doubles") {
    std::mt19937_64 rng(987654321);
    std::uniform_real_distribution<double> log_mag(-700.0, 700.0);
    std::bernoulli_distribution neg(0.5);
    int done = 0;
    while (done < 100000) {
        const double u1 = log_mag(rng);
        const double u2 = log_mag(rng);
        if (std::fabs(u1 - u2) < 1e-9) continue;  // below reciprocal-rounding resolution
        const double v1 = (neg(rng) ? -1.0 : 1.0) * std::exp(u1);
        const double v2 = (neg(rng) ? -1.0 : 1.0) * std::exp(u2);
        const Ordering o = cmp(TowerReal::from_real(v1), TowerReal::from_real(v2));
        const Ordering expect =
            v1 < v2 ? Ordering::Less : v1 > v2 ? Ordering::Greater : Ordering::Equal;
        REQUIRE(o == expect);
        ++done;
    }
    // reflexivity on identical representations
    for (int i = 0; i < 1000; ++i) {
        const double v = random_wide_double(rng);
        REQUIRE(cmp(TowerReal::from_real(v), TowerReal::from_real(v)) == Ordering::Equal);
    }
}

TEST_CASE("property: exp_of undoes ln_of") {
    std::mt19937_64 rng(13572468);
    for (int i = 0; i < 100000; ++i) {
        TowerReal x = random_tower(rng, 3);
        if (x.sign() < 0) x = x.negated();
        const TowerReal y = exp_of(ln_of(x));
        if (x.level() >= 1) {
            REQUIRE(y == x);  // pure level shifts are exact
        } else {
            REQUIRE(towers_close(y, x, 2.0));
        }
    }
}

TEST_CASE("property: mul is commutative bit-for-bit and associative in log space") {
    std::mt19937_64 rng(1122334455);
    for (int i = 0; i < 100000; ++i) {
        const TowerReal x = random_tower(rng, 2);
        const TowerReal y = random_tower(rng, 2);
        REQUIRE(mul(x, y) == mul(y, x));
    }
    for (int i = 0; i < 30000; ++i) {
        const TowerReal x = random_tower(rng, 2);
        const TowerReal y = random_tower(rng, 2);
        const TowerReal z = random_tower(rng, 2);
        const TowerReal left = mul(mul(x, y), z);
        const TowerReal right = mul(x, mul(y, z));
        // the roundings live at the scale of the largest log the products carried
        double scale = 1.0;
        for (const TowerReal* v : {&x, &y, &z}) {
            if (!v->is_zero() && v->level() <= 1) {
                scale = std::max(scale, std::fabs(test_util::log_image(*v)));
            }
        }
        REQUIRE(towers_close(left, right, 4.0, 2.0 * scale));
    }
}

TEST_CASE("property: mul is monotone in each factor") {
    std::mt19937_64 rng(5566778899);
    for (int i = 0; i < 100000; ++i) {
        TowerReal x = random_tower(rng, 2);
        TowerReal y = random_tower(rng, 2);
        TowerReal z = random_tower(rng, 2);
        if (z.sign() < 0) z = z.negated();
        if (z.is_zero()) continue;
        if (cmp(x, y) == Ordering::Greater) std::swap(x, y);
        REQUIRE(cmp(mul(x, z), mul(y, z)) != Ordering::Greater);
    }
}
