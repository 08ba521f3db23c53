#include <doctest.h>

#include <random>

#include "nanoswarm/protocol.hpp"

using namespace nanoswarm;

namespace {

SitePattern pattern_ab() {
    SitePattern p;
    p.sites = {{{0.0015, 0.0025}, 25.0}, {{0.0035, 0.0025}, 25.0}};
    return p;
}

}  // namespace

TEST_SUITE("protocol") {

TEST_CASE("algorithm tokens round-trip") {
    for (auto alg : {AlgorithmKind::RW, AlgorithmKind::KM, AlgorithmKind::KMA, AlgorithmKind::KMAR})
        CHECK(algorithm_from_string(to_string(alg)) == alg);
    CHECK(to_string(AlgorithmKind::RW) == "RW");
    CHECK(to_string(AlgorithmKind::KMAR) == "KMAR");
    CHECK_FALSE(algorithm_from_string("km").has_value());
}

TEST_CASE("movement mode per algorithm") {
    CHECK(mode_for(AlgorithmKind::RW) == Mode::Explore);
    CHECK(mode_for(AlgorithmKind::KM) == Mode::Follow);
    CHECK(mode_for(AlgorithmKind::KMA) == Mode::Follow);
    CHECK(mode_for(AlgorithmKind::KMAR) == Mode::Follow);
}

TEST_CASE("site detection uses a closed ball") {
    const SitePattern p = pattern_ab();
    const double eps = 2e-5;
    CHECK(detect_site(p.sites[0].pos, p, eps) == 0);
    CHECK_FALSE(detect_site({0.0015 + 1.5 * eps, 0.0025}, p, eps).has_value());
    CHECK(detect_site({0.0035 - 0.5 * eps, 0.0025}, p, eps) == 1);

    // Exactly-on-the-boundary needs dyadic coordinates so the computed
    // distance is the radius bit for bit; the ball must be closed.
    SitePattern dyadic;
    dyadic.sites = {{{0.125, 0.25}, 5.0}};
    const double r = 0x1p-16;
    CHECK(detect_site({0.125 + r, 0.25}, dyadic, r) == 0);
    CHECK_FALSE(detect_site({0.125 + r + 0x1p-30, 0.25}, dyadic, r).has_value());
}

TEST_CASE("threshold ratio is derived, never stored") {
    ThresholdParams th;
    th.r_km = 1.0;
    th.k = 1e6;
    CHECK(th.r_am(10.0) == 1e7);
    th.k = 5e6;
    CHECK(th.r_am(10.0) == 5e7);
    CHECK(th.r_am(0.0) == 0.0);
}

TEST_CASE("drop rules per algorithm") {
    const SitePattern p = pattern_ab();
    FieldParams f;
    f.p_a = 10.0;
    ThresholdParams th;
    th.k = 1e6;  // r_am = 1e7
    DepositLog log(p.size());

    SUBCASE("RW and KM drop the drug only") {
        for (auto alg : {AlgorithmKind::RW, AlgorithmKind::KM}) {
            const DropDecision d = decide_drops(alg, 0, 100, p, log, f, th);
            CHECK(d.drop_k);
            CHECK_FALSE(d.drop_a);
            CHECK_FALSE(d.drop_r);
        }
    }

    SUBCASE("KMA adds the attractant") {
        const DropDecision d = decide_drops(AlgorithmKind::KMA, 0, 100, p, log, f, th);
        CHECK(d.drop_k);
        CHECK(d.drop_a);
        CHECK_FALSE(d.drop_r);
    }

    SUBCASE("KMAR with an empty log drops the attractant") {
        const DropDecision d = decide_drops(AlgorithmKind::KMAR, 0, 100, p, log, f, th);
        CHECK(d.drop_k);
        CHECK(d.drop_a);
        CHECK_FALSE(d.drop_r);
    }

    SUBCASE("KMAR switches to the repellent at the threshold, inclusive") {
        // One fresh deposit: gamma_A at the site after one second is
        // P_A/(4 pi D_A) = 7.96e8, so the ratio is 3.18e7 >= 1e7.
        log.record_a(0, 99);
        const DropDecision d = decide_drops(AlgorithmKind::KMAR, 0, 100, p, log, f, th);
        CHECK(d.drop_k);
        CHECK_FALSE(d.drop_a);
        CHECK(d.drop_r);

        // Exactly at the threshold: q == r_am still drops the repellent.
        const double q = gamma_a(100, p.sites[0].pos, p, log, f) / p.sites[0].strength;
        ThresholdParams exact = th;
        exact.k = q / (exact.r_km * f.p_a);
        REQUIRE(exact.r_am(f.p_a) == q);
        const DropDecision at = decide_drops(AlgorithmKind::KMAR, 0, 100, p, log, f, exact);
        CHECK(at.drop_r);
        CHECK_FALSE(at.drop_a);
    }

    SUBCASE("KMAR re-evaluates per arrival: diffusion can flip the decision back") {
        log.record_a(0, 10);
        ThresholdParams tight = th;
        tight.k = 2e6;  // r_am = 2e7, below the fresh one-second ratio of 3.18e7
        const DropDecision soon = decide_drops(AlgorithmKind::KMAR, 0, 11, p, log, f, tight);
        CHECK(soon.drop_r);
        const DropDecision later = decide_drops(AlgorithmKind::KMAR, 0, 2000, p, log, f, tight);
        CHECK(later.drop_a);  // signal decayed below the threshold again
    }

    SUBCASE("zero-demand site reads as an infinite ratio") {
        SitePattern degen = p;
        degen.sites[1].strength = 0.0;
        const DropDecision d = decide_drops(AlgorithmKind::KMAR, 1, 100, degen, log, f, th);
        CHECK(d.drop_k);
        CHECK_FALSE(d.drop_a);
        CHECK(d.drop_r);
    }
}

TEST_CASE("KMAR with a huge threshold decides exactly like KMA") {
    std::mt19937_64 rng(6061);
    std::uniform_real_distribution<double> coord(0.0005, 0.0045);
    std::uniform_real_distribution<double> demand(1.0, 50.0);
    std::uniform_int_distribution<int> site_pick(0, 1);
    std::uniform_int_distribution<std::int64_t> gap(1, 50);

    FieldParams f;
    f.p_a = 10.0;
    ThresholdParams huge;
    huge.r_km = 1.0;
    huge.k = 1e29;  // r_am = 1e30

    for (int scenario = 0; scenario < 1000; ++scenario) {
        SitePattern p;
        p.sites = {{{coord(rng), coord(rng)}, demand(rng)},
                   {{coord(rng), coord(rng)}, demand(rng)}};
        DepositLog log(2);
        std::int64_t t = 1;
        const int drops = scenario % 8;
        for (int d = 0; d < drops; ++d) {
            log.record_a(site_pick(rng), t);
            t += gap(rng);
        }
        const int site = site_pick(rng);
        const std::int64_t arrival = t + gap(rng);
        const DropDecision kmar =
            decide_drops(AlgorithmKind::KMAR, site, arrival, p, log, f, huge);
        const DropDecision kma = decide_drops(AlgorithmKind::KMA, site, arrival, p, log, f, huge);
        CHECK(kmar.drop_k == kma.drop_k);
        CHECK(kmar.drop_a == kma.drop_a);
        CHECK(kmar.drop_r == kma.drop_r);
    }
}

}  // TEST_SUITE
