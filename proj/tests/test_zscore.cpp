#include "doctest.h"

#include <cmath>

#include "helpers.hpp"
#include "idec/generate.hpp"
#include "idec/zscore.hpp"

using namespace idec;

TEST_CASE("perfect alternation at period 2 scores a huge Z") {
    const EncodedSequence s = test::repeat("AT", 350, "AT");  // (AT)^350, L = 700
    const InfoStat stat = z_score(s, 2, BackgroundModel::shuffled(100, 11));
    CHECK_FALSE(stat.degenerate);
    CHECK(stat.j_stat == doctest::Approx(484.2030263919617).epsilon(1e-12));
    CHECK(stat.z > 20.0);
}

TEST_CASE("null Z is approximately standard normal") {
    // i.i.d. random k=4 sequences, L = 2000, n = 5: |Z| < 4 in >= 99% of seeds.
    const std::vector<double> uniform(4, 0.25);
    const int seeds = 1000;
    int within = 0;
    double sum = 0.0;
    for (int seed = 0; seed < seeds; ++seed) {
        const EncodedSequence s =
            generate_random(uniform, 2000, 40000 + seed, test::dna_alphabet());
        const InfoStat stat = z_score(s, 5, BackgroundModel::shuffled(100, seed));
        REQUIRE_FALSE(stat.degenerate);
        if (std::abs(stat.z) < 4.0) ++within;
        sum += stat.z;
    }
    CHECK(within >= seeds * 99 / 100);
    // Mean near zero.
    CHECK(std::abs(sum / seeds) < 0.2);
}

TEST_CASE("constant sequences have degenerate backgrounds") {
    const EncodedSequence s = test::over("AB", std::string(40, 'A'));
    const InfoStat stat = z_score(s, 4, BackgroundModel::shuffled(50, 0));
    CHECK(stat.degenerate);
    CHECK(std::isnan(stat.z));
    CHECK(stat.mc_sd == 0.0);
}

TEST_CASE("z_score output is bit-identical across repeated calls") {
    const EncodedSequence s =
        generate_random({0.3, 0.3, 0.2, 0.2}, 400, 77, test::dna_alphabet());
    const BackgroundModel model = BackgroundModel::shuffled(60, 5);
    const InfoStat a = z_score(s, 9, model);
    const InfoStat b = z_score(s, 9, model);
    CHECK(a.z == b.z);
    CHECK(a.mc_mean == b.mc_mean);
    CHECK(a.mc_sd == b.mc_sd);
    CHECK(a.info_nats == b.info_nats);
}

TEST_CASE("df and J follow the correction formula") {
    const EncodedSequence s = test::repeat("ATAAACT", 100, "ACT");
    const InfoStat stat = z_score(s, 7, BackgroundModel::shuffled(50, 1));
    CHECK(stat.df == 12);
    CHECK(stat.j_stat == doctest::Approx(stat.info_nats - 12.0));
}

TEST_CASE("z_score validates preconditions") {
    const EncodedSequence s = test::dna("acgtacgt");
    CHECK_THROWS_AS(z_score(s, 1, BackgroundModel::shuffled(10, 0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(z_score(s, 5, BackgroundModel::shuffled(10, 0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(z_score(s, 2, BackgroundModel::shuffled(1, 0)),
                    std::invalid_argument);
}

TEST_CASE("phase-preserving background at n == d degenerates by construction") {
    const EncodedSequence s =
        generate_random({0.25, 0.25, 0.25, 0.25}, 120, 3, test::dna_alphabet());
    const InfoStat stat = z_score(s, 3, BackgroundModel::phase_preserving(3, 20, 0));
    CHECK(stat.degenerate);
}
