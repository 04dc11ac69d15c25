#include "beg/config.hpp"
#include "beg/errors.hpp"

#include <doctest.h>

#include <string>

using namespace beg;

namespace {

std::string message_of(RunConfig cfg) {
    try {
        validate_config(cfg);
    } catch (const ValidationError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_SUITE("config") {

TEST_CASE("numbers accept fractions") {
    CHECK(parse_number("1/64") == 1.0 / 64);
    CHECK(parse_number(" 0.25 ") == 0.25);
    CHECK(parse_number("-3") == -3.0);
    CHECK_THROWS_AS(parse_number("abc"), ValidationError);
    CHECK_THROWS_AS(parse_number("1/0"), ValidationError);
    CHECK_THROWS_AS(parse_number("1.5x"), ValidationError);
}

TEST_CASE("a full configuration") {
    const RunConfig cfg = parse_config(R"(# comment
k = 0.6
gamma = 1
zeta = 1/2
epsilon = 1/32
minimizer = structured
max_steps = 12
initial.box = -0.5 0.5 -0.25 0.25
initial.cuts = 0.1 0.1 0.1 0.1
surfactant = 200
seed = 9
branch = ceil
horizon = 0.3
compare.epsilons = 1/16 1/32
)");
    CHECK(cfg.params.k == 0.6);
    CHECK(cfg.params.gamma == 1);
    CHECK(cfg.params.zeta == 0.5);
    CHECK(cfg.params.epsilon == 1.0 / 32);
    CHECK(cfg.flow.max_steps == 12);
    CHECK(cfg.initial.surfactant_count == 200L);
    CHECK(cfg.flow.seed == std::uint64_t(9));
    CHECK(cfg.branch == Branch::Ceil);
    CHECK(cfg.horizon == 0.3);
    REQUIRE(cfg.compare_epsilons.size() == 2);
    CHECK(cfg.compare_epsilons[0] == 1.0 / 16);
    const auto P = cfg.initial.octagon.parallel_lengths();
    CHECK(P[0] == doctest::Approx(0.8));
    CHECK(P[1] == doctest::Approx(0.3));
}

TEST_CASE("defaults") {
    const RunConfig cfg = parse_config("");
    CHECK(cfg.params.k == 0.5);
    CHECK(cfg.flow.minimizer == MinimizerKind::Structured);
    CHECK_FALSE(cfg.initial.surfactant_count.has_value());
    REQUIRE(cfg.compare_epsilons.size() == 1);
    CHECK(cfg.compare_epsilons[0] == cfg.params.epsilon);
}

TEST_CASE("malformed input") {
    CHECK_THROWS_AS(parse_config("k 0.5"), ValidationError);
    CHECK_THROWS_AS(parse_config("colour = red"), ValidationError);
    CHECK_THROWS_AS(parse_config("k = 0.5\nk = 0.6"), ValidationError);
    CHECK_THROWS_AS(parse_config("minimizer = fast"), ValidationError);
    CHECK_THROWS_AS(parse_config("initial.box = 1 0 0 1"), ValidationError);
    CHECK_THROWS_AS(parse_config("initial.box = 0 1"), ValidationError);
    CHECK_THROWS_AS(parse_config("max_steps = 2.5"), ValidationError);
}

TEST_CASE("validation") {
    CHECK(message_of(parse_config("k = 0.2")).find("(1/3, 1)") != std::string::npos);
    CHECK(message_of(parse_config("surfactant = 3")).find("needs") != std::string::npos);
    // The ring alone is exactly enough to surround the initial octagon.
    CHECK(message_of(parse_config("gamma = 1\nsurfactant = ring")).empty());

    RunConfig critical = parse_config("gamma = 2");
    validate_config(critical);
    REQUIRE(critical.warnings.size() == 1);
    CHECK(critical.warnings[0].find("gamma = 2") != std::string::npos);
}

TEST_CASE("resolved configuration as JSON") {
    RunConfig cfg = parse_config("epsilon = 1/16\nseed = 4");
    validate_config(cfg);
    const Json j = config_to_json(cfg);
    CHECK(j["epsilon"] == 0.0625);
    CHECK(j["seed"] == 4);
    CHECK(j["surfactant"] == "ring");
    CHECK(j["branch"] == "floor");
}

}  // TEST_SUITE
