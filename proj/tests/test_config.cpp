#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "dumont/config.hpp"

using namespace dumont;

TEST_CASE("config entries apply and validate") {
    RunConfig cfg;
    apply_config_entry(cfg, "sn_max", "11");
    apply_config_entry(cfg, "tol", "1e-10");
    apply_config_entry(cfg, "format", "json");
    CHECK(cfg.sn_max == 11);
    CHECK(cfg.tol == doctest::Approx(1e-10));
    CHECK_NOTHROW(cfg.validate());

    CHECK_THROWS_AS(apply_config_entry(cfg, "nope", "1"), std::invalid_argument);
    cfg.tol = -1;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.tol = 1e-8;
    cfg.format = "yaml";
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("config files parse key=value lines with comments") {
    std::string path = "dumont_test_config.tmp";
    {
        std::ofstream out(path);
        out << "# comment line\n";
        out << "seed = 7   # trailing comment\n";
        out << "\n";
        out << "rk_steps=128\n";
    }
    RunConfig cfg = load_config_file(path, RunConfig{});
    CHECK(cfg.seed == 7);
    CHECK(cfg.rk_steps == 128);
    std::remove(path.c_str());

    CHECK_THROWS_AS(load_config_file("does-not-exist.cfg", RunConfig{}), std::runtime_error);
}
