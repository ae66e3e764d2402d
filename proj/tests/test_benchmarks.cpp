#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <fstream>

#include "goose/benchmarks.hpp"
#include "goose/cec2019.hpp"

using namespace goose;
using namespace goose::benchmarks;

TEST_CASE("registry metadata follows the published tables") {
    const Problem f1 = make_problem("F1");
    CHECK(f1.dim == 10);
    CHECK(f1.bounds.lower[0] == -100.0);
    CHECK(f1.bounds.upper[0] == 100.0);
    CHECK(*f1.known_optimum == 0.0);

    // the tables print the per-dimension value -418.9829; the registry
    // stores the x-dim optimum
    const Problem f8 = make_problem("F8");
    CHECK(*f8.known_optimum == doctest::Approx(-418.9829 * 10).epsilon(1e-6));

    const Problem cec3 = make_problem("CEC03");
    CHECK(cec3.dim == 18);
    CHECK(cec3.bounds.lower[0] == -4.0);
    CHECK(cec3.bounds.upper[0] == 4.0);
    CHECK(*cec3.known_optimum == 1.0);

    const Problem cec1 = make_problem("CEC01");
    CHECK(cec1.dim == 9);
    CHECK(cec1.bounds.upper[0] == 8192.0);

    CHECK(make_problem("F14").dim == 2);
    CHECK(make_problem("F15").dim == 4);
    CHECK(make_problem("F19").dim == 3);
}

TEST_CASE("unknown ids are rejected with the list of valid ones") {
    try {
        make_problem("NOPE");
        FAIL("expected an exception");
    } catch (const std::invalid_argument& e) {
        const std::string msg = e.what();
        CHECK(msg.find("NOPE") != std::string::npos);
        CHECK(msg.find("F1") != std::string::npos);
        CHECK(msg.find("CEC10") != std::string::npos);
    }
}

TEST_CASE("dimension overrides work for scalable functions only") {
    CHECK(make_problem("F1", 30).dim == 30);
    CHECK(make_problem("F8", 30).bounds.dim() == 30);
    CHECK_THROWS_AS(make_problem("F14", 10), std::invalid_argument);
    CHECK_THROWS_AS(make_problem("CEC04", 5), std::invalid_argument);
    CHECK_THROWS_AS(make_problem("F1", 0), std::invalid_argument);
}

TEST_CASE("dimension mismatch on evaluate") {
    const Problem f1 = make_problem("F1");
    CHECK_THROWS_AS(f1.evaluate({1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("point evaluations match hand values") {
    const std::vector<double> origin10(10, 0.0);
    CHECK(make_problem("F1").evaluate(origin10) == 0.0);
    CHECK(make_problem("F11").evaluate(origin10) == 0.0);
    CHECK(std::fabs(make_problem("F10").evaluate(origin10)) < 1e-12);

    CHECK(make_problem("F16").evaluate({0.0898, -0.7126}) ==
          doctest::Approx(-1.0316).epsilon(1e-3));
    CHECK(make_problem("F18").evaluate({0.0, -1.0}) == 3.0);
    CHECK(make_problem("F17").evaluate({3.141592653589793, 2.275}) ==
          doctest::Approx(0.3979).epsilon(1e-3));
    CHECK(make_problem("F19").evaluate({0.114614, 0.555649, 0.852547}) ==
          doctest::Approx(-3.8628).epsilon(1e-3));

    // Rosenbrock at ones, step function on the plateau
    CHECK(make_problem("F5").evaluate(std::vector<double>(10, 1.0)) == 0.0);
    CHECK(make_problem("F6").evaluate(std::vector<double>(10, 0.4)) == 0.0);
}

TEST_CASE("every stored optimum location reproduces its optimum") {
    for (const std::string& id : registered_ids()) {
        const Problem p = make_problem(id);
        REQUIRE(p.optimum_location.has_value());
        REQUIRE(p.known_optimum.has_value());
        const double tol = id.rfind("CEC", 0) == 0 ? 1e-6 : 1e-9;
        const double got = p.evaluate(*p.optimum_location);
        INFO(id, ": got ", got, " expected ", *p.known_optimum);
        CHECK(std::fabs(got - *p.known_optimum) <= tol);
        CHECK(p.bounds.contains(*p.optimum_location, 1e-12));
    }
}

TEST_CASE("neighborhood optimality over random box samples") {
    Rng rng(2718);
    for (const char* id : {"F1", "F2", "F3", "F4", "F5", "F6", "F9", "F10", "F11", "F12", "F13",
                           "F16", "F17", "F18", "F19"}) {
        const Problem p = make_problem(id);
        for (int k = 0; k < 1000; ++k) {
            std::vector<double> x(p.dim);
            for (int j = 0; j < p.dim; ++j)
                x[j] = rng.uniform(p.bounds.lower[j], p.bounds.upper[j]);
            INFO(id);
            CHECK(p.evaluate(x) >= *p.known_optimum - 1e-9);
        }
    }
}

TEST_CASE("even functions are symmetric") {
    Rng rng(314);
    for (const char* id : {"F1", "F9", "F10", "F11"}) {
        const Problem p = make_problem(id);
        for (int k = 0; k < 200; ++k) {
            std::vector<double> x(p.dim), nx(p.dim);
            for (int j = 0; j < p.dim; ++j) {
                x[j] = rng.uniform(p.bounds.lower[j], p.bounds.upper[j]);
                nx[j] = -x[j];
            }
            CHECK(std::fabs(p.evaluate(x) - p.evaluate(nx)) <= 1e-12);
        }
    }
}

TEST_CASE("F7 noise comes from the supplied source") {
    const Problem f7 = make_problem("F7");
    CHECK(f7.stochastic);
    const std::vector<double> origin(10, 0.0);

    SequenceSource zero;
    zero.uniforms = {0.0};
    CHECK(f7.evaluate(origin, &zero) == 0.0);

    SequenceSource some;
    some.uniforms = {0.73};
    CHECK(f7.evaluate(origin, &some) == 0.73);

    CHECK(f7.evaluate(origin, nullptr) == 0.0); // no source: noise-free
}

TEST_CASE("suite configurations") {
    const auto classical = suite_problems(SuiteId::classical19);
    REQUIRE(classical.size() == 19);
    for (int i = 0; i < 13; ++i) CHECK(classical[i].dim == 10);
    CHECK(classical[13].dim == 2); // F14
    CHECK(classical[14].dim == 4); // F15
    CHECK(classical[15].dim == 2);
    CHECK(classical[16].dim == 2);
    CHECK(classical[17].dim == 2);
    CHECK(classical[18].dim == 3); // F19

    const auto five = suite_problems(SuiteId::five_classical30);
    REQUIRE(five.size() == 5);
    for (const auto& p : five) CHECK(p.dim == 30);
    CHECK(five[0].id == "F1");
    CHECK(five[2].id == "F8");
    CHECK(five[2].bounds.upper[0] == 500.0);

    SuiteOptions uniform;
    uniform.uniform_range_512 = true;
    const auto five_u = suite_problems(SuiteId::five_classical30, uniform);
    for (const auto& p : five_u) {
        CHECK(p.bounds.lower[0] == -5.12);
        CHECK(p.bounds.upper[0] == 5.12);
    }

    const auto cec = suite_problems(SuiteId::cec2019);
    REQUIRE(cec.size() == 10);
    CHECK(cec[0].dim == 9);
    CHECK(cec[1].dim == 16);
    CHECK(cec[1].bounds.upper[0] == 16384.0);
    CHECK(cec[2].dim == 18);
    for (int i = 3; i < 10; ++i) {
        CHECK(cec[i].dim == 10);
        CHECK(cec[i].bounds.upper[0] == 100.0);
        CHECK(cec[i].note.find("unofficial") != std::string::npos);
    }
    CHECK(cec[0].note.empty()); // CEC01..03 are never shifted or rotated
}

TEST_CASE("suite id parsing") {
    CHECK(parse_suite_id("classical19") == SuiteId::classical19);
    CHECK(parse_suite_id("cec2019") == SuiteId::cec2019);
    CHECK_THROWS_AS(parse_suite_id("bogus"), std::invalid_argument);
    CHECK(suite_name(SuiteId::five_classical30) == "five_classical30");
}

TEST_CASE("CEC reference values at landmark points") {
    // the four untransformed functions at the global optimum all sit at 1
    CHECK(make_problem("CEC04").evaluate(std::vector<double>(10, 0.0)) == 1.0);
    CHECK(make_problem("CEC05").evaluate(std::vector<double>(10, 0.0)) == 1.0);
    CHECK(std::fabs(make_problem("CEC06").evaluate(std::vector<double>(10, 0.0)) - 1.0) < 1e-9);
    CHECK(std::fabs(make_problem("CEC07").evaluate(std::vector<double>(10, 0.0)) - 1.0) < 1e-9);
    CHECK(make_problem("CEC08").evaluate(std::vector<double>(10, 0.0)) == 1.0);
    CHECK(std::fabs(make_problem("CEC09").evaluate(std::vector<double>(10, 0.0)) - 1.0) < 1e-12);
    CHECK(std::fabs(make_problem("CEC10").evaluate(std::vector<double>(10, 0.0)) - 1.0) < 1e-12);

    // spread-out Lennard-Jones cluster: near-zero pair energies, so the
    // value approaches 1 + cluster offset
    std::vector<double> spread(18, 0.0);
    for (int a = 0; a < 6; ++a) {
        spread[3 * a] = (a % 2 ? -4.0 : 4.0);
        spread[3 * a + 1] = (a / 2 == 0 ? -4.0 : (a / 2 == 1 ? 0.0 : 4.0));
        spread[3 * a + 2] = (a % 3 == 0 ? -4.0 : 4.0);
    }
    const double lj = make_problem("CEC03").evaluate(spread);
    CHECK(lj > 10.0);
    CHECK(lj < 14.0);
}

TEST_CASE("CEC shift/rotation files move the optimum") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "goose_cec_data_test";
    fs::create_directories(dir);
    {
        std::ofstream out(dir / "cec04.txt");
        // shift of (1.5, ..., 1.5), identity rotation
        for (int j = 0; j < 10; ++j) out << (j ? " " : "") << 1.5;
        out << '\n';
        for (int i = 0; i < 10; ++i) {
            for (int j = 0; j < 10; ++j) out << (j ? " " : "") << (i == j ? 1 : 0);
            out << '\n';
        }
    }
    const Problem shifted = cec2019_problem(4, dir.string());
    CHECK(shifted.note.empty());
    CHECK(shifted.evaluate(std::vector<double>(10, 1.5)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(shifted.evaluate(std::vector<double>(10, 0.0)) > 1.0);
    CHECK((*shifted.optimum_location)[0] == 1.5);

    // missing file falls back to identity and flags the problem
    const Problem fallback = cec2019_problem(5, dir.string());
    CHECK(fallback.note.find("unofficial") != std::string::npos);

    // malformed file: too few rotation rows
    {
        std::ofstream out(dir / "cec06.txt");
        out << "0 0 0 0 0 0 0 0 0 0\n1 0 0 0 0 0 0 0 0 0\n";
    }
    CHECK_THROWS_AS(cec2019_problem(6, dir.string()), std::runtime_error);
    fs::remove_all(dir);
}

TEST_CASE("registered id list is sorted and complete") {
    const auto ids = registered_ids();
    CHECK(ids.size() == 29);
    CHECK(std::is_sorted(ids.begin(), ids.end()));
    CHECK(std::find(ids.begin(), ids.end(), "F18") != ids.end());
    CHECK(std::find(ids.begin(), ids.end(), "CEC01") != ids.end());
}
