#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "pklift/bench.hpp"

using namespace pklift;

namespace {

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

// strips the wall-clock columns (5 and 6, 0-based) from a CSV row
std::string mask_walls(const std::string& row) {
    std::stringstream ss(row);
    std::string field, out;
    int idx = 0;
    while (std::getline(ss, field, ',')) {
        if (idx == 5 || idx == 6) field = "-";
        out += field;
        out += ',';
        ++idx;
    }
    return out;
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name)
        : path("pklift_test_" + name + ".csv") {}
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("run_suite: single point stays within the multiplication bound") {
    BenchSuite suite;
    suite.grid = {{mpz_class(5), 16}};
    suite.instances_per_point = 1;
    suite.seed = 42;
    const auto records = run_suite(suite);
    REQUIRE(records.size() == 1);
    CHECK(records[0].solution_found);
    CHECK(check_bound(records[0], 10, 10)); // <= 16*(3+2) + 40
    CHECK(records[0].bach_mults > records[0].our_mults);
}

TEST_CASE("run_suite: k = 1 never enters the main loop") {
    BenchSuite suite;
    suite.grid = {{mpz_class(3), 1}};
    suite.instances_per_point = 8;
    suite.seed = 7;
    for (const auto& rec : run_suite(suite)) {
        CHECK(rec.iterations == 0);
        CHECK(rec.our_mults <= 44); // O(log p) preliminaries only
    }
}

TEST_CASE("run_suite: unsolvable instances exit early, bach cost unchanged") {
    BenchSuite suite;
    suite.grid = {{mpz_class(7), 12}};
    suite.instances_per_point = 10;
    suite.unsolvable_fraction = 0.5;
    suite.seed = 11;
    const auto records = run_suite(suite);
    std::uint64_t max_unsolved = 0, min_solved = ~std::uint64_t{0};
    std::uint64_t bach_lo = ~std::uint64_t{0}, bach_hi = 0;
    int unsolved = 0;
    for (const auto& rec : records) {
        if (rec.solution_found) {
            min_solved = std::min(min_solved, rec.our_mults);
        } else {
            ++unsolved;
            max_unsolved = std::max(max_unsolved, rec.our_mults);
        }
        bach_lo = std::min(bach_lo, rec.bach_mults);
        bach_hi = std::max(bach_hi, rec.bach_mults);
    }
    CHECK(unsolved == 5);
    CHECK(max_unsolved < min_solved);
    CHECK(bach_lo == bach_hi); // identical theta schedule either way
}

TEST_CASE("check_bound: worked values") {
    BenchRecord rec;
    rec.p = 5;
    rec.k = 16;
    rec.our_mults = 70;
    CHECK(check_bound(rec, 10, 10));
    rec.p = 3;
    rec.k = 1;
    rec.our_mults = 200;
    CHECK_FALSE(check_bound(rec, 10, 10));
    rec.our_mults = 34; // exactly 1*(2+2) + 10*2 + 10
    CHECK(check_bound(rec, 10, 10));
    rec.our_mults = 35;
    CHECK_FALSE(check_bound(rec, 10, 10));
}

TEST_CASE("emit_csv: layout") {
    TempFile tmp("layout");
    emit_csv({}, tmp.path);
    auto lines = read_lines(tmp.path);
    REQUIRE(lines.size() == 1);
    CHECK(lines[0] ==
          "p,k,seed,our_mults,bach_mults,our_wall_ns,bach_wall_ns,"
          "solution_found,iterations");

    BenchRecord rec;
    rec.p = 5;
    rec.k = 2;
    rec.seed = 9;
    rec.our_mults = 10;
    rec.bach_mults = 20;
    rec.our_wall_ns = 111;
    rec.bach_wall_ns = 222;
    rec.solution_found = true;
    rec.iterations = 1;
    emit_csv({rec}, tmp.path);
    lines = read_lines(tmp.path);
    REQUIRE(lines.size() == 2);
    CHECK(lines[1] == "5,2,9,10,20,111,222,1,1");
}

TEST_CASE("emit_csv: rejects unwritable paths") {
    CHECK_THROWS_AS(emit_csv({}, "/nonexistent-dir/out.csv"), std::runtime_error);
}

TEST_CASE("suite runs are deterministic apart from wall clocks") {
    BenchSuite suite;
    suite.grid = {{mpz_class(5), 16}, {mpz_class(3), 9}};
    suite.instances_per_point = 4;
    suite.unsolvable_fraction = 0.25;
    suite.seed = 1234;

    TempFile t1("det1"), t2("det2");
    emit_csv(run_suite(suite), t1.path);
    emit_csv(run_suite(suite), t2.path);
    const auto l1 = read_lines(t1.path);
    const auto l2 = read_lines(t2.path);
    REQUIRE(l1.size() == l2.size());
    for (std::size_t i = 0; i < l1.size(); ++i) {
        CHECK(mask_walls(l1[i]) == mask_walls(l2[i]));
    }
}
