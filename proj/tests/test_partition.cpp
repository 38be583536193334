#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "starprof/error.hpp"
#include "starprof/partition.hpp"

using namespace starprof;

TEST_CASE("partition validation") {
    CHECK_NOTHROW(Partition({3, 2, 2}));
    CHECK_THROWS_AS(Partition({2, 3}), DomainError);
    CHECK_THROWS_AS(Partition({2, 0}), DomainError);
    CHECK_THROWS_AS(Partition({-1}), DomainError);
    const Partition p{4, 2, 1};
    CHECK(p.n() == 7);
    CHECK(p.length() == 3);
    CHECK(p.row(1) == 4);
    CHECK(p.row(3) == 1);
    CHECK(p.row(4) == 0);
    CHECK(p.to_string() == "4,2,1");
}

TEST_CASE("enumeration counts follow the pentagonal recurrence") {
    CHECK(enumerate_partitions(10).size() == 42);
    for (int n = 0; n <= 30; ++n) {
        std::uint64_t count = 0;
        for_each_partition(n, [&](std::span<const int>) { ++count; });
        CHECK(count == oracle::partition_count(n));
    }
}

TEST_CASE("enumeration order and contents") {
    const auto zero = enumerate_partitions(0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].empty());

    const auto four = enumerate_partitions(4);
    const std::vector<Partition> want{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
    CHECK(four == want);

    const auto twelve = enumerate_partitions(12);
    for (std::size_t k = 1; k < twelve.size(); ++k) CHECK(twelve[k] < twelve[k - 1]);

    CHECK_THROWS_AS(enumerate_partitions(101), SizeLimitError);
    CHECK_THROWS_AS(enumerate_partitions(-1), DomainError);
}

TEST_CASE("transpose") {
    CHECK(transpose(Partition{3, 2}) == Partition{2, 2, 1});
    CHECK(transpose(Partition{5}) == Partition{1, 1, 1, 1, 1});
    for (int n = 1; n <= 20; ++n)
        for (const auto& p : enumerate_partitions(n)) CHECK(transpose(transpose(p)) == p);
}

TEST_CASE("hook lengths") {
    CHECK(hooks(Partition{3, 2}) == std::vector<int>{4, 3, 1, 2, 1});
    CHECK(hooks(Partition{4}) == std::vector<int>{4, 3, 2, 1});
    for (int n = 1; n <= 15; ++n)
        for (const auto& p : enumerate_partitions(n)) {
            auto a = hooks(p);
            auto b = hooks(transpose(p));
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            CHECK(a == b);
        }
}

TEST_CASE("dimensions against brute-force tableau counting") {
    CHECK(exact_dim(Partition{3, 2}) == 5);
    for (int n = 1; n <= 7; ++n) {
        CHECK(exact_dim(Partition{n}) == 1);
        CHECK(exact_dim(Partition(std::vector<int>(static_cast<std::size_t>(n), 1))) == 1);
        if (n >= 2) CHECK(exact_dim(Partition{n - 1, 1}) == n - 1);
        for (const auto& p : enumerate_partitions(n)) {
            const std::vector<int> shape(p.view().begin(), p.view().end());
            CHECK(exact_dim(p) == oracle::brute_force_syt(shape));
        }
    }
}

TEST_CASE("log dimensions track exact dimensions") {
    for (int n = 1; n <= 30; n += 3)
        for (const auto& p : enumerate_partitions(n)) {
            const auto d = dim(p);
            REQUIRE(d.has_exact());
            const double exact_log = std::log(d.exact().convert_to<double>());
            CHECK(d.log_value == doctest::Approx(exact_log).epsilon(1e-12));
            CHECK(log_dim(p.view()) == doctest::Approx(exact_log).epsilon(1e-12));
        }
    const auto big = dim(Partition{30, 1});
    CHECK_FALSE(big.has_exact());
    CHECK_THROWS_AS(big.exact(), SizeLimitError);
    CHECK_THROWS_AS(exact_dim(Partition{30, 1}), SizeLimitError);
    CHECK(big.log_value == doctest::Approx(std::log(30.0)).epsilon(1e-12));
}

TEST_CASE("corners and branching") {
    const auto c = corners(Partition{4, 1});
    REQUIRE(c.size() == 2);
    CHECK(c[0].row == 1);
    CHECK(c[0].reduced == Partition{3, 1});
    CHECK(c[1].row == 2);
    CHECK(c[1].reduced == Partition{4});
    CHECK(corners(Partition{3, 3}).size() == 1);
    CHECK(corners(Partition{}).empty());

    for (int n = 1; n <= 20; ++n)
        for (const auto& p : enumerate_partitions(n)) {
            BigInt sum = 0;
            for (const auto& corner : corners(p)) sum += exact_dim(corner.reduced);
            CHECK(sum == exact_dim(p));
            std::vector<int> rows;
            corner_rows(p.view(), rows);
            const auto cs = corners(p);
            REQUIRE(rows.size() == cs.size());
            for (std::size_t k = 0; k < rows.size(); ++k) {
                CHECK(rows[k] == cs[k].row);
                CHECK(log_dim_without_corner(p.view(), rows[k]) ==
                      doctest::Approx(dim(cs[k].reduced).log_value).epsilon(1e-12));
            }
        }
}

TEST_CASE("sum of squared dimensions is n!") {
    for (int n = 1; n <= 14; ++n) {
        BigInt sum = 0;
        for (const auto& p : enumerate_partitions(n)) {
            const auto d = exact_dim(p);
            sum += d * d;
        }
        CHECK(sum == factorial(n));
    }
}

TEST_CASE("integer helpers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(20) == BigInt("2432902008176640000"));
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(5, 7) == 0);
    CHECK(log_factorial(10) == doctest::Approx(std::lgamma(11.0)).epsilon(1e-14));
    CHECK(log_int(7) == doctest::Approx(std::log(7.0)).epsilon(1e-15));
}
