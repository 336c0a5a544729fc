#include <catch2/catch.hpp>

#include <future>
#include <vector>

#include "equindex/survey.hpp"
#include "equindex/tower.hpp"

using equindex::build_tower;
using equindex::GenKind;
using equindex::height_of_z;
using equindex::tower_cindex;
using equindex::tower_generator;

TEST_CASE("building tower rings", "[tower]") {
    SECTION("R_0 is Lambda(e0) (x) F_p[z0]/(z0^2)") {
        const auto level = build_tower(0, 3);
        const auto& gens = level.ring->generators();
        REQUIRE(gens.size() == 2);
        CHECK(gens[0].name == "e0");
        CHECK(gens[0].kind == GenKind::exterior);
        CHECK(gens[0].degree == 1);
        CHECK(gens[1].name == "z0");
        CHECK(gens[1].kind == GenKind::truncated);
        CHECK(gens[1].truncation == 2);
        CHECK(gens[1].degree == 2);
    }

    SECTION("one extension step adds e and z") {
        const auto level = build_tower(1, 3);
        REQUIRE(level.ring->size() == 4);
    }

    SECTION("rewrite coefficient is p-1") {
        const auto level = build_tower(2, 5);
        REQUIRE(level.ring->size() == 6);
        const auto& z2 = level.ring->generators()[level.ring->index_of("z2")];
        REQUIRE(z2.kind == GenKind::rewrite);
        CHECK(z2.rewrite_coeff == 4);
        // target is z1*z2
        std::vector<int> expected(6, 0);
        expected[level.ring->index_of("z1")] = 1;
        expected[level.ring->index_of("z2")] = 1;
        CHECK(z2.rewrite_target == expected);
    }

    SECTION("the Bockstein pairing rides along as an annotation") {
        const auto level = build_tower(1, 3);
        CHECK(level.ring->annotation().find("beta(e_i) = z_i") != std::string::npos);
    }

    SECTION("p must be an odd prime") {
        CHECK_THROWS_AS(build_tower(1, 2), equindex::parameter_error);
        CHECK_THROWS_AS(build_tower(1, 9), equindex::parameter_error);
        CHECK_THROWS_AS(build_tower(-1, 3), equindex::parameter_error);
    }
}

TEST_CASE("heights of z_k", "[tower]") {
    CHECK(height_of_z(0, 3) == 2);
    CHECK(height_of_z(1, 3) == 3);
    CHECK(height_of_z(5, 3) == 7);

    SECTION("recursion ht(z_{k+1}) = ht(z_k) + 1") {
        for (std::int64_t p : {3, 5, 7}) {
            int prev = height_of_z(0, p);
            REQUIRE(prev == 2);
            for (int k = 1; k <= 8; ++k) {
                const int cur = height_of_z(k, p);
                REQUIRE(cur == prev + 1);
                prev = cur;
            }
        }
    }

    SECTION("heights do not depend on the odd prime") {
        for (int k = 0; k <= 6; ++k) {
            const int at3 = height_of_z(k, 3);
            CHECK(at3 == height_of_z(k, 5));
            CHECK(at3 == height_of_z(k, 7));
        }
    }
}

TEST_CASE("rewriting identity across levels", "[tower]") {
    for (std::int64_t p : {3, 5, 7}) {
        for (int k = 1; k <= 8; ++k) {
            const auto level = build_tower(k, p);
            const auto z = tower_generator(level, "z" + std::to_string(k));
            const auto zprev = tower_generator(level, "z" + std::to_string(k - 1));
            for (int n = 2; n <= k + 3; ++n) {
                const auto lhs = power(z, n);
                const auto rhs = multiply(z, power(zprev, n - 1));
                const bool matches = (lhs == rhs) || (lhs == -rhs);
                REQUIRE(matches);
            }
        }
    }
}

TEST_CASE("tower reports", "[tower]") {
    SECTION("base level: the lens space L_p(3)") {
        const auto report = tower_cindex(0, 3);
        CHECK(report.ht_z == 2);
        CHECK(report.ht_ez == 2);
        CHECK(report.cindex_exact == 3);
        CHECK(report.paper_lower == 2);
        CHECK(report.coind == 3);
        CHECK(report.coind_provenance == "paper-asserted");
    }

    SECTION("level 1") {
        const auto report = tower_cindex(1, 3);
        CHECK(report.ht_z == 3);
        CHECK(report.cindex_exact == 5);
        CHECK(report.paper_alternatives == std::array<int, 2>{4, 5});
    }

    SECTION("bounds hold through level 8") {
        for (int k = 0; k <= 8; ++k) {
            const auto report = tower_cindex(k, 3);
            REQUIRE(report.ht_z == k + 2);
            REQUIRE(report.cindex_exact >= 2 * k + 2);
            const bool in_alternatives = report.cindex_exact == 2 * k + 2 ||
                                         report.cindex_exact == 2 * k + 3;
            REQUIRE(in_alternatives);
        }
    }

    SECTION("kernel monotonicity: y^{ht_z} and eps*y^{ht_ez} vanish, nothing earlier") {
        for (int k = 0; k <= 4; ++k) {
            const auto report = tower_cindex(k, 5);
            const auto level = build_tower(k, 5);
            const auto e = tower_generator(level, "e" + std::to_string(k));
            const auto z = tower_generator(level, "z" + std::to_string(k));
            REQUIRE(power(z, report.ht_z).is_zero());
            REQUIRE(multiply(e, power(z, report.ht_ez)).is_zero());
            for (int deg = 1; deg <= report.cindex_exact; ++deg) {
                auto image = power(z, deg / 2);
                if (deg % 2 != 0) image = multiply(e, image);
                REQUIRE_FALSE(image.is_zero());
            }
        }
    }

    SECTION("odd-p index ideal descriptor") {
        const auto ideal = tower_index_ideal(tower_cindex(1, 3));
        CHECK(ideal.prime == 3);
        CHECK_FALSE(ideal.is_principal());
        CHECK(ideal.min_even_kernel == 3);
        CHECK(ideal.min_odd_kernel == 3);
    }
}

TEST_CASE("reports are schedule-independent", "[tower]") {
    std::vector<std::string> serial;
    for (int k = 0; k <= 5; ++k)
        serial.push_back(equindex::tower_report_to_json(tower_cindex(k, 3)).dump());

    std::vector<std::future<std::string>> jobs;
    for (int k = 0; k <= 5; ++k)
        jobs.push_back(std::async(std::launch::async, [k] {
            return equindex::tower_report_to_json(tower_cindex(k, 3)).dump();
        }));
    for (int k = 0; k <= 5; ++k) REQUIRE(jobs[k].get() == serial[k]);
}
