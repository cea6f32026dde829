#include <catch2/catch.hpp>

#include "mpulam/core.hpp"
#include "mpulam/rng.hpp"
#include "test_util.hpp"

using namespace mpulam;

TEST_CASE("composition applies images index-wise", "[core]") {
    const Permutation e = Permutation::identity(4);
    const Permutation sigma{Tuple{1, 3, 2, 4}};

    CHECK(compose(e, sigma) == sigma);
    CHECK(compose(sigma, e) == sigma);

    // phi(2,4) as a permutation is [1,3,4,2].
    const Permutation phi = translocation_permutation(Translocation{2, 4}, 4);
    CHECK(phi.images() == Tuple{1, 3, 4, 2});
    CHECK(compose(sigma, phi).images() == Tuple{1, 2, 4, 3});

    SplitMix64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const Permutation p = random_permutation(6, rng);
        CHECK(compose(p, p.inverse()) == Permutation::identity(6));
        CHECK(compose(p.inverse(), p) == Permutation::identity(6));
    }

    CHECK_THROWS_AS(compose(e, Permutation::identity(5)), DimensionError);
}

TEST_CASE("projection maps values to their block", "[core]") {
    CHECK(project(Permutation{Tuple{1, 5, 2, 4, 3, 6}}, 2).symbols() == Tuple{1, 3, 1, 2, 2, 3});

    const Permutation sigma{Tuple{3, 1, 4, 2}};
    CHECK(project(sigma, 1).symbols() == sigma.images());

    CHECK(project(Permutation{Tuple{1, 4, 7, 10, 2, 5, 8, 11, 3, 6, 9, 12}}, 3).symbols() ==
          Tuple{1, 2, 3, 4, 1, 2, 3, 4, 1, 2, 3, 4});

    CHECK_THROWS_AS(project(Permutation::identity(6), 4), ParameterError);
}

TEST_CASE("translocations delete and reinsert", "[core]") {
    CHECK(apply_translocation(Tuple{1, 3, 2, 2, 3, 1}, Translocation{1, 5}) ==
          Tuple{3, 2, 2, 3, 1, 1});
    CHECK(apply_translocation(Tuple{1, 2, 3, 4}, Translocation{4, 1}) == Tuple{4, 1, 2, 3});

    const Tuple m{1, 3, 2, 2, 3, 1};
    for (int i = 1; i <= 6; ++i) CHECK(apply_translocation(m, Translocation{i, i}) == m);

    CHECK_THROWS_AS(apply_translocation(m, Translocation{0, 3}), ParameterError);
    CHECK_THROWS_AS(apply_translocation(m, Translocation{1, 7}), ParameterError);
}

TEST_CASE("delete/insert agrees with the explicit image formula", "[core]") {
    // x . phi(i,j) computed directly must equal acting with the permutation
    // image of phi(i,j), for all i, j; and phi(i,i-1) acts like phi(i-1,i).
    SplitMix64 rng(11);
    for (int n = 1; n <= 6; ++n) {
        std::vector<Tuple> samples{Permutation::identity(n).images()};
        for (int trial = 0; trial < 5; ++trial) samples.push_back(random_permutation(n, rng).images());
        if (n % 2 == 0) samples.push_back(first_multipermutation(n, 2));
        for (const Tuple& x : samples) {
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    const Translocation phi{i, j};
                    CHECK(apply_translocation(x, phi) ==
                          act(x, translocation_permutation(phi, n)));
                }
            for (int i = 2; i <= n; ++i)
                CHECK(apply_translocation(x, Translocation{i, i - 1}) ==
                      apply_translocation(x, Translocation{i - 1, i}));
        }
    }
}

TEST_CASE("right action is associative and projection-compatible", "[core]") {
    SplitMix64 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        const Permutation sigma = random_permutation(6, rng);
        const Permutation tau = random_permutation(6, rng);
        const Multipermutation m = random_multipermutation(6, 2, rng);
        CHECK(act(m.symbols(), compose(sigma, tau)) == act(act(m.symbols(), sigma), tau));
        // m_sigma^r . tau = m_{sigma tau}^r
        CHECK(act(project(sigma, 2).symbols(), tau) == project(compose(sigma, tau), 2).symbols());
    }
}

TEST_CASE("equivalence classes group permutations by projection", "[core]") {
    const Permutation sigma{Tuple{2, 1, 3, 4}};
    auto members = equivalence_class(sigma, 2);
    CHECK(members.size() == 4);  // (2!)^2
    CHECK(equivalence_class_size(4, 2) == 4);

    const Multipermutation target = project(sigma, 2);
    bool contains = false;
    for (const auto& pi : members) {
        CHECK(project(pi, 2) == target);
        if (pi.images() == Tuple{1, 2, 4, 3}) contains = true;
    }
    CHECK(contains);

    // Stream is strictly increasing lexicographically.
    for (std::size_t i = 1; i < members.size(); ++i) CHECK(members[i - 1] < members[i]);

    auto singleton = equivalence_class(sigma, 1);
    REQUIRE(singleton.size() == 1);
    CHECK(singleton.front() == sigma);

    CHECK_THROWS_AS(equivalence_class(Permutation::identity(12), 2, 10), CapacityError);

    // Streaming matches materialization and covers the whole class at n=6.
    EquivalenceClassStream stream(Permutation::identity(6), 3);
    std::size_t count = 0;
    std::optional<Permutation> previous;
    while (auto pi = stream.next()) {
        CHECK(project(*pi, 3) == project(Permutation::identity(6), 3));
        if (previous) CHECK(*previous < *pi);
        previous = *pi;
        ++count;
    }
    CHECK(count == 36);  // (3!)^2
}

TEST_CASE("tuple text format round-trips", "[core]") {
    CHECK(parse_tuple("1,3,1,2,2,3") == Tuple{1, 3, 1, 2, 2, 3});
    CHECK(parse_tuple(" 1 , 3 ,1,\t2,2,3 ") == Tuple{1, 3, 1, 2, 2, 3});
    CHECK(format_tuple(Tuple{1, 3, 1, 2, 2, 3}) == "1,3,1,2,2,3");
    CHECK_THROWS_AS(parse_tuple("1,,2"), ParameterError);
    CHECK_THROWS_AS(parse_tuple("1,a,2"), ParameterError);
    CHECK_THROWS_AS(parse_tuple(""), ParameterError);

    CHECK(is_permutation_tuple(Tuple{2, 1, 3}));
    CHECK_FALSE(is_permutation_tuple(Tuple{2, 2, 3}));
    CHECK(is_multipermutation_tuple(Tuple{1, 2, 1, 2}, 2));
    CHECK_FALSE(is_multipermutation_tuple(Tuple{1, 2, 1, 2}, 3));
}

TEST_CASE("value types validate their invariants", "[core]") {
    CHECK_THROWS_AS((Permutation{Tuple{1, 2, 2}}), ParameterError);
    CHECK_THROWS_AS((Permutation{Tuple{0, 1, 2}}), ParameterError);
    CHECK_THROWS_AS((Permutation{Tuple{}}), ParameterError);
    CHECK_THROWS_AS(Multipermutation(Tuple{1, 1, 2}, 2), ParameterError);
    CHECK_THROWS_AS(Multipermutation(Tuple{1, 1, 1, 2}, 2), ParameterError);
    CHECK_NOTHROW(Multipermutation(Tuple{2, 1, 2, 1}, 2));
}
