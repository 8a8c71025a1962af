#include "doctest.h"

#include <set>

#include "oracles.hpp"
#include "osculant/counting.hpp"
#include "osculant/necklace.hpp"

using namespace osculant;

TEST_CASE("canonical form is the least rotation") {
    CHECK(Necklace::from_string("212121").str() == "121212");
    CHECK(Necklace::from_string("221112").str() == "111222");
    CHECK(Necklace::from_string("21122").str() == "11222");
    CHECK(Necklace::from_string("1").str() == "1");
    CHECK(Necklace::from_string("31212").str() == "12123");
}

TEST_CASE("canonicalization is rotation invariant") {
    // hand-rolled generator: deterministic pseudo-random words over 1..3
    uint64_t state = 12345;
    auto next = [&] {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 33;
    };
    for (int trial = 0; trial < 200; ++trial) {
        size_t len = 1 + next() % 12;
        std::vector<uint8_t> w(len);
        for (auto& c : w) c = static_cast<uint8_t>(1 + next() % 3);
        Necklace canon = Necklace::from_word(w);
        CHECK(canon.word() == oracle::naive_min_rotation(w));
        for (size_t r = 0; r < len; ++r) {
            std::rotate(w.begin(), w.begin() + 1, w.end());
            CHECK(Necklace::from_word(w) == canon);
        }
    }
}

TEST_CASE("enumerate_necklaces reference counts") {
    CHECK(enumerate_necklaces(Multidegree{3, 3}, false).size() == 4);
    CHECK(enumerate_necklaces(Multidegree{1, 1, 1}, true).size() == 2);
    CHECK(enumerate_necklaces(Multidegree{5, 5}, true).size() == 25);
}

TEST_CASE("enumerated (3,3) necklaces are the expected words") {
    auto all = enumerate_necklaces(Multidegree{3, 3}, false);
    std::set<std::string> words;
    for (const auto& nk : all) words.insert(nk.str());
    CHECK(words == std::set<std::string>{"111222", "112122", "112212", "121212"});
}

TEST_CASE("enumeration agrees with brute force and with the counts") {
    // every multidegree with |d| <= 10 and n <= 3
    for (int n = 1; n <= 3; ++n) {
        std::vector<int> parts(static_cast<size_t>(n), 1);
        while (true) {
            int total = 0;
            for (int p : parts) total += p;
            if (total <= 10) {
                Multidegree d(parts);
                auto census = oracle::brute_necklaces(d);
                auto all = enumerate_necklaces(d, false);
                auto prim = enumerate_necklaces(d, true);
                REQUIRE(all.size() == census.all.size());
                REQUIRE(prim.size() == census.primitive.size());
                CHECK(Count(static_cast<uint64_t>(all.size())) == count_all(d));
                CHECK(Count(static_cast<uint64_t>(prim.size())) == count_primitive(d));
                for (const auto& nk : all) CHECK(census.all.count(nk.word()) == 1);
            }
            // next composition candidate in the box 1..10 per part
            size_t i = 0;
            while (i < parts.size() && parts[i] == 10) parts[i++] = 1;
            if (i == parts.size()) break;
            parts[i]++;
        }
    }
}

TEST_CASE("fold_class") {
    auto fc = fold_class(Necklace::from_string("121212"));
    CHECK(fc.k == 3);
    CHECK(fc.core.str() == "12");

    fc = fold_class(Necklace::from_string("111222"));
    CHECK(fc.k == 1);
    CHECK(fc.core.str() == "111222");

    fc = fold_class(Necklace::from_string("11221122"));
    CHECK(fc.k == 2);
    CHECK(fc.core.str() == "1122");

    // core is primitive and repeating it k times reproduces the word
    for (const auto& nk : enumerate_necklaces(Multidegree{4, 4}, false)) {
        auto f = fold_class(nk);
        CHECK(is_primitive(f.core));
        std::vector<uint8_t> rebuilt;
        for (int r = 0; r < f.k; ++r)
            rebuilt.insert(rebuilt.end(), f.core.word().begin(), f.core.word().end());
        CHECK(Necklace::from_word(rebuilt) == nk);
        CHECK(nk.content().gcd() % f.k == 0);
    }
}

TEST_CASE("self-complementary and achiral predicates") {
    CHECK(is_self_complementary(Necklace::from_string("1212")));
    CHECK(is_achiral(Necklace::from_string("1212")));
    CHECK(is_self_complementary(Necklace::from_string("1122")));
    CHECK_THROWS_AS(is_self_complementary(Necklace::from_string("123")), std::invalid_argument);

    // reversal check against an explicit rotation scan
    for (const auto& nk : enumerate_necklaces(Multidegree{3, 3}, false)) {
        std::vector<uint8_t> rev(nk.word().rbegin(), nk.word().rend());
        bool found = false;
        for (size_t r = 0; r < rev.size(); ++r) {
            std::rotate(rev.begin(), rev.begin() + 1, rev.end());
            if (rev == nk.word()) found = true;
        }
        CHECK(is_achiral(nk) == found);
    }
}

TEST_CASE("balanced embedding") {
    CHECK_FALSE(is_balanced_embedding(Necklace::from_string("12")));
    CHECK_THROWS_AS(is_balanced_embedding(Necklace::from_string("1212")), std::invalid_argument);

    // per-color root sums vanish for this (9,9)-necklace, so its start
    // parametrization is singular at the origin
    CHECK(is_balanced_embedding(Necklace::from_string("111122212121112222")));

    // an exhaustive scan of primitive (9,9)-necklaces finds at least one
    int balanced = 0;
    for (const auto& nk : enumerate_necklaces(Multidegree{9, 9}, true))
        if (is_balanced_embedding(nk)) balanced++;
    CHECK(balanced >= 1);
}

TEST_CASE("necklace string round trip") {
    for (const auto& nk : enumerate_necklaces(Multidegree{2, 1, 1}, false))
        CHECK(Necklace::from_string(nk.str()) == nk);
}
