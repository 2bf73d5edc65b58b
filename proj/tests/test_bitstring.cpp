#include <doctest.h>

#include <random>

#include "als/bitstring.hpp"

using namespace als;

TEST_CASE("bit strings parse, index and print") {
    BitString s("01101");
    CHECK(s.size() == 5);
    CHECK(s.to_string() == "01101");
    CHECK_FALSE(s.get(0));
    CHECK(s.get(1));
    CHECK(s.slice(1, 3).to_string() == "110");
    CHECK(BitString().empty());
    CHECK_THROWS_AS(s.get(5), std::out_of_range);
    CHECK_THROWS_AS((BitString{"01x"}), std::invalid_argument);
}

TEST_CASE("run counting") {
    CHECK(count_runs(BitString("")) == 0);
    CHECK(count_runs(BitString("0000")) == 1);
    CHECK(count_runs(BitString("00110")) == 3);

    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        size_t len = rng() % 40;
        BitString s(len);
        for (size_t i = 0; i < len; ++i) s.set(i, rng() & 1);
        // direct scan oracle
        size_t runs = 0;
        for (size_t i = 0; i < len; ++i)
            if (i == 0 || s.get(i) != s.get(i - 1)) ++runs;
        CHECK(count_runs(s) == runs);
        CHECK(count_runs(s) <= len);
        bool alternating = true;
        for (size_t i = 1; i < len; ++i)
            if (s.get(i) == s.get(i - 1)) alternating = false;
        CHECK((count_runs(s) == len) == (alternating || len == 0));
    }
}

TEST_CASE("integer conversions") {
    CHECK(BitString("101").to_natural() == 5);
    CHECK(BitString::from_natural(0, 3).to_string() == "000");
    CHECK(BitString::from_natural(5, 4).to_string() == "0101");
    CHECK_THROWS_AS(BitString::from_natural(8, 3), std::invalid_argument);
    CHECK(BitString::from_natural(0, 0).empty());

    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        size_t len = rng() % 120;
        BitString s(len);
        for (size_t i = 0; i < len; ++i) s.set(i, rng() & 1);
        CHECK(BitString::from_natural(s.to_natural(), len) == s);
    }
}

TEST_CASE("byte serialization is MSB-first with a zero-padded tail") {
    BitString s("10100000011");
    auto bytes = s.bytes();
    REQUIRE(bytes.size() == 2);
    CHECK(bytes[0] == 0xa0);
    CHECK(bytes[1] == 0x60);  // 011 then five pad zeros
    CHECK(BitString::from_bytes(bytes, s.size()) == s);

    std::mt19937_64 rng(13);
    for (int t = 0; t < 100; ++t) {
        size_t len = rng() % 70;
        BitString a(len);
        for (size_t i = 0; i < len; ++i) a.set(i, rng() & 1);
        CHECK(BitString::from_bytes(a.bytes(), len) == a);
    }
}

TEST_CASE("cursor reads and bounds") {
    BitString s("1100101");
    BitCursor c(s);
    CHECK(c.read_bit());
    CHECK(c.read_u64(3) == 0b100);
    CHECK(c.read_bits(2).to_string() == "10");
    CHECK(c.remaining() == 1);
    c.skip(1);
    CHECK_THROWS_AS(c.read_bit(), std::out_of_range);
}

TEST_CASE("append and write_u64") {
    BitString a("101");
    a.append(BitString("0011"));
    CHECK(a.to_string() == "1010011");
    BitString b(8);
    b.write_u64(2, 5, 0b10110);
    CHECK(b.to_string() == "00101100");
    CHECK(b.read_u64(2, 5) == 0b10110);
}
