#include <catch2/catch_amalgamated.hpp>
#include <flip/flip.hpp>

#include "helpers.hpp"

using namespace flip;

TEST_CASE("generator names round trip") {
  CHECK(Generator::x(1).name() == "x1");
  CHECK(Generator::x(12).name() == "x12");
  CHECK(Generator::a(3).name() == "a3");
  CHECK(Generator::b(2).name() == "b2");
  CHECK(Generator::h().name() == "h");

  for (const char* s : {"x1", "x12", "a3", "b2", "h"})
    CHECK(generator_from_name(s).name() == s);
}

TEST_CASE("generator parse rejects junk") {
  for (const char* s : {"", "x", "x0", "x01", "q1", "h1", "x-1", "x1x", "X1"}) {
    INFO(s);
    testutil::expect_errc([&] { generator_from_name(s); }, errc::parse_error);
  }
}

TEST_CASE("free reduction") {
  Word w1 = concat(power(Generator::x(1), 1), power(Generator::x(1), -1));
  CHECK(w1.empty());

  // h^2 h^3 -> h^5
  Word w2 = concat(power(Generator::h(), 2), power(Generator::h(), 3));
  REQUIRE(w2.size() == 1);
  CHECK(w2[0].gen == Generator::h());
  CHECK(w2[0].exp == 5);

  // a1 b1 b1^-1 a1 -> a1^2
  Word w3 = concat(concat(power(Generator::a(1), 1), power(Generator::b(1), 1)),
                   concat(power(Generator::b(1), -1), power(Generator::a(1), 1)));
  REQUIRE(w3.size() == 1);
  CHECK(w3[0].gen == Generator::a(1));
  CHECK(w3[0].exp == 2);

  // reduction digs through nested cancellation
  Word w4 = {{Generator::x(1), 1}, {Generator::x(2), 1}, {Generator::x(2), -1},
             {Generator::x(1), -1}};
  CHECK(free_reduce(w4).empty());

  Word w5 = {{Generator::x(1), 0}};
  CHECK(free_reduce(w5).empty());
}

TEST_CASE("word arithmetic") {
  Word u = power(Generator::x(1), 2);
  Word v = power(Generator::h(), -3);

  CHECK(word_length(u) == 2);
  CHECK(word_length(v) == 3);
  CHECK(word_length(concat(u, v)) == 5);

  Word ui = word_inverse(concat(u, v));  // (x1^2 h^-3)^-1 = h^3 x1^-2
  REQUIRE(ui.size() == 2);
  CHECK(ui[0].gen == Generator::h());
  CHECK(ui[0].exp == 3);
  CHECK(ui[1].gen == Generator::x(1));
  CHECK(ui[1].exp == -2);

  CHECK(concat(concat(u, v), word_inverse(concat(u, v))).empty());

  Word c = commutator(power(Generator::a(1), 1), power(Generator::b(1), 1));
  CHECK(word_str(c) == "a1 b1 a1^-1 b1^-1");

  CHECK(power(Generator::h(), 0).empty());
  CHECK(word_str(Word{}) == "1");
  CHECK(word_str(concat(u, v)) == "x1^2 h^-3");
}

TEST_CASE("commutator of equal words vanishes") {
  Word u = concat(power(Generator::x(2), 3), power(Generator::h(), 1));
  CHECK(commutator(u, u).empty());
}
