#include "stokes/enumerate.hpp"
#include "stokes/circle.hpp"
#include "stokes/error.hpp"
#include "stokes/simplify.hpp"

#include "support/helpers.hpp"
#include "support/oracle.hpp"

#include <doctest.h>

#include <set>

using namespace stokes;
using testing::L;
using testing::S;

using Names = std::set<std::string>;

namespace {

Rational q(std::int64_t n, std::int64_t d) { return Rational(Integer(n), Integer(d)); }

const OpenInterval kOneTwo{Rational(1), Rational(2)};
const OpenInterval kZeroTwo{Rational(0), Rational(2)};

Names as_set(const std::vector<LevelDatum>& data) {
  std::vector<std::string> v = S(data);
  return Names(v.begin(), v.end());
}

std::string oracle_name(const oracle::Levels& levels) {
  std::string out = "{";
  for (std::size_t i = 0; i < levels.size(); ++i)
    out += (i > 0 ? "," : "") + std::to_string(levels[i].n) + "/" + std::to_string(levels[i].d);
  return out + "}";
}

std::vector<LevelDatum> with_balance(const std::vector<LevelDatum>& data, std::int64_t b) {
  std::vector<LevelDatum> out;
  for (const LevelDatum& d : data)
    if (balance(d) == b) out.push_back(d);
  return out;
}

}  // namespace

TEST_CASE("level data of fixed ramification") {
  CHECK(S(level_data_with_ram(2, kOneTwo)) == std::vector<std::string>{"{3/2}"});
  CHECK(as_set(level_data_with_ram(3, kOneTwo)) == Names{"{4/3}", "{5/3}"});
  CHECK(as_set(level_data_with_ram(4, kOneTwo)) == Names{"{7/4}", "{5/4}", "{3/2,5/4}", "{3/2,3/4}", "{3/2,1/4}"});
  CHECK(S(level_data_with_ram(1, std::nullopt)) == std::vector<std::string>{"{}"});
  CHECK(level_data_with_ram(1, kOneTwo).empty());

  CHECK_THROWS_AS(level_data_with_ram(0, kOneTwo), InvalidInput);
  CHECK_THROWS_AS(level_data_with_ram(3, std::nullopt), InvalidInput);
  CHECK_THROWS_AS(level_data_with_ram(3, OpenInterval{Rational(2), Rational(1)}), InvalidInput);
  CHECK_THROWS_AS(level_data_with_ram(3, OpenInterval{Rational(1), Rational(1)}), InvalidInput);
}

TEST_CASE("generator output is valid and ordered") {
  for (std::int64_t r = 2; r <= 20; ++r) {
    auto data = level_data_with_ram(r, OpenInterval{q(1, 3), q(7, 2)});
    for (std::size_t i = 0; i < data.size(); ++i) {
      const LevelDatum& d = data[i];
      CHECK(ramification(d) == r);
      CHECK(LevelDatum::validate(std::vector<Rational>(d.levels().begin(), d.levels().end())) == d);
      CHECK(d[0] > q(1, 3));
      CHECK(d[0] < q(7, 2));
      if (i > 0) CHECK(std::lexicographical_compare(d.levels().begin(), d.levels().end(), data[i - 1].levels().begin(),
                                                    data[i - 1].levels().end()));
    }
  }
}

TEST_CASE("generator matches the subset brute force") {
  // frozen from an independent run of the subset scan
  const std::vector<std::size_t> frozen{2, 4, 8, 8, 24, 12, 42, 36, 64, 20, 192};
  for (std::int64_t r = 2; r <= 12; ++r) {
    auto data = level_data_with_ram(r, kZeroTwo);
    CHECK(data.size() == frozen[r - 2]);
    Names brute;
    for (const oracle::Levels& levels : oracle::brute_force_below_two(r)) brute.insert(oracle_name(levels));
    CHECK(as_set(data) == brute);
  }
}

TEST_CASE("balance pruning removes nothing that counts") {
  for (std::int64_t n = 1; n <= 6; ++n) {
    for (std::int64_t r = 2; r < 6 * n; ++r) {
      auto pruned = level_data_with_ram(r, kOneTwo, GenerationLimits{std::nullopt, 2 * n});
      auto full = level_data_with_ram(r, kOneTwo);
      CHECK(with_balance(pruned, 2 * n) == with_balance(full, 2 * n));
    }
  }
}

TEST_CASE("minimal level data for small loop counts") {
  CHECK(S(minimal_for_loops(0)) == std::vector<std::string>{"{}"});
  CHECK(S(minimal_for_loops(1)) == std::vector<std::string>{"{5/2}"});
  CHECK(S(minimal_for_loops(2)) == std::vector<std::string>{"{7/2}"});
  CHECK(as_set(minimal_for_loops(3)) == Names{"{9/2}", "{7/3}", "{5/2,1/4}"});
  CHECK(as_set(minimal_for_loops(5)) == Names{"{13/2}", "{5/2,5/4}"});
  CHECK(as_set(minimal_for_loops(7)) == Names{"{17/2}", "{11/3}", "{7/2,1/4}", "{5/2,1/3}", "{5/2,9/4}"});
  CHECK(S(minimal_for_loops(3)) == std::vector<std::string>{"{9/2}", "{7/3}", "{5/2,1/4}"});
  CHECK_THROWS_AS(minimal_for_loops(-1), InvalidInput);
}

TEST_CASE("minimal outputs satisfy their defining properties") {
  for (std::int64_t n = 1; n <= 8; ++n) {
    for (const LevelDatum& d : minimal_for_loops(n)) {
      CHECK(is_minimal(d, Mode::Infinity));
      CHECK(balance(d) == 2 * n);
      CHECK(d[0] > Rational(2));

      FormalInvariants shadow = fourier_shadow(invariants_of(witness_circle(d, Location::infinity())));
      CHECK(shadow.ram < 6 * n);
      CHECK(balance(shadow.levels) == 2 * n);
    }
  }
}

TEST_CASE("table rows") {
  auto rows = minimal_table(0);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].loops == 0);
  CHECK(rows[0].count == 1);
  CHECK(rows[0].data == std::vector<LevelDatum>{LevelDatum()});

  std::vector<std::size_t> counts;
  for (const TableRow& row : minimal_table(6)) {
    CHECK(row.count == row.data.size());
    counts.push_back(row.count);
  }
  CHECK(counts == std::vector<std::size_t>{1, 1, 1, 3, 3, 2, 5});
}
