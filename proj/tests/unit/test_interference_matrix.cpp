#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>

#include "doctest.h"
#include "helpers.hpp"
#include "wifiplan/interference_matrix.hpp"

using wifiplan::InterferenceMatrix;
using wifiplan::default_interference_matrix;

namespace {
constexpr double neg_inf = -std::numeric_limits<double>::infinity();
}

TEST_CASE("default matrix matches the rectangular mask overlap oracle") {
  const auto m = default_interference_matrix(11);
  REQUIRE(m.size() == 11);

  for (int i = 1; i <= 11; ++i) {
    CHECK(m.db(i, i) == 0.0);  // co-channel: log10(1)
    for (int j = 1; j <= 11; ++j) {
      const double fraction = testutil::mask_overlap_fraction(i, j);
      if (fraction == 0.0) {
        CHECK(m.db(i, j) == neg_inf);
        CHECK(m.overlap_linear(i, j) == 0.0);
      } else {
        CHECK(m.db(i, j) == doctest::Approx(10.0 * std::log10(fraction)).epsilon(1e-12));
        CHECK(m.overlap_linear(i, j) == doctest::Approx(fraction).epsilon(1e-12));
      }
    }
  }

  // Spot values: adjacent channels share 17 of 22 MHz; five apart share none.
  CHECK(m.db(1, 2) == doctest::Approx(10.0 * std::log10(17.0 / 22.0)).epsilon(1e-12));
  CHECK(m.db(1, 2) == doctest::Approx(-1.1197).epsilon(1e-4));
  CHECK(m.db(1, 6) == neg_inf);
  CHECK(m.db(3, 11) == neg_inf);
}

TEST_CASE("default matrix is symmetric and non-increasing in channel distance") {
  const auto m = default_interference_matrix(11);
  for (int i = 1; i <= 11; ++i) {
    for (int j = 1; j <= 11; ++j) {
      CHECK(m.db(i, j) == m.db(j, i));
    }
  }
  for (int i = 1; i <= 11; ++i) {
    for (int d = 1; d <= 10; ++d) {
      if (i + d <= 11) CHECK(m.db(i, i + d) <= m.db(i, i + d - 1));
      if (i - d >= 1) CHECK(m.db(i, i - d) <= m.db(i, i - d + 1));
    }
  }
}

TEST_CASE("default matrix argument validation") {
  CHECK_THROWS_AS(default_interference_matrix(0), std::invalid_argument);
  CHECK_THROWS_AS(default_interference_matrix(11, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(default_interference_matrix(11, 5.0, -1.0), std::invalid_argument);
  CHECK_NOTHROW(default_interference_matrix(1));
}

TEST_CASE("matrix csv round trip") {
  const auto m = default_interference_matrix(11);
  const auto path = std::filesystem::temp_directory_path() / "wifiplan_matrix_test.csv";
  m.save_csv(path);
  const auto loaded = InterferenceMatrix::load_csv(path);
  REQUIRE(loaded.size() == m.size());
  for (int i = 1; i <= 11; ++i) {
    for (int j = 1; j <= 11; ++j) {
      CHECK(loaded.db(i, j) == m.db(i, j));
    }
  }
  std::filesystem::remove(path);
}

TEST_CASE("matrix csv accepts both -inf spellings and rejects bad input") {
  const auto dir = std::filesystem::temp_directory_path();

  const auto write = [&dir](const char* name, const char* body) {
    const auto path = dir / name;
    std::ofstream(path) << body;
    return path;
  };

  const auto ok = write("wifiplan_m_ok.csv", "0,-inf\ninf-,0\n");
  const auto m = InterferenceMatrix::load_csv(ok);
  CHECK(m.db(1, 2) == neg_inf);
  CHECK(m.db(2, 1) == neg_inf);

  const auto asym = write("wifiplan_m_asym.csv", "0,-1\n-2,0\n");
  CHECK_THROWS_WITH_AS(InterferenceMatrix::load_csv(asym),
                       doctest::Contains("not symmetric"), std::invalid_argument);

  const auto ragged = write("wifiplan_m_ragged.csv", "0,-1\n-1\n");
  CHECK_THROWS_AS(InterferenceMatrix::load_csv(ragged), std::invalid_argument);

  const auto junk = write("wifiplan_m_junk.csv", "0,x\nx,0\n");
  CHECK_THROWS_AS(InterferenceMatrix::load_csv(junk), std::invalid_argument);

  for (const char* name : {"wifiplan_m_ok.csv", "wifiplan_m_asym.csv", "wifiplan_m_ragged.csv",
                           "wifiplan_m_junk.csv"}) {
    std::filesystem::remove(dir / name);
  }
}

TEST_CASE("from_rows rejects +inf and nan") {
  const double pos_inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(InterferenceMatrix::from_rows({{0.0, pos_inf}, {pos_inf, 0.0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(InterferenceMatrix::from_rows({{std::nan("")}}), std::invalid_argument);
  CHECK_NOTHROW(InterferenceMatrix::from_rows({{0.0, neg_inf}, {neg_inf, 0.0}}));
}
