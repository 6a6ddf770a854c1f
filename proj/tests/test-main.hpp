//
// squier - homotopy bases for semigroup presentations
// Copyright (C) 2026 The squier authors
//
// This program is free software: you can redistribute it and/or modify
// it under the terms of the GNU General Public License as published by
// the Free Software Foundation, either version 3 of the License, or
// (at your option) any later version.
//
// This program is distributed in the hope that it will be useful,
// but WITHOUT ANY WARRANTY; without even the implied warranty of
// MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
// GNU General Public License for more details.
//
// You should have received a copy of the GNU General Public License
// along with this program.  If not, see <http://www.gnu.org/licenses/>.
//

#ifndef SQUIER_TESTS_TEST_MAIN_HPP_
#define SQUIER_TESTS_TEST_MAIN_HPP_

#include <array>    // for array
#include <cstddef>  // for size_t
#include <string>   // for string
#include <vector>   // for vector

#include "catch_amalgamated.hpp"  // for TEST_CASE

#include "squier/io.hpp"     // for read_file
#include "squier/words.hpp"  // for Presentation

#define SQUIER_TEST_CASE(classname, nr, msg, tags) \
  TEST_CASE(classname " " nr ": " msg, "[" classname " " nr "]" tags)

namespace squier {
  namespace testing {

    inline std::string data_path(std::string const& name) {
      return std::string(SQUIER_TEST_DATA) + "/" + name;
    }

    inline std::string data(std::string const& name) {
      return read_file(data_path(name));
    }

    inline Presentation fixture(std::string const& name) {
      return parse_presentation(data(name));
    }

    // The cyclic semigroup <a | a^5 = a>, as exponents 1, ..., 5 with
    // a^5 = a^1. Independent of the library.
    inline size_t cyclic_exponent(size_t n) {
      return n <= 4 ? n : ((n - 1) % 4) + 1;
    }

    // 2 x 2 matrix units with zero; (i, j) encoded as 2 i + j, zero as 4.
    inline size_t matrix_unit_product(size_t x, size_t y) {
      if (x == 4 || y == 4) {
        return 4;
      }
      size_t i = x / 2, j = x % 2, k = y / 2, l = y % 2;
      return j == k ? 2 * i + l : 4;
    }

    // Maps of {0, 1} composed left to right: (f g)(x) = g(f(x)).
    using Map2 = std::array<size_t, 2>;

    inline Map2 compose_maps(Map2 const& f, Map2 const& g) {
      return {g[f[0]], g[f[1]]};
    }

    inline std::vector<Map2> full_transformations_2() {
      return {{0, 1}, {1, 0}, {0, 0}, {1, 1}};
    }

  }  // namespace testing
}  // namespace squier

#endif  // SQUIER_TESTS_TEST_MAIN_HPP_
