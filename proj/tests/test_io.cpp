// Copyright 2026 The grassembed Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <filesystem>

#include "grassembed/catalog.hpp"
#include "grassembed/io.hpp"

using namespace grassembed;

namespace {

std::size_t parse_error_line(const std::string& text, auto reader) {
  try {
    reader(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("matrix round trip") {
  catalog::Rng rng(3);
  for (std::uint64_t q : {2, 3, 4, 9, 256}) {
    const Field f = Field::of_order(q);
    const Matrix m = catalog::random_matrix(rng, f, 3, 4);
    CHECK(read_matrix(write_matrix(m)) == m);
  }
  const Matrix empty(Field::of_order(5), 0, 3);
  CHECK(read_matrix(write_matrix(empty)) == empty);
}

TEST_CASE("matrix text format") {
  const Field gf3 = Field::of_order(3);
  const Matrix m = read_matrix("# a comment\n" + gf3.header() + "\n3 2 2\n\n1 2\n0 1\n");
  CHECK(m.field() == gf3);
  CHECK(m(0, 1) == 2);
  CHECK(m(1, 0) == 0);
}

TEST_CASE("semilinear and point map round trips") {
  catalog::Rng rng(5);
  const SemilinearMap l(FieldHom::frobenius(Field::of_order(4)), catalog::random_matrix(rng, Field::of_order(4), 3, 3));
  CHECK(read_semilinear(write_semilinear(l)) == l);
  const SemilinearMap sub = catalog::random_m_embedding(rng, Field::of_order(2), Field::of_order(8), 3, 3, 3);
  CHECK(read_semilinear(write_semilinear(sub)) == sub);
  const PointMap g = point_map(sub);
  CHECK(read_point_map(write_point_map(g)) == g);
}

TEST_CASE("grassmann map round trip") {
  const GrassmannMap d = dual_isomorphism(Field::of_order(3), 4, 2);
  const std::string text = write_grassmann_map(d);
  CHECK(read_grassmann_map(text) == d);
  CHECK(text == write_grassmann_map(read_grassmann_map(text)));
}

TEST_CASE("parse errors carry line numbers") {
  const std::string h2 = Field::of_order(2).header() + "\n";
  const std::string h4 = Field::of_order(4).header();
  CHECK(parse_error_line(h2 + "2 2 2\n1 0\n0 7\n", read_matrix) == 4);
  CHECK(parse_error_line(h2 + "2 2 2\n1 0\n", read_matrix) == 4);
  CHECK(parse_error_line(h2 + "2 2 x\n", read_matrix) == 2);
  CHECK(parse_error_line(h2 + "3 1 1\n1\n", read_matrix) == 2);
  CHECK(parse_error_line("GF(2^2;1,0,1)\n4 1 1\n1\n", read_matrix) == 1);
  CHECK(parse_error_line(h2 + "2 1 1\n1\n1\n", read_matrix) == 4);
  CHECK(parse_error_line(Field::of_order(2).header() + " 1\n" + h4 + " 1\nsygma 2\n1\n", read_semilinear) == 3);
  CHECK(parse_error_line("2 2 1 2 2 1\n" + h2 + h2 + "0 0\n1 1\n2 9\n", read_grassmann_map) == 6);
  CHECK(parse_error_line("2 2 1 2 2 1\n" + h2 + h2 + "0 0\n2 1\n", read_grassmann_map) == 5);
  CHECK(parse_error_line(h2 + "2 1 3 2\n0 1\n0 1\n", read_edge_list) == 4);
}

TEST_CASE("files") {
  const std::string path = (std::filesystem::temp_directory_path() / "grassembed_io_test.txt").string();
  write_file(path, "hello\n");
  CHECK(read_file(path) == "hello\n");
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_file(path), Error);
}
