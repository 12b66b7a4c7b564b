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

#include "grassembed/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace grassembed {

namespace {

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  // Next significant line split into whitespace tokens.
  std::vector<std::string_view> next(const char* expecting) {
    auto tokens = try_next();
    if (tokens.empty()) throw ParseError(std::string("unexpected end of input, expecting ") + expecting, line_ + 1);
    return tokens;
  }

  // Empty at end of input.
  std::vector<std::string_view> try_next() {
    while (pos_ < text_.size()) {
      const auto end = text_.find('\n', pos_);
      const std::string_view raw = text_.substr(pos_, end == std::string_view::npos ? std::string_view::npos : end - pos_);
      pos_ = end == std::string_view::npos ? text_.size() : end + 1;
      ++line_;
      std::vector<std::string_view> tokens;
      std::size_t i = 0;
      while (i < raw.size()) {
        while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r') ++j;
        if (j > i) tokens.push_back(raw.substr(i, j - i));
        i = j;
      }
      if (tokens.empty() || tokens.front().front() == '#') continue;
      return tokens;
    }
    return {};
  }

  std::size_t line() const { return line_; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_); }

  std::uint64_t number(std::string_view token) const {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size()) fail("expected a number, got '" + std::string(token) + "'");
    return v;
  }

  void expect_count(const std::vector<std::string_view>& tokens, std::size_t n, const char* what) const {
    if (tokens.size() != n) fail(std::string("expected ") + std::to_string(n) + " fields in " + what);
  }

  Field field(std::string_view token) const {
    try {
      return Field::parse_header(token);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail(e.what());
    }
  }

  void expect_end() {
    if (!try_next().empty()) fail("unexpected trailing content");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 0;
};

Elem element(LineReader& in, std::string_view token, const Field& f) {
  const std::uint64_t v = in.number(token);
  if (v >= f.order()) in.fail("element code " + std::to_string(v) + " out of range for " + f.header());
  return static_cast<Elem>(v);
}

void write_rows(std::ostringstream& out, const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m(r, c);
    out << '\n';
  }
}

Matrix read_rows(LineReader& in, const Field& f, std::size_t rows, std::size_t cols) {
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto tokens = in.next("a matrix row");
    in.expect_count(tokens, cols, "a matrix row");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = element(in, tokens[c], f);
  }
  return m;
}

std::pair<Field, std::size_t> field_and_dim(LineReader& in, const char* what) {
  const auto tokens = in.next(what);
  in.expect_count(tokens, 2, what);
  return {in.field(tokens[0]), static_cast<std::size_t>(in.number(tokens[1]))};
}

// `i j` lines covering 0..count-1 in order.
std::vector<std::uint64_t> read_table(LineReader& in, std::uint64_t count, std::uint64_t range) {
  std::vector<std::uint64_t> table;
  table.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    const auto tokens = in.next("an 'i j' line");
    in.expect_count(tokens, 2, "an 'i j' line");
    const std::uint64_t a = in.number(tokens[0]);
    const std::uint64_t b = in.number(tokens[1]);
    if (a != i) in.fail("expected domain index " + std::to_string(i) + ", got " + std::to_string(a));
    if (b >= range) in.fail("image index " + std::to_string(b) + " out of range");
    table.push_back(b);
  }
  in.expect_end();
  return table;
}

template <typename Fn>
auto wrap_errors(LineReader& in, Fn fn) {
  try {
    return fn();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    in.fail(e.what());
  }
}

}  // namespace

std::string write_matrix(const Matrix& m) {
  std::ostringstream out;
  out << m.field().header() << '\n' << m.field().order() << ' ' << m.rows() << ' ' << m.cols() << '\n';
  write_rows(out, m);
  return out.str();
}

Matrix read_matrix(std::string_view text) {
  LineReader in(text);
  const auto header = in.next("a field header");
  in.expect_count(header, 1, "the field header");
  const Field f = in.field(header[0]);
  const auto dims = in.next("'q rows cols'");
  in.expect_count(dims, 3, "'q rows cols'");
  if (in.number(dims[0]) != f.order()) in.fail("q does not match the field header");
  Matrix m = read_rows(in, f, in.number(dims[1]), in.number(dims[2]));
  in.expect_end();
  return m;
}

std::string write_semilinear(const SemilinearMap& l) {
  std::ostringstream out;
  out << l.source_field().header() << ' ' << l.source_dim() << '\n';
  out << l.target_field().header() << ' ' << l.target_dim() << '\n';
  out << "sigma " << l.sigma().generator_image() << '\n';
  write_rows(out, l.matrix());
  return out.str();
}

SemilinearMap read_semilinear(std::string_view text) {
  LineReader in(text);
  const auto [src, n] = field_and_dim(in, "the source field and dimension");
  const auto [dst, n2] = field_and_dim(in, "the target field and dimension");
  const auto sigma_line = in.next("'sigma g'");
  in.expect_count(sigma_line, 2, "'sigma g'");
  if (sigma_line[0] != "sigma") in.fail("expected 'sigma'");
  const Elem g = element(in, sigma_line[1], dst);
  const FieldHom sigma = wrap_errors(in, [&] { return FieldHom::from_generator_image(src, dst, g); });
  Matrix m = read_rows(in, dst, n, n2);
  in.expect_end();
  return SemilinearMap(sigma, std::move(m));
}

std::string write_point_map(const PointMap& g) {
  std::ostringstream out;
  out << g.domain.field().header() << ' ' << g.domain.ambient_dim() << '\n';
  out << g.codomain.field().header() << ' ' << g.codomain.ambient_dim() << '\n';
  for (std::size_t i = 0; i < g.table.size(); ++i) out << i << ' ' << g.table[i] << '\n';
  return out.str();
}

PointMap read_point_map(std::string_view text) {
  LineReader in(text);
  const auto [src, n] = field_and_dim(in, "the domain field and dimension");
  const auto [dst, n2] = field_and_dim(in, "the codomain field and dimension");
  PointMap g = wrap_errors(in, [&] { return PointMap{Grassmannian(src, n, 1), Grassmannian(dst, n2, 1), {}}; });
  g.table = read_table(in, g.domain.size(), g.codomain.size());
  return g;
}

std::string write_grassmann_map(const GrassmannMap& f) {
  std::ostringstream out;
  out << f.domain.field().order() << ' ' << f.domain.ambient_dim() << ' ' << f.domain.grade() << ' '
      << f.codomain.field().order() << ' ' << f.codomain.ambient_dim() << ' ' << f.codomain.grade() << '\n';
  out << f.domain.field().header() << '\n' << f.codomain.field().header() << '\n';
  for (std::size_t i = 0; i < f.table.size(); ++i) out << i << ' ' << f.table[i] << '\n';
  return out.str();
}

GrassmannMap read_grassmann_map(std::string_view text) {
  LineReader in(text);
  const auto params = in.next("'q n k q' n' k''");
  in.expect_count(params, 6, "'q n k q' n' k''");
  std::uint64_t v[6];
  for (int i = 0; i < 6; ++i) v[i] = in.number(params[i]);
  const auto h1 = in.next("the domain field header");
  in.expect_count(h1, 1, "the domain field header");
  const Field src = in.field(h1[0]);
  const auto h2 = in.next("the codomain field header");
  in.expect_count(h2, 1, "the codomain field header");
  const Field dst = in.field(h2[0]);
  if (src.order() != v[0] || dst.order() != v[3]) in.fail("field headers do not match q and q'");
  GrassmannMap f = wrap_errors(in, [&] {
    return GrassmannMap{Grassmannian(src, v[1], v[2]), Grassmannian(dst, v[4], v[5]), {}};
  });
  f.table = read_table(in, f.domain.size(), f.codomain.size());
  return f;
}

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "edge-list") return GraphFormat::EdgeList;
  if (name == "dot") return GraphFormat::Dot;
  throw Error("unknown graph format '" + std::string(name) + "' (expected edge-list or dot)");
}

std::string export_graph(const GrassmannGraph& g, GraphFormat format) {
  std::ostringstream out;
  const Grassmannian& s = g.space();
  const auto lists = g.adjacency_lists();
  if (format == GraphFormat::EdgeList) {
    out << s.field().header() << '\n';
    out << s.ambient_dim() << ' ' << s.grade() << ' ' << g.size() << ' ' << g.edge_count() << '\n';
    for (std::size_t i = 0; i < lists.size(); ++i) {
      for (auto j : lists[i]) {
        if (j > i) out << i << ' ' << j << '\n';
      }
    }
  } else {
    out << "graph grassmann {\n";
    out << "  // " << s.field().header() << " n=" << s.ambient_dim() << " k=" << s.grade() << '\n';
    for (std::size_t i = 0; i < lists.size(); ++i) out << "  " << i << ";\n";
    for (std::size_t i = 0; i < lists.size(); ++i) {
      for (auto j : lists[i]) {
        if (j > i) out << "  " << i << " -- " << j << ";\n";
      }
    }
    out << "}\n";
  }
  return out.str();
}

EdgeList read_edge_list(std::string_view text) {
  LineReader in(text);
  EdgeList g;
  const auto header = in.next("a field header");
  in.expect_count(header, 1, "the field header");
  g.field = in.field(header[0]);
  const auto dims = in.next("'n k vertices edges'");
  in.expect_count(dims, 4, "'n k vertices edges'");
  g.n = in.number(dims[0]);
  g.k = in.number(dims[1]);
  g.vertices = in.number(dims[2]);
  const std::uint64_t edges = in.number(dims[3]);
  std::pair<std::uint64_t, std::uint64_t> previous{0, 0};
  for (std::uint64_t e = 0; e < edges; ++e) {
    const auto tokens = in.next("an edge line");
    in.expect_count(tokens, 2, "an edge line");
    const std::pair<std::uint64_t, std::uint64_t> edge{in.number(tokens[0]), in.number(tokens[1])};
    if (edge.first >= edge.second || edge.second >= g.vertices) in.fail("edge endpoints must satisfy i < j < vertices");
    if (e > 0 && !(previous < edge)) in.fail("edges must be sorted and distinct");
    g.edges.push_back(edge);
    previous = edge;
  }
  in.expect_end();
  return g;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
  if (!out) throw Error("failed writing '" + path + "'");
}

}  // namespace grassembed
