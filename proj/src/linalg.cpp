#include "rigidq/linalg.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <charconv>
#include <random>

#include "rigidq/checked.hpp"
#include "rigidq/error.hpp"

namespace rigidq {

// -------------------------------------------------------------------- field

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

FieldConfig FieldConfig::prime_field(std::int64_t p) {
  if (p >= (std::int64_t{1} << 31) || !is_prime(p))
    throw InvalidInput("field characteristic " + std::to_string(p) + " is not a prime below 2^31");
  return {Kind::prime, p};
}

std::string FieldConfig::name() const { return kind == Kind::rationals ? "Q" : "F_" + std::to_string(p); }

FieldConfig FieldConfig::parse(std::string_view text) {
  if (text == "Q" || text == "q") return rationals();
  std::int64_t p = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw ParseError("field must be a prime or 'Q', got '" + std::string(text) + "'");
  return prime_field(p);
}

std::int64_t FieldConfig::normalize(std::int64_t x) const {
  if (kind == Kind::rationals) return x;
  x %= p;
  return x < 0 ? x + p : x;
}

namespace {

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    auto q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return t < 0 ? t + p : t;
}

}  // namespace

// ------------------------------------------------------------------- Matrix

Matrix::Matrix(int rows, int cols, std::vector<std::int64_t> entries) : rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (rows < 0 || cols < 0 || a_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
    throw InvalidInput("matrix entry count does not match its shape");
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](std::int64_t x) { return x == 0; });
}

Matrix multiply(const Matrix& a, const Matrix& b, const FieldConfig& field) {
  if (a.cols() != b.rows()) throw InvalidInput("matrix shapes do not compose");
  Matrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      auto x = a(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.cols(); ++j) {
        if (field.kind == FieldConfig::Kind::prime)
          c(i, j) = (c(i, j) + x * b(k, j)) % field.p;
        else
          c(i, j) = checked::fma(c(i, j), x, b(k, j));
      }
    }
  return c;
}

Matrix negate(const Matrix& a, const FieldConfig& field) {
  Matrix r = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = field.normalize(checked::sub(0, a(i, j)));
  return r;
}

namespace {

int rank_mod_p(const Matrix& m, std::int64_t p) {
  const int rows = m.rows(), cols = m.cols();
  std::vector<std::int64_t> a(m.entries().begin(), m.entries().end());
  for (auto& x : a) x = ((x % p) + p) % p;
  auto at = [&](int r, int c) -> std::int64_t& { return a[static_cast<std::size_t>(r * cols + c)]; };
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = rank;
    while (piv < rows && at(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      for (int j = c; j < cols; ++j) std::swap(at(piv, j), at(rank, j));
    const auto inv = mod_inverse(at(rank, c), p);
    for (int j = c; j < cols; ++j) at(rank, j) = at(rank, j) * inv % p;
    for (int i = rank + 1; i < rows; ++i) {
      const auto f = at(i, c);
      if (f == 0) continue;
      for (int j = c; j < cols; ++j) at(i, j) = ((at(i, j) - f * at(rank, j)) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

int rank_rational(const Matrix& m) {
  using boost::multiprecision::cpp_int;
  const int rows = m.rows(), cols = m.cols();
  std::vector<cpp_int> a(m.entries().begin(), m.entries().end());
  auto at = [&](int r, int c) -> cpp_int& { return a[static_cast<std::size_t>(r * cols + c)]; };
  cpp_int prev = 1;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = rank;
    while (piv < rows && at(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      for (int j = 0; j < cols; ++j) std::swap(at(piv, j), at(rank, j));
    for (int i = rank + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) at(i, j) = (at(i, j) * at(rank, c) - at(i, c) * at(rank, j)) / prev;
      at(i, c) = 0;
    }
    prev = at(rank, c);
    ++rank;
  }
  return rank;
}

}  // namespace

int matrix_rank(const Matrix& m, const FieldConfig& field) {
  return field.kind == FieldConfig::Kind::prime ? rank_mod_p(m, field.p) : rank_rational(m);
}

// ----------------------------------------------------------- Representation

std::size_t arrow_index(const Quiver& q, int tail, int head) {
  const auto arrows = q.arrows();
  for (std::size_t a = 0; a < arrows.size(); ++a)
    if (arrows[a].tail == tail && arrows[a].head == head) return a;
  throw InvalidInput("no arrow " + std::to_string(tail + 1) + " -> " + std::to_string(head + 1));
}

Representation::Representation(const Quiver& q, const DimVector& d, const FieldConfig& field)
    : quiver_(q), dims_(d), field_(field) {
  require_dimension_vector(q, d);
  for (const auto& a : q.arrows()) maps_.emplace_back(dim(a.head), dim(a.tail));
}

Representation::Representation(const Quiver& q, const DimVector& d, std::vector<Matrix> maps, const FieldConfig& field)
    : Representation(q, d, field) {
  if (maps.size() != maps_.size()) throw InvalidInput("representation needs one matrix per arrow");
  for (std::size_t a = 0; a < maps.size(); ++a) set_map(a, std::move(maps[a]));
}

void Representation::set_map(std::size_t arrow, Matrix m) {
  const auto& a = quiver_.arrows()[arrow];
  if (m.rows() != dim(a.head) || m.cols() != dim(a.tail))
    throw InvalidInput("map for arrow " + std::to_string(arrow + 1) + " has shape " + std::to_string(m.rows()) + "x" +
                       std::to_string(m.cols()) + ", expected " + std::to_string(dim(a.head)) + "x" +
                       std::to_string(dim(a.tail)));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) m(r, c) = field_.normalize(m(r, c));
  maps_[arrow] = std::move(m);
}

Matrix Representation::path_map(std::span<const int> path) const {
  if (path.empty()) throw InvalidInput("empty path");
  Matrix acc = Matrix::identity(dim(path.front()));
  for (std::size_t t = 0; t + 1 < path.size(); ++t)
    acc = multiply(maps_[arrow_index(quiver_, path[t], path[t + 1])], acc, field_);
  return acc;
}

std::int64_t hom_space_dim(const Representation& v, const Representation& w) {
  if (!(v.quiver() == w.quiver())) throw InvalidInput("hom_space_dim: representations of different quivers");
  if (!(v.field() == w.field())) throw InvalidInput("hom_space_dim: representations over different fields");
  const auto& q = v.quiver();
  const int n = q.vertex_count();

  // Unknown phi_i[r][c] (r < dim W_i, c < dim V_i) sits at offset[i] + r * dim V_i + c.
  std::vector<int> offset(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i)
    offset[static_cast<std::size_t>(i) + 1] = offset[static_cast<std::size_t>(i)] + w.dim(i) * v.dim(i);
  const int unknowns = offset.back();

  int equations = 0;
  for (const auto& a : q.arrows()) equations += w.dim(a.head) * v.dim(a.tail);

  Matrix sys(equations, unknowns);
  int row = 0;
  const auto& field = v.field();
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    const auto [i, j] = q.arrows()[k];
    const auto& va = v.map(k);  // dim V_j x dim V_i
    const auto& wa = w.map(k);  // dim W_j x dim W_i
    // (W_a phi_i - phi_j V_a)[r][c] = 0 for r < dim W_j, c < dim V_i.
    for (int r = 0; r < w.dim(j); ++r)
      for (int c = 0; c < v.dim(i); ++c, ++row) {
        for (int t = 0; t < w.dim(i); ++t)
          {
          auto& x = sys(row, offset[static_cast<std::size_t>(i)] + t * v.dim(i) + c);
          x = field.normalize(checked::add(x, wa(r, t)));
        }
        for (int t = 0; t < v.dim(j); ++t) {
          auto& x = sys(row, offset[static_cast<std::size_t>(j)] + r * v.dim(j) + t);
          x = field.normalize(checked::sub(x, va(t, c)));
        }
      }
  }
  return unknowns - matrix_rank(sys, field);
}

Representation random_rep(const Quiver& q, const DimVector& d, const FieldConfig& field, std::uint64_t seed) {
  require_dimension_vector(q, d);
  if (field.kind == FieldConfig::Kind::prime) {
    std::int64_t top = 0;
    for (auto x : d) top = std::max(top, x);
    if (field.p <= 2 * top * top)
      throw InvalidInput("prime " + std::to_string(field.p) + " too small for random representations of dimension " +
                         d.to_string());
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist =
      field.kind == FieldConfig::Kind::prime ? std::uniform_int_distribution<std::int64_t>(0, field.p - 1)
                                             : std::uniform_int_distribution<std::int64_t>(-1000, 1000);
  Representation v(q, d, field);
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    const auto& a = q.arrows()[k];
    Matrix m(v.dim(a.head), v.dim(a.tail));
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) m(r, c) = dist(rng);
    v.set_map(k, std::move(m));
  }
  return v;
}

// ------------------------------------------------------------------ file IO

Representation read_representation(std::string_view text, const Quiver& q, const DimVector& d,
                                   const FieldConfig& field) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != '#') ++j;
    tokens.emplace_back(text.substr(i, j - i));
    i = j;
  }

  auto to_int = [](const std::string& tok) {
    std::int64_t x = 0;
    const char* b = tok.data();
    if (!tok.empty() && tok[0] == '+') ++b;
    auto [p, ec] = std::from_chars(b, tok.data() + tok.size(), x);
    if (tok.empty() || ec != std::errc() || p != tok.data() + tok.size())
      throw ParseError("expected integer in representation file, got '" + tok + "'");
    return x;
  };

  Representation v(q, d, field);
  std::vector<bool> seen(q.arrows().size(), false);
  std::size_t pos = 0;
  while (pos < tokens.size()) {
    if (tokens[pos] != "map") throw ParseError("expected 'map', got '" + tokens[pos] + "'");
    if (pos + 3 >= tokens.size()) throw ParseError("truncated 'map' header");
    const auto arrow = to_int(tokens[pos + 1]);
    const auto rows = to_int(tokens[pos + 2]);
    const auto cols = to_int(tokens[pos + 3]);
    pos += 4;
    if (arrow < 1 || arrow > static_cast<std::int64_t>(q.arrows().size()))
      throw ParseError("arrow index " + std::to_string(arrow) + " out of range");
    if (seen[static_cast<std::size_t>(arrow - 1)]) throw ParseError("duplicate map for arrow " + std::to_string(arrow));
    seen[static_cast<std::size_t>(arrow - 1)] = true;
    if (rows < 0 || cols < 0 || rows > 100000 || cols > 100000) throw ParseError("bad matrix shape");
    const auto count = static_cast<std::size_t>(rows * cols);
    if (pos + count > tokens.size()) throw ParseError("truncated entries for arrow " + std::to_string(arrow));
    std::vector<std::int64_t> entries;
    entries.reserve(count);
    for (std::size_t k = 0; k < count; ++k) entries.push_back(to_int(tokens[pos + k]));
    pos += count;
    v.set_map(static_cast<std::size_t>(arrow - 1), Matrix(static_cast<int>(rows), static_cast<int>(cols), std::move(entries)));
  }
  return v;
}

std::string write_representation(const Representation& v) {
  std::string out = "# field " + v.field().name() + ", dimension vector " + v.dims().to_string() + "\n";
  for (std::size_t a = 0; a < v.maps().size(); ++a) {
    const auto& m = v.map(a);
    const auto& arrow = v.quiver().arrows()[a];
    out += "map " + std::to_string(a + 1) + " " + std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "  # " +
           std::to_string(arrow.tail + 1) + " -> " + std::to_string(arrow.head + 1) + "\n";
    for (int r = 0; r < m.rows(); ++r) {
      for (int c = 0; c < m.cols(); ++c) out += (c ? " " : "") + std::to_string(m(r, c));
      out += "\n";
    }
  }
  return out;
}

}  // namespace rigidq
