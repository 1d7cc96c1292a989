#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rigidq/quiver.hpp"

namespace rigidq {

inline constexpr std::int64_t kDefaultPrime = 32003;

// Exact field of coefficients: a prime field F_p or the rationals. Over Q,
// matrices carry integer entries and ranks are computed fraction-free.
struct FieldConfig {
  enum class Kind { prime, rationals };
  Kind kind = Kind::prime;
  std::int64_t p = kDefaultPrime;

  static FieldConfig prime_field(std::int64_t p);  // throws InvalidInput unless p is a prime < 2^31
  static FieldConfig rationals() { return {Kind::rationals, 0}; }
  // "F_32003" or "Q"
  std::string name() const;
  // "32003" or "Q" on the command line.
  static FieldConfig parse(std::string_view text);

  std::int64_t normalize(std::int64_t x) const;

  friend bool operator==(const FieldConfig&, const FieldConfig&) = default;
};

bool is_prime(std::int64_t p);

// Dense row-major matrix with integer entries, interpreted in a FieldConfig.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {}
  Matrix(int rows, int cols, std::vector<std::int64_t> entries);
  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::int64_t& operator()(int r, int c) { return a_[static_cast<std::size_t>(r * cols_ + c)]; }
  std::int64_t operator()(int r, int c) const { return a_[static_cast<std::size_t>(r * cols_ + c)]; }
  std::span<const std::int64_t> entries() const { return a_; }
  bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> a_;
};

Matrix multiply(const Matrix& a, const Matrix& b, const FieldConfig& field);
Matrix negate(const Matrix& a, const FieldConfig& field);

// Exact rank: modular elimination over F_p, Bareiss over Q.
int matrix_rank(const Matrix& m, const FieldConfig& field);

// Representation of a quiver: one matrix per arrow (rows = dimension at the
// head, cols = dimension at the tail), all over one field.
class Representation {
 public:
  // Zero representation of dimension vector d.
  Representation(const Quiver& q, const DimVector& d, const FieldConfig& field);
  // Validates shapes; reduces entries into the field.
  Representation(const Quiver& q, const DimVector& d, std::vector<Matrix> maps, const FieldConfig& field);

  const Quiver& quiver() const { return quiver_; }
  const DimVector& dims() const { return dims_; }
  const FieldConfig& field() const { return field_; }
  std::span<const Matrix> maps() const { return maps_; }
  const Matrix& map(std::size_t arrow) const { return maps_[arrow]; }
  void set_map(std::size_t arrow, Matrix m);

  int dim(int vertex) const { return static_cast<int>(dims_[static_cast<std::size_t>(vertex)]); }

  // Composite along a directed path given by its vertices (0-based,
  // consecutive vertices joined by an arrow). A single vertex gives the
  // identity.
  Matrix path_map(std::span<const int> path) const;

 private:
  Quiver quiver_;
  DimVector dims_;
  std::vector<Matrix> maps_;
  FieldConfig field_;
};

// Index of the arrow tail -> head, or throws InvalidInput.
std::size_t arrow_index(const Quiver& q, int tail, int head);

// dim Hom(V, W): unknowns phi_i : V_i -> W_i, one equation block
// W_a phi_tail(a) = phi_head(a) V_a per arrow.
std::int64_t hom_space_dim(const Representation& v, const Representation& w);

// i.i.d. uniform entries: from F_p, or integers in [-1000, 1000] over Q.
// Over F_p requires p > 2 * max(d)^2.
Representation random_rep(const Quiver& q, const DimVector& d, const FieldConfig& field, std::uint64_t seed);

// Representation file: lines "map <arrow-index> <rows> <cols>" (arrow index
// 1-based in quiver order) each followed by rows*cols row-major integer
// entries; '#' comments. Arrows without a map line are zero.
Representation read_representation(std::string_view text, const Quiver& q, const DimVector& d,
                                   const FieldConfig& field);
std::string write_representation(const Representation& v);

}  // namespace rigidq
