#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rigidq {

// Largest dimension-vector entry accepted from user input.
inline constexpr std::int64_t kMaxDimEntry = 1'000'000;

// Integer vector indexed by the vertices of a quiver. Signed so that
// differences and Euler-form arguments are representable; dimension
// vectors and roots proper are non-negative.
class DimVector {
 public:
  DimVector() = default;
  explicit DimVector(std::size_t n) : v_(n, 0) {}
  DimVector(std::initializer_list<std::int64_t> xs) : v_(xs) {}
  explicit DimVector(std::vector<std::int64_t> xs) : v_(std::move(xs)) {}

  static DimVector unit(std::size_t n, std::size_t i) {
    DimVector e(n);
    e[i] = 1;
    return e;
  }

  std::size_t size() const { return v_.size(); }
  std::int64_t& operator[](std::size_t i) { return v_[i]; }
  std::int64_t operator[](std::size_t i) const { return v_[i]; }
  std::span<const std::int64_t> entries() const { return v_; }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }

  bool is_zero() const;
  bool is_nonnegative() const;
  std::int64_t total() const;  // sum of entries, checked
  // Componentwise order.
  bool leq(const DimVector& other) const;

  DimVector& operator+=(const DimVector& o);
  DimVector& operator-=(const DimVector& o);
  friend DimVector operator+(DimVector a, const DimVector& b) { return a += b; }
  friend DimVector operator-(DimVector a, const DimVector& b) { return a -= b; }
  friend DimVector operator*(std::int64_t k, const DimVector& a);

  // Lexicographic.
  friend auto operator<=>(const DimVector&, const DimVector&) = default;
  friend bool operator==(const DimVector&, const DimVector&) = default;

  // "(1,2,1)"
  std::string to_string() const;
  // Parses "1,2,1" (optionally wrapped in parentheses). Entries must lie in
  // [0, kMaxDimEntry].
  static DimVector parse(std::string_view text);

 private:
  std::vector<std::int64_t> v_;
};

std::ostream& operator<<(std::ostream& os, const DimVector& d);

// Arrow tail -> head, 0-based vertex indices.
struct Arrow {
  int tail = 0;
  int head = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

// Integer matrix of the Euler form: <d,e> = d^T E e with E[i][i] = 1 and
// E[i][j] = -(number of arrows i -> j).
class EulerMatrix {
 public:
  EulerMatrix() = default;
  EulerMatrix(int n, std::span<const Arrow> arrows);

  int size() const { return n_; }
  std::int64_t operator()(int i, int j) const { return m_[static_cast<std::size_t>(i * n_ + j)]; }

  // <d,e>, checked 64-bit.
  std::int64_t pair(const DimVector& d, const DimVector& e) const;
  // The linear form <d,-> as a coefficient vector (d^T E).
  DimVector left(const DimVector& d) const;
  // The linear form <-,e> as a coefficient vector (E e).
  DimVector right(const DimVector& e) const;
  std::int64_t determinant() const;

 private:
  int n_ = 0;
  std::vector<std::int64_t> m_;
};

// Classification of one connected component.
struct DynkinType {
  char family = 'A';  // 'A', 'D' or 'E'
  int rank = 0;
  // vertices[k] is the quiver vertex carrying label k+1 of the standard
  // (Bourbaki) diagram.
  std::vector<int> vertices;

  std::string name() const { return std::string(1, family) + std::to_string(rank); }
  friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

// Finite quiver whose underlying graph is a disjoint union of simply-laced
// Dynkin diagrams. Construction validates and classifies; instances are
// immutable afterwards.
class Quiver {
 public:
  // Throws InvalidInput (loops, multiple edges, bad indices) or
  // NotDynkinError.
  Quiver(int vertex_count, std::vector<Arrow> arrows, std::string descriptor = {});

  int vertex_count() const { return n_; }
  std::span<const Arrow> arrows() const { return arrows_; }
  const std::vector<DynkinType>& components() const { return components_; }
  const EulerMatrix& euler() const { return euler_; }

  // Component index of each vertex.
  int component_of(int vertex) const { return component_of_[static_cast<std::size_t>(vertex)]; }

  // Builtin descriptor if the quiver came from one, otherwise the inline
  // file form "vertices 3; arrow 1 2; arrow 3 2". Both parse back.
  const std::string& descriptor() const { return descriptor_; }

  // Same vertices, every arrow reversed.
  Quiver opposite() const;

  // Induced full subquiver on `vertices` (given in increasing order);
  // vertex k of the result is vertices[k].
  Quiver induced(std::span<const int> vertices) const;

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.n_ == b.n_ && a.arrows_ == b.arrows_;
  }

 private:
  int n_ = 0;
  std::vector<Arrow> arrows_;
  std::string descriptor_;
  std::vector<DynkinType> components_;
  std::vector<int> component_of_;
  EulerMatrix euler_;
};

// One DynkinType per connected component, ordered by smallest vertex.
// Throws NotDynkinError if some component is not an ADE diagram.
std::vector<DynkinType> classify_dynkin(int vertex_count, std::span<const Arrow> arrows);
inline std::vector<DynkinType> classify_dynkin(const Quiver& q) { return q.components(); }

// Parses either the quiver file format
//   vertices <n>
//   arrow <i> <j>        (1-based, i -> j)
// with '#' comments and lines separated by newlines or ';', or a builtin
// descriptor "<Family><rank>[:<orientation>]", several joined by '+'.
// For the orientation string the k-th character orients the k-th edge of the
// standard diagram (edges sorted by endpoints), '>' pointing toward the
// higher label. Default is all '>'.
Quiver parse_quiver(std::string_view text);

// Edges {a,b} (1-based, a < b) of the standard diagram, in orientation-string
// order.
std::vector<std::pair<int, int>> standard_edges(char family, int rank);

// All 2^edges strings over {'>','<'}, in lexicographic order of bits
// ('>' first).
std::vector<std::string> orientation_strings(std::size_t edges);

std::int64_t euler_form(const Quiver& q, const DimVector& d, const DimVector& e);

// Checks length and non-negativity; throws InvalidInput.
void require_dimension_vector(const Quiver& q, const DimVector& d);

}  // namespace rigidq
