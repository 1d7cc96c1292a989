#include "rigidq/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "rigidq/checked.hpp"
#include "rigidq/error.hpp"

namespace rigidq {

// ---------------------------------------------------------------- DimVector

bool DimVector::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](std::int64_t x) { return x == 0; });
}

bool DimVector::is_nonnegative() const {
  return std::all_of(v_.begin(), v_.end(), [](std::int64_t x) { return x >= 0; });
}

std::int64_t DimVector::total() const {
  std::int64_t s = 0;
  for (auto x : v_) s = checked::add(s, x);
  return s;
}

bool DimVector::leq(const DimVector& other) const {
  if (size() != other.size()) throw InvalidInput("dimension vector length mismatch");
  for (std::size_t i = 0; i < size(); ++i)
    if (v_[i] > other.v_[i]) return false;
  return true;
}

DimVector& DimVector::operator+=(const DimVector& o) {
  if (size() != o.size()) throw InvalidInput("dimension vector length mismatch");
  for (std::size_t i = 0; i < size(); ++i) v_[i] = checked::add(v_[i], o.v_[i]);
  return *this;
}

DimVector& DimVector::operator-=(const DimVector& o) {
  if (size() != o.size()) throw InvalidInput("dimension vector length mismatch");
  for (std::size_t i = 0; i < size(); ++i) v_[i] = checked::sub(v_[i], o.v_[i]);
  return *this;
}

DimVector operator*(std::int64_t k, const DimVector& a) {
  DimVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked::mul(k, a[i]);
  return r;
}

std::string DimVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v_[i]);
  }
  return s + ")";
}

std::ostream& operator<<(std::ostream& os, const DimVector& d) { return os << d.to_string(); }

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view tok, const char* what) {
  tok = trim(tok);
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  std::int64_t x = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
  if (tok.empty() || ec != std::errc() || p != tok.data() + tok.size())
    throw ParseError(std::string("expected integer for ") + what + ", got '" + std::string(tok) + "'");
  return x;
}

}  // namespace

DimVector DimVector::parse(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '(' && text.back() == ')') text = trim(text.substr(1, text.size() - 2));
  std::vector<std::int64_t> xs;
  if (text.empty()) return DimVector(std::move(xs));
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    auto x = parse_int(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start),
                       "dimension vector entry");
    if (x < 0) throw InvalidInput("dimension vector entries must be non-negative");
    if (x > kMaxDimEntry) throw InvalidInput("dimension vector entry exceeds " + std::to_string(kMaxDimEntry));
    xs.push_back(x);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return DimVector(std::move(xs));
}

// -------------------------------------------------------------- EulerMatrix

EulerMatrix::EulerMatrix(int n, std::span<const Arrow> arrows)
    : n_(n), m_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {
  for (int i = 0; i < n; ++i) m_[static_cast<std::size_t>(i * n + i)] = 1;
  for (const auto& a : arrows) m_[static_cast<std::size_t>(a.tail * n + a.head)] -= 1;
}

std::int64_t EulerMatrix::pair(const DimVector& d, const DimVector& e) const {
  if (d.size() != static_cast<std::size_t>(n_) || e.size() != static_cast<std::size_t>(n_))
    throw InvalidInput("Euler form argument has wrong length");
  std::int64_t s = 0;
  for (int i = 0; i < n_; ++i) {
    if (d[i] == 0) continue;
    for (int j = 0; j < n_; ++j) {
      auto c = (*this)(i, j);
      if (c != 0) s = checked::add(s, checked::mul(checked::mul(d[i], c), e[j]));
    }
  }
  return s;
}

DimVector EulerMatrix::left(const DimVector& d) const {
  DimVector r(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r[j] = checked::fma(r[j], d[i], (*this)(i, j));
  return r;
}

DimVector EulerMatrix::right(const DimVector& e) const {
  DimVector r(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r[i] = checked::fma(r[i], (*this)(i, j), e[j]);
  return r;
}

std::int64_t EulerMatrix::determinant() const {
  // Bareiss fraction-free elimination.
  std::vector<std::int64_t> a = m_;
  const int n = n_;
  auto at = [&](int i, int j) -> std::int64_t& { return a[static_cast<std::size_t>(i * n + j)]; };
  std::int64_t sign = 1, prev = 1;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    while (piv < n && at(piv, k) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(piv, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        at(i, j) = checked::sub(checked::mul(at(i, j), at(k, k)), checked::mul(at(i, k), at(k, j))) / prev;
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  return n == 0 ? 1 : sign * at(n - 1, n - 1);
}

// ------------------------------------------------------------ classification

std::vector<std::pair<int, int>> standard_edges(char family, int rank) {
  std::vector<std::pair<int, int>> e;
  switch (family) {
    case 'A':
      if (rank < 1) throw InvalidInput("A_n needs n >= 1");
      for (int k = 1; k < rank; ++k) e.emplace_back(k, k + 1);
      break;
    case 'D':
      if (rank < 4) throw InvalidInput("D_n needs n >= 4");
      for (int k = 1; k + 1 <= rank - 2; ++k) e.emplace_back(k, k + 1);
      e.emplace_back(rank - 2, rank - 1);
      e.emplace_back(rank - 2, rank);
      break;
    case 'E':
      if (rank < 6 || rank > 8) throw InvalidInput("E_n needs n in {6,7,8}");
      e = {{1, 3}, {2, 4}, {3, 4}};
      for (int k = 4; k < rank; ++k) e.emplace_back(k, k + 1);
      break;
    default:
      throw InvalidInput(std::string("unknown Dynkin family '") + family + "'");
  }
  return e;
}

namespace {

using Adjacency = std::vector<std::vector<int>>;

Adjacency undirected(int n, std::span<const Arrow> arrows) {
  Adjacency adj(static_cast<std::size_t>(n));
  for (const auto& a : arrows) {
    adj[static_cast<std::size_t>(a.tail)].push_back(a.head);
    adj[static_cast<std::size_t>(a.head)].push_back(a.tail);
  }
  for (auto& l : adj) std::sort(l.begin(), l.end());
  return adj;
}

// Walks from `start` away from `from` along a path, returning the visited
// vertices in order (start first). Stops at a leaf.
std::vector<int> walk_arm(const Adjacency& adj, int from, int start) {
  std::vector<int> arm{start};
  int prev = from, cur = start;
  while (adj[static_cast<std::size_t>(cur)].size() == 2) {
    const auto& nb = adj[static_cast<std::size_t>(cur)];
    int next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
    arm.push_back(cur);
  }
  return arm;
}

DynkinType classify_component(const Adjacency& adj, const std::vector<int>& verts, std::size_t edges) {
  const int size = static_cast<int>(verts.size());
  auto fail = [&](const std::string& why) -> NotDynkinError {
    return NotDynkinError("component containing vertex " + std::to_string(verts.front() + 1) +
                          " is not a Dynkin diagram: " + why);
  };
  if (edges != verts.size() - 1) throw fail("underlying graph has a cycle");

  std::vector<int> branch;
  for (int v : verts) {
    auto deg = adj[static_cast<std::size_t>(v)].size();
    if (deg > 3) throw fail("vertex of degree " + std::to_string(deg));
    if (deg == 3) branch.push_back(v);
  }
  if (branch.size() > 1) throw fail("more than one branch vertex");

  DynkinType t;
  t.rank = size;
  if (branch.empty()) {
    t.family = 'A';
    if (size == 1) {
      t.vertices = verts;
      return t;
    }
    int start = -1;
    for (int v : verts)
      if (adj[static_cast<std::size_t>(v)].size() == 1) {
        start = v;
        break;  // verts is sorted, so this is the smaller endpoint
      }
    t.vertices = walk_arm(adj, start, adj[static_cast<std::size_t>(start)].front());
    t.vertices.insert(t.vertices.begin(), start);
    return t;
  }

  const int center = branch.front();
  std::vector<std::vector<int>> arms;
  for (int nb : adj[static_cast<std::size_t>(center)]) arms.push_back(walk_arm(adj, center, nb));
  std::sort(arms.begin(), arms.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.front() < b.front();
  });
  const auto p = arms[0].size(), q = arms[1].size(), r = arms[2].size();

  std::vector<int> lab(static_cast<std::size_t>(size));
  if (p == 1 && q == 1) {
    // D_n: 1 - 2 - ... - (n-2) with n-1 and n attached to n-2.
    t.family = 'D';
    const int n = size;
    lab[static_cast<std::size_t>(n - 3)] = center;
    for (std::size_t k = 0; k < r; ++k) lab[static_cast<std::size_t>(n - 4) - k] = arms[2][k];
    lab[static_cast<std::size_t>(n - 2)] = arms[0][0];
    lab[static_cast<std::size_t>(n - 1)] = arms[1][0];
  } else if (p == 1 && q == 2 && r >= 2 && r <= 4) {
    // E_n: 1 - 3 - 4 - 5 - ... - n with 2 attached to 4.
    t.family = 'E';
    lab[3] = center;
    lab[1] = arms[0][0];
    lab[2] = arms[1][0];
    lab[0] = arms[1][1];
    for (std::size_t k = 0; k < r; ++k) lab[4 + k] = arms[2][k];
  } else {
    throw fail("branch arms of lengths " + std::to_string(p) + "," + std::to_string(q) + "," +
               std::to_string(r));
  }
  t.vertices = std::move(lab);
  return t;
}

}  // namespace

std::vector<DynkinType> classify_dynkin(int n, std::span<const Arrow> arrows) {
  const auto adj = undirected(n, arrows);
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<DynkinType> out;
  for (int s = 0; s < n; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    std::vector<int> verts;
    std::vector<int> stack{s};
    comp[static_cast<std::size_t>(s)] = static_cast<int>(out.size());
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      verts.push_back(v);
      for (int w : adj[static_cast<std::size_t>(v)])
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = comp[static_cast<std::size_t>(s)];
          stack.push_back(w);
        }
    }
    std::sort(verts.begin(), verts.end());
    std::size_t edges = 0;
    for (const auto& a : arrows)
      if (comp[static_cast<std::size_t>(a.tail)] == comp[static_cast<std::size_t>(s)]) ++edges;
    out.push_back(classify_component(adj, verts, edges));
  }
  return out;
}

// -------------------------------------------------------------------- Quiver

namespace {

std::string inline_descriptor(int n, std::span<const Arrow> arrows) {
  std::string s = "vertices " + std::to_string(n);
  for (const auto& a : arrows) s += "; arrow " + std::to_string(a.tail + 1) + " " + std::to_string(a.head + 1);
  return s;
}

}  // namespace

Quiver::Quiver(int vertex_count, std::vector<Arrow> arrows, std::string descriptor)
    : n_(vertex_count), arrows_(std::move(arrows)), descriptor_(std::move(descriptor)) {
  if (n_ < 0) throw InvalidInput("negative vertex count");
  std::set<std::pair<int, int>> seen;
  for (const auto& a : arrows_) {
    if (a.tail < 0 || a.tail >= n_ || a.head < 0 || a.head >= n_)
      throw InvalidInput("arrow endpoint out of range: " + std::to_string(a.tail + 1) + " -> " +
                         std::to_string(a.head + 1));
    if (a.tail == a.head) throw InvalidInput("loop at vertex " + std::to_string(a.tail + 1));
    auto key = std::minmax(a.tail, a.head);
    if (!seen.insert(key).second)
      throw InvalidInput("multiple edges between vertices " + std::to_string(key.first + 1) + " and " +
                         std::to_string(key.second + 1));
  }
  components_ = classify_dynkin(n_, arrows_);
  component_of_.assign(static_cast<std::size_t>(n_), -1);
  for (std::size_t c = 0; c < components_.size(); ++c)
    for (int v : components_[c].vertices) component_of_[static_cast<std::size_t>(v)] = static_cast<int>(c);
  euler_ = EulerMatrix(n_, arrows_);
  if (descriptor_.empty()) descriptor_ = inline_descriptor(n_, arrows_);
}

Quiver Quiver::opposite() const {
  std::vector<Arrow> rev;
  rev.reserve(arrows_.size());
  for (const auto& a : arrows_) rev.push_back({a.head, a.tail});
  return Quiver(n_, std::move(rev));
}

Quiver Quiver::induced(std::span<const int> vertices) const {
  std::vector<int> index(static_cast<std::size_t>(n_), -1);
  for (std::size_t k = 0; k < vertices.size(); ++k) index[static_cast<std::size_t>(vertices[k])] = static_cast<int>(k);
  std::vector<Arrow> sub;
  for (const auto& a : arrows_) {
    int t = index[static_cast<std::size_t>(a.tail)], h = index[static_cast<std::size_t>(a.head)];
    if (t >= 0 && h >= 0) sub.push_back({t, h});
  }
  return Quiver(static_cast<int>(vertices.size()), std::move(sub));
}

std::vector<std::string> orientation_strings(std::size_t edges) {
  if (edges > 20) throw InvalidInput("too many edges to enumerate orientations");
  std::vector<std::string> out;
  for (std::uint32_t mask = 0; mask < (1u << edges); ++mask) {
    std::string o(edges, '>');
    for (std::size_t k = 0; k < edges; ++k)
      if (mask >> (edges - 1 - k) & 1u) o[k] = '<';
    out.push_back(std::move(o));
  }
  return out;
}

std::int64_t euler_form(const Quiver& q, const DimVector& d, const DimVector& e) { return q.euler().pair(d, e); }

void require_dimension_vector(const Quiver& q, const DimVector& d) {
  if (d.size() != static_cast<std::size_t>(q.vertex_count()))
    throw InvalidInput("dimension vector " + d.to_string() + " has length " + std::to_string(d.size()) +
                       ", quiver has " + std::to_string(q.vertex_count()) + " vertices");
  if (!d.is_nonnegative()) throw InvalidInput("dimension vector " + d.to_string() + " has a negative entry");
}

// ------------------------------------------------------------------- parsing

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '\n' || text[i] == ';') {
      auto line = text.substr(start, i - start);
      if (auto hash = line.find('#'); hash != line.npos) line = line.substr(0, hash);
      line = trim(line);
      if (!line.empty()) lines.push_back(line);
      start = i + 1;
    }
  }
  return lines;
}

std::vector<std::string_view> words(std::string_view line) {
  std::vector<std::string_view> w;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) w.push_back(line.substr(i, j - i));
    i = j;
  }
  return w;
}

Quiver parse_file_format(std::string_view text) {
  int n = -1;
  std::vector<Arrow> arrows;
  for (auto line : split_lines(text)) {
    auto w = words(line);
    if (w[0] == "vertices") {
      if (w.size() != 2) throw ParseError("expected 'vertices <n>'");
      if (n >= 0) throw ParseError("duplicate 'vertices' line");
      auto v = parse_int(w[1], "vertex count");
      if (v < 0 || v > 100000) throw ParseError("vertex count out of range");
      n = static_cast<int>(v);
    } else if (w[0] == "arrow") {
      if (w.size() != 3) throw ParseError("expected 'arrow <i> <j>'");
      if (n < 0) throw ParseError("'arrow' before 'vertices'");
      auto t = parse_int(w[1], "arrow tail"), h = parse_int(w[2], "arrow head");
      if (t < 1 || t > n || h < 1 || h > n)
        throw ParseError("vertex index out of range in '" + std::string(line) + "'");
      for (const auto& a : arrows)
        if (a.tail == t - 1 && a.head == h - 1) throw ParseError("duplicate arrow '" + std::string(line) + "'");
      arrows.push_back({static_cast<int>(t - 1), static_cast<int>(h - 1)});
    } else {
      throw ParseError("unknown directive '" + std::string(w[0]) + "'");
    }
  }
  if (n < 0) throw ParseError("missing 'vertices' line");
  return Quiver(n, std::move(arrows));
}

// One "<Family><rank>[:<orientation>]" term, vertices shifted by `offset`.
void parse_descriptor_term(std::string_view term, int offset, int& n, std::vector<Arrow>& arrows) {
  term = trim(term);
  if (term.size() < 2) throw ParseError("bad Dynkin descriptor '" + std::string(term) + "'");
  char family = static_cast<char>(std::toupper(static_cast<unsigned char>(term[0])));
  if (family != 'A' && family != 'D' && family != 'E')
    throw ParseError("bad Dynkin family in '" + std::string(term) + "'");
  auto colon = term.find(':');
  auto rank = parse_int(term.substr(1, colon == term.npos ? term.npos : colon - 1), "Dynkin rank");
  if (rank < 1 || rank > 10000) throw ParseError("Dynkin rank out of range");
  std::vector<std::pair<int, int>> edges;
  try {
    edges = standard_edges(family, static_cast<int>(rank));
  } catch (const InvalidInput& e) {
    throw ParseError(e.what());
  }
  std::string_view orient = colon == term.npos ? std::string_view{} : term.substr(colon + 1);
  if (colon != term.npos && orient.size() != edges.size())
    throw ParseError("orientation string for " + std::string(1, family) + std::to_string(rank) + " must have " +
                     std::to_string(edges.size()) + " characters");
  for (std::size_t k = 0; k < edges.size(); ++k) {
    char c = orient.empty() ? '>' : orient[k];
    auto [a, b] = edges[k];
    if (c == '>')
      arrows.push_back({offset + a - 1, offset + b - 1});
    else if (c == '<')
      arrows.push_back({offset + b - 1, offset + a - 1});
    else
      throw ParseError(std::string("orientation characters must be '>' or '<', got '") + c + "'");
  }
  n = offset + static_cast<int>(rank);
}

}  // namespace

Quiver parse_quiver(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.empty()) throw ParseError("empty quiver specification");
  auto first = words(lines.front()).front();
  if (first == "vertices" || first == "arrow") return parse_file_format(text);
  if (lines.size() != 1) throw ParseError("a builtin descriptor is a single line");

  auto desc = lines.front();
  int n = 0;
  std::vector<Arrow> arrows;
  std::size_t start = 0;
  while (true) {
    auto plus = desc.find('+', start);
    parse_descriptor_term(desc.substr(start, plus == desc.npos ? desc.npos : plus - start), n, n, arrows);
    if (plus == desc.npos) break;
    start = plus + 1;
  }
  return Quiver(n, std::move(arrows), std::string(desc));
}

}  // namespace rigidq
