#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bitset.hpp"
#include "sets.hpp"

// The geometry H_t over GF(q), q prime: points are projectivized weight-t
// vectors of F^n with n = (q^k-1)/(q-1) and t = q^{k-1}; two points are
// collinear when the 2xn matrix of their representatives has every nonzero
// column proportional to exactly q^{k-2} columns (itself included) and
// exactly (q^{k-2}-1)/(q-1) zero columns.

namespace eqgeo {

inline constexpr int kMaxQaryPoints = 100000;
inline constexpr int kMaxQaryDiameterPoints = 10000;

// lookup-table arithmetic, enough for the primes in scope
class GFq {
 public:
  explicit GFq(int q) : q_(q) {
    if (q != 2 && q != 3 && q != 5 && q != 7)
      throw std::invalid_argument("field size must be a prime at most 7");
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        add_[a][b] = (a + b) % q;
        mul_[a][b] = (a * b) % q;
      }
    inv_[0] = 0;
    for (int a = 1; a < q; ++a)
      for (int b = 1; b < q; ++b)
        if (mul_[a][b] == 1) inv_[a] = b;
  }

  int q() const { return q_; }
  int add(int a, int b) const { return add_[a][b]; }
  int sub(int a, int b) const { return add_[a][neg(b)]; }
  int mul(int a, int b) const { return mul_[a][b]; }
  int neg(int a) const { return a == 0 ? 0 : q_ - a; }
  int inv(int a) const {
    if (a == 0) throw std::invalid_argument("zero has no inverse");
    return inv_[a];
  }

 private:
  int q_;
  std::array<std::array<int, 7>, 7> add_{}, mul_{};
  std::array<int, 7> inv_{};
};

struct QVector {
  int q = 0;
  std::vector<int> entries;  // values in 0..q-1

  int weight() const {
    int w = 0;
    for (int e : entries) w += e != 0;
    return w;
  }
  bool operator==(const QVector&) const = default;

  std::string to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < entries.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(entries[i]);
    }
    return s + ")";
  }
};

// scale so the first nonzero entry equals 1
inline QVector normalize_qvector(const GFq& field, QVector v) {
  for (int e : v.entries)
    if (e != 0) {
      int scale = field.inv(e);
      for (int& x : v.entries) x = field.mul(x, scale);
      return v;
    }
  return v;
}

namespace detail {

inline std::uint64_t qvector_key(const QVector& v) {
  std::uint64_t key = 0;
  for (size_t i = v.entries.size(); i-- > 0;) key = key * v.q + v.entries[i];
  return key;
}

// the column criterion on representatives x, y (assumed distinct points)
inline bool qary_columns_ok(const GFq& field, const QVector& x, const QVector& y, int k) {
  int q = field.q();
  int want_prop = 1;  // q^{k-2}
  for (int i = 0; i < k - 2; ++i) want_prop *= q;
  int want_zero = (want_prop - 1) / (q - 1);
  // proportionality classes of nonzero columns = points of the projective
  // line: ratio y_j / x_j, or q when x_j = 0
  std::vector<int> class_count(q + 1, 0);
  int zero_cols = 0;
  for (size_t j = 0; j < x.entries.size(); ++j) {
    int a = x.entries[j], b = y.entries[j];
    if (a == 0 && b == 0)
      ++zero_cols;
    else if (a == 0)
      ++class_count[q];
    else
      ++class_count[field.mul(b, field.inv(a))];
  }
  if (zero_cols != want_zero) return false;
  for (size_t j = 0; j < x.entries.size(); ++j) {
    int a = x.entries[j], b = y.entries[j];
    if (a == 0 && b == 0) continue;
    int cls = a == 0 ? q : field.mul(b, field.inv(a));
    if (class_count[cls] != want_prop) return false;
  }
  return true;
}

}  // namespace detail

class QGeometry {
 public:
  QGeometry(int q, int k) : field_(validated(q)), q_(q), k_(k) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    n_ = 1;
    t_ = 1;
    for (int i = 0; i < k - 1; ++i) {
      n_ = n_ * q + 1;
      t_ *= q;
    }
    // point count C(n,t) * (q-1)^{t-1}
    if (n_ > 64) throw std::length_error("q-ary geometry exceeds the point cap");
    std::uint64_t count = binom(n_, t_);
    if (count > kMaxQaryPoints) throw std::length_error("q-ary geometry exceeds the point cap");
    for (int i = 0; i < t_ - 1; ++i) {
      count *= q - 1;
      if (count > kMaxQaryPoints) throw std::length_error("q-ary geometry exceeds the point cap");
    }

    for (mask_t sup : all_subsets(n_, t_)) {
      auto coords = mask_elems(sup);
      // first supported coordinate is 1, the rest run an odometer over 1..q-1
      std::vector<int> vals(t_, 1);
      for (;;) {
        QVector v{q_, std::vector<int>(n_, 0)};
        for (int p = 0; p < t_; ++p) v.entries[coords[p] - 1] = vals[p];
        index_.emplace(detail::qvector_key(v), int(points_.size()));
        points_.push_back(std::move(v));
        int p = t_ - 1;
        while (p >= 1 && vals[p] == q_ - 1) vals[p--] = 1;
        if (p < 1) break;
        ++vals[p];
      }
    }
    if (points_.size() != count) throw std::logic_error("point enumeration disagrees with the count");

    adj_.assign(points_.size(), Bitset(int(points_.size())));
    for (int a = 0; a < int(points_.size()); ++a)
      for (int b = a + 1; b < int(points_.size()); ++b)
        if (detail::qary_columns_ok(field_, points_[a], points_[b], k_)) {
          adj_[a].set(b);
          adj_[b].set(a);
        }
  }

  int q() const { return q_; }
  int k() const { return k_; }
  int n() const { return n_; }
  int t() const { return t_; }
  int num_points() const { return int(points_.size()); }
  const GFq& field() const { return field_; }
  const QVector& point(int i) const { return points_[i]; }
  const std::vector<QVector>& points() const { return points_; }
  const Bitset& neighbors(int i) const { return adj_[i]; }
  int degree(int i) const { return adj_[i].count(); }

  // index of the projective point spanned by v; -1 when absent
  int index_of(const QVector& v) const {
    if (int(v.entries.size()) != n_ || v.q != q_) return -1;
    auto it = index_.find(detail::qvector_key(normalize_qvector(field_, v)));
    return it == index_.end() ? -1 : it->second;
  }

 private:
  static int validated(int q) {
    if (q == 2)
      throw std::invalid_argument("q = 2 is the binary case; use the binary geometry modules");
    if (q != 3 && q != 5 && q != 7) throw std::invalid_argument("q must be a prime at most 7");
    return q;
  }

  GFq field_;
  int q_, k_, n_ = 0, t_ = 0;
  std::vector<QVector> points_;
  std::unordered_map<std::uint64_t, int> index_;
  std::vector<Bitset> adj_;
};

inline QGeometry build_qgeometry(int q, int k) { return QGeometry(q, k); }

inline bool qary_collinear(const QGeometry& g, int a, int b) {
  if (a < 0 || b < 0 || a >= g.num_points() || b >= g.num_points())
    throw std::out_of_range("point index out of range");
  if (a == b) throw std::invalid_argument("collinearity needs two distinct points");
  return g.neighbors(a).test(b);
}

inline bool qary_collinear(const QGeometry& g, const QVector& x, const QVector& y) {
  int a = g.index_of(x), b = g.index_of(y);
  if (a < 0 || b < 0) throw std::invalid_argument("arguments must be points of the geometry");
  if (a == b) throw std::invalid_argument("representatives of one projective point");
  return qary_collinear(g, a, b);
}

inline std::vector<int> qary_common_neighbors(const QGeometry& g, int a, int b) {
  if (a < 0 || b < 0 || a >= g.num_points() || b >= g.num_points())
    throw std::out_of_range("point index out of range");
  Bitset common = g.neighbors(a);
  if (a != b) common &= g.neighbors(b);
  return common.to_vector();
}

struct QConnectivity {
  bool connected = false;
  int diameter = -1;  // -1 when disconnected or not computed
};

namespace detail {

// eccentricity by frontier BFS; -1 when some vertex is unreachable
inline int qary_eccentricity(const QGeometry& g, int src) {
  Bitset visited(g.num_points()), frontier(g.num_points());
  visited.set(src);
  frontier.set(src);
  int depth = 0;
  for (;;) {
    Bitset next(g.num_points());
    frontier.for_each([&](int v) { next |= g.neighbors(v); });
    next -= visited;
    if (next.none()) break;
    visited |= next;
    frontier = next;
    ++depth;
  }
  return visited.count() == g.num_points() ? depth : -1;
}

}  // namespace detail

inline QConnectivity qary_connectivity_and_diameter(const QGeometry& g) {
  QConnectivity r;
  int e0 = detail::qary_eccentricity(g, 0);
  r.connected = e0 >= 0;
  if (!r.connected) return r;
  if (g.num_points() > kMaxQaryDiameterPoints)
    throw std::length_error("diameter computation capped at 10000 points");
  r.diameter = e0;
  for (int v = 1; v < g.num_points(); ++v)
    r.diameter = std::max(r.diameter, detail::qary_eccentricity(g, v));
  return r;
}

// the q+1 points of the projective line through a collinear pair, ascending
inline std::vector<int> qary_line(const QGeometry& g, int a, int b) {
  if (!qary_collinear(g, a, b)) throw std::invalid_argument("points are not collinear");
  std::vector<int> line{a, b};
  const GFq& F = g.field();
  for (int alpha = 1; alpha < g.q(); ++alpha) {
    QVector combo{g.q(), std::vector<int>(g.n(), 0)};
    for (int j = 0; j < g.n(); ++j)
      combo.entries[j] = F.add(g.point(a).entries[j], F.mul(alpha, g.point(b).entries[j]));
    int idx = g.index_of(combo);
    if (idx < 0) throw std::logic_error("combination of collinear points left the geometry");
    line.push_back(idx);
  }
  std::sort(line.begin(), line.end());
  return line;
}

// how many of the q+1 points of the projective line through two distinct
// points lie inside H_t
struct QLineProfile {
  int inside = 0;
  int outside = 0;
};

inline QLineProfile qary_line_profile(const QGeometry& g, int a, int b) {
  if (a == b) throw std::invalid_argument("line profile needs two distinct points");
  QLineProfile r;
  r.inside = 2;  // a and b themselves
  const GFq& F = g.field();
  for (int alpha = 1; alpha < g.q(); ++alpha) {
    QVector combo{g.q(), std::vector<int>(g.n(), 0)};
    for (int j = 0; j < g.n(); ++j)
      combo.entries[j] = F.add(g.point(a).entries[j], F.mul(alpha, g.point(b).entries[j]));
    (combo.weight() == g.t() ? r.inside : r.outside) += 1;
  }
  return r;
}

// weight-t vectors x, y of V with x - y = e_i: witnesses that V_t spans V
inline std::pair<QVector, QVector> qary_spanning_pair(int q, int n, int t, int i) {
  if (q < 3) throw std::invalid_argument("the difference pair needs q >= 3");
  GFq field(q);
  if (t < 1 || t > n) throw std::invalid_argument("weight out of range");
  if (i < 1 || i > n) throw std::invalid_argument("coordinate out of range");
  QVector x{q, std::vector<int>(n, 0)}, y{q, std::vector<int>(n, 0)};
  x.entries[i - 1] = 2;
  y.entries[i - 1] = 1;
  int placed = 1;
  for (int j = 1; j <= n && placed < t; ++j) {
    if (j == i) continue;
    x.entries[j - 1] = 1;
    y.entries[j - 1] = 1;
    ++placed;
  }
  return {x, y};
}

}  // namespace eqgeo
