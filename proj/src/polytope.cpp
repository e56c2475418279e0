#include "qcn/polytope.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "qcn/error.hpp"

namespace qcn {

namespace {

using i128 = __int128;

i128 mul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("integer overflow in hull arithmetic");
  return r;
}

i128 add(i128 a, i128 b) {
  i128 r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("integer overflow in hull arithmetic");
  return r;
}

i128 abs128(i128 x) { return x < 0 ? -x : x; }

std::int64_t narrow(i128 x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
    throw Error("integer overflow in hull arithmetic");
  return static_cast<std::int64_t>(x);
}

// Fraction-free Gaussian elimination (Bareiss).
i128 determinant(std::vector<std::vector<i128>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  i128 sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int swap = -1;
      for (int r = k + 1; r < n && swap < 0; ++r)
        if (m[r][k] != 0) swap = r;
      if (swap < 0) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) m[i][j] = add(mul(m[i][j], m[k][k]), -mul(m[i][k], m[k][j])) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// Rational row echelon helper for ranks, pivots and nullspaces.
struct Echelon {
  int cols;
  std::vector<std::vector<Rational>> rows;
  std::vector<int> pivots;

  explicit Echelon(int c) : cols(c) {}

  // Adds a row if it is independent of the current rows.
  bool insert(std::vector<Rational> v) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      int p = pivots[r];
      if (v[p] != 0) {
        Rational f = v[p];
        for (int c = 0; c < cols; ++c) v[c] -= f * rows[r][c];
      }
    }
    int p = -1;
    for (int c = 0; c < cols && p < 0; ++c)
      if (v[c] != 0) p = c;
    if (p < 0) return false;
    Rational lead = v[p];
    for (int c = 0; c < cols; ++c) v[c] /= lead;
    for (auto& row : rows)
      if (row[p] != 0) {
        Rational f = row[p];
        for (int c = 0; c < cols; ++c) row[c] -= f * v[c];
      }
    rows.push_back(std::move(v));
    pivots.push_back(p);
    return true;
  }

  int rank() const { return static_cast<int>(rows.size()); }
};

std::vector<Rational> difference(const IntPoint& p, const IntPoint& q) {
  std::vector<Rational> d(p.size());
  for (std::size_t c = 0; c < p.size(); ++c) d[c] = Rational(p[c] - q[c]);
  return d;
}

std::int64_t gcd_of(const std::vector<std::int64_t>& a) {
  std::int64_t g = 0;
  for (auto x : a) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

Hyperplane primitive(std::vector<std::int64_t> a, std::int64_t b) {
  std::int64_t g = gcd_of(a);
  if (g > 1) {
    for (auto& x : a) x /= g;
    b /= g;
  }
  return {std::move(a), b};
}

struct Facet {
  std::vector<int> verts;  // sorted point indices
  std::vector<i128> a;
  i128 b;
  bool alive = true;
};

struct FullHull {
  std::vector<Hyperplane> facets;
  std::vector<int> vertex_ids;
  i128 volume_times_factorial = 0;
  std::size_t simplices = 0;
};

i128 dot(const std::vector<i128>& a, const IntPoint& x) {
  i128 s = 0;
  for (std::size_t c = 0; c < a.size(); ++c) s = add(s, mul(a[c], x[c]));
  return s;
}

// Hull of points affinely spanning R^d, d >= 1.
FullHull hull_full(int d, const std::vector<IntPoint>& pts) {
  const int n = static_cast<int>(pts.size());
  std::vector<int> simplex{0};
  {
    Echelon e(d);
    for (int i = 1; i < n && static_cast<int>(simplex.size()) < d + 1; ++i)
      if (e.insert(difference(pts[i], pts[0]))) simplex.push_back(i);
  }
  if (static_cast<int>(simplex.size()) != d + 1) throw Error("hull input is not full-dimensional");

  std::vector<i128> interior(d, 0);  // (d+1) x centroid of the initial simplex
  for (int v : simplex)
    for (int c = 0; c < d; ++c) interior[c] = add(interior[c], pts[v][c]);

  auto make_facet = [&](std::vector<int> verts) {
    std::sort(verts.begin(), verts.end());
    Facet f;
    f.a.assign(d, 0);
    const IntPoint& q0 = pts[verts[0]];
    for (int col = 0; col < d; ++col) {
      std::vector<std::vector<i128>> minor;
      for (int r = 1; r < d; ++r) {
        std::vector<i128> row;
        for (int c = 0; c < d; ++c)
          if (c != col) row.push_back(pts[verts[r]][c] - q0[c]);
        minor.push_back(std::move(row));
      }
      i128 m = determinant(std::move(minor));
      f.a[col] = col % 2 == 0 ? m : -m;
    }
    f.b = dot(f.a, q0);
    i128 side = 0;
    for (int c = 0; c < d; ++c) side = add(side, mul(f.a[c], interior[c]));
    side = add(side, -mul(d + 1, f.b));
    if (side > 0) {
      for (auto& x : f.a) x = -x;
      f.b = -f.b;
    } else if (side == 0) {
      throw Error("degenerate facet in hull construction");
    }
    f.verts = std::move(verts);
    return f;
  };

  auto simplex_volume = [&](const std::vector<int>& verts, int apex) {
    std::vector<std::vector<i128>> m;
    for (int v : verts) {
      std::vector<i128> row(d);
      for (int c = 0; c < d; ++c) row[c] = pts[v][c] - pts[apex][c];
      m.push_back(std::move(row));
    }
    return abs128(determinant(std::move(m)));
  };

  FullHull out;
  std::vector<Facet> facets;
  {
    std::vector<int> rest(simplex.begin() + 1, simplex.end());
    out.volume_times_factorial = simplex_volume(rest, simplex[0]);
    out.simplices = 1;
    for (int skip = 0; skip <= d; ++skip) {
      std::vector<int> verts;
      for (int t = 0; t <= d; ++t)
        if (t != skip) verts.push_back(simplex[t]);
      facets.push_back(make_facet(std::move(verts)));
    }
  }

  std::vector<bool> in_simplex(n, false);
  for (int v : simplex) in_simplex[v] = true;
  for (int p = 0; p < n; ++p) {
    if (in_simplex[p]) continue;
    std::vector<int> visible;
    for (int f = 0; f < static_cast<int>(facets.size()); ++f)
      if (facets[f].alive && dot(facets[f].a, pts[p]) > facets[f].b) visible.push_back(f);
    if (visible.empty()) continue;
    std::map<std::vector<int>, int> ridges;
    for (int f : visible) {
      out.volume_times_factorial = add(out.volume_times_factorial, simplex_volume(facets[f].verts, p));
      ++out.simplices;
      const auto& verts = facets[f].verts;
      for (int skip = 0; skip < d; ++skip) {
        std::vector<int> ridge;
        for (int t = 0; t < d; ++t)
          if (t != skip) ridge.push_back(verts[t]);
        ++ridges[ridge];
      }
      facets[f].alive = false;
    }
    for (auto& [ridge, count] : ridges) {
      if (count != 1) continue;
      std::vector<int> verts = ridge;
      verts.push_back(p);
      facets.push_back(make_facet(std::move(verts)));
    }
  }

  std::set<Hyperplane> planes;
  std::set<int> touched;
  for (const auto& f : facets) {
    if (!f.alive) continue;
    std::vector<std::int64_t> a(d);
    for (int c = 0; c < d; ++c) a[c] = narrow(f.a[c]);
    planes.insert(primitive(std::move(a), narrow(f.b)));
    touched.insert(f.verts.begin(), f.verts.end());
  }
  out.facets.assign(planes.begin(), planes.end());
  for (int v : touched) {
    Echelon e(d);
    for (const auto& h : out.facets) {
      i128 lhs = 0;
      for (int c = 0; c < d; ++c) lhs = add(lhs, mul(h.a[c], pts[v][c]));
      if (lhs == h.b) {
        std::vector<Rational> row(d);
        for (int c = 0; c < d; ++c) row[c] = Rational(h.a[c]);
        e.insert(std::move(row));
        if (e.rank() == d) break;
      }
    }
    if (e.rank() == d) out.vertex_ids.push_back(v);
  }
  return out;
}

BigInt factorial(int d) {
  BigInt f = 1;
  for (int i = 2; i <= d; ++i) f *= i;
  return f;
}

BigInt to_big(i128 x) {
  bool neg = x < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(x + 1)) + 1 : static_cast<unsigned __int128>(x);
  BigInt r = 0;
  BigInt shift = 1;
  while (u != 0) {
    r += shift * static_cast<unsigned>(u & 0xffffffffu);
    shift <<= 32;
    u >>= 32;
  }
  return neg ? BigInt(-r) : r;
}

}  // namespace

Polytope Polytope::hull(int dim, std::vector<IntPoint> points) {
  for (const auto& p : points)
    if (static_cast<int>(p.size()) != dim) throw Error("point dimension does not match hull dimension");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  Polytope poly;
  poly.dim_ = dim;
  if (points.empty()) return poly;

  Echelon span(dim);
  for (std::size_t i = 1; i < points.size(); ++i) span.insert(difference(points[i], points[0]));
  const int k = span.rank();
  poly.affine_dim_ = k;

  if (k == dim) {
    FullHull h = hull_full(dim, points);
    poly.facets_ = std::move(h.facets);
    for (int v : h.vertex_ids) poly.vertices_.push_back(points[v]);
    poly.volume_ = Rational(to_big(h.volume_times_factorial), factorial(dim));
    poly.simplices_ = h.simplices;
  } else {
    // nullspace of the difference rows gives the affine equations
    std::vector<bool> is_pivot(dim, false);
    for (int p : span.pivots) is_pivot[p] = true;
    for (int free = 0; free < dim; ++free) {
      if (is_pivot[free]) continue;
      std::vector<Rational> c(dim, Rational(0));
      c[free] = 1;
      for (std::size_t r = 0; r < span.rows.size(); ++r) c[span.pivots[r]] = -span.rows[r][free];
      BigInt l = denominator_lcm(c);
      std::vector<std::int64_t> a(dim);
      for (int t = 0; t < dim; ++t) a[t] = Rational(c[t] * l).convert_to<std::int64_t>();
      std::int64_t b = 0;
      for (int t = 0; t < dim; ++t) b += a[t] * points[0][t];
      Hyperplane h = primitive(std::move(a), b);
      if (std::find_if(h.a.begin(), h.a.end(), [](auto x) { return x != 0; }) != h.a.end() &&
          *std::find_if(h.a.begin(), h.a.end(), [](auto x) { return x != 0; }) < 0) {
        for (auto& x : h.a) x = -x;
        h.b = -h.b;
      }
      poly.equalities_.push_back(std::move(h));
    }
    std::sort(poly.equalities_.begin(), poly.equalities_.end());
    if (k == 0) {
      poly.vertices_.push_back(points[0]);
    } else {
      std::vector<int> coords(span.pivots.begin(), span.pivots.end());
      std::sort(coords.begin(), coords.end());
      std::vector<IntPoint> projected;
      for (const auto& p : points) {
        IntPoint q;
        for (int c : coords) q.push_back(p[c]);
        projected.push_back(std::move(q));
      }
      FullHull h = hull_full(k, projected);
      for (int v : h.vertex_ids) poly.vertices_.push_back(points[v]);
      for (const auto& f : h.facets) {
        std::vector<std::int64_t> a(dim, 0);
        for (int t = 0; t < k; ++t) a[coords[t]] = f.a[t];
        poly.facets_.push_back({std::move(a), f.b});
      }
      std::sort(poly.facets_.begin(), poly.facets_.end());
    }
  }
  std::sort(poly.vertices_.begin(), poly.vertices_.end());
  return poly;
}

bool Polytope::contains(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != dim_) throw Error("point dimension does not match polytope");
  if (empty()) return false;
  auto lhs = [&](const Hyperplane& h) {
    Rational s = 0;
    for (int c = 0; c < dim_; ++c) s += h.a[c] * x[c];
    return s;
  };
  for (const auto& h : equalities_)
    if (lhs(h) != h.b) return false;
  for (const auto& h : facets_)
    if (lhs(h) > h.b) return false;
  return true;
}

bool Polytope::contains(const IntPoint& x) const {
  std::vector<Rational> r(x.begin(), x.end());
  return contains(r);
}

std::string format_hyperplane(const Hyperplane& h, const char* relation, const std::vector<std::string>& names) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t c = 0; c < h.a.size(); ++c) {
    if (h.a[c] == 0) continue;
    std::int64_t v = h.a[c];
    if (first)
      os << (v < 0 ? "-" : "");
    else
      os << (v < 0 ? " - " : " + ");
    std::int64_t m = v < 0 ? -v : v;
    if (m != 1) os << m << "*";
    if (c < names.size())
      os << names[c];
    else
      os << "x" << c + 1;
    first = false;
  }
  if (first) os << "0";
  os << " " << relation << " " << h.b;
  return os.str();
}

}  // namespace qcn
