#include "anydim/optimize/domain.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace anydim {

namespace {

void check_n(int n) {
  if (n < 1) throw std::invalid_argument("domain dimension must be positive");
}

}  // namespace

Domain Domain::box(int rows, int n, double lo, double hi) {
  check_n(n);
  if (rows < 1) throw std::invalid_argument("box needs at least one row");
  if (!(lo <= hi)) throw std::invalid_argument("box bounds out of order");
  Domain d;
  d.kind = DomainKind::Box;
  d.n = n;
  d.rows = rows;
  d.lo = lo;
  d.hi = hi;
  return d;
}

Domain Domain::l1_ball(int n, double radius) {
  check_n(n);
  if (!(radius > 0)) throw std::invalid_argument("l1 radius must be positive");
  Domain d;
  d.kind = DomainKind::L1Ball;
  d.n = n;
  d.radius = radius;
  return d;
}

Domain Domain::vec_simplex(int n) {
  check_n(n);
  Domain d;
  d.kind = DomainKind::VecSimplex;
  d.n = n;
  return d;
}

Domain Domain::matrix_simplex(int n, double weight) {
  check_n(n);
  if (!(weight > 0)) throw std::invalid_argument("matrix simplex weight must be positive");
  Domain d;
  d.kind = DomainKind::MatrixSimplex;
  d.n = n;
  d.weight = weight;
  return d;
}

Domain Domain::simple_graphs(int n) {
  check_n(n);
  Domain d;
  d.kind = DomainKind::BinarySimpleGraphs;
  d.n = n;
  return d;
}

std::size_t Domain::point_size() const {
  switch (kind) {
    case DomainKind::Box: return static_cast<std::size_t>(rows) * n;
    case DomainKind::L1Ball:
    case DomainKind::VecSimplex: return static_cast<std::size_t>(n);
    default: return static_cast<std::size_t>(n) * n;
  }
}

bool Domain::contains(const std::vector<double>& x, double tol) const {
  if (x.size() != point_size()) return false;
  switch (kind) {
    case DomainKind::Box:
      return std::all_of(x.begin(), x.end(), [&](double v) { return v >= lo - tol && v <= hi + tol; });
    case DomainKind::L1Ball: {
      double s = 0;
      for (double v : x) s += std::abs(v);
      return s <= radius + tol;
    }
    case DomainKind::VecSimplex: {
      double s = 0;
      for (double v : x) {
        if (v < -tol) return false;
        s += v;
      }
      return std::abs(s - 1) <= tol;
    }
    case DomainKind::MatrixSimplex:
    case DomainKind::BinarySimpleGraphs: {
      double s = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          double v = x[static_cast<std::size_t>(i) * n + j];
          if (std::abs(v - x[static_cast<std::size_t>(j) * n + i]) > tol) return false;
          if (kind == DomainKind::BinarySimpleGraphs) {
            if (v != 0 && v != 1) return false;
            if (i == j && v != 0) return false;
          } else if (v < -tol) {
            return false;
          }
          s += v;
        }
      return kind == DomainKind::BinarySimpleGraphs || std::abs(s - weight) <= tol;
    }
  }
  return false;
}

double Domain::l1_radius() const {
  switch (kind) {
    case DomainKind::Box: return static_cast<double>(rows) * n * std::max(std::abs(lo), std::abs(hi));
    case DomainKind::L1Ball: return radius;
    case DomainKind::VecSimplex: return 1;
    case DomainKind::MatrixSimplex: return weight;
    case DomainKind::BinarySimpleGraphs: return static_cast<double>(n) * (n - 1);
  }
  return 0;
}

std::string kind_name(DomainKind k) {
  switch (k) {
    case DomainKind::Box: return "box";
    case DomainKind::L1Ball: return "l1ball";
    case DomainKind::VecSimplex: return "simplex";
    case DomainKind::MatrixSimplex: return "matrix-simplex";
    case DomainKind::BinarySimpleGraphs: return "simple-graphs";
  }
  return "?";
}

std::string Domain::describe() const {
  std::ostringstream os;
  os << kind_name(kind) << "(n=" << n;
  if (kind == DomainKind::Box) os << ", rows=" << rows << ", [" << lo << "," << hi << "]";
  if (kind == DomainKind::L1Ball) os << ", radius=" << radius;
  if (kind == DomainKind::MatrixSimplex) os << ", weight=" << weight;
  os << ")";
  return os.str();
}

std::vector<double> project_weighted_simplex(const std::vector<double>& y, const std::vector<double>& w,
                                             double total) {
  const std::size_t n = y.size();
  if (w.size() != n || n == 0) throw std::invalid_argument("weighted simplex shape mismatch");
  // x_i = max(0, y_i - tau) with sum w_i x_i = total; tau is found on the
  // sorted breakpoints.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return y[a] > y[b]; });
  double wy = 0, ws = 0, tau = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t i = order[j];
    wy += w[i] * y[i];
    ws += w[i];
    tau = (wy - total) / ws;
    if (j + 1 == n || y[order[j + 1]] <= tau) break;
  }
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = std::max(0.0, y[i] - tau);
  return x;
}

std::vector<double> project(const Domain& dom, const std::vector<double>& y) {
  if (dom.is_discrete()) throw std::invalid_argument("no projection onto a discrete domain");
  if (y.size() != dom.point_size()) throw std::invalid_argument("point has the wrong size for the domain");
  switch (dom.kind) {
    case DomainKind::Box: {
      std::vector<double> x(y);
      for (double& v : x) v = std::clamp(v, dom.lo, dom.hi);
      return x;
    }
    case DomainKind::VecSimplex:
      return project_weighted_simplex(y, std::vector<double>(y.size(), 1.0), 1.0);
    case DomainKind::L1Ball: {
      double s = 0;
      for (double v : y) s += std::abs(v);
      if (s <= dom.radius) return y;
      std::vector<double> a(y.size());
      for (std::size_t i = 0; i < y.size(); ++i) a[i] = std::abs(y[i]);
      auto u = project_weighted_simplex(a, std::vector<double>(y.size(), 1.0), dom.radius);
      for (std::size_t i = 0; i < y.size(); ++i) u[i] = y[i] < 0 ? -u[i] : u[i];
      return u;
    }
    case DomainKind::MatrixSimplex: {
      const int n = dom.n;
      std::vector<double> up, w;
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
          up.push_back(0.5 * (y[static_cast<std::size_t>(i) * n + j] + y[static_cast<std::size_t>(j) * n + i]));
          w.push_back(i == j ? 1.0 : 2.0);
        }
      auto u = project_weighted_simplex(up, w, dom.weight);
      std::vector<double> x(y.size());
      std::size_t a = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j, ++a)
          x[static_cast<std::size_t>(i) * n + j] = x[static_cast<std::size_t>(j) * n + i] = u[a];
      return x;
    }
    default: break;
  }
  throw std::invalid_argument("no projection onto a discrete domain");
}

std::vector<double> random_feasible_point(const Domain& dom, std::mt19937_64& rng) {
  if (dom.is_discrete()) throw std::invalid_argument("no projection onto a discrete domain");
  double lo = 0, hi = 1;
  if (dom.kind == DomainKind::Box) {
    lo = dom.lo;
    hi = dom.hi;
  } else if (dom.kind == DomainKind::L1Ball) {
    lo = -dom.radius;
    hi = dom.radius;
  } else if (dom.kind == DomainKind::MatrixSimplex) {
    hi = dom.weight;
  }
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> y(dom.point_size());
  for (double& v : y) v = u(rng);
  return project(dom, y);
}

}  // namespace anydim
