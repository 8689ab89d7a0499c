#include "anydim/symfunc/transition.hpp"

namespace anydim {

TransitionMatrix<Partition> refinement_matrix(int d) {
  TransitionMatrix<Partition> t;
  t.index = partitions_up_to(d);
  const int sz = t.size();
  t.entries = Matrix<Rational>(sz, sz);
  for (int i = 0; i < sz; ++i)
    for (int j = 0; j < sz; ++j)
      t.entries(i, j) = Rational(static_cast<long long>(refinement_count(t.index[i], t.index[j])));
  return t;
}

namespace {

Rational sym_entry(long long k, const Partition& lam, const Partition& mu) {
  auto r = refinement_count(mu, lam);
  if (r == 0) return 0;
  Rational out(parts_factorial(lam), parts_factorial(mu));
  out *= Rational(falling_factorial(k, lam.len()));
  out /= pow_int(Rational(k), mu.len());
  out *= Rational(static_cast<long long>(r));
  out /= Rational(static_cast<long long>(aut_count_partition(lam)));
  return out;
}

}  // namespace

TransitionMatrix<Partition> definetti_sym_matrix(long long k, int d) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (k < d) throw std::invalid_argument("basis incomplete below degree");
  TransitionMatrix<Partition> t;
  t.index = partitions_up_to(d);
  const int sz = t.size();
  t.entries = Matrix<Rational>(sz, sz);
  for (int i = 0; i < sz; ++i)
    for (int j = 0; j < sz; ++j) t.entries(i, j) = sym_entry(k, t.index[i], t.index[j]);
  return t;
}

SymPoly dualize_symfunc(const SymPoly& p, long long k) {
  if (p.basis() != SymBasis::PowerSum) throw std::invalid_argument("dualize expects s-basis input");
  const int d = p.degree();
  if (k < d) throw std::invalid_argument("target dimension below degree");
  SymPoly a = s_to_m(p);
  auto mat = definetti_sym_matrix(k, d);
  // a = M^T c; M(lam, mu) != 0 only for mu finer than lam, so solve coarsest first
  std::vector<int> order(static_cast<std::size_t>(mat.size()));
  for (int i = 0; i < mat.size(); ++i) order[static_cast<std::size_t>(i)] = i;
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return mat.index[static_cast<std::size_t>(x)].len() < mat.index[static_cast<std::size_t>(y)].len();
  });
  std::vector<Rational> c(static_cast<std::size_t>(mat.size()));
  SymPoly q(SymBasis::Monomial);
  for (std::size_t oi = 0; oi < order.size(); ++oi) {
    int mu = order[oi];
    Rational rhs = a.coeff(mat.index[static_cast<std::size_t>(mu)]);
    for (std::size_t oj = 0; oj < oi; ++oj) {
      int lam = order[oj];
      if (c[static_cast<std::size_t>(lam)] != 0) rhs -= c[static_cast<std::size_t>(lam)] * mat.entries(lam, mu);
    }
    const Rational& diag = mat.entries(mu, mu);
    if (diag == 0) throw std::runtime_error("singular de Finetti matrix");
    c[static_cast<std::size_t>(mu)] = rhs / diag;
    q.add(mat.index[static_cast<std::size_t>(mu)], c[static_cast<std::size_t>(mu)]);
  }
  return q;
}

}  // namespace anydim
