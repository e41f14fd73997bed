#include "flagtop/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace flagtop {

namespace {

void row_axpy(IntMatrix& m, std::size_t dst, const Integer& q, std::size_t src) {
  // row_dst -= q * row_src
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (m(src, j) != 0) m(dst, j) -= q * m(src, j);
}

void col_axpy(IntMatrix& m, std::size_t dst, const Integer& q, std::size_t src) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (m(i, src) != 0) m(i, dst) -= q * m(i, src);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer trunc_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HermiteForm hnf(const IntMatrix& m) {
  HermiteForm out;
  out.h = m;
  out.u = IntMatrix::identity(m.rows());
  IntMatrix& h = out.h;
  IntMatrix& u = out.u;
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    for (;;) {
      std::size_t best = h.rows();
      for (std::size_t i = r; i < h.rows(); ++i)
        if (h(i, c) != 0 && (best == h.rows() || abs(h(i, c)) < abs(h(best, c)))) best = i;
      if (best == h.rows()) break;
      h.swap_rows(r, best);
      u.swap_rows(r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        const Integer q = floor_div(h(i, c), h(r, c));
        row_axpy(h, i, q, r);
        row_axpy(u, i, q, r);
        if (h(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      negate_row(h, r);
      negate_row(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      const Integer q = floor_div(h(i, c), h(r, c));
      if (q == 0) continue;
      row_axpy(h, i, q, r);
      row_axpy(u, i, q, r);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d(i, i));
  return out;
}

SmithForm snf(const IntMatrix& m) {
  SmithForm out;
  out.d = m;
  out.u = IntMatrix::identity(m.rows());
  out.v = IntMatrix::identity(m.cols());
  IntMatrix& d = out.d;
  const std::size_t rows = d.rows(), cols = d.cols();

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // smallest nonzero entry of the trailing block goes to the pivot
    auto move_smallest = [&](bool whole_block) {
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (!whole_block && i != t && j != t) continue;
          if (d(i, j) != 0 && (bi == rows || abs(d(i, j)) < abs(d(bi, bj)))) {
            bi = i;
            bj = j;
          }
        }
      if (bi == rows) return false;
      d.swap_rows(t, bi);
      out.u.swap_rows(t, bi);
      d.swap_cols(t, bj);
      out.v.swap_cols(t, bj);
      return true;
    };
    if (!move_smallest(true)) break;

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        const Integer q = trunc_div(d(i, t), d(t, t));
        row_axpy(d, i, q, t);
        row_axpy(out.u, i, q, t);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        const Integer q = trunc_div(d(t, j), d(t, t));
        col_axpy(d, j, q, t);
        col_axpy(out.v, j, q, t);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) {
        move_smallest(false);
        continue;
      }
      // divisibility: fold a offending row into the pivot row and repeat
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      row_axpy(d, t, Integer(-1), bad);
      row_axpy(out.u, t, Integer(-1), bad);
    }
    if (d(t, t) < 0) {
      negate_row(d, t);
      negate_row(out.u, t);
    }
  }
  return out;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = m.rows();
  RatMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      a.swap_rows(p, c);
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      const Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det.get_num();
}

IntegerLattice::IntegerLattice(std::size_t ambient_dim, std::vector<IntVector> basis, Integer denominator)
    : ambient_dim_(ambient_dim), basis_(std::move(basis)), denominator_(std::move(denominator)) {
  if (denominator_ <= 0) throw std::invalid_argument("IntegerLattice: denominator must be positive");
  for (const auto& b : basis_)
    if (b.size() != ambient_dim_) throw std::invalid_argument("IntegerLattice: basis vector has wrong dimension");
  hermite_ = hnf(IntMatrix::from_rows(basis_, ambient_dim_));
  if (hermite_.rank != basis_.size())
    throw std::invalid_argument("IntegerLattice: basis vectors are linearly dependent");
}

IntegerLattice IntegerLattice::span(std::size_t ambient_dim, const std::vector<IntVector>& generators,
                                    Integer denominator) {
  HermiteForm h = hnf(IntMatrix::from_rows(generators, ambient_dim));
  Integer g = denominator;
  for (std::size_t r = 0; r < h.rank; ++r)
    for (std::size_t j = 0; j < ambient_dim; ++j) g = gcd(g, h.h(r, j));
  std::vector<IntVector> rows;
  for (std::size_t r = 0; r < h.rank; ++r) {
    IntVector row = h.h.row(r);
    for (auto& x : row) x /= g;
    rows.push_back(std::move(row));
  }
  return IntegerLattice(ambient_dim, std::move(rows), denominator / g);
}

IntegerLattice IntegerLattice::span(std::size_t ambient_dim, const std::vector<RatVector>& generators) {
  Integer den = 1;
  for (const auto& g : generators)
    for (const auto& x : g) den = lcm(den, Integer(x.get_den()));
  std::vector<IntVector> rows;
  for (const auto& g : generators) {
    if (g.size() != ambient_dim) throw std::invalid_argument("IntegerLattice::span: dimension mismatch");
    IntVector row;
    for (const auto& x : g) {
      Rational scaled = x * den;
      row.push_back(scaled.get_num());
    }
    rows.push_back(std::move(row));
  }
  return span(ambient_dim, rows, den);
}

IntegerLattice IntegerLattice::coordinate(std::size_t ambient_dim, const std::vector<std::size_t>& indices) {
  std::vector<IntVector> rows;
  for (auto i : indices) {
    if (i >= ambient_dim) throw std::invalid_argument("IntegerLattice::coordinate: index out of range");
    IntVector row(ambient_dim, Integer(0));
    row[i] = 1;
    rows.push_back(std::move(row));
  }
  return IntegerLattice(ambient_dim, std::move(rows));
}

bool IntegerLattice::solve(const RatVector& v, IntVector* coords) const {
  if (v.size() != ambient_dim_) throw std::invalid_argument("member: dimension mismatch");
  RatVector w(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) w[j] = v[j] * denominator_;
  IntVector x;
  const IntMatrix& h = hermite_.h;
  for (std::size_t r = 0; r < hermite_.rank; ++r) {
    const std::size_t c = hermite_.pivots[r];
    for (std::size_t j = (r == 0 ? 0 : hermite_.pivots[r - 1] + 1); j < c; ++j)
      if (w[j] != 0) return false;
    Rational q = w[c] / h(r, c);
    if (q.get_den() != 1) return false;
    const Integer qi = q.get_num();
    if (qi != 0)
      for (std::size_t j = c; j < ambient_dim_; ++j) w[j] -= qi * h(r, j);
    x.push_back(qi);
  }
  for (const auto& rest : w)
    if (rest != 0) return false;
  if (coords) *coords = std::move(x);
  return true;
}

bool operator==(const IntegerLattice& a, const IntegerLattice& b) {
  if (a.ambient_dim_ != b.ambient_dim_ || a.dim() != b.dim()) return false;
  const Integer l = lcm(a.denominator_, b.denominator_);
  const Integer fa = l / a.denominator_, fb = l / b.denominator_;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t j = 0; j < a.ambient_dim_; ++j)
      if (a.hermite_.h(r, j) * fa != b.hermite_.h(r, j) * fb) return false;
  return true;
}

bool member(const IntegerLattice& l, const RatVector& v) { return l.solve(v, nullptr); }

bool member(const IntegerLattice& l, const IntVector& v) {
  RatVector q(v.begin(), v.end());
  return l.solve(q, nullptr);
}

std::string QuotientGroup::str() const {
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "Z";
    if (free_rank > 1) os << "^" << free_rank;
    first = false;
  }
  for (const auto& t : torsion) {
    os << (first ? "" : " x ") << "Z" << t.get_str();
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

QuotientGroup quotient(const IntegerLattice& l_big, const IntegerLattice& l_small) {
  if (l_big.ambient_dim() != l_small.ambient_dim())
    throw std::invalid_argument("quotient: ambient dimensions differ");
  IntMatrix m(l_small.dim(), l_big.dim());
  for (std::size_t r = 0; r < l_small.dim(); ++r) {
    RatVector v;
    for (const auto& x : l_small.hermite().row(r)) v.emplace_back(x, l_small.denominator());
    IntVector coords;
    if (!l_big.solve(v, &coords)) throw std::invalid_argument("quotient: sublattice is not contained in lattice");
    for (std::size_t j = 0; j < coords.size(); ++j) m(r, j) = coords[j];
  }
  QuotientGroup q;
  std::size_t nonzero = 0;
  if (m.rows() > 0 && m.cols() > 0) {
    for (const auto& dval : snf(m).diagonal()) {
      if (dval == 0) continue;
      ++nonzero;
      if (dval > 1) q.torsion.push_back(dval);
    }
  }
  q.free_rank = l_big.dim() - nonzero;
  return q;
}

IntegerLattice theta_root_lattice(const RootSystem& s, const std::vector<std::size_t>& theta) {
  return IntegerLattice::coordinate(s.rank(), theta);
}

IntegerLattice theta_dual_root_lattice(const RootSystem& s, const std::vector<std::size_t>& theta) {
  return IntegerLattice::coordinate(s.rank(), theta);
}

StandardLattices standard_lattices(const RootSystem& s) {
  const std::size_t n = s.rank();
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), std::size_t{0});

  StandardLattices out;
  out.root = IntegerLattice::coordinate(n, all);
  out.coroot = IntegerLattice::coordinate(n, all);
  std::vector<RatVector> duals;
  for (const auto& r : s.positive_roots()) duals.push_back(dual(s, r).coords);
  out.dual_root = IntegerLattice::span(n, duals);

  if (!s.is_reduced()) {
    out.coweight = IntegerLattice();
    return out;
  }
  // coweights: u with sum_j A_ij u_j in Z for every i, i.e. rows of (A^T)^{-1}
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = s.cartan()(j, i);
    aug(i, n + i) = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && aug(p, c) == 0) ++p;
    if (p == n) throw std::invalid_argument("standard_lattices: singular Cartan matrix");
    aug.swap_rows(p, c);
    const Rational inv = 1 / aug(c, c);
    for (std::size_t j = 0; j < 2 * n; ++j) aug(c, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || aug(i, c) == 0) continue;
      const Rational f = aug(i, c);
      for (std::size_t j = 0; j < 2 * n; ++j) aug(i, j) -= f * aug(c, j);
    }
  }
  std::vector<RatVector> rows;
  for (std::size_t i = 0; i < n; ++i) {
    RatVector row;
    for (std::size_t j = 0; j < n; ++j) row.push_back(aug(i, n + j));
    rows.push_back(std::move(row));
  }
  out.coweight = IntegerLattice::span(n, rows);
  return out;
}

}  // namespace flagtop
