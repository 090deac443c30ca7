#include "edim/abelian.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace edim {

bool parse_decimal(const std::string& text, BigInt& out) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9') return false;
  out = BigInt(text);
  return true;
}

}  // namespace edim

namespace edim::abelian {

namespace {

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

std::int64_t mod_floor(const BigInt& x, std::int64_t m) {
  BigInt r = x % m;
  if (r < 0) r += m;
  return r.convert_to<std::int64_t>();
}

std::int64_t mod_floor(std::int64_t x, std::int64_t m) {
  std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

}  // namespace

// ---------------------------------------------------------------------------
// IntMatrix
// ---------------------------------------------------------------------------

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, BigInt(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorKind::BadParameter, "ragged matrix literal");
    for (long long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::BadParameter, "matrix shape mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

BigInt IntMatrix::determinant() const {
  if (rows_ != cols_) throw Error(ErrorKind::BadParameter, "determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix m = *this;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && m(swap_with, k) == 0) ++swap_with;
      if (swap_with == n) return 0;
      m.swap_rows(k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

// ---------------------------------------------------------------------------
// Smith normal form
// ---------------------------------------------------------------------------

namespace {

// Elementary operations applied to d together with the bookkeeping matrices.
// Row operations act on u from the left and on u_inv from the right; column
// operations act on v from the right and on v_inv from the left.
struct SmithState {
  SmithFormFull f;

  void swap_rows(std::size_t a, std::size_t b) {
    f.d.swap_rows(a, b);
    f.u.swap_rows(a, b);
    f.u_inv.swap_cols(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    f.d.swap_cols(a, b);
    f.v.swap_cols(a, b);
    f.v_inv.swap_rows(a, b);
  }
  // row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, const BigInt& k) {
    f.d.add_row_multiple(dst, src, k);
    f.u.add_row_multiple(dst, src, k);
    f.u_inv.add_col_multiple(src, dst, -k);
  }
  // col[dst] += k * col[src]
  void add_col(std::size_t dst, std::size_t src, const BigInt& k) {
    f.d.add_col_multiple(dst, src, k);
    f.v.add_col_multiple(dst, src, k);
    f.v_inv.add_row_multiple(src, dst, -k);
  }
  void negate_row(std::size_t r) {
    f.d.negate_row(r);
    f.u.negate_row(r);
    for (std::size_t i = 0; i < f.u_inv.rows(); ++i) f.u_inv(i, r) = -f.u_inv(i, r);
  }
};

}  // namespace

SmithFormFull smith_normal_form_full(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SmithState s{{a, IntMatrix::identity(m), IntMatrix::identity(n), IntMatrix::identity(m),
                IntMatrix::identity(n), 0}};
  IntMatrix& d = s.f.d;

  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    // Pivot: smallest nonzero absolute value in the trailing block, first in
    // row-major order.
    std::optional<std::pair<std::size_t, std::size_t>> pivot;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (d(i, j) != 0 && (!pivot || abs_big(d(i, j)) < abs_big(d(pivot->first, pivot->second))))
          pivot = {i, j};
    if (!pivot) break;
    s.swap_rows(t, pivot->first);
    s.swap_cols(t, pivot->second);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        s.add_row(i, t, -BigInt(d(i, t) / d(t, t)));
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        s.add_col(j, t, -BigInt(d(t, j) / d(t, t)));
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder survived: move the smallest entry of row/column t to the pivot.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t; i < m; ++i)
          if (d(i, t) != 0 && abs_big(d(i, t)) < abs_big(d(bi, bj))) bi = i, bj = t;
        for (std::size_t j = t; j < n; ++j)
          if (d(t, j) != 0 && abs_big(d(t, j)) < abs_big(d(bi, bj))) bi = t, bj = j;
        s.swap_rows(t, bi);
        s.swap_cols(t, bj);
        continue;
      }
      // Divisibility: pull any non-multiple into row t and repeat.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (d(i, j) % d(t, t) != 0) {
            s.add_row(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d(t, t) < 0) s.negate_row(t);
  }
  s.f.rank = t;
  return std::move(s.f);
}

SmithForm smith_normal_form(const IntMatrix& a) {
  auto full = smith_normal_form_full(a);
  return {std::move(full.d), std::move(full.u), std::move(full.v)};
}

std::vector<std::vector<BigInt>> integer_kernel(const IntMatrix& a) {
  auto f = smith_normal_form_full(a);
  std::vector<std::vector<BigInt>> out;
  for (std::size_t j = f.rank; j < a.cols(); ++j) {
    std::vector<BigInt> col(a.cols());
    for (std::size_t i = 0; i < a.cols(); ++i) col[i] = f.v(i, j);
    out.push_back(std::move(col));
  }
  return out;
}

std::optional<std::vector<BigInt>> solve_integer(const IntMatrix& a, std::span<const BigInt> y) {
  if (y.size() != a.rows()) throw Error(ErrorKind::BadParameter, "right-hand side length mismatch");
  auto f = smith_normal_form_full(a);
  // d (v^-1 x) = u y
  std::vector<BigInt> z(a.rows(), BigInt(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.rows(); ++k) z[i] += f.u(i, k) * y[k];
  std::vector<BigInt> w(a.cols(), BigInt(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i < f.rank) {
      if (z[i] % f.d(i, i) != 0) return std::nullopt;
      w[i] = z[i] / f.d(i, i);
    } else if (z[i] != 0) {
      return std::nullopt;
    }
  }
  std::vector<BigInt> x(a.cols(), BigInt(0));
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) x[i] += f.v(i, k) * w[k];
  return x;
}

// ---------------------------------------------------------------------------
// Cyclic decompositions and coordinates
// ---------------------------------------------------------------------------

CyclicDecomposition::CyclicDecomposition(std::vector<std::int64_t> orders)
    : orders_(std::move(orders)) {
  for (auto o : orders_)
    if (o < 2) throw Error(ErrorKind::BadParameter, "cyclic factor order " + std::to_string(o) + " < 2");
}

BigInt CyclicDecomposition::order() const {
  BigInt acc = 1;
  for (auto o : orders_) acc *= o;
  return acc;
}

std::int64_t CyclicDecomposition::exponent() const {
  std::int64_t e = 1;
  for (auto o : orders_) e = std::lcm(e, o);
  return e;
}

void validate(const CyclicDecomposition& ambient, std::span<const std::int64_t> coords) {
  if (coords.size() != ambient.size())
    throw Error(ErrorKind::MalformedElement, "expected " + std::to_string(ambient.size()) +
                                                 " coordinates, got " + std::to_string(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] < 0 || coords[i] >= ambient.orders()[i])
      throw Error(ErrorKind::MalformedElement, "coordinate " + std::to_string(i) + " = " +
                                                   std::to_string(coords[i]) + " outside [0, " +
                                                   std::to_string(ambient.orders()[i]) + ")");
}

Coords add(const CyclicDecomposition& ambient, std::span<const std::int64_t> x,
           std::span<const std::int64_t> y) {
  Coords out(ambient.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = mod_floor(x[i] + y[i], ambient.orders()[i]);
  return out;
}

Coords scale(const CyclicDecomposition& ambient, std::int64_t k, std::span<const std::int64_t> x) {
  Coords out(ambient.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto o = ambient.orders()[i];
    out[i] = mod_floor(mod_floor(k, o) * x[i], o);
  }
  return out;
}

Coords reduce(const CyclicDecomposition& ambient, std::span<const BigInt> x) {
  Coords out(ambient.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = mod_floor(x[i], ambient.orders()[i]);
  return out;
}

std::int64_t element_order(const CyclicDecomposition& ambient, std::span<const std::int64_t> x) {
  std::int64_t ord = 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto o = ambient.orders()[i];
    ord = std::lcm(ord, o / std::gcd(o, x[i]));
  }
  return ord;
}

std::int64_t pairing(const CyclicDecomposition& ambient, std::span<const std::int64_t> chi,
                     std::span<const std::int64_t> g) {
  const std::int64_t e = ambient.exponent();
  BigInt acc = 0;
  for (std::size_t i = 0; i < chi.size(); ++i)
    acc += BigInt(chi[i]) * g[i] * (e / ambient.orders()[i]);
  return mod_floor(acc, e);
}

void for_each_tuple(std::span<const std::int64_t> radices,
                    const std::function<bool(const Coords&)>& visit) {
  for (auto r : radices)
    if (r <= 0) return;
  Coords c(radices.size(), 0);
  for (;;) {
    if (!visit(c)) return;
    std::size_t i = c.size();
    for (;;) {
      if (i == 0) return;
      --i;
      if (++c[i] < radices[i]) break;
      c[i] = 0;
    }
  }
}

// ---------------------------------------------------------------------------
// Subgroup structure and annihilators
// ---------------------------------------------------------------------------

StructureData compute_structure(const CyclicDecomposition& ambient,
                                const std::vector<Coords>& generators) {
  const std::size_t n = ambient.size();
  const std::size_t k = generators.size();
  if (k == 0 || n == 0) return {};

  // Relations among generators: kernel of [G | diag(orders)] projected to the
  // first k coordinates.
  IntMatrix m(n, k + n);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = generators[j][i];
  for (std::size_t i = 0; i < n; ++i) m(i, k + i) = ambient.orders()[i];
  auto kernel = integer_kernel(m);

  IntMatrix rel(k, kernel.size());
  for (std::size_t c = 0; c < kernel.size(); ++c)
    for (std::size_t r = 0; r < k; ++r) rel(r, c) = kernel[c][r];

  auto f = smith_normal_form_full(rel);
  StructureData out;
  std::vector<std::int64_t> orders;
  for (std::size_t i = 0; i < k; ++i) {
    BigInt di = (i < f.rank) ? f.d(i, i) : BigInt(0);
    if (di == 0) throw Error(ErrorKind::BadParameter, "infinite subgroup of a finite group");
    if (di == 1) continue;
    // Generator for this summand: sum_j (u^-1)_{j,i} g_j.
    std::vector<BigInt> acc(n, BigInt(0));
    for (std::size_t j = 0; j < k; ++j) {
      const BigInt& coef = f.u_inv(j, i);
      if (coef == 0) continue;
      for (std::size_t c = 0; c < n; ++c) acc[c] += coef * generators[j][c];
    }
    orders.push_back(di.convert_to<std::int64_t>());
    out.basis.push_back(reduce(ambient, acc));
  }
  out.structure = CyclicDecomposition(std::move(orders));
  return out;
}

std::vector<Coords> annihilator_generators(const CyclicDecomposition& ambient,
                                           const std::vector<Coords>& generators) {
  const std::size_t n = ambient.size();
  std::vector<Coords> out;
  if (generators.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      Coords e(n, 0);
      e[i] = 1;
      out.push_back(std::move(e));
    }
    return out;
  }
  const std::size_t t = generators.size();
  const std::int64_t e = ambient.exponent();
  // x is a character iff P x = 0 mod e, with P[g][i] = g_i * e / o_i.
  IntMatrix m(t, n + t);
  for (std::size_t g = 0; g < t; ++g) {
    for (std::size_t i = 0; i < n; ++i)
      m(g, i) = BigInt(generators[g][i]) * (e / ambient.orders()[i]);
    m(g, n + g) = e;
  }
  for (auto& vec : integer_kernel(m)) {
    std::vector<BigInt> head(vec.begin(), vec.begin() + static_cast<std::ptrdiff_t>(n));
    Coords c = reduce(ambient, head);
    bool zero = std::all_of(c.begin(), c.end(), [](auto v) { return v == 0; });
    if (!zero) out.push_back(std::move(c));
  }
  return out;
}

std::optional<Coords> basis_coordinates(const CyclicDecomposition& ambient,
                                        const StructureData& data,
                                        std::span<const std::int64_t> x) {
  validate(ambient, x);
  const std::size_t n = ambient.size();
  const std::size_t r = data.basis.size();
  if (r == 0) {
    for (auto v : x)
      if (v != 0) return std::nullopt;
    return Coords{};
  }
  IntMatrix m(n, r + n);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = data.basis[j][i];
  for (std::size_t i = 0; i < n; ++i) m(i, r + i) = ambient.orders()[i];
  std::vector<BigInt> rhs(x.begin(), x.end());
  auto sol = solve_integer(m, rhs);
  if (!sol) return std::nullopt;
  Coords out(r);
  for (std::size_t j = 0; j < r; ++j) out[j] = mod_floor((*sol)[j], data.structure.orders()[j]);
  return out;
}

// ---------------------------------------------------------------------------
// SocleDual
// ---------------------------------------------------------------------------

SocleDual::SocleDual(const CharacterGroup& group, std::int64_t p) : group_(group), p_(p) {
  const auto& orders = group_.structure().orders();
  std::vector<std::int64_t> socle;
  for (std::size_t i = 0; i < orders.size(); ++i)
    if (orders[i] % p == 0) {
      positions_.push_back(i);
      socle.push_back(p);
    }
  if (socle.empty())
    throw Error(ErrorKind::TrivialSocle, std::to_string(p) + " does not divide the group order " +
                                             to_decimal(group_.order()));
  structure_ = CyclicDecomposition(std::move(socle));
}

Character SocleDual::restrict(const Character& chi) const {
  auto coords = group_.coordinates(chi);
  if (!coords) throw Error(ErrorKind::MalformedElement, "character outside the character group");
  Coords out;
  out.reserve(positions_.size());
  for (auto pos : positions_) out.push_back((*coords)[pos] % p_);
  return Character{out};
}

Character SocleDual::representative(const Character& socle_char) const {
  validate(structure_, socle_char.coords);
  Coords coeffs(group_.rank(), 0);
  for (std::size_t j = 0; j < positions_.size(); ++j) coeffs[positions_[j]] = socle_char.coords[j];
  return group_.combine(coeffs);
}

BigInt SocleDual::lift_count() const {
  BigInt n = group_.order();
  for (std::size_t i = 0; i < positions_.size(); ++i) n /= p_;
  return n;
}

std::vector<Character> SocleDual::lifts(const Character& socle_char, std::size_t cap) const {
  if (lift_count() > cap)
    throw Error(ErrorKind::TooLarge, "coset of size " + to_decimal(lift_count()));
  const Character base = representative(socle_char);
  const auto& amb = group_.ambient();
  const auto& orders = group_.structure().orders();
  // p * b_i has order d_i / p when p | d_i and order d_i otherwise.
  std::vector<std::int64_t> radices;
  std::vector<Coords> steps;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    radices.push_back(orders[i] % p_ == 0 ? orders[i] / p_ : orders[i]);
    steps.push_back(scale(amb, p_, group_.basis()[i].coords));
  }
  std::vector<Character> out;
  for_each_tuple(radices, [&](const Coords& c) {
    Coords acc = base.coords;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] != 0) acc = add(amb, acc, scale(amb, c[i], steps[i]));
    out.push_back(Character{std::move(acc)});
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace edim::abelian
