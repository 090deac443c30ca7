#pragma once

// Finite abelian groups given as products of cyclic groups Z/o_1 + ... + Z/o_n,
// with Smith normal form over arbitrary-precision integers as the workhorse.
//
// Elements and characters are both coordinate vectors against the same
// orders; the pairing of a character chi with an element g is
//   <chi, g> = sum_i chi_i * g_i / o_i   (mod 1).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "edim/bigint.hpp"
#include "edim/error.hpp"

namespace edim::abelian {

// ---------------------------------------------------------------------------
// Integer matrices and Smith normal form
// ---------------------------------------------------------------------------

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  /// Fraction-free Gaussian elimination (Bareiss). Square matrices only.
  BigInt determinant() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
  void negate_row(std::size_t r);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// u * a * v == d, d diagonal with nonnegative entries d_ii | d_(i+1)(i+1),
/// u and v unimodular.
struct SmithForm {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Same transform, also carrying u^-1 and v^-1 (needed to read off new
/// generators after a change of basis).
struct SmithFormFull {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
  IntMatrix u_inv;
  IntMatrix v_inv;
  std::size_t rank = 0;
};

SmithFormFull smith_normal_form_full(const IntMatrix& a);

/// Basis of the integer kernel { x : a x = 0 }, one vector per entry.
std::vector<std::vector<BigInt>> integer_kernel(const IntMatrix& a);

/// Some integer solution of a x = y, or nullopt if none exists.
std::optional<std::vector<BigInt>> solve_integer(const IntMatrix& a, std::span<const BigInt> y);

// ---------------------------------------------------------------------------
// Cyclic decompositions, elements, characters
// ---------------------------------------------------------------------------

using Coords = std::vector<std::int64_t>;

class CyclicDecomposition {
 public:
  CyclicDecomposition() = default;
  /// Throws BadParameter if some order is < 2.
  explicit CyclicDecomposition(std::vector<std::int64_t> orders);

  const std::vector<std::int64_t>& orders() const noexcept { return orders_; }
  std::size_t size() const noexcept { return orders_.size(); }
  bool trivial() const noexcept { return orders_.empty(); }
  BigInt order() const;
  /// lcm of the orders; 1 for the trivial group.
  std::int64_t exponent() const;

  friend bool operator==(const CyclicDecomposition&, const CyclicDecomposition&) = default;

 private:
  std::vector<std::int64_t> orders_;
};

template <class Tag>
struct TaggedCoords {
  Coords coords;

  std::size_t size() const noexcept { return coords.size(); }
  bool is_zero() const noexcept {
    for (auto c : coords)
      if (c != 0) return false;
    return true;
  }
  friend auto operator<=>(const TaggedCoords&, const TaggedCoords&) = default;
};

struct ElementTag {};
struct CharacterTag {};

/// An element of a group presented by a CyclicDecomposition.
using GroupElement = TaggedCoords<ElementTag>;
/// An element of the dual group (same orders).
using Character = TaggedCoords<CharacterTag>;

template <class E> struct DualOf;
template <> struct DualOf<GroupElement> { using type = Character; };
template <> struct DualOf<Character> { using type = GroupElement; };
template <class E> using Dual = typename DualOf<E>::type;

/// Throws MalformedElement unless 0 <= coords[i] < orders[i] and the lengths match.
void validate(const CyclicDecomposition& ambient, std::span<const std::int64_t> coords);

Coords add(const CyclicDecomposition& ambient, std::span<const std::int64_t> x,
           std::span<const std::int64_t> y);
Coords scale(const CyclicDecomposition& ambient, std::int64_t k, std::span<const std::int64_t> x);
Coords reduce(const CyclicDecomposition& ambient, std::span<const BigInt> x);
std::int64_t element_order(const CyclicDecomposition& ambient, std::span<const std::int64_t> x);

/// <chi, g> as a numerator over ambient.exponent(), in [0, exponent).
std::int64_t pairing(const CyclicDecomposition& ambient, std::span<const std::int64_t> chi,
                     std::span<const std::int64_t> g);

/// Visits every tuple c with 0 <= c[i] < radices[i] in lexicographic order.
/// The visitor returns false to stop early.
void for_each_tuple(std::span<const std::int64_t> radices,
                    const std::function<bool(const Coords&)>& visit);

// ---------------------------------------------------------------------------
// Subgroups
// ---------------------------------------------------------------------------

/// Invariant factors and a matching basis of the subgroup generated by `generators`.
struct StructureData {
  CyclicDecomposition structure;
  std::vector<Coords> basis;
};

StructureData compute_structure(const CyclicDecomposition& ambient,
                                const std::vector<Coords>& generators);

/// Generators (in the dual) of { chi : <chi, g> = 0 for all g in generators }.
std::vector<Coords> annihilator_generators(const CyclicDecomposition& ambient,
                                           const std::vector<Coords>& generators);

/// Coordinates a with x = sum a_i basis_i, reduced mod the structure orders.
std::optional<Coords> basis_coordinates(const CyclicDecomposition& ambient,
                                        const StructureData& data,
                                        std::span<const std::int64_t> x);

template <class E>
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(CyclicDecomposition ambient, std::vector<E> generators)
      : ambient_(std::move(ambient)), generators_(std::move(generators)) {
    std::vector<Coords> raw;
    raw.reserve(generators_.size());
    for (const auto& g : generators_) {
      validate(ambient_, g.coords);
      raw.push_back(g.coords);
    }
    data_ = compute_structure(ambient_, raw);
    for (auto& b : data_.basis) basis_.push_back(E{b});
  }

  const CyclicDecomposition& ambient() const noexcept { return ambient_; }
  const std::vector<E>& generators() const noexcept { return generators_; }
  const CyclicDecomposition& structure() const noexcept { return data_.structure; }
  const std::vector<E>& basis() const noexcept { return basis_; }
  BigInt order() const { return data_.structure.order(); }
  std::size_t rank() const noexcept { return data_.structure.size(); }

  std::optional<Coords> coordinates(const E& x) const {
    return basis_coordinates(ambient_, data_, x.coords);
  }
  bool contains(const E& x) const { return coordinates(x).has_value(); }

  /// sum_i coeffs[i] * basis[i]
  E combine(std::span<const std::int64_t> coeffs) const {
    Coords acc(ambient_.size(), 0);
    for (std::size_t i = 0; i < basis_.size() && i < coeffs.size(); ++i)
      acc = add(ambient_, acc, scale(ambient_, coeffs[i], basis_[i].coords));
    return E{acc};
  }

  /// All elements, enumerated through the basis. Throws TooLarge beyond `cap`.
  std::vector<E> elements(std::size_t cap = std::size_t{1} << 20) const {
    if (order() > cap) throw Error(ErrorKind::TooLarge, "subgroup of order " + to_decimal(order()));
    std::vector<E> out;
    for_each_tuple(data_.structure.orders(), [&](const Coords& c) {
      out.push_back(combine(c));
      return true;
    });
    return out;
  }

 private:
  CyclicDecomposition ambient_;
  std::vector<E> generators_;
  StructureData data_;
  std::vector<E> basis_;
};

using SubgroupPresentation = Subgroup<GroupElement>;
using CharacterGroup = Subgroup<Character>;

template <class E>
Subgroup<E> subgroup_structure(const CyclicDecomposition& ambient, std::vector<E> generators) {
  return Subgroup<E>(ambient, std::move(generators));
}

/// Annihilator of the subgroup generated by `generators`, as a subgroup of the dual.
template <class E>
Subgroup<Dual<E>> annihilator(const CyclicDecomposition& ambient, const std::vector<E>& generators) {
  std::vector<Coords> raw;
  for (const auto& g : generators) {
    validate(ambient, g.coords);
    raw.push_back(g.coords);
  }
  std::vector<Dual<E>> gens;
  for (auto& c : annihilator_generators(ambient, raw)) gens.push_back(Dual<E>{std::move(c)});
  return Subgroup<Dual<E>>(ambient, std::move(gens));
}

template <class E>
std::size_t rank(const Subgroup<E>& s) {
  return s.rank();
}

// ---------------------------------------------------------------------------
// p-socle duals
// ---------------------------------------------------------------------------

/// For a character group X = Z(G)^*, the dual of the p-socle C of Z(G), which
/// is X / pX ~ (Z/p)^r with r the number of invariant factors divisible by p.
/// Restriction to C is reduction modulo p of the basis coordinates on those
/// factors.
class SocleDual {
 public:
  /// Throws TrivialSocle if p does not divide |X|.
  SocleDual(const CharacterGroup& group, std::int64_t p);

  std::int64_t prime() const noexcept { return p_; }
  const CyclicDecomposition& structure() const noexcept { return structure_; }
  std::size_t rank() const noexcept { return structure_.size(); }
  const CharacterGroup& group() const noexcept { return group_; }

  /// Socle coordinates of the restriction of chi (chi must lie in the group).
  Character restrict(const Character& chi) const;
  /// The lift of a socle character whose free basis coordinates are 0.
  Character representative(const Character& socle_char) const;
  /// Every character of the group restricting to `socle_char` (the coset
  /// representative + pX), in lexicographic order of coordinates.
  std::vector<Character> lifts(const Character& socle_char,
                               std::size_t cap = std::size_t{1} << 20) const;
  BigInt lift_count() const;

 private:
  CharacterGroup group_;
  std::int64_t p_;
  CyclicDecomposition structure_;
  std::vector<std::size_t> positions_;  // basis indices with p | d_i
};

inline SocleDual socle_dual(const CharacterGroup& group, std::int64_t p) {
  return SocleDual(group, p);
}

}  // namespace edim::abelian
