#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "posetope/numeric.hpp"
#include "posetope/poset.hpp"

namespace posetope {

// Provenance of an inequality.
struct MinUpper {  // a_i <= 1, x_i minimal
  Index element;
  friend bool operator==(const MinUpper&, const MinUpper&) = default;
};
struct MaxLower {  // a_i >= 0, x_i maximal
  Index element;
  friend bool operator==(const MaxLower&, const MaxLower&) = default;
};
struct CoverTag {  // a_lower >= a_upper, x_upper covers x_lower
  Index lower;
  Index upper;
  friend bool operator==(const CoverTag&, const CoverTag&) = default;
};
struct NonNeg {  // a_i >= 0
  Index element;
  friend bool operator==(const NonNeg&, const NonNeg&) = default;
};
struct ChainTag {  // sum over a maximal chain <= 1
  std::vector<Index> chain;
  friend bool operator==(const ChainTag&, const ChainTag&) = default;
};

using InequalityTag = std::variant<MinUpper, MaxLower, CoverTag, NonNeg, ChainTag>;

std::string describe_tag(const InequalityTag& tag, const Poset& p);

/// coeffs . a <= rhs
struct LinearInequality {
  IntVector coeffs;
  std::int64_t rhs = 0;
  InequalityTag tag;

  std::int64_t evaluate(const IntVector& point) const;
  bool satisfied_by(const IntVector& point) const { return evaluate(point) <= rhs; }
  bool tight_at(const IntVector& point) const { return evaluate(point) == rhs; }

  /// Divides coefficients and right-hand side by their positive content.
  LinearInequality normalized() const;

  /// Same half-space after normalization; tags are ignored.
  bool same_halfspace(const LinearInequality& other) const;
};

struct HPolytope {
  std::size_t dim = 0;
  std::vector<LinearInequality> inequalities;

  bool contains(const IntVector& point) const;
};

struct VertexSet {
  std::size_t dim = 0;
  std::vector<IntVector> points;
};

struct FVector {
  std::vector<std::uint64_t> f;

  /// sum (-1)^i f_i == 1 - (-1)^d
  bool euler_holds() const;
  friend bool operator==(const FVector&, const FVector&) = default;
};

/// Dynamic bitset over vertex indices.
class VertexBits {
 public:
  VertexBits() = default;
  explicit VertexBits(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  static VertexBits all(std::size_t size);

  std::size_t size() const noexcept { return size_; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  std::size_t count() const;
  bool subset_of(const VertexBits& other) const;
  VertexBits& operator&=(const VertexBits& other);
  std::vector<std::size_t> members() const;
  std::size_t hash() const;

  friend bool operator==(const VertexBits&, const VertexBits&) = default;
  friend auto operator<=>(const VertexBits&, const VertexBits&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct VertexBitsHash {
  std::size_t operator()(const VertexBits& b) const { return b.hash(); }
};

/// Facet-defining inequalities of the order polytope: a_i <= 1 for minimal
/// x_i, -a_i <= 0 for maximal x_i, and a_j - a_i <= 0 for each cover (i, j).
HPolytope order_hrep(const Poset& p);

/// -a_i <= 0 for every i, and sum over each maximal chain <= 1.
HPolytope chain_hrep(const Poset& p);

/// Indicator vectors of ideals.
VertexSet order_vertices(const Poset& p);

/// Indicator vectors of antichains.
VertexSet chain_vertices(const Poset& p);

IntVector indicator(Mask m, std::size_t d);

struct FacetCounts {
  std::uint64_t order = 0;
  std::uint64_t chain = 0;
  friend bool operator==(const FacetCounts&, const FacetCounts&) = default;
};

/// m_min + m_max + h and d + c, from poset statistics alone.
FacetCounts facet_counts(const Poset& p);

/// Row per inequality: which vertices it is tight at.
/// Throws VertexOutsidePolytope, DimensionMismatch.
std::vector<VertexBits> incidence(const HPolytope& h, const VertexSet& v);

/// Affine dimension of the selected points; -1 for an empty selection.
int affine_dimension(const VertexSet& v, const VertexBits& selection);

/// Every inequality is tight on an affinely (d-1)-dimensional vertex set and
/// no two inequalities share a tight set.
bool verify_facets_irredundant(const HPolytope& h, const VertexSet& v);

/// Counts faces of each dimension 0..d-1 by closing vertex sets under the
/// incidence relation. Throws NotFullDimensional.
FVector f_vector(const HPolytope& h, const VertexSet& v);

/// e(P)/d!, the volume of both polytopes.
Rational volume(const Poset& p);

inline constexpr std::size_t kMaxEhrhartDim = 6;

/// Lattice points of t*H inside the box [0, t]^d. Throws TooLarge unless
/// d <= 6 and t <= d + 1.
std::uint64_t ehrhart_count(const HPolytope& h, std::uint64_t t);

/// Leading coefficient of the Ehrhart polynomial from the d-th forward
/// difference of ehrhart_count at t = 0..d.
Rational ehrhart_leading_coefficient(const HPolytope& h);

}  // namespace posetope

template <>
struct std::hash<posetope::VertexBits> {
  std::size_t operator()(const posetope::VertexBits& b) const { return b.hash(); }
};
