#pragma once

#include <optional>
#include <string>
#include <vector>

#include "posetope/error.hpp"
#include "posetope/numeric.hpp"
#include "posetope/polytope.hpp"
#include "posetope/poset.hpp"

namespace posetope {

/// z -> A z + b on column vectors. A row-vector map v -> v U + w has A = U^T.
struct AffineMap {
  IntMatrix matrix;
  IntVector offset;

  std::size_t dim() const noexcept { return offset.size(); }
  static AffineMap identity(std::size_t d);

  IntVector apply(const IntVector& z) const;

  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

class ForbiddenSubposetError : public Error {
 public:
  explicit ForbiddenSubposetError(const XWitness& w, const std::string& message)
      : Error(ErrorCode::ForbiddenSubposetPresent, message), witness_(w) {}

  const XWitness& witness() const noexcept { return witness_; }

 private:
  XWitness witness_;
};

struct PsiEntry {
  Index element;
  ElementClass kind;
};

/// Classification of every element; throws ForbiddenSubposetError if any
/// element is not classifiable.
std::vector<PsiEntry> psi_table(const Poset& p);

/// The coordinate substitution as text, terms in chain order, e.g.
/// "1-x6-x2-x1" or "x7+x9+x11".
std::string psi_expression(const Poset& p, const PsiEntry& entry);

/// "x6 ↦ 1-x6-x2-x1", one line per element in index order.
std::vector<std::string> psi_lines(const Poset& p);

/// Row i encodes the substitution for coordinate i: 1 - x_i for minimal
/// non-maximal elements, x_i for maximal ones, 1 - (sum over the unique
/// downward chain) for down elements, sum over the unique upward chain for
/// up elements. As a point map it carries C(P) onto O(P).
AffineMap build_psi(const Poset& p);

std::vector<Rational> apply(const AffineMap& map, const std::vector<Rational>& z);

/// Substitutes x = map(z) into the inequality and normalizes. The tag is kept.
LinearInequality pullback_inequality(const AffineMap& map, const LinearInequality& ineq);

Integer determinant(const IntMatrix& a);

/// Exact inverse of an affine map whose matrix has determinant +-1.
/// Throws NotUnimodular.
AffineMap invert_unimodular(const AffineMap& map);

/// Renders an inequality over the poset's labels, e.g. "x1 ≥ x2",
/// "x10 ≥ 0", "x1+x2+x7 ≤ 1".
std::string render_inequality(const Poset& p, const LinearInequality& ineq);

enum class Verdict { Equivalent, NotEquivalent };

std::string_view to_string(Verdict v) noexcept;

struct EquivalenceReport {
  std::optional<XWitness> forbidden_witness;
  std::uint64_t order_facets = 0;
  std::uint64_t chain_facets = 0;
  std::optional<AffineMap> psi;
  std::optional<Integer> det_abs;
  bool facet_bijection_ok = false;
  bool vertex_bijection_ok = false;
  bool inverse_round_trip_ok = false;
  bool f_vectors_checked = false;
  bool f_vectors_equal = false;
  std::optional<FVector> order_f_vector;
  std::optional<FVector> chain_f_vector;
  Verdict verdict = Verdict::NotEquivalent;
};

struct EquivalenceOptions {
  bool compute_f_vectors = true;
};

/// Decides equivalence from the forbidden subposet and corroborates with
/// the transfer map. Throws InternalInconsistency if a check disagrees.
EquivalenceReport verify_equivalence(const Poset& p, const EquivalenceOptions& options = {});

}  // namespace posetope
