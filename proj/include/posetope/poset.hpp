#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "posetope/numeric.hpp"

namespace posetope {

using Index = std::size_t;

/// Subset of poset elements; bit i stands for element i.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxElements = 64;

constexpr Mask bit(Index i) noexcept { return Mask{1} << i; }
constexpr bool has(Mask m, Index i) noexcept { return (m >> i) & 1U; }
constexpr std::size_t popcount(Mask m) noexcept { return static_cast<std::size_t>(std::popcount(m)); }
constexpr Mask full_mask(std::size_t n) noexcept { return n >= 64 ? ~Mask{0} : bit(n) - 1; }

/// Calls f(i) for every set bit, in increasing order.
template <typename F>
void for_each_bit(Mask m, F&& f) {
  while (m != 0) {
    f(static_cast<Index>(std::countr_zero(m)));
    m &= m - 1;
  }
}

/// A finite poset on elements 0..d-1 with labels.
///
/// Stores the strict order as bit rows (`up_set(i)` holds every j with
/// x_i < x_j) together with the Hasse diagram. Immutable once built.
class Poset {
 public:
  /// Builds a poset from a strict relation given as rows of successors.
  /// The relation is closed transitively; the input need not be closed.
  /// Throws CycleDetected, DuplicateLabel, TooLarge.
  static Poset from_relation(std::vector<std::string> names, std::vector<Mask> successors);

  /// Poset with labels x1..xn.
  static Poset from_relation(std::vector<Mask> successors);

  std::size_t size() const noexcept { return names_.size(); }
  Mask all() const noexcept { return full_mask(size()); }

  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(Index i) const;
  std::optional<Index> find(std::string_view label) const;

  bool less(Index i, Index j) const { return has(up_[check(i)], check(j)); }
  bool comparable(Index i, Index j) const { return less(i, j) || less(j, i); }

  Mask up_set(Index i) const { return up_[check(i)]; }
  Mask down_set(Index i) const { return down_[check(i)]; }
  Mask comparable_set(Index i) const { return up_set(i) | down_set(i); }
  Mask upper_covers(Index i) const { return upper_covers_[check(i)]; }
  Mask lower_covers(Index i) const { return lower_covers_[check(i)]; }

  /// Cover pairs (i, j) meaning x_j covers x_i, sorted lexicographically.
  const std::vector<std::pair<Index, Index>>& covers() const noexcept { return covers_; }

  bool is_minimal(Index i) const { return down_set(i) == 0; }
  bool is_maximal(Index i) const { return up_set(i) == 0; }

  Mask minimal_elements() const;
  Mask maximal_elements() const;

  /// Elements sorted so that x_i < x_j implies i appears before j.
  std::vector<Index> linear_extension() const;

  /// Induced subposet on `keep`, indices compacted in increasing order.
  Poset induced(Mask keep) const;

  /// Subposet with one element removed.
  Poset without(Index i) const { return induced(all() & ~bit(i)); }

  Poset dual() const;

  /// Relabels so that new element k is old element order[k].
  Poset permuted(const std::vector<Index>& order) const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.names_ == b.names_ && a.up_ == b.up_;
  }

 private:
  Poset() = default;
  Index check(Index i) const;

  std::vector<std::string> names_;
  std::vector<Mask> up_;
  std::vector<Mask> down_;
  std::vector<Mask> upper_covers_;
  std::vector<Mask> lower_covers_;
  std::vector<std::pair<Index, Index>> covers_;
};

/// Builds a poset from labelled relation pairs (a, b) meaning a < b.
/// Pairs may be covers or implied relations. Throws CycleDetected,
/// UnknownLabel, DuplicateLabel.
Poset poset_from_covers(std::vector<std::string> names,
                        const std::vector<std::pair<std::string, std::string>>& pairs);

struct PosetStats {
  std::size_t d = 0;
  std::size_t m_min = 0;
  std::size_t m_max = 0;
  std::size_t hasse_edges = 0;
  std::uint64_t max_chain_count = 0;

  friend bool operator==(const PosetStats&, const PosetStats&) = default;
};

PosetStats stats(const Poset& p);

/// Maximal chains as ascending cover paths from a minimal to a maximal
/// element, in lexicographic order.
std::vector<std::vector<Index>> maximal_chains(const Poset& p);

/// Number of saturated chains from each element up to a maximal element.
std::vector<std::uint64_t> upward_chain_counts(const Poset& p);

/// Number of saturated chains from each element down to a minimal element.
std::vector<std::uint64_t> downward_chain_counts(const Poset& p);

inline constexpr std::size_t kDefaultEnumerationLimit = std::size_t{1} << 26;

/// Down-closed subsets sorted by mask value. Throws TooLarge past `limit`.
std::vector<Mask> ideals(const Poset& p, std::size_t limit = kDefaultEnumerationLimit);

/// Pairwise incomparable subsets sorted by mask value.
std::vector<Mask> antichains(const Poset& p, std::size_t limit = kDefaultEnumerationLimit);

/// e(P) by dynamic programming over the ideal lattice.
Integer linear_extension_count(const Poset& p);

// Element classes used to build the transfer map. Alternative order is the
// precedence: the first rule that applies wins.
struct MinimalNotMaximal {
  friend bool operator==(const MinimalNotMaximal&, const MinimalNotMaximal&) = default;
};
struct Maximal {
  friend bool operator==(const Maximal&, const Maximal&) = default;
};
/// Unique saturated chain from the element down to a minimal element.
struct DownUnique {
  std::vector<Index> chain;
  friend bool operator==(const DownUnique&, const DownUnique&) = default;
};
/// Unique saturated chain from the element up to a maximal element.
struct UpUnique {
  std::vector<Index> chain;
  friend bool operator==(const UpUnique&, const UpUnique&) = default;
};

using ElementClass = std::variant<MinimalNotMaximal, Maximal, DownUnique, UpUnique>;

std::string_view class_name(const ElementClass& c);

/// Throws NotClassifiable when the element has at least two saturated chains
/// both downward and upward.
ElementClass classify_element(const Poset& p, Index i);

/// Non-throwing variant.
std::optional<ElementClass> try_classify_element(const Poset& p, Index i);

/// An element with an incomparable pair strictly below it and an
/// incomparable pair strictly above it. Pairs are stored in increasing order.
struct XWitness {
  Index center = 0;
  std::pair<Index, Index> below;
  std::pair<Index, Index> above;

  friend auto operator<=>(const XWitness&, const XWitness&) = default;
};

bool is_valid_witness(const Poset& p, const XWitness& w);

/// Lexicographically least witness of the five-element "X" subposet.
std::optional<XWitness> contains_forbidden_x(const Poset& p);

struct DeletionStats {
  Index removed = 0;
  std::size_t s = 0;
  std::size_t t = 0;
  std::vector<Index> branching_covers;  // covers of `removed` that cover another element
  std::vector<Index> lone_covers;       // covers of `removed` that cover nothing else
  std::vector<std::uint64_t> chain_counts;  // one per branching cover
  PosetStats before;
  PosetStats after;

  /// The four recursion identities and the chain-count inequality.
  bool identities_hold() const;
};

/// Statistics for removing a minimal, non-maximal element.
/// Throws NotMinimalNonMaximal.
DeletionStats deletion_stats(const Poset& p, Index alpha);

/// Canonical isomorphism key: byte 0 is d, followed by the d*d strict
/// relation bits in row-major order, most significant bit first. The key is
/// the lexicographic minimum over all relabelings.
class CanonicalForm {
 public:
  CanonicalForm() = default;
  CanonicalForm(std::size_t n, std::vector<std::uint8_t> bits);

  std::size_t size() const noexcept { return bytes_.empty() ? 0 : bytes_[0]; }
  const std::vector<std::uint8_t>& bytes() const noexcept { return bytes_; }

  bool relation(Index i, Index j) const;

  /// Hex of the packed relation bits (without the leading size byte).
  std::string hex() const;
  /// "<d>:<hex>", used as the stable class identifier in reports.
  std::string id() const;

  static CanonicalForm parse_id(std::string_view id);
  static CanonicalForm from_hex(std::size_t n, std::string_view hex);

  /// Poset with labels x1..xd realizing this relation matrix.
  Poset to_poset() const;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;

 private:
  std::vector<std::uint8_t> bytes_;
};

inline constexpr std::size_t kMaxCanonicalSize = 8;

/// Canonical form by ordered partition refinement with backtracking over
/// ties. Throws TooLarge for d > kMaxCanonicalSize.
CanonicalForm canonical_form(const Poset& p);

/// Canonical form by scanning all d! relabelings.
CanonicalForm canonical_form_bruteforce(const Poset& p);

/// Relation matrix of `p` read under the relabeling `order` (new k = old order[k]).
CanonicalForm relation_key(const Poset& p, const std::vector<Index>& order);

}  // namespace posetope
