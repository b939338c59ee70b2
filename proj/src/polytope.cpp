#include "posetope/polytope.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "posetope/error.hpp"

namespace posetope {

std::string describe_tag(const InequalityTag& tag, const Poset& p) {
  struct Visitor {
    const Poset& p;
    std::string operator()(const MinUpper& t) const { return "MinUpper(" + p.name(t.element) + ")"; }
    std::string operator()(const MaxLower& t) const { return "MaxLower(" + p.name(t.element) + ")"; }
    std::string operator()(const CoverTag& t) const {
      return "Cover(" + p.name(t.lower) + "," + p.name(t.upper) + ")";
    }
    std::string operator()(const NonNeg& t) const { return "NonNeg(" + p.name(t.element) + ")"; }
    std::string operator()(const ChainTag& t) const {
      std::string out = "Chain(";
      for (std::size_t k = 0; k < t.chain.size(); ++k) {
        if (k) out += "<";
        out += p.name(t.chain[k]);
      }
      return out + ")";
    }
  };
  return std::visit(Visitor{p}, tag);
}

std::int64_t LinearInequality::evaluate(const IntVector& point) const {
  if (point.size() != coeffs.size()) throw Error(ErrorCode::DimensionMismatch, "point dimension mismatch");
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) sum += coeffs[i] * point[i];
  return sum;
}

LinearInequality LinearInequality::normalized() const {
  LinearInequality out = *this;
  const std::int64_t g = gcd_of(coeffs, rhs);
  if (g > 1) {
    for (auto& c : out.coeffs) c /= g;
    out.rhs /= g;
  }
  return out;
}

bool LinearInequality::same_halfspace(const LinearInequality& other) const {
  const auto a = normalized();
  const auto b = other.normalized();
  return a.coeffs == b.coeffs && a.rhs == b.rhs;
}

bool HPolytope::contains(const IntVector& point) const {
  return std::all_of(inequalities.begin(), inequalities.end(),
                     [&](const LinearInequality& q) { return q.satisfied_by(point); });
}

bool FVector::euler_holds() const {
  std::int64_t alternating = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto v = static_cast<std::int64_t>(f[i]);
    alternating += (i % 2 == 0) ? v : -v;
  }
  const std::int64_t expected = (f.size() % 2 == 0) ? 0 : 2;
  return alternating == expected;
}

VertexBits VertexBits::all(std::size_t size) {
  VertexBits b(size);
  for (std::size_t i = 0; i < size; ++i) b.set(i);
  return b;
}

std::size_t VertexBits::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool VertexBits::subset_of(const VertexBits& other) const {
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if ((words_[k] & ~other.words_[k]) != 0) return false;
  }
  return true;
}

VertexBits& VertexBits::operator&=(const VertexBits& other) {
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
  return *this;
}

std::vector<std::size_t> VertexBits::members() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size_; ++i)
    if (test(i)) out.push_back(i);
  return out;
}

std::size_t VertexBits::hash() const {
  std::size_t h = size_;
  for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

IntVector indicator(Mask m, std::size_t d) {
  IntVector v(d, 0);
  for_each_bit(m, [&](Index i) {
    if (i < d) v[i] = 1;
  });
  return v;
}

HPolytope order_hrep(const Poset& p) {
  const std::size_t d = p.size();
  HPolytope h{d, {}};
  for (Index i = 0; i < d; ++i) {
    if (!p.is_minimal(i)) continue;
    IntVector c(d, 0);
    c[i] = 1;
    h.inequalities.push_back({std::move(c), 1, MinUpper{i}});
  }
  for (Index i = 0; i < d; ++i) {
    if (!p.is_maximal(i)) continue;
    IntVector c(d, 0);
    c[i] = -1;
    h.inequalities.push_back({std::move(c), 0, MaxLower{i}});
  }
  for (const auto& [lo, hi] : p.covers()) {
    IntVector c(d, 0);
    c[hi] = 1;
    c[lo] = -1;
    h.inequalities.push_back({std::move(c), 0, CoverTag{lo, hi}});
  }
  return h;
}

HPolytope chain_hrep(const Poset& p) {
  const std::size_t d = p.size();
  HPolytope h{d, {}};
  for (Index i = 0; i < d; ++i) {
    IntVector c(d, 0);
    c[i] = -1;
    h.inequalities.push_back({std::move(c), 0, NonNeg{i}});
  }
  for (auto& chain : maximal_chains(p)) {
    IntVector c(d, 0);
    for (Index i : chain) c[i] = 1;
    h.inequalities.push_back({std::move(c), 1, ChainTag{std::move(chain)}});
  }
  return h;
}

namespace {

VertexSet vertices_from(const std::vector<Mask>& supports, std::size_t d) {
  VertexSet v{d, {}};
  v.points.reserve(supports.size());
  for (Mask m : supports) v.points.push_back(indicator(m, d));
  return v;
}

}  // namespace

VertexSet order_vertices(const Poset& p) { return vertices_from(ideals(p), p.size()); }
VertexSet chain_vertices(const Poset& p) { return vertices_from(antichains(p), p.size()); }

FacetCounts facet_counts(const Poset& p) {
  const auto s = stats(p);
  return {s.m_min + s.m_max + s.hasse_edges, s.d + s.max_chain_count};
}

std::vector<VertexBits> incidence(const HPolytope& h, const VertexSet& v) {
  if (h.dim != v.dim) throw Error(ErrorCode::DimensionMismatch, "polytope and vertex dimensions differ");
  std::vector<VertexBits> rows;
  rows.reserve(h.inequalities.size());
  for (const auto& q : h.inequalities) {
    VertexBits row(v.points.size());
    for (std::size_t k = 0; k < v.points.size(); ++k) {
      const auto value = q.evaluate(v.points[k]);
      if (value > q.rhs) {
        throw Error(ErrorCode::VertexOutsidePolytope,
                    "vertex " + std::to_string(k) + " violates an inequality");
      }
      if (value == q.rhs) row.set(k);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

int affine_dimension(const VertexSet& v, const VertexBits& selection) {
  IntMatrix rows;
  for (std::size_t k : selection.members()) {
    IntVector row = v.points[k];
    row.push_back(1);
    rows.push_back(std::move(row));
  }
  return static_cast<int>(matrix_rank(rows)) - 1;
}

bool verify_facets_irredundant(const HPolytope& h, const VertexSet& v) {
  std::vector<VertexBits> rows;
  try {
    rows = incidence(h, v);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::VertexOutsidePolytope) return false;
    throw;
  }
  const int target = static_cast<int>(h.dim) - 1;
  std::unordered_set<VertexBits, VertexBitsHash> seen;
  for (const auto& row : rows) {
    if (affine_dimension(v, row) != target) return false;
    if (!seen.insert(row).second) return false;
  }
  return true;
}

FVector f_vector(const HPolytope& h, const VertexSet& v) {
  const auto rows = incidence(h, v);
  const std::size_t nv = v.points.size();
  const VertexBits everything = VertexBits::all(nv);
  if (affine_dimension(v, everything) != static_cast<int>(h.dim)) {
    throw Error(ErrorCode::NotFullDimensional, "vertex set does not span the ambient space");
  }

  auto closure = [&](const VertexBits& s) {
    VertexBits out = everything;
    for (const auto& row : rows) {
      if (s.subset_of(row)) out &= row;
    }
    return out;
  };

  FVector result;
  result.f.assign(h.dim, 0);
  std::unordered_set<VertexBits, VertexBitsHash> faces;
  std::deque<VertexBits> queue;
  auto record = [&](VertexBits face) {
    if (face == everything) return;
    if (!faces.insert(face).second) return;
    const int dim = affine_dimension(v, face);
    if (dim < 0 || dim >= static_cast<int>(h.dim)) {
      throw Error(ErrorCode::InternalInconsistency, "proper face with impossible dimension");
    }
    ++result.f[static_cast<std::size_t>(dim)];
    queue.push_back(std::move(face));
  };

  for (std::size_t k = 0; k < nv; ++k) {
    VertexBits single(nv);
    single.set(k);
    record(closure(single));
  }
  while (!queue.empty()) {
    const VertexBits face = std::move(queue.front());
    queue.pop_front();
    for (std::size_t k = 0; k < nv; ++k) {
      if (face.test(k)) continue;
      VertexBits grown = face;
      grown.set(k);
      record(closure(grown));
    }
  }
  return result;
}

Rational volume(const Poset& p) {
  return Rational(linear_extension_count(p)) / Rational(factorial(static_cast<unsigned>(p.size())));
}

std::uint64_t ehrhart_count(const HPolytope& h, std::uint64_t t) {
  const std::size_t d = h.dim;
  if (d > kMaxEhrhartDim || t > d + 1) {
    throw Error(ErrorCode::TooLarge, "lattice point count needs d <= 6 and t <= d+1");
  }
  IntVector z(d, 0);
  std::uint64_t count = 0;
  const auto top = static_cast<std::int64_t>(t);
  for (;;) {
    const bool inside = std::all_of(h.inequalities.begin(), h.inequalities.end(), [&](const LinearInequality& q) {
      return q.evaluate(z) <= q.rhs * top;
    });
    if (inside) ++count;
    std::size_t k = 0;
    while (k < d && z[k] == top) z[k++] = 0;
    if (k == d) break;
    ++z[k];
  }
  return count;
}

Rational ehrhart_leading_coefficient(const HPolytope& h) {
  const std::size_t d = h.dim;
  // d-th forward difference of L at 0 equals d! times the leading coefficient.
  Integer difference = 0;
  Integer binom = 1;
  for (std::size_t k = 0; k <= d; ++k) {
    if (k > 0) binom = binom * (d - k + 1) / k;
    const Integer term = binom * ehrhart_count(h, k);
    if ((d - k) % 2 == 0) {
      difference += term;
    } else {
      difference -= term;
    }
  }
  return Rational(difference) / Rational(factorial(static_cast<unsigned>(d)));
}

}  // namespace posetope
