#include "posetope/transfer.hpp"

#include <algorithm>
#include <set>

namespace posetope {

AffineMap AffineMap::identity(std::size_t d) {
  AffineMap m{IntMatrix(d, IntVector(d, 0)), IntVector(d, 0)};
  for (std::size_t i = 0; i < d; ++i) m.matrix[i][i] = 1;
  return m;
}

IntVector AffineMap::apply(const IntVector& z) const {
  if (z.size() != dim()) throw Error(ErrorCode::DimensionMismatch, "point dimension does not match map");
  IntVector out = offset;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) out[i] += matrix[i][j] * z[j];
  return out;
}

std::vector<PsiEntry> psi_table(const Poset& p) {
  std::vector<PsiEntry> table;
  table.reserve(p.size());
  for (Index i = 0; i < p.size(); ++i) {
    auto kind = try_classify_element(p, i);
    if (!kind) {
      const auto w = contains_forbidden_x(p);
      if (!w) throw Error(ErrorCode::InternalInconsistency, "unclassifiable element without an X witness");
      throw ForbiddenSubposetError(*w, "forbidden X subposet centred at '" + p.name(w->center) + "'");
    }
    table.push_back({i, std::move(*kind)});
  }
  return table;
}

std::string psi_expression(const Poset& p, const PsiEntry& entry) {
  struct Visitor {
    const Poset& p;
    Index i;
    std::string operator()(const MinimalNotMaximal&) const { return "1-" + p.name(i); }
    std::string operator()(const Maximal&) const { return p.name(i); }
    std::string operator()(const DownUnique& c) const {
      std::string out = "1";
      for (Index k : c.chain) out += "-" + p.name(k);
      return out;
    }
    std::string operator()(const UpUnique& c) const {
      std::string out;
      for (Index k : c.chain) {
        if (!out.empty()) out += "+";
        out += p.name(k);
      }
      return out;
    }
  };
  return std::visit(Visitor{p, entry.element}, entry.kind);
}

std::vector<std::string> psi_lines(const Poset& p) {
  std::vector<std::string> lines;
  for (const auto& entry : psi_table(p)) {
    lines.push_back(p.name(entry.element) + " ↦ " + psi_expression(p, entry));
  }
  return lines;
}

AffineMap build_psi(const Poset& p) {
  const std::size_t d = p.size();
  AffineMap m{IntMatrix(d, IntVector(d, 0)), IntVector(d, 0)};
  for (const auto& entry : psi_table(p)) {
    auto& row = m.matrix[entry.element];
    auto& constant = m.offset[entry.element];
    std::visit(
        [&](const auto& kind) {
          using K = std::decay_t<decltype(kind)>;
          if constexpr (std::is_same_v<K, MinimalNotMaximal>) {
            constant = 1;
            row[entry.element] = -1;
          } else if constexpr (std::is_same_v<K, Maximal>) {
            row[entry.element] = 1;
          } else if constexpr (std::is_same_v<K, DownUnique>) {
            constant = 1;
            for (Index k : kind.chain) row[k] = -1;
          } else {
            for (Index k : kind.chain) row[k] = 1;
          }
        },
        entry.kind);
  }
  return m;
}

std::vector<Rational> apply(const AffineMap& map, const std::vector<Rational>& z) {
  if (z.size() != map.dim()) throw Error(ErrorCode::DimensionMismatch, "point dimension does not match map");
  std::vector<Rational> out(map.dim());
  for (std::size_t i = 0; i < map.dim(); ++i) {
    Rational sum = map.offset[i];
    for (std::size_t j = 0; j < map.dim(); ++j) {
      if (map.matrix[i][j] != 0) sum += map.matrix[i][j] * z[j];
    }
    out[i] = std::move(sum);
  }
  return out;
}

LinearInequality pullback_inequality(const AffineMap& map, const LinearInequality& ineq) {
  if (ineq.coeffs.size() != map.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "inequality dimension does not match map");
  }
  const std::size_t d = map.dim();
  LinearInequality out{IntVector(d, 0), ineq.rhs, ineq.tag};
  for (std::size_t i = 0; i < d; ++i) {
    const auto c = ineq.coeffs[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j < d; ++j) out.coeffs[j] += c * map.matrix[i][j];
    out.rhs -= c * map.offset[i];
  }
  return out.normalized();
}

Integer determinant(const IntMatrix& a) { return bareiss_determinant(a); }

AffineMap invert_unimodular(const AffineMap& map) {
  const std::size_t d = map.dim();
  if (map.matrix.size() != d) throw Error(ErrorCode::DimensionMismatch, "matrix and offset sizes differ");
  const Integer det = determinant(map.matrix);
  if (det != 1 && det != -1) {
    throw Error(ErrorCode::NotUnimodular, "determinant is " + det.str() + ", not +-1");
  }
  // Gauss-Jordan over the rationals on [A | I].
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(2 * d, 0));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) m[i][j] = map.matrix[i][j];
    m[i][d + i] = 1;
  }
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t p = c;
    while (m[p][c] == 0) ++p;
    std::swap(m[p], m[c]);
    const Rational pivot = m[c][c];
    for (auto& x : m[c]) x /= pivot;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Rational factor = m[r][c];
      for (std::size_t j = 0; j < 2 * d; ++j) m[r][j] -= factor * m[c][j];
    }
  }
  AffineMap inv{IntMatrix(d, IntVector(d, 0)), IntVector(d, 0)};
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const Rational& x = m[i][d + j];
      if (boost::multiprecision::denominator(x) != 1) {
        throw Error(ErrorCode::InternalInconsistency, "inverse of a unimodular matrix is not integral");
      }
      inv.matrix[i][j] = static_cast<std::int64_t>(boost::multiprecision::numerator(x));
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    std::int64_t sum = 0;
    for (std::size_t j = 0; j < d; ++j) sum -= inv.matrix[i][j] * map.offset[j];
    inv.offset[i] = sum;
  }
  return inv;
}

namespace {

std::string term_list(const Poset& p, const std::vector<std::pair<Index, std::int64_t>>& terms) {
  std::string out;
  for (const auto& [i, c] : terms) {
    if (!out.empty()) out += "+";
    if (c != 1) out += std::to_string(c);
    out += p.name(i);
  }
  return out;
}

}  // namespace

std::string render_inequality(const Poset& p, const LinearInequality& ineq) {
  std::vector<std::pair<Index, std::int64_t>> left;
  std::vector<std::pair<Index, std::int64_t>> right;
  for (Index i = 0; i < ineq.coeffs.size(); ++i) {
    if (ineq.coeffs[i] > 0) left.emplace_back(i, ineq.coeffs[i]);
    if (ineq.coeffs[i] < 0) right.emplace_back(i, -ineq.coeffs[i]);
  }
  if (left.empty() && right.empty()) return "0 ≤ " + std::to_string(ineq.rhs);
  if (left.empty()) return term_list(p, right) + " ≥ " + std::to_string(-ineq.rhs);
  if (right.empty()) return term_list(p, left) + " ≤ " + std::to_string(ineq.rhs);
  if (ineq.rhs == 0) return term_list(p, right) + " ≥ " + term_list(p, left);
  std::string rhs = term_list(p, right);
  rhs += ineq.rhs > 0 ? "+" + std::to_string(ineq.rhs) : std::to_string(ineq.rhs);
  return term_list(p, left) + " ≤ " + rhs;
}

std::string_view to_string(Verdict v) noexcept {
  return v == Verdict::Equivalent ? "Equivalent" : "NotEquivalent";
}

namespace {

using HalfspaceKey = std::pair<IntVector, std::int64_t>;

std::multiset<HalfspaceKey> halfspaces(const std::vector<LinearInequality>& list) {
  std::multiset<HalfspaceKey> out;
  for (const auto& q : list) {
    auto n = q.normalized();
    out.emplace(std::move(n.coeffs), n.rhs);
  }
  return out;
}

[[noreturn]] void inconsistent(const std::string& what) {
  throw Error(ErrorCode::InternalInconsistency, what);
}

}  // namespace

EquivalenceReport verify_equivalence(const Poset& p, const EquivalenceOptions& options) {
  EquivalenceReport report;
  const auto counts = facet_counts(p);
  report.order_facets = counts.order;
  report.chain_facets = counts.chain;
  report.forbidden_witness = contains_forbidden_x(p);

  const auto order_h = order_hrep(p);
  const auto chain_h = chain_hrep(p);
  if (order_h.inequalities.size() != counts.order || chain_h.inequalities.size() != counts.chain) {
    inconsistent("H-representation length disagrees with the facet-count formula");
  }

  std::optional<VertexSet> order_v;
  std::optional<VertexSet> chain_v;
  if (options.compute_f_vectors) {
    order_v = order_vertices(p);
    chain_v = chain_vertices(p);
    report.order_f_vector = f_vector(order_h, *order_v);
    report.chain_f_vector = f_vector(chain_h, *chain_v);
    report.f_vectors_checked = true;
    report.f_vectors_equal = *report.order_f_vector == *report.chain_f_vector;
  }

  if (report.forbidden_witness) {
    report.verdict = Verdict::NotEquivalent;
    if (!is_valid_witness(p, *report.forbidden_witness)) inconsistent("detector returned an invalid witness");
    if (counts.order >= counts.chain) inconsistent("X present but facet counts are not strictly ordered");
    try {
      (void)build_psi(p);
      inconsistent("transfer map built despite the forbidden subposet");
    } catch (const ForbiddenSubposetError&) {
    }
    if (report.f_vectors_checked &&
        report.order_f_vector->f.back() == report.chain_f_vector->f.back()) {
      inconsistent("X present but facet components of the f-vectors agree");
    }
    return report;
  }

  report.verdict = Verdict::Equivalent;
  if (counts.order != counts.chain) inconsistent("X-free but facet counts differ");
  AffineMap psi;
  try {
    psi = build_psi(p);
  } catch (const Error& e) {
    inconsistent(std::string("X-free but transfer map failed: ") + e.what());
  }

  const Integer det = determinant(psi.matrix);
  report.det_abs = det < 0 ? Integer(-det) : det;

  std::vector<LinearInequality> pulled;
  for (const auto& q : order_h.inequalities) pulled.push_back(pullback_inequality(psi, q));
  report.facet_bijection_ok = halfspaces(pulled) == halfspaces(chain_h.inequalities);

  if (!order_v) order_v = order_vertices(p);
  if (!chain_v) chain_v = chain_vertices(p);
  const std::set<IntVector> order_points(order_v->points.begin(), order_v->points.end());
  std::set<IntVector> image;
  for (const auto& v : chain_v->points) image.insert(psi.apply(v));
  report.vertex_bijection_ok = image.size() == chain_v->points.size() && image == order_points;

  if (*report.det_abs == 1) {
    const auto inverse = invert_unimodular(psi);
    bool ok = true;
    for (const auto& v : order_v->points) {
      const auto back = inverse.apply(v);
      if (psi.apply(back) != v) ok = false;
    }
    for (const auto& v : chain_v->points) {
      if (inverse.apply(psi.apply(v)) != v) ok = false;
    }
    report.inverse_round_trip_ok = ok;
  }
  report.psi = std::move(psi);

  if (*report.det_abs != 1 || !report.facet_bijection_ok || !report.vertex_bijection_ok ||
      !report.inverse_round_trip_ok || (report.f_vectors_checked && !report.f_vectors_equal)) {
    inconsistent("X-free poset failed a transfer-map check");
  }
  return report;
}

}  // namespace posetope
