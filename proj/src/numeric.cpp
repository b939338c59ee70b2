#include "posetope/numeric.hpp"

#include <numeric>
#include <optional>
#include <utility>

#include "posetope/error.hpp"

namespace posetope {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotClassifiable: return "NotClassifiable";
    case ErrorCode::NotMinimalNonMaximal: return "NotMinimalNonMaximal";
    case ErrorCode::VertexOutsidePolytope: return "VertexOutsidePolytope";
    case ErrorCode::NotFullDimensional: return "NotFullDimensional";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::ForbiddenSubposetPresent: return "ForbiddenSubposetPresent";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

__extension__ typedef __int128 Wide;

// Fraction-free elimination to row echelon form. Returns the rank and, for
// square input, the determinant as the last pivot (with sign from swaps).
template <typename T>
struct Echelon {
  std::size_t rank = 0;
  T last_pivot{1};
  bool negate = false;
};

template <typename T>
Echelon<T> eliminate(std::vector<std::vector<T>> m, std::size_t cols) {
  Echelon<T> out;
  T prev{1};
  std::size_t r = 0;
  const std::size_t rows = m.size();
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(m[p], m[r]);
      out.negate = !out.negate;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  out.rank = r;
  out.last_pivot = prev;
  return out;
}

// Small-integer path; gives up (nullopt) as soon as an entry leaves the
// range where the next product is safe in 128 bits.
std::optional<std::size_t> rank_small(const IntMatrix& rows, std::size_t cols) {
  constexpr Wide kLimit = static_cast<Wide>(1) << 60;
  std::vector<std::vector<Wide>> m(rows.size(), std::vector<Wide>(cols));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = rows[i][j];

  Wide prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Wide v = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
        if (v >= kLimit || v <= -kLimit) return std::nullopt;
        m[i][j] = v;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

}  // namespace

std::size_t matrix_rank(const IntMatrix& rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  for (const auto& row : rows) {
    if (row.size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged matrix");
  }
  if (auto r = rank_small(rows, cols)) return *r;

  std::vector<std::vector<Integer>> big(rows.size(), std::vector<Integer>(cols));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) big[i][j] = rows[i][j];
  return eliminate(std::move(big), cols).rank;
}

Integer bareiss_determinant(const IntMatrix& matrix) {
  const std::size_t n = matrix.size();
  for (const auto& row : matrix) {
    if (row.size() != n) throw Error(ErrorCode::NotSquare, "determinant of a non-square matrix");
  }
  if (n == 0) return 1;
  std::vector<std::vector<Integer>> big(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) big[i][j] = matrix[i][j];
  auto e = eliminate(std::move(big), n);
  if (e.rank < n) return 0;
  return e.negate ? Integer(-e.last_pivot) : e.last_pivot;
}

std::string to_string(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Integer factorial(unsigned n) {
  Integer out = 1;
  for (unsigned k = 2; k <= n; ++k) out *= k;
  return out;
}

std::int64_t gcd_of(const IntVector& values, std::int64_t extra) {
  std::int64_t g = extra < 0 ? -extra : extra;
  for (auto v : values) g = std::gcd(g, v < 0 ? -v : v);
  return g;
}

}  // namespace posetope
