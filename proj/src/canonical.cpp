#include <algorithm>
#include <numeric>

#include "posetope/error.hpp"
#include "posetope/poset.hpp"

namespace posetope {

namespace {

constexpr char kHexDigits[] = "0123456789abcdef";

std::size_t packed_bytes(std::size_t n) { return (n * n + 7) / 8; }

// Row k of the relabeled matrix as an n-bit value, column 0 in the high bit.
using Row = std::uint64_t;

CanonicalForm pack_rows(std::size_t n, const std::vector<Row>& rows) {
  std::vector<std::uint8_t> bits(packed_bytes(n), 0);
  std::size_t pos = 0;
  for (Row row : rows) {
    for (std::size_t l = 0; l < n; ++l, ++pos) {
      if ((row >> (n - 1 - l)) & 1U) bits[pos / 8] |= static_cast<std::uint8_t>(0x80U >> (pos % 8));
    }
  }
  return CanonicalForm(n, std::move(bits));
}

void require_canonical_size(const Poset& p) {
  if (p.size() > kMaxCanonicalSize) {
    throw Error(ErrorCode::TooLarge, "canonical forms are limited to " +
                                         std::to_string(kMaxCanonicalSize) + " elements");
  }
}

class RefinementSearch {
 public:
  explicit RefinementSearch(const Poset& p) : p_(p), n_(p.size()) {}

  CanonicalForm run() {
    std::vector<std::vector<Index>> cells;
    if (n_ > 0) {
      cells.emplace_back(n_);
      std::iota(cells.front().begin(), cells.front().end(), Index{0});
    }
    current_.assign(n_, 0);
    search(0, cells);
    return pack_rows(n_, best_);
  }

 private:
  Row row_for(Index c, std::size_t k, const std::vector<std::vector<Index>>& cells) const {
    Row row = 0;
    std::size_t col = 0;
    auto put = [&](bool one) {
      if (one) row |= Row{1} << (n_ - 1 - col);
      ++col;
    };
    for (std::size_t l = 0; l < k; ++l) put(p_.less(c, perm_[l]));
    put(false);  // diagonal
    for (const auto& cell : cells) {
      std::size_t ones = 0;
      std::size_t size = 0;
      for (Index e : cell) {
        if (e == c) continue;
        ++size;
        if (p_.less(c, e)) ++ones;
      }
      for (std::size_t z = 0; z < size - ones; ++z) put(false);
      for (std::size_t o = 0; o < ones; ++o) put(true);
    }
    return row;
  }

  // -1, 0, 1 comparing current_[0..k] with best_[0..k].
  int compare_prefix(std::size_t k) const {
    if (best_.empty()) return -1;
    for (std::size_t r = 0; r <= k; ++r) {
      if (current_[r] != best_[r]) return current_[r] < best_[r] ? -1 : 1;
    }
    return 0;
  }

  void search(std::size_t k, const std::vector<std::vector<Index>>& cells) {
    if (k == n_) {
      if (best_.empty() || current_ < best_) best_ = current_;
      return;
    }
    const auto& first = cells.front();
    Row min_row = ~Row{0};
    std::vector<Row> rows(first.size());
    for (std::size_t a = 0; a < first.size(); ++a) {
      rows[a] = row_for(first[a], k, cells);
      min_row = std::min(min_row, rows[a]);
    }
    current_[k] = min_row;
    for (std::size_t a = 0; a < first.size(); ++a) {
      if (rows[a] != min_row) continue;
      current_[k] = min_row;
      if (compare_prefix(k) > 0) return;
      const Index c = first[a];
      std::vector<std::vector<Index>> refined;
      for (const auto& cell : cells) {
        std::vector<Index> low;
        std::vector<Index> high;
        for (Index e : cell) {
          if (e == c) continue;
          (p_.less(c, e) ? high : low).push_back(e);
        }
        if (!low.empty()) refined.push_back(std::move(low));
        if (!high.empty()) refined.push_back(std::move(high));
      }
      perm_.push_back(c);
      search(k + 1, refined);
      perm_.pop_back();
    }
  }

  const Poset& p_;
  std::size_t n_;
  std::vector<Index> perm_;
  std::vector<Row> current_;
  std::vector<Row> best_;
};

}  // namespace

CanonicalForm::CanonicalForm(std::size_t n, std::vector<std::uint8_t> bits) {
  if (n > 255 || bits.size() != packed_bytes(n)) {
    throw Error(ErrorCode::InvalidArgument, "canonical form has the wrong byte length");
  }
  bytes_.reserve(bits.size() + 1);
  bytes_.push_back(static_cast<std::uint8_t>(n));
  bytes_.insert(bytes_.end(), bits.begin(), bits.end());
}

bool CanonicalForm::relation(Index i, Index j) const {
  const std::size_t n = size();
  if (i >= n || j >= n) throw Error(ErrorCode::IndexOutOfRange, "relation index out of range");
  const std::size_t pos = i * n + j;
  return (bytes_[1 + pos / 8] >> (7 - pos % 8)) & 1U;
}

std::string CanonicalForm::hex() const {
  std::string out;
  for (std::size_t k = 1; k < bytes_.size(); ++k) {
    out.push_back(kHexDigits[bytes_[k] >> 4]);
    out.push_back(kHexDigits[bytes_[k] & 0xF]);
  }
  return out;
}

std::string CanonicalForm::id() const { return std::to_string(size()) + ":" + hex(); }

CanonicalForm CanonicalForm::from_hex(std::size_t n, std::string_view hex) {
  if (hex.size() != 2 * packed_bytes(n)) {
    throw Error(ErrorCode::InvalidArgument, "hex relation matrix has the wrong length for n=" + std::to_string(n));
  }
  auto nibble = [](char ch) -> std::uint8_t {
    if (ch >= '0' && ch <= '9') return static_cast<std::uint8_t>(ch - '0');
    if (ch >= 'a' && ch <= 'f') return static_cast<std::uint8_t>(ch - 'a' + 10);
    if (ch >= 'A' && ch <= 'F') return static_cast<std::uint8_t>(ch - 'A' + 10);
    throw Error(ErrorCode::InvalidArgument, std::string("invalid hex digit '") + ch + "'");
  };
  std::vector<std::uint8_t> bits;
  for (std::size_t k = 0; k < hex.size(); k += 2) {
    bits.push_back(static_cast<std::uint8_t>(nibble(hex[k]) << 4 | nibble(hex[k + 1])));
  }
  // Padding bits past n*n must be clear so that equal posets have equal keys.
  const std::size_t used = n * n;
  for (std::size_t pos = used; pos < bits.size() * 8; ++pos) {
    if ((bits[pos / 8] >> (7 - pos % 8)) & 1U) {
      throw Error(ErrorCode::InvalidArgument, "nonzero padding bits in relation matrix");
    }
  }
  return CanonicalForm(n, std::move(bits));
}

CanonicalForm CanonicalForm::parse_id(std::string_view id) {
  const auto colon = id.find(':');
  if (colon == std::string_view::npos || colon == 0) {
    throw Error(ErrorCode::InvalidArgument, "canonical id must look like '<n>:<hex>'");
  }
  std::size_t n = 0;
  for (char ch : id.substr(0, colon)) {
    if (ch < '0' || ch > '9') throw Error(ErrorCode::InvalidArgument, "bad size in canonical id");
    n = n * 10 + static_cast<std::size_t>(ch - '0');
    if (n > 255) throw Error(ErrorCode::InvalidArgument, "bad size in canonical id");
  }
  return from_hex(n, id.substr(colon + 1));
}

Poset CanonicalForm::to_poset() const {
  const std::size_t n = size();
  std::vector<Mask> rows(n, 0);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (relation(i, j)) rows[i] |= bit(j);
  return Poset::from_relation(std::move(rows));
}

CanonicalForm relation_key(const Poset& p, const std::vector<Index>& order) {
  const std::size_t n = p.size();
  if (order.size() != n) throw Error(ErrorCode::DimensionMismatch, "permutation size mismatch");
  std::vector<Row> rows(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      if (p.less(order[k], order[l])) rows[k] |= Row{1} << (n - 1 - l);
    }
  }
  return pack_rows(n, rows);
}

CanonicalForm canonical_form(const Poset& p) {
  require_canonical_size(p);
  return RefinementSearch(p).run();
}

CanonicalForm canonical_form_bruteforce(const Poset& p) {
  require_canonical_size(p);
  const std::size_t n = p.size();
  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), Index{0});
  std::vector<Row> best;
  std::vector<Row> rows(n);
  do {
    for (std::size_t k = 0; k < n; ++k) {
      Row row = 0;
      for (std::size_t l = 0; l < n; ++l) {
        if (p.less(order[k], order[l])) row |= Row{1} << (n - 1 - l);
      }
      rows[k] = row;
    }
    if (best.empty() || rows < best) best = rows;
  } while (std::next_permutation(order.begin(), order.end()));
  return pack_rows(n, best);
}

}  // namespace posetope
