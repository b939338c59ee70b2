#include "posetope/poset.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "posetope/error.hpp"

namespace posetope {

Poset Poset::from_relation(std::vector<std::string> names, std::vector<Mask> successors) {
  const std::size_t n = names.size();
  if (n > kMaxElements) {
    throw Error(ErrorCode::TooLarge,
                "posets are limited to " + std::to_string(kMaxElements) + " elements");
  }
  if (successors.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "relation rows do not match element count");
  }
  {
    std::unordered_set<std::string> seen;
    for (const auto& name : names) {
      if (!seen.insert(name).second) throw Error(ErrorCode::DuplicateLabel, "duplicate label '" + name + "'");
    }
  }
  const Mask universe = full_mask(n);
  for (auto& row : successors) {
    if ((row & ~universe) != 0) throw Error(ErrorCode::IndexOutOfRange, "relation references unknown element");
  }

  // Warshall closure on bit rows.
  for (Index k = 0; k < n; ++k) {
    for (Index i = 0; i < n; ++i) {
      if (has(successors[i], k)) successors[i] |= successors[k];
    }
  }
  for (Index i = 0; i < n; ++i) {
    if (has(successors[i], i)) {
      throw Error(ErrorCode::CycleDetected, "relation has a cycle through '" + names[i] + "'");
    }
  }

  Poset p;
  p.names_ = std::move(names);
  p.up_ = std::move(successors);
  p.down_.assign(n, 0);
  for (Index i = 0; i < n; ++i) for_each_bit(p.up_[i], [&](Index j) { p.down_[j] |= bit(i); });

  p.upper_covers_.assign(n, 0);
  p.lower_covers_.assign(n, 0);
  for (Index i = 0; i < n; ++i) {
    Mask implied = 0;
    for_each_bit(p.up_[i], [&](Index k) { implied |= p.up_[k]; });
    p.upper_covers_[i] = p.up_[i] & ~implied;
    for_each_bit(p.upper_covers_[i], [&](Index j) {
      p.lower_covers_[j] |= bit(i);
      p.covers_.emplace_back(i, j);
    });
  }
  return p;
}

Poset Poset::from_relation(std::vector<Mask> successors) {
  std::vector<std::string> names;
  names.reserve(successors.size());
  for (std::size_t i = 0; i < successors.size(); ++i) names.push_back("x" + std::to_string(i + 1));
  return from_relation(std::move(names), std::move(successors));
}

Index Poset::check(Index i) const {
  if (i >= names_.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "element index " + std::to_string(i) + " out of range");
  }
  return i;
}

const std::string& Poset::name(Index i) const { return names_[check(i)]; }

std::optional<Index> Poset::find(std::string_view label) const {
  auto it = std::find(names_.begin(), names_.end(), label);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Index>(it - names_.begin());
}

Mask Poset::minimal_elements() const {
  Mask m = 0;
  for (Index i = 0; i < size(); ++i)
    if (down_[i] == 0) m |= bit(i);
  return m;
}

Mask Poset::maximal_elements() const {
  Mask m = 0;
  for (Index i = 0; i < size(); ++i)
    if (up_[i] == 0) m |= bit(i);
  return m;
}

std::vector<Index> Poset::linear_extension() const {
  std::vector<Index> order(size());
  for (Index i = 0; i < size(); ++i) order[i] = i;
  // x < y implies down(x) is a proper subset of down(y).
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return popcount(down_[a]) < popcount(down_[b]); });
  return order;
}

Poset Poset::induced(Mask keep) const {
  keep &= all();
  std::vector<Index> old_of_new;
  std::vector<Index> new_of_old(size(), 0);
  for_each_bit(keep, [&](Index i) {
    new_of_old[i] = old_of_new.size();
    old_of_new.push_back(i);
  });
  std::vector<std::string> names;
  std::vector<Mask> rows;
  for (Index old : old_of_new) {
    names.push_back(names_[old]);
    Mask row = 0;
    for_each_bit(up_[old] & keep, [&](Index j) { row |= bit(new_of_old[j]); });
    rows.push_back(row);
  }
  return from_relation(std::move(names), std::move(rows));
}

Poset Poset::dual() const { return from_relation(names_, down_); }

Poset Poset::permuted(const std::vector<Index>& order) const {
  if (order.size() != size()) throw Error(ErrorCode::DimensionMismatch, "permutation size mismatch");
  std::vector<Index> new_of_old(size(), size());
  for (Index k = 0; k < order.size(); ++k) new_of_old[check(order[k])] = k;
  if (std::find(new_of_old.begin(), new_of_old.end(), size()) != new_of_old.end()) {
    throw Error(ErrorCode::InvalidArgument, "not a permutation");
  }
  std::vector<std::string> names;
  std::vector<Mask> rows;
  for (Index old : order) {
    names.push_back(names_[old]);
    Mask row = 0;
    for_each_bit(up_[old], [&](Index j) { row |= bit(new_of_old[j]); });
    rows.push_back(row);
  }
  return from_relation(std::move(names), std::move(rows));
}

Poset poset_from_covers(std::vector<std::string> names,
                        const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::unordered_map<std::string, Index> index;
  for (Index i = 0; i < names.size(); ++i) {
    if (!index.emplace(names[i], i).second) {
      throw Error(ErrorCode::DuplicateLabel, "duplicate label '" + names[i] + "'");
    }
  }
  if (names.size() > kMaxElements) {
    throw Error(ErrorCode::TooLarge, "posets are limited to " + std::to_string(kMaxElements) + " elements");
  }
  std::vector<Mask> rows(names.size(), 0);
  auto lookup = [&](const std::string& label) {
    auto it = index.find(label);
    if (it == index.end()) throw Error(ErrorCode::UnknownLabel, "unknown label '" + label + "'");
    return it->second;
  };
  for (const auto& [lo, hi] : pairs) rows[lookup(lo)] |= bit(lookup(hi));
  return Poset::from_relation(std::move(names), std::move(rows));
}

namespace {

std::vector<std::uint64_t> chain_counts(const Poset& p, bool upward) {
  const auto order = p.linear_extension();
  std::vector<std::uint64_t> count(p.size(), 0);
  auto visit = [&](Index i) {
    const Mask next = upward ? p.upper_covers(i) : p.lower_covers(i);
    if (next == 0) {
      count[i] = 1;
      return;
    }
    std::uint64_t total = 0;
    for_each_bit(next, [&](Index j) { total += count[j]; });
    count[i] = total;
  };
  if (upward) {
    for (auto it = order.rbegin(); it != order.rend(); ++it) visit(*it);
  } else {
    for (Index i : order) visit(i);
  }
  return count;
}

}  // namespace

std::vector<std::uint64_t> upward_chain_counts(const Poset& p) { return chain_counts(p, true); }
std::vector<std::uint64_t> downward_chain_counts(const Poset& p) { return chain_counts(p, false); }

PosetStats stats(const Poset& p) {
  PosetStats s;
  s.d = p.size();
  s.m_min = popcount(p.minimal_elements());
  s.m_max = popcount(p.maximal_elements());
  s.hasse_edges = p.covers().size();
  const auto up = upward_chain_counts(p);
  for_each_bit(p.minimal_elements(), [&](Index i) { s.max_chain_count += up[i]; });
  return s;
}

std::vector<std::vector<Index>> maximal_chains(const Poset& p) {
  std::vector<std::vector<Index>> out;
  std::vector<Index> path;
  auto extend = [&](auto&& self, Index i) -> void {
    path.push_back(i);
    const Mask next = p.upper_covers(i);
    if (next == 0) {
      out.push_back(path);
    } else {
      for_each_bit(next, [&](Index j) { self(self, j); });
    }
    path.pop_back();
  };
  for_each_bit(p.minimal_elements(), [&](Index i) { extend(extend, i); });
  return out;
}

namespace {

// Walks a linear extension, branching include/exclude on every element that
// `admissible` allows given the current set. Every leaf is a distinct set.
template <typename Admissible>
std::vector<Mask> enumerate_closed(const Poset& p, std::size_t limit, Admissible admissible) {
  const auto order = p.linear_extension();
  std::vector<Mask> out;
  auto walk = [&](auto&& self, std::size_t k, Mask current) -> void {
    if (k == order.size()) {
      if (out.size() >= limit) throw Error(ErrorCode::TooLarge, "subset enumeration exceeds limit");
      out.push_back(current);
      return;
    }
    const Index e = order[k];
    self(self, k + 1, current);
    if (admissible(e, current)) self(self, k + 1, current | bit(e));
  };
  walk(walk, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Mask> ideals(const Poset& p, std::size_t limit) {
  return enumerate_closed(p, limit, [&](Index e, Mask current) {
    return (p.down_set(e) & ~current) == 0;
  });
}

std::vector<Mask> antichains(const Poset& p, std::size_t limit) {
  return enumerate_closed(p, limit, [&](Index e, Mask current) {
    return (p.comparable_set(e) & current) == 0;
  });
}

Integer linear_extension_count(const Poset& p) {
  const auto ids = ideals(p);
  std::vector<Integer> ways(ids.size());
  // Sorted by value, so I \ {x} always precedes I.
  for (std::size_t k = 0; k < ids.size(); ++k) {
    const Mask ideal = ids[k];
    if (ideal == 0) {
      ways[k] = 1;
      continue;
    }
    Integer total = 0;
    for_each_bit(ideal, [&](Index x) {
      if ((p.up_set(x) & ideal) != 0) return;
      const Mask smaller = ideal & ~bit(x);
      auto it = std::lower_bound(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(k), smaller);
      total += ways[static_cast<std::size_t>(it - ids.begin())];
    });
    ways[k] = std::move(total);
  }
  return ways.back();
}

std::string_view class_name(const ElementClass& c) {
  switch (c.index()) {
    case 0: return "MinimalNotMaximal";
    case 1: return "Maximal";
    case 2: return "DownUnique";
    default: return "UpUnique";
  }
}

namespace {

// Follows the single cover in the given direction until an extremal element;
// nullopt if some step branches.
std::optional<std::vector<Index>> unique_saturated_chain(const Poset& p, Index i, bool upward) {
  std::vector<Index> chain{i};
  Index cur = i;
  for (;;) {
    const Mask next = upward ? p.upper_covers(cur) : p.lower_covers(cur);
    if (next == 0) return chain;
    if (popcount(next) != 1) return std::nullopt;
    cur = static_cast<Index>(std::countr_zero(next));
    chain.push_back(cur);
  }
}

}  // namespace

std::optional<ElementClass> try_classify_element(const Poset& p, Index i) {
  if (p.is_minimal(i) && !p.is_maximal(i)) return MinimalNotMaximal{};
  if (p.is_maximal(i)) return Maximal{};
  if (auto down = unique_saturated_chain(p, i, false)) return DownUnique{std::move(*down)};
  if (auto up = unique_saturated_chain(p, i, true)) return UpUnique{std::move(*up)};
  return std::nullopt;
}

ElementClass classify_element(const Poset& p, Index i) {
  if (auto c = try_classify_element(p, i)) return std::move(*c);
  throw Error(ErrorCode::NotClassifiable,
              "element '" + p.name(i) + "' has several saturated chains both downward and upward");
}

namespace {

std::optional<std::pair<Index, Index>> least_incomparable_pair(const Poset& p, Mask within) {
  std::optional<std::pair<Index, Index>> found;
  for_each_bit(within, [&](Index a) {
    if (found) return;
    const Mask partners = within & ~p.comparable_set(a) & ~full_mask(a + 1);
    if (partners != 0) found = std::pair{a, static_cast<Index>(std::countr_zero(partners))};
  });
  return found;
}

}  // namespace

std::optional<XWitness> contains_forbidden_x(const Poset& p) {
  for (Index z = 0; z < p.size(); ++z) {
    auto below = least_incomparable_pair(p, p.down_set(z));
    if (!below) continue;
    auto above = least_incomparable_pair(p, p.up_set(z));
    if (!above) continue;
    return XWitness{z, *below, *above};
  }
  return std::nullopt;
}

bool is_valid_witness(const Poset& p, const XWitness& w) {
  const std::size_t n = p.size();
  for (Index i : {w.center, w.below.first, w.below.second, w.above.first, w.above.second}) {
    if (i >= n) return false;
  }
  return p.less(w.below.first, w.center) && p.less(w.below.second, w.center) &&
         p.less(w.center, w.above.first) && p.less(w.center, w.above.second) &&
         !p.comparable(w.below.first, w.below.second) && w.below.first != w.below.second &&
         !p.comparable(w.above.first, w.above.second) && w.above.first != w.above.second;
}

bool DeletionStats::identities_hold() const {
  std::uint64_t sum = 0;
  for (auto c : chain_counts) sum += c;
  return chain_counts.size() == s && after.d + 1 == before.d &&
         after.m_min + 1 == before.m_min + t && after.m_max == before.m_max &&
         after.hasse_edges + s + t == before.hasse_edges &&
         after.max_chain_count + sum == before.max_chain_count &&
         after.max_chain_count + s <= before.max_chain_count;
}

DeletionStats deletion_stats(const Poset& p, Index alpha) {
  if (!(p.is_minimal(alpha) && !p.is_maximal(alpha))) {
    throw Error(ErrorCode::NotMinimalNonMaximal,
                "element '" + p.name(alpha) + "' is not minimal-and-not-maximal");
  }
  DeletionStats out;
  out.removed = alpha;
  const auto up = upward_chain_counts(p);
  for_each_bit(p.upper_covers(alpha), [&](Index beta) {
    if (popcount(p.lower_covers(beta)) >= 2) {
      out.branching_covers.push_back(beta);
      out.chain_counts.push_back(up[beta]);
    } else {
      out.lone_covers.push_back(beta);
    }
  });
  out.s = out.branching_covers.size();
  out.t = out.lone_covers.size();
  out.before = stats(p);
  out.after = stats(p.without(alpha));
  return out;
}

}  // namespace posetope
