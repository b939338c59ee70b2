#include "posetope/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <istream>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include "posetope/error.hpp"

namespace posetope {

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& f) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> workers;
    const unsigned n = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
    for (unsigned w = 0; w < n; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            f(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = count;
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

namespace {

bool is_transitive(const std::vector<Mask>& rows) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    bool ok = true;
    for_each_bit(rows[i], [&](Index j) { ok = ok && (rows[j] & ~rows[i]) == 0; });
    if (!ok) return false;
  }
  return true;
}

struct Pair {
  Index from;
  Index to;
};

struct Collected {
  std::set<CanonicalForm> keys;
  std::uint64_t labeled = 0;
};

// Splits the candidate range [0, 2^pairs) into chunks and canonicalizes the
// strict orders found in each.
template <typename Accept, typename Canon>
PosetCensus collect(std::size_t n, const std::vector<Pair>& pairs, unsigned jobs, Accept accept, Canon canon) {
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  const std::uint64_t chunk = std::max<std::uint64_t>(1, total / 64);
  const std::size_t chunks = static_cast<std::size_t>((total + chunk - 1) / chunk);
  std::vector<Collected> parts(chunks);

  parallel_for(chunks, jobs, [&](std::size_t c) {
    auto& part = parts[c];
    const std::uint64_t lo = c * chunk;
    const std::uint64_t hi = std::min(total, lo + chunk);
    std::vector<Mask> rows(n);
    for (std::uint64_t subset = lo; subset < hi; ++subset) {
      std::fill(rows.begin(), rows.end(), Mask{0});
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        if ((subset >> k) & 1U) rows[pairs[k].from] |= bit(pairs[k].to);
      }
      if (!accept(rows)) continue;
      ++part.labeled;
      part.keys.insert(canon(Poset::from_relation(rows)));
    }
  });

  std::set<CanonicalForm> merged;
  PosetCensus census;
  census.n = n;
  for (auto& part : parts) {
    census.labeled_count += part.labeled;
    merged.merge(part.keys);
  }
  for (const auto& key : merged) census.classes.push_back({key, key.to_poset()});
  return census;
}

}  // namespace

PosetCensus enumerate_posets(std::size_t n, EnumerationBackend backend, unsigned jobs) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "census size must be positive");
  std::vector<Pair> pairs;
  if (backend == EnumerationBackend::UpperTriangular) {
    if (n > kMaxEnumerationSize) {
      throw Error(ErrorCode::TooLarge, "enumeration is limited to n <= " + std::to_string(kMaxEnumerationSize));
    }
    for (Index i = 0; i < n; ++i)
      for (Index j = i + 1; j < n; ++j) pairs.push_back({i, j});
    return collect(n, pairs, jobs, is_transitive, [](const Poset& p) { return canonical_form(p); });
  }

  if (n > kMaxFullRelationSize) {
    throw Error(ErrorCode::TooLarge,
                "full-relation enumeration is limited to n <= " + std::to_string(kMaxFullRelationSize));
  }
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (i != j) pairs.push_back({i, j});
  auto strict_order = [](const std::vector<Mask>& rows) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      bool ok = true;
      for_each_bit(rows[i], [&](Index j) { ok = ok && !has(rows[j], i); });
      if (!ok) return false;
    }
    return is_transitive(rows);
  };
  return collect(n, pairs, jobs, strict_order, [](const Poset& p) { return canonical_form_bruteforce(p); });
}

CensusSummary census_statistics(const PosetCensus& census) {
  CensusSummary summary;
  summary.n = census.n;
  for (const auto& c : census.classes) {
    CensusRow row{c.key.id(), stats(c.poset), !contains_forbidden_x(c.poset).has_value()};
    (row.x_free ? summary.x_free : summary.x_containing) += 1;
    summary.rows.push_back(std::move(row));
  }
  return summary;
}

void write_census(std::ostream& out, const PosetCensus& census) {
  out << "# posetope census v1 n=" << census.n << " classes=" << census.classes.size()
      << " labeled=" << census.labeled_count << "\n";
  for (const auto& c : census.classes) out << census.n << " " << c.key.hex() << "\n";
}

PosetCensus read_census(std::istream& in) {
  PosetCensus census;
  std::string line;
  std::size_t line_no = 0;
  bool have_n = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto pos = line.find(" labeled=");
      if (pos != std::string::npos) census.labeled_count = std::stoull(line.substr(pos + 9));
      continue;
    }
    std::istringstream fields(line);
    std::size_t n = 0;
    std::string hex;
    std::string extra;
    if (!(fields >> n >> hex) || (fields >> extra)) {
      throw ParseError(line_no, 1, "expected '<n> <hex>'");
    }
    if (have_n && n != census.n) throw ParseError(line_no, 1, "mixed sizes in one census");
    if (n == 0 || n > kMaxCanonicalSize) throw ParseError(line_no, 1, "unsupported size");
    census.n = n;
    have_n = true;
    CanonicalForm key;
    try {
      key = CanonicalForm::from_hex(n, hex);
    } catch (const Error& e) {
      throw ParseError(line_no, line.find(hex) + 1, e.what());
    }
    Poset p = [&] {
      try {
        return key.to_poset();
      } catch (const Error& e) {
        throw ParseError(line_no, line.find(hex) + 1, e.what());
      }
    }();
    if (canonical_form(p) != key) throw ParseError(line_no, line.find(hex) + 1, "relation matrix is not canonical");
    census.classes.push_back({std::move(key), std::move(p)});
  }
  std::sort(census.classes.begin(), census.classes.end(),
            [](const CensusClass& a, const CensusClass& b) { return a.key < b.key; });
  return census;
}

}  // namespace posetope
