#include "permpoly/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "permpoly/config.hpp"

namespace permpoly {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  if (values_.empty()) {
    throw InvalidInputError("permutation must have size >= 1");
  }
  const int n = size();
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : values_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw InvalidInputError("values are not a bijection of {1..n}");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::decreasing(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.rbegin(), v.rend(), 1);
  return Permutation(std::move(v));
}

namespace {

template <typename T>
Permutation pattern_of_impl(std::span<const T> window) {
  if (window.empty()) {
    throw InvalidInputError("pattern_of needs a non-empty window");
  }
  const std::size_t n = window.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return window[a] < window[b]; });
  for (std::size_t i = 1; i < n; ++i) {
    if (!(window[order[i - 1]] < window[order[i]])) {
      throw InvalidInputError("pattern_of requires pairwise distinct entries");
    }
  }
  std::vector<int> ranks(n);
  for (std::size_t r = 0; r < n; ++r) {
    ranks[order[r]] = static_cast<int>(r) + 1;
  }
  return Permutation(std::move(ranks));
}

}  // namespace

Permutation pattern_of(std::span<const int> window) { return pattern_of_impl(window); }
Permutation pattern_of(std::span<const Rational> window) { return pattern_of_impl(window); }

Permutation direct_sum(std::span<const Permutation> parts) {
  if (parts.empty()) {
    throw InvalidInputError("direct_sum needs at least one part");
  }
  std::vector<int> out;
  std::size_t total = 0;
  for (const auto& p : parts) total += static_cast<std::size_t>(p.size());
  out.reserve(total);
  int shift = 0;
  for (const auto& p : parts) {
    for (int v : p.values()) out.push_back(v + shift);
    shift += p.size();
  }
  return Permutation(std::move(out));
}

Permutation direct_sum(const Permutation& a, const Permutation& b) {
  const Permutation parts[] = {a, b};
  return direct_sum(std::span<const Permutation>(parts, 2));
}

Permutation inflate(const Permutation& sigma, std::span<const Permutation> parts) {
  const int n = sigma.size();
  if (static_cast<int>(parts.size()) != n) {
    throw InvalidInputError("inflate needs exactly |sigma| parts");
  }
  // Value interval of block i starts after all blocks with smaller
  // sigma-rank.
  std::vector<int> base(static_cast<std::size_t>(n));
  std::vector<int> by_rank(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) by_rank[static_cast<std::size_t>(sigma.at(i + 1)) - 1] = i;
  int next = 0;
  for (int r = 0; r < n; ++r) {
    const int block = by_rank[static_cast<std::size_t>(r)];
    base[static_cast<std::size_t>(block)] = next;
    next += parts[static_cast<std::size_t>(block)].size();
  }
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(next));
  for (int i = 0; i < n; ++i) {
    for (int v : parts[static_cast<std::size_t>(i)].values()) {
      out.push_back(v + base[static_cast<std::size_t>(i)]);
    }
  }
  return Permutation(std::move(out));
}

std::vector<Permutation> all_patterns(int k) {
  if (k < 1) throw InvalidInputError("pattern order must be >= 1");
  if (k > 10) throw ResourceBudgetError("S_k enumeration is capped at k <= 10");
  std::vector<int> v(static_cast<std::size_t>(k));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::size_t pattern_rank(const Permutation& p) {
  const int k = p.size();
  std::size_t rank = 0;
  std::size_t fact = 1;
  for (int i = 2; i <= k; ++i) fact *= static_cast<std::size_t>(i);
  for (int i = 1; i <= k; ++i) {
    fact /= static_cast<std::size_t>(k - i + 1);
    int smaller_after = 0;
    for (int j = i + 1; j <= k; ++j) {
      if (p.at(j) < p.at(i)) ++smaller_after;
    }
    rank += static_cast<std::size_t>(smaller_after) * fact;
  }
  return rank;
}

Permutation pattern_unrank(int k, std::size_t rank) {
  std::vector<int> pool(static_cast<std::size_t>(k));
  std::iota(pool.begin(), pool.end(), 1);
  std::size_t fact = 1;
  for (int i = 2; i <= k; ++i) fact *= static_cast<std::size_t>(i);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(k));
  for (int i = k; i >= 1; --i) {
    fact /= static_cast<std::size_t>(i);
    const std::size_t idx = rank / fact;
    rank %= fact;
    out.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return Permutation(std::move(out));
}

std::string format_permutation(const Permutation& p) {
  std::string out;
  if (p.size() <= 9) {
    for (int v : p.values()) out += static_cast<char>('0' + v);
  } else {
    for (int i = 0; i < p.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(p.values()[static_cast<std::size_t>(i)]);
    }
  }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  if (text.empty()) throw InvalidInputError("empty permutation text");
  std::vector<int> values;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '1' || c > '9') {
        throw InvalidInputError("contiguous-digit form allows digits 1..9 only");
      }
      values.push_back(c - '0');
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t comma = std::min(text.find(',', pos), text.size());
      const std::string_view tok = text.substr(pos, comma - pos);
      int v = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw InvalidInputError("bad integer in permutation text");
      }
      values.push_back(v);
      pos = comma + 1;
      if (comma == text.size()) break;
    }
  }
  return Permutation(std::move(values));  // bijection check happens here
}

}  // namespace permpoly
