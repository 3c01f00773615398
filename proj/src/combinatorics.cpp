#include "rbx/combinatorics.hpp"

#include <algorithm>
#include <numeric>

namespace rbx {

std::vector<Perm> permutations(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 1u);
  std::vector<Perm> out;
  do
    out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<std::vector<unsigned>> cycles(const Perm& sigma) {
  std::vector<bool> seen(sigma.size() + 1, false);
  std::vector<std::vector<unsigned>> out;
  for (unsigned start = 1; start <= sigma.size(); ++start) {
    if (seen[start])
      continue;
    std::vector<unsigned> cycle;
    for (unsigned j = start; !seen[j]; j = sigma[j - 1]) {
      seen[j] = true;
      cycle.push_back(j);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<std::vector<std::vector<unsigned>>> set_partitions(std::size_t n) {
  std::vector<std::vector<std::vector<unsigned>>> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // restricted growth string a: a[0] = 0, a[i] <= 1 + max(a[0..i-1])
  std::vector<std::size_t> a(n, 0);
  for (;;) {
    std::size_t blocks = *std::max_element(a.begin(), a.end()) + 1;
    std::vector<std::vector<unsigned>> part(blocks);
    for (std::size_t i = 0; i < n; ++i)
      part[a[i]].push_back(static_cast<unsigned>(i + 1));
    out.push_back(std::move(part));

    std::size_t i = n - 1;
    for (; i > 0; --i) {
      std::size_t prefix_max = *std::max_element(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(i));
      if (a[i] <= prefix_max) {
        ++a[i];
        std::fill(a.begin() + static_cast<std::ptrdiff_t>(i) + 1, a.end(), 0);
        break;
      }
    }
    if (i == 0)
      break;
  }
  return out;
}

namespace {

void compose(std::size_t remaining, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t part = 1; part <= remaining; ++part) {
    cur.push_back(part);
    compose(remaining - part, cur, out);
    cur.pop_back();
  }
}

} // namespace

std::vector<std::vector<std::size_t>> compositions(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  compose(n, cur, out);
  return out;
}

std::size_t left_to_right_maxima(const Perm& sigma) {
  std::size_t count = 0;
  unsigned best = 0;
  for (unsigned v : sigma)
    if (v > best) {
      best = v;
      ++count;
    }
  return count;
}

} // namespace rbx
