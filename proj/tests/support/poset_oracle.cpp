#include "poset_oracle.hpp"

#include <algorithm>

namespace lambday::testing {

OraclePoset oracle_poset(const Type& type) {
  OraclePoset out;
  if (type.is_ground()) {
    out.size = 2;
    out.leq = {{true, true}, {false, true}};
    return out;
  }
  const OraclePoset a = oracle_poset(type.domain());
  const OraclePoset b = oracle_poset(type.codomain());
  std::vector<std::size_t> f(a.size, 0);
  while (true) {
    bool monotone = true;
    for (std::size_t i = 0; i < a.size && monotone; ++i) {
      for (std::size_t j = 0; j < a.size && monotone; ++j) {
        if (a.leq[i][j] && !b.leq[f[i]][f[j]]) monotone = false;
      }
    }
    if (monotone) out.maps.push_back(f);
    // odometer over all |b|^|a| maps
    std::size_t k = 0;
    while (k < a.size && ++f[k] == b.size) f[k++] = 0;
    if (k == a.size) break;
  }
  out.size = out.maps.size();
  out.leq.assign(out.size, std::vector<bool>(out.size, false));
  for (std::size_t i = 0; i < out.size; ++i) {
    for (std::size_t j = 0; j < out.size; ++j) {
      bool le = true;
      for (std::size_t x = 0; x < a.size; ++x) {
        le = le && b.leq[out.maps[i][x]][out.maps[j][x]];
      }
      out.leq[i][j] = le;
    }
  }
  return out;
}

namespace {
std::size_t longest_from(const OraclePoset& p, std::size_t i) {
  std::size_t best = 0;
  for (std::size_t j = 0; j < p.size; ++j) {
    if (j != i && p.leq[i][j]) best = std::max(best, 1 + longest_from(p, j));
  }
  return best;
}
}  // namespace

std::size_t oracle_height(const OraclePoset& poset) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < poset.size; ++i) best = std::max(best, longest_from(poset, i));
  return best;
}

std::size_t oracle_comparable_pairs(const OraclePoset& poset) {
  std::size_t n = 0;
  for (const auto& row : poset.leq) n += std::count(row.begin(), row.end(), true);
  return n;
}

}  // namespace lambday::testing
