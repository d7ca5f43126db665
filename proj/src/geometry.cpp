#include "currents/geometry.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace currents {

namespace {

std::vector<IndexMask> build_combinations(int m, int p) {
  std::vector<IndexMask> out;
  if (p < 0 || p > m) return out;
  std::vector<int> idx(p);
  for (int i = 0; i < p; ++i) idx[i] = i;
  while (true) {
    IndexMask mask = 0;
    for (int i : idx) mask |= IndexMask{1} << i;
    out.push_back(mask);
    int i = p - 1;
    while (i >= 0 && idx[i] == m - p + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < p; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

struct ComboTable {
  std::vector<IndexMask> combos;
  std::vector<int> position;  // indexed by mask, -1 when absent
};

const ComboTable& table_for(int m, int p) {
  static std::map<std::pair<int, int>, ComboTable> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(m, p);
  auto it = cache.find(key);
  if (it == cache.end()) {
    ComboTable t;
    t.combos = build_combinations(m, p);
    t.position.assign(std::size_t{1} << m, -1);
    for (int i = 0; i < static_cast<int>(t.combos.size()); ++i)
      t.position[t.combos[i]] = i;
    it = cache.emplace(key, std::move(t)).first;
  }
  return it->second;
}

}  // namespace

const std::vector<IndexMask>& combinations(int m, int p) {
  return table_for(m, p).combos;
}

int combination_position(int m, int p, IndexMask mask) {
  const auto& t = table_for(m, p);
  if (mask >= t.position.size()) return -1;
  return t.position[mask];
}

int tuple_sign(const std::vector<int>& tuple, IndexMask* mask_out) {
  IndexMask mask = 0;
  for (int i : tuple) {
    IndexMask bit = IndexMask{1} << i;
    if (mask & bit) {
      if (mask_out) *mask_out = 0;
      return 0;
    }
    mask |= bit;
  }
  // parity of the permutation sorting the tuple
  int inv = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i)
    for (std::size_t j = i + 1; j < tuple.size(); ++j)
      if (tuple[i] > tuple[j]) ++inv;
  if (mask_out) *mask_out = mask;
  return (inv % 2 == 0) ? 1 : -1;
}

double det_small(const double* m, int k) {
  switch (k) {
    case 0:
      return 1.0;
    case 1:
      return m[0];
    case 2:
      return m[0] * m[3] - m[1] * m[2];
    case 3:
      return m[0] * (m[4] * m[8] - m[5] * m[7]) -
             m[1] * (m[3] * m[8] - m[5] * m[6]) +
             m[2] * (m[3] * m[7] - m[4] * m[6]);
    default: {
      // partial-pivot LU for the rare larger cases
      double a[kMaxDim * kMaxDim];
      std::copy(m, m + k * k, a);
      double det = 1.0;
      for (int col = 0; col < k; ++col) {
        int piv = col;
        for (int r = col + 1; r < k; ++r)
          if (std::abs(a[r * k + col]) > std::abs(a[piv * k + col])) piv = r;
        if (a[piv * k + col] == 0.0) return 0.0;
        if (piv != col) {
          for (int c = 0; c < k; ++c) std::swap(a[piv * k + c], a[col * k + c]);
          det = -det;
        }
        det *= a[col * k + col];
        for (int r = col + 1; r < k; ++r) {
          double f = a[r * k + col] / a[col * k + col];
          for (int c = col; c < k; ++c) a[r * k + c] -= f * a[col * k + c];
        }
      }
      return det;
    }
  }
}

std::string to_string(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ")";
  return os.str();
}

}  // namespace currents
