#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "pif/errors.hpp"

namespace pif {

using Integer = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<Integer>>;

struct SmithResult {
  std::vector<Integer> invariant_factors;  // nonzero diagonal, divisibility chain
  int rank = 0;
};

// Smith normal form over Z by repeated pivoting on the least nonzero entry.
// Matrices here are tiny, so no effort is spent on entry growth beyond exact
// arithmetic.
inline SmithResult smith_normal_form(IntMatrix m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  SmithResult res;

  auto abs_of = [](const Integer& x) { return x < 0 ? Integer(-x) : x; };

  int t = 0;
  while (t < rows && t < cols) {
    // least-magnitude nonzero pivot in the remaining submatrix
    int pi = -1, pj = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (m[i][j] != 0 && (pi == -1 || abs_of(m[i][j]) < abs_of(m[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi == -1) break;
    std::swap(m[t], m[pi]);
    for (int i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pj]);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        Integer q = m[i][t] / m[t][t];
        for (int j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) {  // remainder smaller than pivot; promote it
          std::swap(m[t], m[i]);
          dirty = true;
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        Integer q = m[t][j] / m[t][t];
        for (int i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) {
          for (int i = 0; i < rows; ++i) std::swap(m[i][t], m[i][j]);
          dirty = true;
        }
      }
      if (!dirty) {
        // pivot must divide the rest of the submatrix
        for (int i = t + 1; i < rows && !dirty; ++i)
          for (int j = t + 1; j < cols && !dirty; ++j)
            if (m[i][j] % m[t][t] != 0) {
              for (int jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
              dirty = true;
            }
      }
    }
    res.invariant_factors.push_back(abs_of(m[t][t]));
    ++t;
  }

  res.rank = static_cast<int>(res.invariant_factors.size());
  // safety pass: enforce the divisibility chain
  auto& d = res.invariant_factors;
  for (bool changed = true; changed;) {
    changed = false;
    for (size_t i = 0; i + 1 < d.size(); ++i) {
      if (d[i + 1] % d[i] != 0) {
        Integer g = boost::multiprecision::gcd(d[i], d[i + 1]);
        Integer l = d[i] / g * d[i + 1];
        d[i] = g;
        d[i + 1] = l;
        changed = true;
      }
    }
  }
  return res;
}

}  // namespace pif
