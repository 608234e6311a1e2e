// Independent rank computation by fraction-free (Bareiss) elimination over
// arbitrary-precision integers. Shares no code with the library's
// rational-arithmetic elimination; used to cross-validate nullspace
// dimensions.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace fx {

using BigInt = boost::multiprecision::cpp_int;

/// Rank of an integer matrix given as rows (all the same length).
inline int bareiss_rank(std::vector<std::vector<BigInt>> m) {
  if (m.empty() || m[0].empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());

  int rank = 0;
  BigInt prev = 1;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);

    for (int r = rank + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c) {
        BigInt num = m[r][c] * m[rank][col] - m[r][col] * m[rank][c];
        m[r][c] = num / prev;  // exact by the Bareiss identity
      }
      m[r][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

}  // namespace fx
