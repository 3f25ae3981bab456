#pragma once

#include "nhol/fp.hpp"
#include "oracles.hpp"

inline oracle::Mat to_mat(const nhol::FpMatrix& m) {
  oracle::Mat out(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

inline nhol::FpMatrix from_mat(const oracle::Mat& m, nhol::Prime p) {
  nhol::FpMatrix out(m.size(), m.empty() ? 0 : m[0].size(), p);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) out.set(i, j, m[i][j]);
  return out;
}
