#include "partlat/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace partlat {

namespace {

// Row n of the Stirling triangle: row[r] = S(n,r), 0 <= r <= n.
std::vector<BigCount> stirling_row(int n) {
  if (n < 0) throw std::invalid_argument("stirling_row: negative n");
  std::vector<BigCount> row{1};  // S(0,0) = 1
  for (int i = 1; i <= n; ++i) {
    row.push_back(0);
    for (int r = i; r >= 1; --r) row[r] = r * row[r] + row[r - 1];
    row[0] = 0;
  }
  return row;
}

}  // namespace

BigCount stirling2(int n, int r) {
  if (n < 0 || r < 0 || r > n) return 0;
  return stirling_row(n)[r];
}

BigCount bell(int n) {
  auto row = stirling_row(n);
  BigCount sum = 0;
  for (const auto& v : row) sum += v;
  return sum;
}

MaxStirling max_stirling(int n) {
  if (n < 1) throw std::invalid_argument("max_stirling needs n >= 1");
  auto row = stirling_row(n);
  MaxStirling out;
  out.value = 0;
  for (int r = 1; r <= n; ++r) {
    if (row[r] > out.value) {
      out.value = row[r];
      out.argmax_rs = {r};
    } else if (row[r] == out.value) {
      out.argmax_rs.push_back(r);
    }
  }
  return out;
}

BigCount m_of_n(int n) {
  if (n < 5) throw std::invalid_argument("m_of_n needs n >= 5");
  int k = (n - 1) / 2;
  return max_stirling(k).value * max_stirling(k - 1).value;
}

BigCount mhat_of_n(int n) {
  if (n < 7) throw std::invalid_argument("mhat_of_n needs n >= 7");
  int k = (n - 1) / 2;
  int r = (k - 1) / 2;
  BigCount square = max_stirling(r).value;
  square *= square;
  return square > r ? square : BigCount(r);
}

BigCount bell_product_bound(int n) {
  if (n < 4) throw std::invalid_argument("bell_product_bound needs n >= 4");
  return bell(n) * bell(n - 1) * bell(n - 2) * bell(n - 3);
}

std::string render_tables(int max_n, TableFormat format,
                          int sci_threshold_digits) {
  if (max_n < 1) throw std::invalid_argument("render_tables needs max_n >= 1");
  auto cell = [&](const BigCount& v) {
    std::string exact = v.str();
    return static_cast<int>(exact.size()) > sci_threshold_digits ? sci(v)
                                                                 : exact;
  };
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"n", "maxS(n)", "m(n)", "mhat(n)"});
  for (int n = 1; n <= max_n; ++n) {
    rows.push_back({std::to_string(n), cell(max_stirling(n).value),
                    n >= 5 ? cell(m_of_n(n)) : "-",
                    n >= 7 ? cell(mhat_of_n(n)) : "-"});
  }

  std::string out;
  if (format == TableFormat::Csv) {
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) out += ',';
        out += row[c];
      }
      out += '\n';
    }
    return out;
  }
  std::vector<std::size_t> width(rows[0].size(), 0);
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c)
      width[c] = std::max(width[c], row[c].size());
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += "  ";
      out += std::string(width[c] - row[c].size(), ' ');
      out += row[c];
    }
    out += '\n';
  }
  return out;
}

}  // namespace partlat
