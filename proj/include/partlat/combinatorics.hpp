#ifndef PARTLAT_COMBINATORICS_HPP
#define PARTLAT_COMBINATORICS_HPP

#include <string>
#include <vector>

#include "partlat/bigint.hpp"

namespace partlat {

/// Stirling number of the second kind S(n,r), exact. S(0,0)=1 and
/// S(n,r)=0 outside 1<=r<=n.
BigCount stirling2(int n, int r);

/// Bell number B(n) = sum_r S(n,r).
BigCount bell(int n);

struct MaxStirling {
  BigCount value;
  std::vector<int> argmax_rs;  // all r attaining the maximum, ascending
};

/// Largest S(n,r) over r, with every attaining r (ties happen, e.g. n=2).
MaxStirling max_stirling(int n);

/// Largest exponent certified four-generated: with k = floor((n-1)/2),
/// maxS(k) * maxS(k-1). Requires n >= 5.
BigCount m_of_n(int n);

/// Largest exponent certified (1+1+2)-generated: with k = floor((n-1)/2)
/// and r = floor((k-1)/2), max(r, maxS(r)^2). Requires n >= 7.
BigCount mhat_of_n(int n);

/// B(n)*B(n-1)*B(n-2)*B(n-3); direct powers with exponent above this are
/// certified not four-generated. Requires n >= 4.
BigCount bell_product_bound(int n);

enum class TableFormat { Text, Csv };

/// Rows n, maxS(n), m(n), mhat(n) for 1 <= n <= max_n. Entries with more
/// than `sci_threshold_digits` digits are printed in 3-significant-digit
/// scientific notation, matching how large values are usually reported.
std::string render_tables(int max_n, TableFormat format = TableFormat::Text,
                          int sci_threshold_digits = 15);

}  // namespace partlat

#endif
