#include "partlat/bigint.hpp"

#include <stdexcept>
#include <string>

namespace partlat {

std::string sci(const BigCount& x, int digits) {
  if (digits < 1) throw std::invalid_argument("sci needs at least one digit");
  if (x == 0) return "0";
  std::string s = BigCount(x < 0 ? -x : x).str();
  int exp = static_cast<int>(s.size()) - 1;
  std::string head = s.substr(0, digits);
  while (static_cast<int>(head.size()) < digits) head += '0';
  if (s.size() > static_cast<std::size_t>(digits) && s[digits] >= '5') {
    // Round half up, carrying through trailing nines.
    int i = digits - 1;
    while (i >= 0 && head[i] == '9') head[i--] = '0';
    if (i >= 0) {
      ++head[i];
    } else {
      head.insert(head.begin(), '1');
      head.pop_back();
      ++exp;
    }
  }
  std::string out = x < 0 ? "-" : "";
  out += head[0];
  if (digits > 1) {
    out += '.';
    out += head.substr(1);
  }
  out += 'e';
  out += std::to_string(exp);
  return out;
}

}  // namespace partlat
