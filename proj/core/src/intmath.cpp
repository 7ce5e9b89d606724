#include "eip/intmath.hpp"

#include <algorithm>
#include <cctype>

namespace eip {

std::string card_to_string(Card v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                            : static_cast<unsigned __int128>(v);
  std::string s;
  while (u) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

Card card_from_string(const std::string& s) {
  if (s.empty()) throw ValidationError("empty integer literal");
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw ValidationError("bad integer literal: " + s);
  Card v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw ValidationError("bad integer literal: " + s);
    int digit = s[i] - '0';
    if (v > (kCardMax - digit) / 10) throw ValidationError("integer literal out of range: " + s);
    v = v * 10 + digit;
  }
  return neg ? -v : v;
}

}  // namespace eip
