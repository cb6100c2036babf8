#include "avgbi/rational.hpp"

#include <algorithm>
#include <cctype>

namespace avgbi {

std::optional<Rat> parse_rational(const std::string& text) {
  auto valid_int = [](const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + i, s.end(),
                       [](unsigned char c) { return std::isdigit(c); });
  };
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      if (!valid_int(text)) return std::nullopt;
      return Rat(Int(text));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den)) return std::nullopt;
    Int d(den);
    if (d == 0) return std::nullopt;
    return Rat(Int(num), d);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::string rational_str(const Rat& value) {
  std::string s = numerator(value).str();
  if (denominator(value) != 1) {
    s += "/" + denominator(value).str();
  }
  return s;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

Vec add(const Vec& a, const Vec& b) {
  Vec out(a);
  for (size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec out(a);
  for (size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

Vec scaled(const Vec& a, const Rat& c) {
  Vec out(a);
  for (auto& x : out) x *= c;
  return out;
}

Vec zero_vec(int n) { return Vec(static_cast<size_t>(n)); }

Vec basis_vec(int n, int i) {
  Vec v(static_cast<size_t>(n));
  v[static_cast<size_t>(i)] = 1;
  return v;
}

}  // namespace avgbi
