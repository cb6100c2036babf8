#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace avgbi {

// Exact rational scalar. boost::multiprecision keeps the canonical form
// (reduced, positive denominator), so operator== is structural equality.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

using Vec = std::vector<Rat>;

// Dense storage everywhere; order-3 tensors are O(n^3).
inline constexpr int kMaxDim = 32;

// Accepts "p/q" or a bare integer, with optional sign. q must be nonzero.
std::optional<Rat> parse_rational(const std::string& text);

// Inverse of parse_rational: "p/q" when q != 1, else "p".
std::string rational_str(const Rat& value);

inline Rat half() { return Rat(1, 2); }

bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scaled(const Vec& a, const Rat& c);
Vec zero_vec(int n);
Vec basis_vec(int n, int i);

}  // namespace avgbi
