#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace fairfan {

// All geometric predicates and mass accounting run on exact rationals.
// Floats appear only in SVG output and angle/radius annotations.
using Rat = mpq_class;
using Int = mpz_class;
using Vec = std::vector<Rat>;

struct ParamError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ScopeLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct GuaranteeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline int sign(const Rat& x) { return sgn(x); }

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Canonical form "p/q" with q >= 1, reduced. Bare integers parse as "p/1".
std::string rat_to_string(const Rat& x);
Rat rat_from_string(const std::string& s);

// Smallest integer >= x, resp. largest integer <= x.
Int rat_ceil(const Rat& x);
Int rat_floor(const Rat& x);
bool is_integer(const Rat& x);

Rat dot(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const Rat& s);
Rat norm2(const Vec& a);
bool is_zero(const Vec& a);

struct Vec2q {
  Rat x, y;
};

inline Rat cross(const Vec2q& a, const Vec2q& b) { return a.x * b.y - a.y * b.x; }
inline Rat dot2(const Vec2q& a, const Vec2q& b) { return a.x * b.x + a.y * b.y; }
inline Vec2q perp(const Vec2q& a) { return Vec2q{-a.y, a.x}; }
inline Vec2q sub2(const Vec2q& a, const Vec2q& b) { return Vec2q{a.x - b.x, a.y - b.y}; }
inline bool is_zero2(const Vec2q& a) { return sgn(a.x) == 0 && sgn(a.y) == 0; }

// Largest rational of the form k/2^30 whose square is <= x; x must be >= 0.
// Used to pick exact bump radii below an irrational distance bound.
Rat rational_sqrt_lower(const Rat& x);

}  // namespace fairfan
