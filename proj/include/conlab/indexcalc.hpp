// indexcalc.hpp -- exact half-integer calculator for moduli dimension counts.
//
// Gradings of conormal generators are half-integers, and the dimension
// formulas for half strips, whole strips, and the pair of pants are affine in
// them.  Everything here is exact: values are stored as twice their value in
// a long long, so the gluing identity can be checked with zero tolerance.

#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace conlab {

/// Exact multiple of 1/2.
class Half {
 public:
  constexpr Half() = default;
  constexpr Half(long long whole) : twice_(2 * whole) {}  // implicit on purpose

  /// The value t/2.
  static constexpr Half from_twice(long long t) {
    Half h;
    h.twice_ = t;
    return h;
  }

  constexpr long long twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr double to_double() const { return double(twice_) / 2.0; }

  constexpr Half operator+(Half o) const { return from_twice(twice_ + o.twice_); }
  constexpr Half operator-(Half o) const { return from_twice(twice_ - o.twice_); }
  constexpr Half operator-() const { return from_twice(-twice_); }
  constexpr Half operator*(long long k) const { return from_twice(twice_ * k); }
  constexpr bool operator==(Half o) const { return twice_ == o.twice_; }
  constexpr bool operator!=(Half o) const { return twice_ != o.twice_; }
  constexpr bool operator<(Half o) const { return twice_ < o.twice_; }
  constexpr bool operator<=(Half o) const { return twice_ <= o.twice_; }

  std::string str() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

 private:
  long long twice_ = 0;
};

/// n/2 as an exact value.
constexpr Half half_of(long long n) { return Half::from_twice(n); }

/// Grading datum of one generator inside ambient dimensions (dim_M, dim_N).
struct IndexData {
  Half mu;
  int dim_M = 1;
  int dim_N = 0;

  IndexData(Half mu, int dim_M, int dim_N)
      : mu(mu), dim_M(dim_M), dim_N(dim_N) {
    if (dim_M < 1) throw std::invalid_argument("IndexData: dim_M >= 1");
    if (dim_N < 0 || dim_N > dim_M)
      throw std::invalid_argument("IndexData: need 0 <= dim_N <= dim_M");
  }
};

/// Expected dimension of the pair-of-pants moduli space with incoming
/// generators mu1, mu2 and outgoing generator mu_out.
constexpr Half dim_pants(Half mu1, Half mu2, Half mu_out, int dim_M,
                         int dim_N) {
  return mu1 + mu2 - mu_out + half_of(dim_N) - Half(dim_M);
}

enum class StripSide { Incoming, Outgoing };

/// Expected dimension of a half strip ending (incoming) or starting
/// (outgoing) at a generator of grading mu.
constexpr Half dim_half_strip(Half mu, int dim_N, StripSide side) {
  return side == StripSide::Incoming ? half_of(dim_N) - mu
                                     : half_of(dim_N) + mu;
}

/// Expected dimension of the whole strip from x to y (before the R-action
/// quotient).
constexpr Half dim_whole_strip(Half mu_x, Half mu_y, int dim_M, int dim_N) {
  return mu_x - mu_y - Half(dim_M) + Half(dim_N);
}

/// Gluing identity: a broken pants configuration capped with half strips has
/// the same expected dimension as the corresponding broken strip.  This is an
/// algebraic identity (both sides reduce to 2 dim_N - dim_M), so the check
/// must succeed for every input; it exists to pin the sign conventions.
constexpr bool verify_gluing(Half mu1, Half mu2, Half mu_out, Half mu_x,
                             Half mu_y, int dim_M, int dim_N) {
  const Half lhs = dim_half_strip(mu1, dim_N, StripSide::Incoming) +
                   dim_half_strip(mu2, dim_N, StripSide::Incoming) +
                   dim_pants(mu1, mu2, mu_out, dim_M, dim_N) +
                   dim_half_strip(mu_out, dim_N, StripSide::Outgoing);
  const Half rhs = dim_half_strip(mu_x, dim_N, StripSide::Incoming) +
                   dim_whole_strip(mu_x, mu_y, dim_M, dim_N) +
                   dim_half_strip(mu_y, dim_N, StripSide::Outgoing);
  return lhs == rhs;
}

/// Grading degree of the product: HF_r x HF_s lands in HF_{r+s-dim_M}.
constexpr int product_degree(int r, int s, int dim_M) { return r + s - dim_M; }

}  // namespace conlab
