#ifndef RBX_NCQSYM_HPP
#define RBX_NCQSYM_HPP

// Quasi-symmetric functions in noncommuting variables, M_f, and their
// truncations M_f^l (x_i -> 0 for i > l).

#include <cstddef>
#include <string_view>
#include <vector>

#include "rbx/ncpoly.hpp"

namespace rbx {

/// Surjection f: [n] -> [k] stored as its value list f(1), ..., f(n).
class Surjection {
public:
  /// Throws std::invalid_argument unless the image is exactly {1..k}.
  explicit Surjection(std::vector<unsigned> values);
  /// Parses "1,3,3,2".
  static Surjection parse(std::string_view text);

  /// The identity [n].
  static Surjection identity(std::size_t n);
  /// The reversal omega_n = (n, n-1, ..., 1).
  static Surjection reversal(std::size_t n);

  std::size_t size() const { return values_.size(); }    ///< n
  std::size_t image_size() const { return image_size_; } ///< k
  const std::vector<unsigned>& values() const { return values_; }

private:
  std::vector<unsigned> values_;
  std::size_t image_size_ = 0;
};

/// M_f^l: sum over k-subsets s_1 < ... < s_k of [l] of x_{s_f(1)} ... x_{s_f(n)}.
/// Zero when l < k.
NcPoly expand(const Surjection& f, unsigned l);

/// M^l_[n].
NcPoly elementary(std::size_t n, unsigned l);
/// M^l_{omega_n}.
NcPoly omega(std::size_t n, unsigned l);

/// Entry l+1 of (RX)^[n] equals M^l_[n] and entry l+1 of (RX)^{n} equals
/// M^l_{omega_n}, for every l with l+1 <= length.
bool check_bridge(std::size_t n, std::size_t length);

} // namespace rbx

#endif
