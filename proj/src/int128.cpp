#include "similitude/int128.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace similitude {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Overflow: return "Overflow";
    case Errc::NotPrime: return "NotPrime";
    case Errc::UnsupportedRing: return "UnsupportedRing";
    case Errc::ZeroElement: return "ZeroElement";
    case Errc::RingMismatch: return "RingMismatch";
    case Errc::UnsupportedOrder: return "UnsupportedOrder";
    case Errc::NotSubmodule: return "NotSubmodule";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::NonInvertible: return "NonInvertible";
    case Errc::BadNormalization: return "BadNormalization";
    case Errc::DomainError: return "DomainError";
    case Errc::CrossCheckFailure: return "CrossCheckFailure";
    case Errc::BoundExceeded: return "BoundExceeded";
    case Errc::NotASublattice: return "NotASublattice";
    case Errc::NonSquareIndex: return "NonSquareIndex";
    case Errc::NotRepresentable: return "NotRepresentable";
    case Errc::UnknownConstant: return "UnknownConstant";
    case Errc::DegenerateModel: return "DegenerateModel";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

i128 isqrt(i128 n) {
  if (n < 0) throw Error(Errc::DomainError, "isqrt of negative value");
  if (n < 2) return n;
  // Seed from long double, then correct by at most a few steps.
  i128 s = static_cast<i128>(std::sqrt(static_cast<long double>(n)));
  while (s > 0 && s * s > n) --s;
  while ((s + 1) * (s + 1) <= n) ++s;
  return s;
}

std::string to_string(i128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  // Work on the negative side so the minimum value is representable.
  std::string out;
  i128 x = neg ? v : -v;
  while (x != 0) {
    int digit = -static_cast<int>(x % 10);
    out.push_back(static_cast<char>('0' + digit));
    x /= 10;
  }
  if (neg) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

std::int64_t to_int64(i128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw Error(Errc::Overflow, "value does not fit in 64 bits: " + to_string(v));
  return static_cast<std::int64_t>(v);
}

}  // namespace similitude
