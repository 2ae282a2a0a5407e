#ifndef CUSHARP_SCHEME_HPP_
#define CUSHARP_SCHEME_HPP_

#include <string>

#include "aaad/parallel.hpp"
#include "aaad/reconstruct.hpp"
#include "aaad/types.hpp"

namespace aaad {

// cu2 / aweno5 are the exact C=0 limits of the sharpened variants (they also
// skip the classification pass, which must not change any flux).
enum class SchemeKind { CU2, AAAD2, AWENO5, AAAD5 };

inline int scheme_order(SchemeKind k) {
  return (k == SchemeKind::CU2 || k == SchemeKind::AAAD2) ? 2 : 5;
}
inline bool scheme_adaptive(SchemeKind k) {
  return k == SchemeKind::AAAD2 || k == SchemeKind::AAAD5;
}
inline int scheme_ghost(SchemeKind k) { return scheme_order(k) == 2 ? 2 : 3; }

SchemeKind parse_scheme(const std::string& name);        // throws ConfigError
const char* scheme_name(SchemeKind k);

struct SchemeSettings {
  SchemeKind kind = SchemeKind::AAAD2;
  double c_const = 0.0;   // adaptive strength C; ignored by the base schemes
  double theta = 2.0;     // MUSCL limiter parameter
  double eps0 = 0.002;    // classification margin
  WenoParams weno;
  ExecMode exec = ExecMode::OpenMP;
};

}  // namespace aaad

#endif  // CUSHARP_SCHEME_HPP_
