#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "kernel/scalar.hpp"

namespace wnlie {

/// Appends one "coeff * basis" summand to a linear-combination printout,
/// folding the sign into the separator where the coefficient allows it.
inline void append_term(std::ostringstream& os, bool first, const Scalar& c,
                        const std::string& basis,
                        const std::vector<std::string>& params) {
  std::string cs = c.str(params);
  bool compound = cs.find(' ') != std::string::npos;
  bool neg = !compound && !cs.empty() && cs[0] == '-';
  if (neg) cs = cs.substr(1);
  if (first)
    os << (neg ? "-" : "");
  else
    os << (neg ? " - " : " + ");
  if (basis.empty()) {
    os << (compound ? "(" + cs + ")" : cs);
    return;
  }
  if (cs == "1")
    os << basis;
  else
    os << (compound ? "(" + cs + ")" : cs) << "*" << basis;
}

}  // namespace wnlie
