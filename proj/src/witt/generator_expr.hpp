#pragma once

#include <memory>
#include <vector>

#include "witt/witt.hpp"

namespace wnlie {

/// Expression tree exhibiting t^m ∂_j (|m| >= 3, n > 1) as nested brackets of
/// generators with |m| <= 2. Internal nodes record which recursion case
/// produced them so each case can be tested separately.
struct GenExpr {
  enum class Kind { term, bracket, scale, sum };
  enum class Case { none, mj_zero, mj_generic, mj3_total3, mj3_deep };

  Kind kind = Kind::term;
  Case rec_case = Case::none;
  WittTerm term{};                                    // kind == term
  Scalar factor{1};                                   // kind == scale
  std::vector<std::shared_ptr<const GenExpr>> children;

  WittElem eval() const;
  std::string str() const;
};

using GenExprPtr = std::shared_ptr<const GenExpr>;

GenExprPtr express_generator(const MIndex& m, int j);

}  // namespace wnlie
