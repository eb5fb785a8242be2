#include "compdet/determinant.hpp"

namespace compdet {

Rational det_numeric(EntryFamily family, Domain domain, std::int64_t n, std::int64_t k, const Assignment& assignment) {
  return det_bareiss(build_numeric_matrix(family, domain, n, k, assignment));
}

}  // namespace compdet
