#pragma once

#include <string>

namespace strassen {

/// Derives Strassen's original algorithm from the canonical parameters and
/// renders every stage: parameters, the six rank-one matrices, the signed
/// seven-term expansion, the classical bilinear forms I..VII, and the four
/// product-coefficient formulas. Everything is computed from the generator
/// output; the only stored reference is the published form table, which the
/// computed terms must match exactly (a failed match throws).
std::string demo_text();

}  // namespace strassen
