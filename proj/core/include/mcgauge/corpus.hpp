/// @file corpus.hpp
/// Built-in example problems, one per major outcome of the engine: a
/// first-order structure admitting no polynomial second-order extension, a
/// gauge roundtrip over so(3) that the solver recovers exactly, and an
/// abelian quadratic perturbation whose obstruction is certified.

#pragma once

#include <string>
#include <vector>

#include "mcgauge/jsonio.hpp"

namespace mcgauge {

/// Names accepted by corpus_example, in display order.
std::vector<std::string> corpus_names();

/// Ready-made problem document for `name`; InputError for unknown names.
ProblemDocument corpus_example(const std::string& name);

}  // namespace mcgauge
