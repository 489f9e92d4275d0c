#pragma once

#include <string>

#include "wakes/lamination.hpp"

namespace wakes {

// The four worked examples of the appendix, regenerated end to end from the
// pool: kneadings, conspicuous sets, and the R/Q orbit tables written as
// numerators over one fixed denominator with "e" marks on the sigma images
// of the wake angles. Output is deterministic byte for byte.
std::string appendix_a_text(const ComponentPool& pool);
std::string appendix_a_json(const ComponentPool& pool);

// RQTrace serialization: numerators over 2*lcm of the wake denominators,
// each step with its R and Q arcs and the marked angles.
std::string rq_trace_json(const RQTrace& trace);

}  // namespace wakes
