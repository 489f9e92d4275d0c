#pragma once

#include <optional>
#include <string>

#include "wakes/lamination.hpp"

namespace wakes {

// Disk figures in the style of the paper's orbit pictures: arcs of R_n in
// grey, Q_n in black, connecting chords drawn as geodesics of the disk,
// labels as numerators over the common denominator with "e" marks. Output
// is deterministic so golden-file diffs are exact.
struct RenderSpec {
    HyperbolicComponent component;
    std::optional<uint32_t> step;  // absent: filmstrip of every step 0..N
    uint32_t size_px = 320;        // canvas edge per disk
    bool labels = true;
};

std::string render_svg(const RenderSpec& spec, const ComponentPool& pool);

}  // namespace wakes
