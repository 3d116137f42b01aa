#pragma once

namespace frontlab {

// Bumped on any change that can affect numerical output; checkpoints and
// manifests record it and resume refuses to cross versions.
inline constexpr const char* kCodeVersion = "0.1.0";

}  // namespace frontlab
