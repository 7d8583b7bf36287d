#pragma once

namespace lwlab {

inline constexpr const char* kVersion = "0.1.0";

// Gaussian variates are produced by the Marsaglia polar method. The choice
// is fixed per release and recorded in every run manifest, so a manifest
// pins the exact variate sequence.
inline constexpr const char* kGaussianMethod = "polar";

inline constexpr int kManifestSchemaVersion = 1;

}  // namespace lwlab
