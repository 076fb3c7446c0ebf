#pragma once

#include <string>

#include "latomo/cutoffs.hpp"
#include "latomo/filters.hpp"
#include "latomo/geometry.hpp"
#include "latomo/grids.hpp"
#include "latomo/weights.hpp"

namespace latomo {

/// Verification thresholds frozen from the reference calibration run
/// (n = 256, 360 angles, default phantom).
struct VerifyThresholds {
    double line_ratio_min{5.0};        // hard-cutoff artifact line vs controls
    double full_data_ratio_lo{0.5};    // full-data control band
    double full_data_ratio_hi{2.0};
    double smooth_reduction_min{0.6};  // relative drop hard -> smooth
    double visible_contrast_min{3.0};  // visible vs invisible edge response
    double visible_drop_max{0.2};      // visible response loss under smooth cutoff
};

/// Flat sectioned key-value experiment description.  Unknown keys are hard
/// errors; parse/serialize round-trips exactly.
struct ExperimentConfig {
    Phantom phantom;
    SinogramGrid grid;
    int image_n{256};
    WeightSpec mu{WeightSpec::unit()};
    WeightSpec nu{WeightSpec::unit()};
    FilterSpec filter{FilterSpec::fbp()};
    CutoffSpec cutoff{CutoffSpec::none()};
    int oracle_samples{360};
    VerifyThresholds thresholds;
    unsigned long long seed{1234};

    static ExperimentConfig defaults();
};

ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);
std::string serialize_config(const ExperimentConfig& cfg);

} // namespace latomo
