#pragma once

// Self-contained verification suite: thirteen numbered criteria, each a fixed
// configuration with an a-priori master seed and pinned tolerance bands. The
// CLI exposes them grouped into named presets; the acceptance binary runs all
// thirteen.

#include <string>
#include <vector>

namespace ringburst {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// index in [1, 13]; returns one entry per leg of the criterion
std::vector<CheckResult> run_criterion(int index);

const std::vector<std::string>& verify_preset_names();

// throws std::invalid_argument on an unknown preset name
std::vector<CheckResult> run_verify_preset(const std::string& preset);

}  // namespace ringburst
