#pragma once

#include "hrm/nn/network.hpp"

namespace hrm::nn {

// Input scale applied to raw mmHg matrices by every swallow network.
inline constexpr double kPressureInputScale = 0.01;

// Four Conv2D+BN/MaxPool stages (8C/16C/32C/64C filters), global average
// pooling, two Dense(64C) layers and a K-way softmax.
NetworkSpec build_swallow_net(std::size_t width_c, std::size_t classes, std::string name);
NetworkSpec build_swallow_type_net();        // C=1, K=6
NetworkSpec build_pressurization_net();      // C=2, K=3
// Five stages (16/32/64/64/128), identity final pooling, Dense(128) x2, Dense(1).
NetworkSpec build_irp_net();

}  // namespace hrm::nn
