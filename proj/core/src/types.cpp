// Copyright 2026 The rc4ft Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rc4ft/types.hpp"

#include <stdexcept>

namespace rc4ft {

std::string to_string(Edge edge) {
    return edge == Edge::Rising ? "rising" : "falling";
}

Edge edge_from_string(const std::string& name) {
    if (name == "rising") return Edge::Rising;
    if (name == "falling") return Edge::Falling;
    throw std::invalid_argument("unknown clock edge \"" + name +
                                "\" (expected rising or falling)");
}

}  // namespace rc4ft
