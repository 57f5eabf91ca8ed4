// Copyright 2026 The graphlu Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>

#include "graphlu/graph.hpp"

namespace graphlu {

// graph6 encoding; vertex ids follow the format's vertex order.
std::string to_graph6(const Graph& g);
// Accepts an optional ">>graph6<<" header and surrounding whitespace.
Graph from_graph6(std::string_view text);

}  // namespace graphlu
