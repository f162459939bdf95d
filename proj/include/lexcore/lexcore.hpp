// Copyright 2026 The lexcore Authors
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

#ifndef LEXCORE_LEXCORE_HPP
#define LEXCORE_LEXCORE_HPP

#include "lexcore/classification.hpp"
#include "lexcore/core.hpp"
#include "lexcore/game.hpp"
#include "lexcore/io.hpp"
#include "lexcore/matching.hpp"
#include "lexcore/mechanism.hpp"
#include "lexcore/oracle.hpp"
#include "lexcore/rational.hpp"

#endif  // LEXCORE_LEXCORE_HPP
