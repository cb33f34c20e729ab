// Copyright 2026 The qfdiv Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QFDIV_QFDIV_HPP
#define QFDIV_QFDIV_HPP

#include "qfdiv/error.hpp"
#include "qfdiv/extended_real.hpp"
#include "qfdiv/fdiv.hpp"
#include "qfdiv/generators.hpp"
#include "qfdiv/hyptest.hpp"
#include "qfdiv/inequalities.hpp"
#include "qfdiv/linalg.hpp"
#include "qfdiv/ns.hpp"
#include "qfdiv/qdiv.hpp"

#endif  // QFDIV_QFDIV_HPP
