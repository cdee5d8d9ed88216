/*
 *   Copyright 2026 The bckcode authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/// Umbrella header.

#ifndef BCKCODE_BCKCODE_HPP
#define BCKCODE_BCKCODE_HPP

#include "boolean_ring.hpp"
#include "cayley.hpp"
#include "codegen.hpp"
#include "codeword.hpp"
#include "io.hpp"
#include "poset.hpp"
#include "reconstruction.hpp"
#include "xor_group.hpp"

#endif  // BCKCODE_BCKCODE_HPP
