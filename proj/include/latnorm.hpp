// Copyright 2026 The latnorm Authors
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

#ifndef LATNORM_LATNORM_HPP
#define LATNORM_LATNORM_HPP

#include "latnorm/atomic.hpp"
#include "latnorm/element_set.hpp"
#include "latnorm/error.hpp"
#include "latnorm/extension.hpp"
#include "latnorm/lattice.hpp"
#include "latnorm/lattice_io.hpp"
#include "latnorm/oracle.hpp"
#include "latnorm/table_io.hpp"
#include "latnorm/suite.hpp"
#include "latnorm/tnorm.hpp"

#endif  // LATNORM_LATNORM_HPP
