/*
   Copyright 2026 The lagengel Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LAGENGEL_LAGENGEL_HPP
#define LAGENGEL_LAGENGEL_HPP

#include "coframe_parser.hpp"
#include "coframed_algebra.hpp"
#include "compactness.hpp"
#include "coord_chart.hpp"
#include "diff_ring.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "form.hpp"
#include "lattices.hpp"
#include "linalg.hpp"
#include "models.hpp"
#include "pfaff.hpp"
#include "poly.hpp"
#include "quad_ext.hpp"
#include "rational.hpp"

#endif  // LAGENGEL_LAGENGEL_HPP
