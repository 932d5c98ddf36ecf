/*
   Copyright 2026 The gjac Authors

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

#ifndef GJAC_GJAC_HPP
#define GJAC_GJAC_HPP

#include "error.hpp"
#include "gjmatrix.hpp"
#include "linalg.hpp"
#include "matrix.hpp"
#include "moments.hpp"
#include "pade.hpp"
#include "periodic.hpp"
#include "pfraction.hpp"
#include "polynomial.hpp"
#include "polyrec.hpp"
#include "roots.hpp"
#include "scalar.hpp"
#include "series.hpp"
#include "spectral.hpp"

#endif  // GJAC_GJAC_HPP
