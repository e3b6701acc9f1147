#pragma once

#include "casimir/cavity.hpp"
#include "casimir/engine.hpp"
#include "casimir/errors.hpp"
#include "casimir/models.hpp"
#include "casimir/modes.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/resummation.hpp"
#include "casimir/scattering.hpp"
#include "casimir/units.hpp"
