#pragma once

#include "ribbon/angle.hpp"
#include "ribbon/constructions.hpp"
#include "ribbon/error.hpp"
#include "ribbon/fold.hpp"
#include "ribbon/formulas.hpp"
#include "ribbon/geometry.hpp"
#include "ribbon/knot.hpp"
#include "ribbon/render.hpp"
