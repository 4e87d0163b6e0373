#pragma once

#include "graysurf/curvature.hpp"
#include "graysurf/errors.hpp"
#include "graysurf/families.hpp"
#include "graysurf/oracle.hpp"
#include "graysurf/polynomial.hpp"
#include "graysurf/profile.hpp"
#include "graysurf/version.hpp"
