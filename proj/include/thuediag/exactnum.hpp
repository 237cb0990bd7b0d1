#pragma once

#include "thuediag/exactnum/certified.hpp"
#include "thuediag/exactnum/errors.hpp"
#include "thuediag/exactnum/power_compare.hpp"
#include "thuediag/exactnum/quad.hpp"
#include "thuediag/exactnum/rational.hpp"
#include "thuediag/exactnum/real_interval.hpp"
