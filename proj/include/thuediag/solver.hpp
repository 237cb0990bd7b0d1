#pragma once

#include "thuediag/solver/audit.hpp"
#include "thuediag/solver/classify.hpp"
#include "thuediag/solver/enumerate.hpp"
#include "thuediag/solver/json.hpp"
#include "thuediag/solver/record.hpp"
