#pragma once

#include "thuediag/criteria/bounds.hpp"
#include "thuediag/criteria/checks.hpp"
#include "thuediag/criteria/json.hpp"
#include "thuediag/criteria/omega.hpp"
