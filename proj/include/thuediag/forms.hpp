#pragma once

#include "thuediag/forms/binary_form.hpp"
#include "thuediag/forms/diag_form.hpp"
#include "thuediag/forms/generators.hpp"
#include "thuediag/forms/json.hpp"
