#pragma once

#include "thuediag/pade/pade.hpp"
