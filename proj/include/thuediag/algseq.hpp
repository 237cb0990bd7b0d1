#pragma once

#include "thuediag/algseq/audit.hpp"
#include "thuediag/algseq/bounds.hpp"
#include "thuediag/algseq/lambda.hpp"
