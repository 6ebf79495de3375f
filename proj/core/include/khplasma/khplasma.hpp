#pragma once

#include "khplasma/errors.hpp"
#include "khplasma/model_params.hpp"
#include "khplasma/oracle.hpp"
#include "khplasma/perturbation.hpp"
#include "khplasma/potential.hpp"
#include "khplasma/sweep.hpp"
#include "khplasma/tridiagonal.hpp"
