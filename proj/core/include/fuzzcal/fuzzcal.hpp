#pragma once

#include "fuzzcal/conformable.hpp"
#include "fuzzcal/context.hpp"
#include "fuzzcal/errors.hpp"
#include "fuzzcal/function_form.hpp"
#include "fuzzcal/fuzzy_function.hpp"
#include "fuzzcal/fuzzy_number.hpp"
#include "fuzzcal/io.hpp"
#include "fuzzcal/ivp.hpp"
#include "fuzzcal/laplace.hpp"
