#pragma once

#include "seven/exact.hpp"
#include "seven/theta.hpp"
#include "seven/invariants.hpp"
#include "seven/classify.hpp"
#include "seven/actions.hpp"
#include "seven/sweep.hpp"
