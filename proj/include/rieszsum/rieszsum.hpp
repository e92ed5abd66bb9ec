#pragma once

#include "rieszsum/baezduarte.hpp"
#include "rieszsum/bounds.hpp"
#include "rieszsum/csv.hpp"
#include "rieszsum/mobius.hpp"
#include "rieszsum/precision.hpp"
#include "rieszsum/riesz.hpp"
#include "rieszsum/special_functions.hpp"
#include "rieszsum/sums.hpp"
#include "rieszsum/tail_sums.hpp"
