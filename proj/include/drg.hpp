#pragma once

#include "drg/rational.hpp"
#include "drg/intersection_array.hpp"
#include "drg/derived.hpp"
#include "drg/polynomial.hpp"
#include "drg/algebraic.hpp"
#include "drg/precision.hpp"
#include "drg/spectra.hpp"
#include "drg/exceptions.hpp"
#include "drg/rules.hpp"
#include "drg/filter.hpp"
#include "drg/enumerate.hpp"
#include "drg/graph.hpp"
#include "drg/cross_check.hpp"
