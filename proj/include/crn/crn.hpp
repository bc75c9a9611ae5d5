#pragma once

#include "crn/decomposition.hpp"
#include "crn/invariants.hpp"
#include "crn/kinetics.hpp"
#include "crn/matrix.hpp"
#include "crn/network.hpp"
#include "crn/parser.hpp"
#include "crn/presets.hpp"
#include "crn/rational.hpp"
#include "crn/report.hpp"
#include "crn/transform.hpp"
