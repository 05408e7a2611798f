#pragma once

#include "pathlab/adr.hpp"
#include "pathlab/bridge.hpp"
#include "pathlab/cutting.hpp"
#include "pathlab/enumeration.hpp"
#include "pathlab/error.hpp"
#include "pathlab/parallel.hpp"
#include "pathlab/paths.hpp"
#include "pathlab/poly.hpp"
#include "pathlab/schedule.hpp"
#include "pathlab/verify.hpp"
