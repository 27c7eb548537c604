#pragma once

// Umbrella header.

#include "lefkit/arith.hpp"
#include "lefkit/dsl.hpp"
#include "lefkit/errors.hpp"
#include "lefkit/fibration.hpp"
#include "lefkit/mapping_class.hpp"
#include "lefkit/obstruction.hpp"
#include "lefkit/presentation.hpp"
#include "lefkit/words.hpp"
