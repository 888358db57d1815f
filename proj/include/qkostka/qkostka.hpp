#pragma once

#include "qkostka/bundles.hpp"
#include "qkostka/chern.hpp"
#include "qkostka/errors.hpp"
#include "qkostka/fills.hpp"
#include "qkostka/kostka.hpp"
#include "qkostka/parallel.hpp"
#include "qkostka/shapes.hpp"
#include "qkostka/sweep.hpp"
