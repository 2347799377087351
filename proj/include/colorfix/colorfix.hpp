#pragma once

#include "colorfix/audit.hpp"
#include "colorfix/coloring.hpp"
#include "colorfix/cycles.hpp"
#include "colorfix/errors.hpp"
#include "colorfix/fixation.hpp"
#include "colorfix/generate.hpp"
#include "colorfix/graph.hpp"
#include "colorfix/io.hpp"
#include "colorfix/planarity.hpp"
