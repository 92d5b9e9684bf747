#pragma once

#include "goka/bounds.hpp"
#include "goka/digraph.hpp"
#include "goka/digraph_io.hpp"
#include "goka/ec3s.hpp"
#include "goka/error.hpp"
#include "goka/families.hpp"
#include "goka/random.hpp"
#include "goka/report.hpp"
#include "goka/solver.hpp"
#include "goka/verify.hpp"
