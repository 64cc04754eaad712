#pragma once

#include "gr2/errors.hpp"
#include "gr2/formats.hpp"
#include "gr2/ideals.hpp"
#include "gr2/linalg.hpp"
#include "gr2/pluecker.hpp"
#include "gr2/rational.hpp"
#include "gr2/semigroup.hpp"
#include "gr2/tree_io.hpp"
#include "gr2/trees.hpp"
#include "gr2/tropical.hpp"
#include "gr2/valuation.hpp"
#include "gr2/worked_example.hpp"
