#pragma once

#include "satlab/canonical.hpp"
#include "satlab/constructions.hpp"
#include "satlab/counting.hpp"
#include "satlab/family.hpp"
#include "satlab/formulas.hpp"
#include "satlab/graph.hpp"
#include "satlab/graph6.hpp"
#include "satlab/rational.hpp"
#include "satlab/saturation.hpp"
#include "satlab/search.hpp"
#include "satlab/wide.hpp"
