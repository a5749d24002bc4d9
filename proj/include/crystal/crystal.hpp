#pragma once

#include "crystal/crystal_core.hpp"
#include "crystal/kostka.hpp"
#include "crystal/laurent_poly.hpp"
#include "crystal/partition.hpp"
#include "crystal/paths.hpp"
#include "crystal/rmatrix.hpp"
#include "crystal/symfunc.hpp"
#include "crystal/tableau.hpp"
#include "crystal/verify.hpp"
