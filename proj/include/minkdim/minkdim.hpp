#ifndef MINKDIM_MINKDIM_HPP
#define MINKDIM_MINKDIM_HPP

#include "minkdim/commands.hpp"
#include "minkdim/continued_fraction.hpp"
#include "minkdim/dimension_bounds.hpp"
#include "minkdim/dyadic.hpp"
#include "minkdim/empirical.hpp"
#include "minkdim/minkowski.hpp"
#include "minkdim/moran.hpp"
#include "minkdim/parse.hpp"
#include "minkdim/render.hpp"
#include "minkdim/report.hpp"
#include "minkdim/self_similar.hpp"

#endif  // MINKDIM_MINKDIM_HPP
