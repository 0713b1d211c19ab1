#pragma once

#include "cover/clip.hpp"
#include "cover/covering.hpp"
#include "cover/geometry.hpp"
#include "cover/instances.hpp"
#include "cover/io.hpp"
#include "cover/multistart.hpp"
#include "cover/optimize.hpp"
#include "cover/oracle.hpp"
#include "cover/partition.hpp"
#include "cover/render.hpp"
#include "cover/rng.hpp"
#include "cover/screening.hpp"
#include "cover/voronoi.hpp"
