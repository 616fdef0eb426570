#pragma once

#include "hominf/geometry.hpp"
#include "hominf/harness.hpp"
#include "hominf/homology.hpp"
#include "hominf/lrt.hpp"
#include "hominf/occupancy.hpp"
#include "hominf/point_io.hpp"
#include "hominf/rng.hpp"
