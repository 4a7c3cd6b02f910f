#ifndef HOUTU_HOUTU_HPP
#define HOUTU_HOUTU_HPP

#include "houtu/af.hpp"
#include "houtu/bandwidth.hpp"
#include "houtu/bound.hpp"
#include "houtu/builders.hpp"
#include "houtu/config.hpp"
#include "houtu/coord.hpp"
#include "houtu/cost.hpp"
#include "houtu/engine.hpp"
#include "houtu/fairsched.hpp"
#include "houtu/io.hpp"
#include "houtu/model.hpp"
#include "houtu/parades.hpp"
#include "houtu/rng.hpp"
#include "houtu/scenario.hpp"
#include "houtu/time.hpp"
#include "houtu/workload.hpp"

#endif
