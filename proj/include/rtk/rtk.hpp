#pragma once

#include "rtk/canonical.hpp"
#include "rtk/catalog.hpp"
#include "rtk/coloring_search.hpp"
#include "rtk/constructions.hpp"
#include "rtk/exact_oracle.hpp"
#include "rtk/graph.hpp"
#include "rtk/io.hpp"
#include "rtk/pattern.hpp"
#include "rtk/property_harness.hpp"
#include "rtk/rainbow_search.hpp"
