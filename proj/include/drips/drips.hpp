#pragma once

#include "drips/branch_tree.hpp"
#include "drips/common.hpp"
#include "drips/degree_rips.hpp"
#include "drips/export.hpp"
#include "drips/gamma_tree.hpp"
#include "drips/hausdorff.hpp"
#include "drips/metric.hpp"
#include "drips/point_cloud.hpp"
#include "drips/random_instances.hpp"
#include "drips/stability.hpp"
