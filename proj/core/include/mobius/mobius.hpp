#pragma once

#include "mobius/costing.hpp"
#include "mobius/error.hpp"
#include "mobius/evidence.hpp"
#include "mobius/fast_transforms.hpp"
#include "mobius/frame.hpp"
#include "mobius/graph.hpp"
#include "mobius/io.hpp"
#include "mobius/op_counter.hpp"
#include "mobius/poset.hpp"
#include "mobius/random.hpp"
#include "mobius/set_function.hpp"
