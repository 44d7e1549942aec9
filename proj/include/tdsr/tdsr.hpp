#pragma once

#include "tdsr/core.hpp"
#include "tdsr/domination.hpp"
#include "tdsr/families.hpp"
#include "tdsr/graph.hpp"
#include "tdsr/graph_gen.hpp"
#include "tdsr/isomorphism.hpp"
#include "tdsr/recognize.hpp"
#include "tdsr/reconfig.hpp"
#include "tdsr/verify.hpp"
