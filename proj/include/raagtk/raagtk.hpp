#pragma once

#include "raagtk/error.hpp"
#include "raagtk/graph.hpp"
#include "raagtk/word.hpp"
#include "raagtk/heap.hpp"
#include "raagtk/hyperplane.hpp"
#include "raagtk/ball.hpp"
#include "raagtk/median.hpp"
#include "raagtk/elements.hpp"
#include "raagtk/subgroups.hpp"
#include "raagtk/tree.hpp"
#include "raagtk/dls.hpp"
#include "raagtk/cmp.hpp"
#include "raagtk/decomp.hpp"
