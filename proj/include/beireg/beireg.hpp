#pragma once

#include "beireg/canonical.hpp"
#include "beireg/characterize.hpp"
#include "beireg/graph.hpp"
#include "beireg/graph_algorithms.hpp"
#include "beireg/graph_io.hpp"
#include "beireg/groebner.hpp"
#include "beireg/homology.hpp"
#include "beireg/interval.hpp"
#include "beireg/monomial_ideal.hpp"
#include "beireg/regularity.hpp"
#include "beireg/serialize.hpp"
#include "beireg/verify.hpp"
#include "beireg/witness.hpp"
