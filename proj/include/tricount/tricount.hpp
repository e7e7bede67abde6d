#pragma once

#include "tricount/bench.hpp"
#include "tricount/engines.hpp"
#include "tricount/error.hpp"
#include "tricount/generators.hpp"
#include "tricount/graph.hpp"
#include "tricount/intersect.hpp"
#include "tricount/io.hpp"
#include "tricount/matrix.hpp"
#include "tricount/oracle.hpp"
#include "tricount/report.hpp"
#include "tricount/sparse_matrix.hpp"
#include "tricount/subgraph.hpp"
