#pragma once

#include "qgw/linalg.hpp"
#include "qgw/algebra.hpp"
#include "qgw/gns.hpp"
#include "qgw/quantum_group.hpp"
#include "qgw/antipode.hpp"
#include "qgw/pipeline.hpp"
#include "qgw/duality.hpp"
#include "qgw/relations.hpp"
#include "qgw/examples.hpp"
#include "qgw/io.hpp"
#include "qgw/cli.hpp"
