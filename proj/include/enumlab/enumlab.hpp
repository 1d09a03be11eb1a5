#pragma once

#include "enumlab/complexity.hpp"
#include "enumlab/corpus.hpp"
#include "enumlab/listing.hpp"
#include "enumlab/machine.hpp"
#include "enumlab/natural.hpp"
#include "enumlab/order.hpp"
#include "enumlab/rapidity.hpp"
#include "enumlab/reduction.hpp"
#include "enumlab/sat.hpp"
