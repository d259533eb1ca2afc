#pragma once

#include "gring/arith.hpp"
#include "gring/catalog.hpp"
#include "gring/classifier.hpp"
#include "gring/element_expr.hpp"
#include "gring/error.hpp"
#include "gring/finite_ring.hpp"
#include "gring/group.hpp"
#include "gring/group_ring.hpp"
#include "gring/laurent.hpp"
#include "gring/parallel.hpp"
#include "gring/ring_props.hpp"
#include "gring/ring_spec.hpp"
#include "gring/verify.hpp"
