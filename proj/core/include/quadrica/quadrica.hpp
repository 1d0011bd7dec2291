#pragma once

#include "quadrica/config.hpp"
#include "quadrica/errors.hpp"
#include "quadrica/examples.hpp"
#include "quadrica/finite_group.hpp"
#include "quadrica/graded.hpp"
#include "quadrica/hom.hpp"
#include "quadrica/io.hpp"
#include "quadrica/laws.hpp"
#include "quadrica/module.hpp"
#include "quadrica/quadratic.hpp"
#include "quadrica/rings.hpp"
#include "quadrica/square_ring.hpp"
#include "quadrica/verdict.hpp"
