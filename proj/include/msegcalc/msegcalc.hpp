#pragma once

#include "closure.hpp"
#include "error.hpp"
#include "module_theory.hpp"
#include "multisegment.hpp"
#include "qchar.hpp"
#include "segment.hpp"
#include "text.hpp"
