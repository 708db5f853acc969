#pragma once

#include "quadlie/exactla.hpp"
#include "quadlie/liealg.hpp"
#include "quadlie/quadform.hpp"
#include "quadlie/heisenberg.hpp"
#include "quadlie/structure.hpp"
#include "quadlie/random.hpp"
