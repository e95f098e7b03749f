#ifndef INDSAT_INDSAT_HPP
#define INDSAT_INDSAT_HPP

#include "indsat/bollobas.hpp"
#include "indsat/constructs.hpp"
#include "indsat/embed.hpp"
#include "indsat/io.hpp"
#include "indsat/posetspec.hpp"
#include "indsat/setfam.hpp"
#include "indsat/solver.hpp"
#include "indsat/verify.hpp"

#endif  // INDSAT_INDSAT_HPP
