#ifndef GP_GP_HPP_
#define GP_GP_HPP_

#include "conjugacy.hpp"
#include "diagram.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "moves.hpp"
#include "oracle.hpp"
#include "spec_io.hpp"
#include "vertex_group.hpp"
#include "words.hpp"

#endif  // GP_GP_HPP_
