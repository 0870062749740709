#pragma once

#include "bruhat_rook/error.hpp"
#include "bruhat_rook/laurent_poly.hpp"
#include "bruhat_rook/q_numbers.hpp"
#include "bruhat_rook/permutation.hpp"
#include "bruhat_rook/board.hpp"
#include "bruhat_rook/rook_theory.hpp"
#include "bruhat_rook/intervals.hpp"
#include "bruhat_rook/verify.hpp"
