#pragma once

#include "dyck2d/crossword.hpp"
#include "dyck2d/dyck1d.hpp"
#include "dyck2d/error.hpp"
#include "dyck2d/fixtures.hpp"
#include "dyck2d/lab.hpp"
#include "dyck2d/neutralize.hpp"
#include "dyck2d/picture.hpp"
#include "dyck2d/simplot.hpp"
#include "dyck2d/symbol.hpp"
#include "dyck2d/text.hpp"
#include "dyck2d/wellnest.hpp"
