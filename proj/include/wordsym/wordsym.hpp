#pragma once

// Umbrella header for the whole toolkit.

#include "wordsym/algebraic.hpp"
#include "wordsym/catalog.hpp"
#include "wordsym/config.hpp"
#include "wordsym/exponent.hpp"
#include "wordsym/factor_index.hpp"
#include "wordsym/group.hpp"
#include "wordsym/morphism.hpp"
#include "wordsym/palindrome.hpp"
#include "wordsym/report.hpp"
#include "wordsym/sequence.hpp"
#include "wordsym/stabilize.hpp"
#include "wordsym/symmetry_graph.hpp"
#include "wordsym/verify.hpp"
#include "wordsym/word.hpp"
