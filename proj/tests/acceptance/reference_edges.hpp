#pragma once

#include <array>
#include <utility>

// Hand-transcribed reference edge list for the 26-vertex solvable graph of
// the (1|2) weight-pair algebra over GF(3), as previously published for this
// example. The computed adjacency is authoritative; differences against this
// list are reported as errata. The label "2x+h" in the source rendering
// collides with "h+2x" and is read here as the missing element "2h+x".
inline constexpr std::array<std::pair<const char*, const char*>, 80> kReferenceSolvableEdges26{{
    {"2h", "2h+2x"}, {"2h", "2h+2y"}, {"2h", "2h+x"},   {"2h", "2h+y"},
    {"2h", "2x"},    {"2h", "2y"},    {"2h", "h+2x"},   {"2h", "h+x"},
    {"2h", "h+y"},   {"2h+x", "2h+2x"}, {"2h+y", "2h+2y"}, {"2x", "2h+2x"},
    {"2x", "2h+x"},  {"2x", "2x+2y"}, {"2x", "2x+y"},   {"2x", "2y"},
    {"2x", "h+2x"},  {"2x", "h+x"},   {"2x", "x+2y"},   {"2x", "x+y"},
    {"2x+y", "2x+2y"}, {"2y", "2h+2y"}, {"2y", "2h+y"}, {"2y", "2x+2y"},
    {"2y", "2x+y"},  {"2y", "h+2y"},  {"2y", "h+y"},    {"2y", "x+2y"},
    {"2y", "x+y"},   {"h", "2h"},     {"h", "2h+2x"},   {"h", "2h+2y"},
    {"h", "2h+x"},   {"h", "2h+y"},   {"h", "2x"},      {"h", "2y"},
    {"h", "h+2x"},   {"h", "h+2y"},   {"h", "h+x"},     {"h", "h+y"},
    {"h", "x"},      {"h", "y"},      {"h+2x", "2h+2x"}, {"h+2x", "2h+x"},
    {"h+2y", "2h+2y"}, {"h+2y", "2h+y"}, {"h+x", "2h+2x"}, {"h+x", "2h+x"},
    {"h+x", "h+2x"}, {"h+y", "2h+2y"}, {"h+y", "2h+y"}, {"h+y", "h+2y"},
    {"x", "2h"},     {"x", "2h+2x"},  {"x", "2h+x"},    {"x", "2x"},
    {"x", "2x+2y"},  {"x", "2x+y"},   {"x", "2y"},      {"x", "h+2x"},
    {"x", "h+x"},    {"x", "x+2y"},   {"x", "x+y"},     {"x", "y"},
    {"x+2y", "2x+2y"}, {"x+2y", "2x+y"}, {"x+y", "2x+2y"}, {"x+y", "2x+y"},
    {"x+y", "x+2y"}, {"y", "2h"},     {"y", "2h+2y"},   {"y", "2h+y"},
    {"y", "2x"},     {"y", "2x+2y"},  {"y", "2x+y"},    {"y", "2y"},
    {"y", "h+2y"},   {"y", "h+y"},    {"y", "x+2y"},    {"y", "x+y"},
}};
