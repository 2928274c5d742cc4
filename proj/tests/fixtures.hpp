#pragma once
// Graph files and reference cycle lists, 1-based edge ids as printed in the
// worked examples.

#include <string>
#include <vector>

#include "topodraw/edgeset.hpp"
#include "topodraw/graph.hpp"

#ifndef TOPO_DATA_DIR
#error "TOPO_DATA_DIR must be defined"
#endif

namespace fx {

using List = std::vector<std::vector<int>>;

inline topo::Graph load(const std::string& name) {
    return topo::read_graph_file(std::string(TOPO_DATA_DIR) + "/" + name + ".txt");
}

inline topo::EdgeSet edges(const topo::Graph& g, const std::vector<int>& one_based) {
    topo::EdgeSet s(g.m());
    for (int e : one_based) s.set(e - 1);
    return s;
}

inline std::vector<int> one_based(const std::vector<int>& v) {
    std::vector<int> out;
    for (int x : v) out.push_back(x + 1);
    return out;
}

// position of the cycle with this edge set in the table, -1 if absent
inline int find(const std::vector<topo::Cycle>& table, const topo::EdgeSet& s) {
    for (std::size_t i = 0; i < table.size(); ++i)
        if (table[i].edges == s) return static_cast<int>(i);
    return -1;
}

// table positions of reference cycles ids (1-based into ref)
inline std::vector<int> map_ids(const topo::Graph& g, const std::vector<topo::Cycle>& table, const List& ref,
                                const std::vector<int>& ids) {
    std::vector<int> out;
    for (int i : ids) out.push_back(find(table, edges(g, ref[static_cast<std::size_t>(i - 1)])));
    return out;
}

inline std::vector<topo::Cycle> cycles(const topo::Graph& g, const List& ref, const std::vector<int>& ids) {
    std::vector<topo::Cycle> out;
    for (int i : ids) out.push_back(topo::make_cycle(g, edges(g, ref[static_cast<std::size_t>(i - 1)])));
    return out;
}

inline std::vector<topo::Cycle> cycles(const topo::Graph& g, const List& ref) {
    std::vector<topo::Cycle> out;
    for (const auto& c : ref) out.push_back(topo::make_cycle(g, edges(g, c)));
    return out;
}

// isometric cycles of G1
inline const List G1 = {{1, 2, 5},          {1, 3, 6, 10},       {1, 4, 7},          {2, 4, 8},
                        {2, 3, 9, 12, 20},  {3, 4, 12, 18, 20},  {5, 7, 8},          {5, 6, 9, 13, 16},
                        {6, 7, 13, 16, 18}, {8, 9, 18},          {10, 11, 14},       {10, 12, 13, 17},
                        {11, 12, 19},       {13, 14, 15},        {15, 17, 19},       {16, 17, 20}};
inline const std::vector<int> G1_BASIS = {1, 2, 3, 7, 8, 10, 11, 12, 13, 14, 16};
inline const std::vector<int> G1_BASIS_LOAD = {3, 1, 1, 1, 3, 2, 2, 2, 2, 3, 2, 2, 3, 2, 1, 2, 2, 1, 1, 1};
inline const std::vector<int> G1_CONFIG = {3, 7, 8, 10, 11, 12, 13, 16};
inline const std::vector<int> G1_RIM = {1, 4, 6, 14, 18, 19, 20};
inline const std::vector<int> G1_RIM_ORDER = {1, 2, 5, 8, 10, 9, 7};
inline const List G1_ROTATION = {{2, 7},        {1, 5, 3, 7}, {2, 9, 7},    {8, 10, 5},   {8, 4, 6, 2},
                                 {9, 5, 10},    {1, 2, 3, 9}, {4, 5, 10},   {7, 3, 6, 10}, {9, 6, 4, 8}};

// isometric cycles of G2
inline const List G2 = {{1, 3, 5, 11},      {1, 4, 6, 16},      {2, 3, 7, 9},       {2, 3, 8, 13},
                        {2, 4, 8, 14},      {3, 4, 13, 14},     {5, 6, 12, 14, 16}, {5, 6, 12, 15, 19},
                        {7, 8, 10},         {9, 10, 13},        {11, 12, 13},       {1, 2, 5, 8, 12},
                        {1, 4, 5, 12, 14},  {14, 15, 16, 19},   {14, 15, 17, 20},   {16, 17, 18},
                        {18, 19, 20}};
inline const std::vector<int> G2_LOAD = {4, 4, 4, 4, 5, 3, 2, 4, 2, 2, 2, 5, 4, 6, 3, 4, 2, 2, 3, 2};
inline const std::vector<int> G2_SEQUENCE = {17, 2, 7, 6, 8, 12, 15, 14, 11, 5, 10, 1, 13, 3, 16, 9, 4};
inline const std::vector<int> G2_SEQUENCE_BASIS = {2, 3, 6, 7, 8, 10, 11, 12, 15, 17};
inline const std::vector<int> G2_POOL = {1, 2, 3, 5, 8, 9, 10, 11, 15, 16, 17};
inline const std::vector<int> G2_DRAWING = {1, 2, 5, 8, 9, 10, 11, 15, 16, 17};
inline const List G2_VARIANTS = {{3, 6, 8, 10, 15, 17},          {1, 2, 5, 9, 15},
                                 {1, 2, 3, 8, 9, 10, 11, 16, 17}, {1, 3, 8, 10, 11, 15, 16, 17},
                                 {1, 2, 3, 5, 9, 16, 17},         {1, 2, 3, 5, 8, 9, 10, 11, 16, 17}};
inline const List G2_HAMILTONIAN = {{2, 4, 5, 6, 7, 9, 12, 13, 17, 19, 20},
                                    {2, 3, 5, 6, 7, 10, 11, 15, 16, 17, 20},
                                    {3, 4, 5, 6, 7, 8, 9, 12, 17, 19, 20},
                                    {2, 3, 5, 6, 7, 10, 11, 14, 17, 19, 20}};

// unit cycles of G3
inline const List G3 = {{1, 2, 5, 8},       {1, 2, 6, 11},      {1, 4, 7},          {2, 4, 8, 10},
                        {2, 3, 8, 9, 23},   {2, 3, 11, 15, 23}, {3, 4, 24},         {5, 6, 8, 11},
                        {5, 6, 9, 15},      {5, 7, 10},         {6, 7, 14, 20},     {8, 9, 11, 15},
                        {9, 10, 23, 24},    {11, 12, 13},       {13, 14, 16, 17},   {14, 15, 19, 21},
                        {17, 18, 19},       {13, 15, 16, 18, 21}, {19, 20, 22, 24}, {21, 22, 23},
                        {1, 3, 6, 15, 23}};
inline const std::vector<int> G3_DEPENDENT = {2, 3, 5, 7, 8, 10, 13};

// isometric cycles of G5
inline const List G5 = {{1, 2, 5, 8},  {1, 2, 6, 10}, {1, 3, 6, 12}, {1, 4, 7},  {2, 3, 10, 12},
                        {2, 4, 11},    {3, 4, 14},    {5, 6, 8, 10}, {5, 7, 9},  {6, 7, 13},
                        {8, 9, 11},    {10, 11, 13},  {12, 13, 14}};

// plane configuration of G31 before chord re-insertion
inline const List G31_CONFIG = {{9, 11, 38},       {34, 36, 41, 42}, {12, 14, 26},     {2, 8, 17, 60},
                                {25, 26, 50},      {12, 17, 28},     {32, 33, 56},     {58, 59, 60},
                                {21, 22, 31, 32},  {6, 8, 40, 61},   {2, 5, 14, 31},   {25, 28, 34, 38},
                                {5, 6, 29, 39},    {41, 42, 46, 47, 50}};
inline const std::vector<int> G31_RIM = {9, 11, 21, 22, 29, 33, 36, 39, 40, 46, 47, 56, 58, 59, 61};
inline const std::vector<int> G31_RIM_ORDER = {13, 7, 2, 18, 17, 20, 19, 8, 12, 6, 16, 15, 4, 14, 10};
inline const std::vector<int> G31_CHORDS = {53, 54, 35, 52, 30, 37, 48, 23, 24, 57};

// eleven pentagons of the dodecahedron drawing, and the deletion order
inline const List DOD_CONFIG = {{12, 13, 15, 22, 24}, {14, 15, 16, 18, 20}, {1, 3, 4, 7, 29},
                                {6, 7, 8, 11, 30},    {10, 11, 12, 14, 17}, {20, 21, 22, 23, 26},
                                {4, 5, 6, 9, 27},     {8, 9, 10, 13, 28},   {23, 24, 25, 27, 28},
                                {1, 2, 5, 25, 26},    {16, 17, 19, 29, 30}};
inline const std::vector<int> DOD_RIM = {2, 3, 18, 19, 21};

// 18-vertex graph: twenty-cycle configuration and its two rim loops
inline const List G18_CONFIG = {{1, 2, 8},      {1, 4, 10},       {2, 3, 12},       {3, 5, 18},
                                {5, 6, 27},     {6, 7, 30},       {9, 10, 26},      {11, 12, 13},
                                {13, 16, 17},   {14, 15, 22},     {15, 16, 25, 26}, {18, 19, 28},
                                {19, 20, 33},   {21, 22, 24},     {23, 24, 25},     {29, 30, 38},
                                {31, 32, 35},   {32, 33, 37, 38}, {34, 35, 39},     {36, 37, 39}};
inline const List G18_LOOPS = {{8, 9, 11, 14, 21, 23}, {27, 28, 29, 31, 34, 36}};
inline const std::vector<int> G18_LOAD = {2, 2, 2, 1, 2, 2, 1, 1, 1, 2, 1, 2, 2, 1, 2, 2, 1, 2, 2, 1,
                                          1, 2, 1, 2, 2, 2, 1, 1, 1, 2, 1, 2, 2, 1, 2, 1, 2, 2, 2};

}  // namespace fx
