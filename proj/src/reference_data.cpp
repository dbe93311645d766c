#include "burnside/reference_data.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "burnside/beta.hpp"

namespace burnside {

namespace {

ReferenceQuotient quot(int free_rank, std::vector<long> torsion) {
  ReferenceQuotient q;
  q.free_rank = free_rank;
  q.torsion = std::move(torsion);
  return q;
}

std::vector<ReferenceGroup> build_reference_groups() {
  std::vector<ReferenceGroup> out;

  {
    ReferenceGroup g;
    g.name = "C2";
    g.subgroup_tuples = {{2, 1, 1, 1}, {1, 2, 1, 1}};
    g.multiplicities = IntMatrix{{1, 1}, {1, 2}};
    g.h_tilde = IntMatrix{{1, 1}, {0, 1}};
    g.image_column_keys = {{1, 1}, {2, 1}};
    g.image_rows = {{1, 1}, {1, -1}};
    g.coker_rational = quot(0, {});
    g.coker_real = quot(0, {});
    g.coker_complex = quot(0, {});
    out.push_back(std::move(g));
  }
  {
    ReferenceGroup g;
    g.name = "C3";
    g.subgroup_tuples = {{3, 1, 1, 1}, {1, 3, 1, 1}};
    g.multiplicities = IntMatrix{{1, 1}, {1, 3}};
    g.h_tilde = IntMatrix{{1, 1}, {0, 2}};
    g.image_column_keys = {{1, 1}, {3, 1}, {3, 1}};
    g.image_rows = {{1, 1, 1}, {2, -1, -1}};
    g.coker_rational = quot(0, {});
    g.coker_real = quot(0, {});
    g.coker_complex = quot(1, {});
    out.push_back(std::move(g));
  }
  {
    ReferenceGroup g;
    g.name = "C4";
    g.subgroup_tuples = {{4, 1, 1, 1}, {2, 2, 1, 1}, {1, 4, 1, 1}};
    g.multiplicities = IntMatrix{{1, 1, 1}, {1, 2, 2}, {1, 2, 4}};
    g.h_tilde = IntMatrix{{1, 1, 1}, {0, 1, 1}, {0, 0, 2}};
    // Columns follow the published power order 1, i, -1, -i.
    g.image_column_keys = {{1, 1}, {4, 1}, {2, 1}, {4, 1}};
    g.image_rows = {{1, 1, 1, 1}, {1, -1, 1, -1}, {2, 0, -2, 0}};
    g.coker_rational = quot(0, {});
    g.coker_real = quot(0, {});
    g.coker_complex = quot(1, {});
    out.push_back(std::move(g));
  }
  {
    ReferenceGroup g;
    g.name = "2D4";
    g.subgroup_tuples = {{8, 1, 1, 0}, {4, 2, 1, 1}, {4, 2, 1, 1},
                         {4, 2, 1, 1}, {2, 4, 1, 1}, {1, 8, 1, 1}};
    g.multiplicities = IntMatrix{{1, 1, 1, 1, 1, 1}, {1, 2, 1, 1, 2, 2}, {1, 1, 2, 1, 2, 2},
                                 {1, 1, 1, 2, 2, 2}, {1, 2, 2, 2, 4, 4}, {1, 2, 2, 2, 4, 8}};
    g.h_tilde = IntMatrix{{1, 1, 1, 1, 1, 1},
                          {0, 1, 0, 0, 1, 1},
                          {0, 0, 1, 0, 1, 1},
                          {0, 0, 0, 1, 1, 1},
                          {0, 0, 0, 0, 0, 4}};
    g.image_column_keys = {{1, 1}, {2, 1}, {4, 2}, {4, 2}, {4, 2}};
    g.image_rows = {{1, 1, 1, 1, 1},
                    {1, 1, -1, 1, -1},
                    {1, 1, -1, -1, 1},
                    {1, 1, 1, -1, -1},
                    {4, -4, 0, 0, 0}};
    g.coker_rational = quot(0, {});
    g.coker_real = quot(0, {});
    g.coker_complex = quot(0, {2});
    out.push_back(std::move(g));
  }
  {
    ReferenceGroup g;
    g.name = "2D6";
    g.subgroup_tuples = {{12, 1, 1, 0}, {6, 2, 1, 1}, {4, 3, 3, 1},
                         {3, 4, 1, 1},  {2, 6, 1, 1}, {1, 12, 1, 1}};
    g.multiplicities = IntMatrix{{1, 1, 1, 1, 1, 1}, {1, 2, 1, 2, 2, 2},  {1, 1, 2, 1, 3, 3},
                                 {1, 2, 1, 4, 2, 4}, {1, 2, 3, 2, 6, 6},  {1, 2, 3, 4, 6, 12}};
    g.h_tilde = IntMatrix{{1, 1, 1, 1, 1, 1},
                          {0, 1, 0, 1, 1, 1},
                          {0, 0, 1, 0, 2, 2},
                          {0, 0, 0, 2, 0, 2},
                          {0, 0, 0, 0, 0, 4}};
    g.image_column_keys = {{1, 1}, {2, 1}, {3, 2}, {4, 3}, {4, 3}, {6, 2}};
    g.image_rows = {{1, 1, 1, 1, 1, 1},
                    {1, 1, 1, -1, -1, 1},
                    {2, 2, -1, 0, 0, -1},
                    {2, -2, 2, 0, 0, -2},
                    {4, -4, -2, 0, 0, 2}};
    g.coker_rational = quot(0, {});
    g.coker_real = quot(0, {});
    g.coker_complex = quot(1, {2});
    out.push_back(std::move(g));
  }
  {
    ReferenceGroup g;
    g.name = "2D8";
    g.subgroup_tuples = {{16, 1, 1, 0}, {8, 2, 1, 1}, {8, 2, 1, 0}, {8, 2, 1, 0},
                         {4, 4, 2, 1},  {4, 4, 1, 1}, {4, 4, 2, 1}, {2, 8, 1, 1},
                         {1, 16, 1, 1}};
    g.multiplicities = IntMatrix{{1, 1, 1, 1, 1, 1, 1, 1, 1},
                                 {1, 2, 1, 1, 1, 2, 1, 2, 2},
                                 {1, 1, 2, 1, 2, 2, 1, 2, 2},
                                 {1, 1, 1, 2, 1, 2, 2, 2, 2},
                                 {1, 1, 2, 1, 3, 2, 2, 4, 4},
                                 {1, 2, 2, 2, 2, 4, 2, 4, 4},
                                 {1, 1, 1, 2, 2, 2, 3, 4, 4},
                                 {1, 2, 2, 2, 4, 4, 4, 8, 8},
                                 {1, 2, 2, 2, 4, 4, 4, 8, 16}};
    g.h_tilde = IntMatrix{{1, 1, 1, 1, 1, 1, 1, 1, 1},
                          {0, 1, 0, 0, 0, 1, 0, 1, 1},
                          {0, 0, 1, 0, 1, 1, 0, 1, 1},
                          {0, 0, 0, 1, 0, 1, 1, 1, 1},
                          {0, 0, 0, 0, 1, 0, 1, 2, 2},
                          {0, 0, 0, 0, 0, 0, 0, 0, 8}};
    g.image_column_keys = {{1, 1}, {2, 1}, {4, 2}, {4, 4}, {4, 4}, {8, 2}, {8, 2}};
    g.image_rows = {{1, 1, 1, 1, 1, 1, 1},
                    {1, 1, 1, -1, 1, -1, -1},
                    {1, 1, 1, -1, -1, 1, 1},
                    {1, 1, 1, 1, -1, -1, -1},
                    {2, 2, -2, 0, 0, 0, 0},
                    {8, -8, 0, 0, 0, 0, 0}};
    g.coker_rational = quot(0, {});
    g.coker_real = quot(1, {});
    g.coker_complex = quot(1, {2});
    out.push_back(std::move(g));
  }
  {
    ReferenceGroup g;
    g.name = "2D10";
    g.subgroup_tuples = {{20, 1, 1, 0}, {10, 2, 1, 1}, {5, 4, 1, 1},
                         {4, 5, 5, 1},  {2, 10, 1, 1}, {1, 20, 1, 1}};
    g.multiplicities = IntMatrix{{1, 1, 1, 1, 1, 1},   {1, 2, 2, 1, 2, 2},
                                 {1, 2, 4, 1, 2, 4},   {1, 1, 1, 3, 5, 5},
                                 {1, 2, 2, 5, 10, 10}, {1, 2, 4, 5, 10, 20}};
    g.h_tilde = IntMatrix{{1, 1, 1, 1, 1, 1},
                          {0, 1, 1, 0, 1, 1},
                          {0, 0, 2, 0, 0, 2},
                          {0, 0, 0, 2, 4, 4},
                          {0, 0, 0, 0, 0, 8}};
    g.image_column_keys = {{1, 1}, {2, 1}, {4, 5}, {4, 5}, {5, 2}, {5, 2}, {10, 2}, {10, 2}};
    g.image_rows = {{1, 1, 1, 1, 1, 1, 1, 1},
                    {1, 1, -1, -1, 1, 1, 1, 1},
                    {2, -2, 0, 0, 2, 2, -2, -2},
                    {4, 4, 0, 0, -1, -1, -1, -1},
                    {8, -8, 0, 0, -2, -2, 2, 2}};
    g.coker_rational = quot(0, {});
    g.coker_real = quot(2, {});
    g.coker_complex = quot(3, {2});
    out.push_back(std::move(g));
  }
  {
    ReferenceGroup g;
    g.name = "2D12";
    g.subgroup_tuples = {{24, 1, 1, 0}, {12, 2, 1, 1}, {12, 2, 1, 0}, {12, 2, 1, 0},
                         {8, 3, 3, 0},  {6, 4, 1, 1},  {4, 6, 3, 1},  {4, 6, 1, 1},
                         {4, 6, 3, 1},  {3, 8, 1, 1},  {2, 12, 1, 1}, {1, 24, 1, 1}};
    g.multiplicities = IntMatrix{{1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
                                 {1, 2, 1, 1, 1, 2, 1, 2, 1, 2, 2, 2},
                                 {1, 1, 2, 1, 1, 2, 2, 1, 1, 2, 2, 2},
                                 {1, 1, 1, 2, 1, 2, 1, 1, 2, 2, 2, 2},
                                 {1, 1, 1, 1, 2, 1, 2, 3, 2, 1, 3, 3},
                                 {1, 2, 2, 2, 1, 4, 2, 2, 2, 4, 4, 4},
                                 {1, 1, 2, 1, 2, 2, 4, 3, 3, 2, 6, 6},
                                 {1, 2, 1, 1, 3, 2, 3, 6, 3, 2, 6, 6},
                                 {1, 1, 1, 2, 2, 2, 3, 3, 4, 2, 6, 6},
                                 {1, 2, 2, 2, 1, 4, 2, 2, 2, 8, 4, 8},
                                 {1, 2, 2, 2, 3, 4, 6, 6, 6, 4, 12, 12},
                                 {1, 2, 2, 2, 3, 4, 6, 6, 6, 8, 12, 24}};
    g.h_tilde = IntMatrix{{1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
                          {0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 1, 1},
                          {0, 0, 1, 0, 0, 1, 1, 0, 0, 1, 1, 1},
                          {0, 0, 0, 1, 0, 1, 0, 0, 1, 1, 1, 1},
                          {0, 0, 0, 0, 1, 0, 1, 2, 1, 0, 2, 2},
                          {0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 2, 2},
                          {0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 4},
                          {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 8}};
    g.image_column_keys = {{1, 1}, {2, 1}, {3, 2}, {4, 6}, {4, 6},
                           {4, 2}, {6, 2}, {12, 2}, {12, 2}};
    g.image_rows = {{1, 1, 1, 1, 1, 1, 1, 1, 1},
                    {1, 1, 1, -1, -1, 1, 1, 1, 1},
                    {1, 1, 1, -1, 1, -1, 1, -1, -1},
                    {1, 1, 1, 1, -1, -1, 1, -1, -1},
                    {2, 2, -1, 0, 0, 2, -1, -1, -1},
                    {2, 2, -1, 0, 0, -2, -1, 1, 1},
                    {4, -4, 4, 0, 0, 0, -4, 0, 0},
                    {8, -8, -4, 0, 0, 0, 4, 0, 0}};
    g.coker_rational = quot(0, {});
    g.coker_real = quot(1, {});
    g.coker_complex = quot(1, {2, 2});
    out.push_back(std::move(g));
  }
  {
    ReferenceGroup g;
    g.name = "2D14";
    g.subgroup_tuples = {{28, 1, 1, 0}, {14, 2, 1, 1}, {7, 4, 1, 1},
                         {4, 7, 7, 1},  {2, 14, 1, 1}, {1, 28, 1, 1}};
    g.multiplicities = IntMatrix{{1, 1, 1, 1, 1, 1},   {1, 2, 2, 1, 2, 2},
                                 {1, 2, 4, 1, 2, 4},   {1, 1, 1, 4, 7, 7},
                                 {1, 2, 2, 7, 14, 14}, {1, 2, 4, 7, 14, 28}};
    g.h_tilde = IntMatrix{{1, 1, 1, 1, 1, 1},
                          {0, 1, 1, 0, 1, 1},
                          {0, 0, 2, 0, 0, 2},
                          {0, 0, 0, 3, 6, 6},
                          {0, 0, 0, 0, 0, 12}};
    g.image_column_keys = {{1, 1}, {2, 1}, {4, 7}, {4, 7}, {7, 2},
                           {7, 2}, {7, 2}, {14, 2}, {14, 2}, {14, 2}};
    g.image_rows = {{1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
                    {1, 1, -1, -1, 1, 1, 1, 1, 1, 1},
                    {2, -2, 0, 0, 2, 2, 2, -2, -2, -2},
                    {6, 6, 0, 0, -1, -1, -1, -1, -1, -1},
                    {12, -12, 0, 0, -2, -2, -2, 2, 2, 2}};
    out.push_back(std::move(g));
  }
  {
    ReferenceGroup g;
    g.name = "2D16";
    g.subgroup_tuples = {{32, 1, 1, 0}, {16, 2, 1, 0}, {16, 2, 1, 1}, {16, 2, 1, 0},
                         {8, 4, 1, 1},  {8, 4, 2, 0},  {8, 4, 2, 0},  {4, 8, 4, 1},
                         {4, 8, 4, 1},  {4, 8, 1, 1},  {2, 16, 1, 1}, {1, 32, 1, 1}};
    g.multiplicities = IntMatrix{{1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
                                 {1, 2, 1, 1, 2, 1, 2, 2, 1, 2, 2, 2},
                                 {1, 1, 2, 1, 2, 1, 1, 1, 1, 2, 2, 2},
                                 {1, 1, 1, 2, 2, 2, 1, 1, 2, 2, 2, 2},
                                 {1, 2, 2, 2, 4, 2, 2, 2, 2, 4, 4, 4},
                                 {1, 1, 1, 2, 2, 3, 2, 2, 3, 4, 4, 4},
                                 {1, 2, 1, 1, 2, 2, 3, 3, 2, 4, 4, 4},
                                 {1, 2, 1, 1, 2, 2, 3, 5, 4, 4, 8, 8},
                                 {1, 1, 1, 2, 2, 3, 2, 4, 5, 4, 8, 8},
                                 {1, 2, 2, 2, 4, 4, 4, 4, 4, 8, 8, 8},
                                 {1, 2, 2, 2, 4, 4, 4, 8, 8, 8, 16, 16},
                                 {1, 2, 2, 2, 4, 4, 4, 8, 8, 8, 16, 32}};
    g.h_tilde = IntMatrix{{1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
                          {0, 1, 0, 0, 1, 0, 1, 1, 0, 1, 1, 1},
                          {0, 0, 1, 0, 1, 0, 0, 0, 0, 1, 1, 1},
                          {0, 0, 0, 1, 1, 1, 0, 0, 1, 1, 1, 1},
                          {0, 0, 0, 0, 0, 1, 1, 1, 1, 2, 2, 2},
                          {0, 0, 0, 0, 0, 0, 0, 2, 2, 0, 4, 4},
                          {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 16}};
    g.image_column_keys = {{1, 1}, {2, 1}, {4, 8}, {4, 8}, {4, 2}, {8, 2},
                           {8, 2}, {16, 2}, {16, 2}, {16, 2}, {16, 2}};
    g.image_rows = {{1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
                    {1, 1, 1, -1, 1, 1, 1, -1, -1, -1, -1},
                    {1, 1, -1, -1, 1, 1, 1, 1, 1, 1, 1},
                    {1, 1, -1, 1, 1, 1, 1, -1, -1, -1, -1},
                    {2, 2, 0, 0, 2, -2, -2, 0, 0, 0, 0},
                    {4, 4, 0, 0, -4, 0, 0, 0, 0, 0, 0},
                    {16, -16, 0, 0, 0, 0, 0, 0, 0, 0, 0}};
    out.push_back(std::move(g));
  }
  {
    ReferenceGroup g;
    g.name = "2T";
    g.subgroup_tuples = {{24, 1, 1, 0}, {8, 3, 1, 0},  {6, 4, 4, 1}, {4, 6, 3, 1},
                         {3, 8, 4, 1},  {2, 12, 1, 1}, {1, 24, 1, 1}};
    g.multiplicities = IntMatrix{{1, 1, 1, 1, 1, 1, 1},    {1, 3, 1, 3, 1, 3, 3},
                                 {1, 1, 2, 2, 2, 4, 4},    {1, 3, 2, 4, 2, 6, 6},
                                 {1, 1, 2, 2, 4, 4, 8},    {1, 3, 4, 6, 4, 12, 12},
                                 {1, 3, 4, 6, 8, 12, 24}};
    g.h_tilde = IntMatrix{{1, 1, 1, 1, 1, 1, 1},
                          {0, 2, 0, 2, 0, 2, 2},
                          {0, 0, 1, 1, 1, 3, 3},
                          {0, 0, 0, 0, 2, 0, 4},
                          {0, 0, 0, 0, 0, 0, 4}};
    g.image_column_keys = {{1, 1}, {2, 1}, {3, 4}, {3, 4}, {4, 6}, {6, 4}, {6, 4}};
    g.image_rows = {{1, 1, 1, 1, 1, 1, 1},
                    {2, 2, -1, -1, 2, -1, -1},
                    {3, 3, 0, 0, -1, 0, 0},
                    {4, -4, 1, 1, 0, -1, -1},
                    {4, -4, -2, -2, 0, 2, 2}};
    g.coker_rational = quot(0, {});
    g.coker_real = quot(0, {});
    g.coker_complex = quot(2, {2});
    out.push_back(std::move(g));
  }
  {
    ReferenceGroup g;
    g.name = "2O";
    g.subgroup_tuples = {{48, 1, 1, 0}, {24, 2, 1, 0}, {16, 3, 3, 0}, {12, 4, 4, 0},
                         {8, 6, 3, 0},  {8, 6, 1, 0},  {8, 6, 3, 1},  {6, 8, 4, 1},
                         {4, 12, 6, 1}, {4, 12, 3, 1}, {3, 16, 4, 1}, {2, 24, 1, 1},
                         {1, 48, 1, 1}};
    g.multiplicities = IntMatrix{{1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
                                 {1, 2, 1, 1, 1, 2, 1, 2, 1, 2, 2, 2, 2},
                                 {1, 1, 2, 1, 2, 3, 2, 1, 2, 3, 1, 3, 3},
                                 {1, 1, 1, 2, 2, 1, 1, 2, 3, 2, 2, 4, 4},
                                 {1, 1, 2, 2, 3, 3, 2, 2, 4, 4, 2, 6, 6},
                                 {1, 2, 3, 1, 3, 6, 3, 2, 3, 6, 2, 6, 6},
                                 {1, 1, 2, 1, 2, 3, 3, 2, 3, 4, 2, 6, 6},
                                 {1, 2, 1, 2, 2, 2, 2, 4, 4, 4, 4, 8, 8},
                                 {1, 1, 2, 3, 4, 3, 3, 4, 7, 6, 4, 12, 12},
                                 {1, 2, 3, 2, 4, 6, 4, 4, 6, 8, 4, 12, 12},
                                 {1, 2, 1, 2, 2, 2, 2, 4, 4, 4, 8, 8, 16},
                                 {1, 2, 3, 4, 6, 6, 6, 8, 12, 12, 8, 24, 24},
                                 {1, 2, 3, 4, 6, 6, 6, 8, 12, 12, 16, 24, 48}};
    g.h_tilde = IntMatrix{{1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
                          {0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 1, 1, 1},
                          {0, 0, 1, 0, 1, 2, 1, 0, 1, 2, 0, 2, 2},
                          {0, 0, 0, 1, 1, 0, 0, 1, 2, 1, 1, 3, 3},
                          {0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 3, 3},
                          {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 8},
                          {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 8}};
    g.image_column_keys = {{1, 1}, {2, 1}, {3, 8}, {4, 6}, {4, 12}, {6, 8}, {8, 6}, {8, 6}};
    g.image_rows = {{1, 1, 1, 1, 1, 1, 1, 1},
                    {1, 1, 1, 1, -1, 1, -1, -1},
                    {2, 2, -1, 2, 0, -1, 0, 0},
                    {3, 3, 0, -1, 1, 0, -1, -1},
                    {3, 3, 0, -1, -1, 0, 1, 1},
                    {8, -8, 2, 0, 0, -2, 0, 0},
                    {8, -8, -4, 0, 0, 4, 0, 0}};
    g.coker_rational = quot(0, {});
    g.coker_real = quot(1, {});
    g.coker_complex = quot(1, {2, 2});
    out.push_back(std::move(g));
  }
  {
    ReferenceGroup g;
    g.name = "2I";
    g.subgroup_tuples = {{120, 1, 1, 0}, {24, 5, 5, 0},  {20, 6, 6, 0},  {12, 10, 10, 0},
                         {10, 12, 6, 1}, {8, 15, 5, 0},  {6, 20, 10, 1}, {5, 24, 6, 1},
                         {4, 30, 15, 1}, {3, 40, 10, 1}, {2, 60, 1, 1},  {1, 120, 1, 1}};
    g.multiplicities = IntMatrix{{1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
                                 {1, 2, 1, 2, 1, 2, 3, 1, 3, 3, 5, 5},
                                 {1, 1, 2, 2, 2, 3, 2, 2, 4, 2, 6, 6},
                                 {1, 2, 2, 3, 2, 4, 4, 2, 6, 4, 10, 10},
                                 {1, 1, 2, 2, 4, 3, 4, 4, 6, 4, 12, 12},
                                 {1, 2, 3, 4, 3, 6, 5, 3, 9, 5, 15, 15},
                                 {1, 3, 2, 4, 4, 5, 8, 4, 10, 8, 20, 20},
                                 {1, 1, 2, 2, 4, 3, 4, 8, 6, 8, 12, 24},
                                 {1, 3, 4, 6, 6, 9, 10, 6, 16, 10, 30, 30},
                                 {1, 3, 2, 4, 4, 5, 8, 8, 10, 16, 20, 40},
                                 {1, 5, 6, 10, 12, 15, 20, 12, 30, 20, 60, 60},
                                 {1, 5, 6, 10, 12, 15, 20, 24, 30, 40, 60, 120}};
    g.h_tilde = IntMatrix{{1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
                          {0, 1, 0, 1, 0, 1, 2, 0, 2, 2, 4, 4},
                          {0, 0, 1, 1, 1, 2, 1, 1, 3, 1, 5, 5},
                          {0, 0, 0, 0, 2, 0, 2, 2, 2, 2, 6, 6},
                          {0, 0, 0, 0, 0, 0, 0, 4, 0, 4, 0, 12},
                          {0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 8},
                          {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 8}};
    g.image_column_keys = {{1, 1}, {2, 1}, {3, 20}, {4, 30}, {5, 12},
                           {5, 12}, {6, 20}, {10, 12}, {10, 12}};
    g.image_rows = {{1, 1, 1, 1, 1, 1, 1, 1, 1},
                    {4, 4, 1, 0, -1, -1, 1, -1, -1},
                    {5, 5, -1, 1, 0, 0, -1, 0, 0},
                    {6, 6, 0, -2, 1, 1, 0, 1, 1},
                    {12, -12, 0, 0, 2, 2, 0, -2, -2},
                    {8, -8, 2, 0, -2, -2, -2, 2, 2},
                    {8, -8, -4, 0, -2, -2, 4, 2, 2}};
    g.coker_rational = quot(0, {});
    g.coker_real = quot(2, {});
    g.coker_complex = quot(2, {2, 2, 2});
    out.push_back(std::move(g));
  }
  {
    ReferenceGroup g;
    g.name = "GL2F3";
    // The cyclic flag and conjugate counts of the order-6 and order-2 classes
    // follow the multiplicity matrix: the row with entry 2 against the index-2
    // subgroup is the cyclic C6, and the central order-2 class is the one with
    // diagonal entry 24.
    g.subgroup_tuples = {{48, 1, 1, 0}, {24, 2, 1, 0}, {16, 3, 3, 0}, {12, 4, 4, 0},
                         {8, 6, 3, 1},  {8, 6, 1, 0},  {8, 6, 3, 0},  {6, 8, 4, 1},
                         {6, 8, 4, 0},  {6, 8, 4, 0},  {4, 12, 6, 0}, {4, 12, 3, 1},
                         {3, 16, 4, 1}, {2, 24, 12, 1}, {2, 24, 1, 1}, {1, 48, 1, 1}};
    g.multiplicities =
        IntMatrix{{1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
                  {1, 2, 1, 1, 1, 2, 1, 2, 1, 1, 1, 2, 2, 1, 2, 2},
                  {1, 1, 2, 1, 2, 3, 2, 1, 1, 1, 2, 3, 1, 2, 3, 3},
                  {1, 1, 1, 2, 1, 1, 2, 2, 2, 2, 3, 2, 2, 3, 4, 4},
                  {1, 1, 2, 1, 3, 3, 2, 2, 1, 1, 3, 4, 2, 3, 6, 6},
                  {1, 2, 3, 1, 3, 6, 3, 2, 1, 1, 3, 6, 2, 3, 6, 6},
                  {1, 1, 2, 2, 2, 3, 3, 2, 2, 2, 4, 4, 2, 4, 6, 6},
                  {1, 2, 1, 2, 2, 2, 2, 4, 2, 2, 4, 4, 4, 4, 8, 8},
                  {1, 1, 1, 2, 1, 1, 2, 2, 3, 3, 3, 2, 4, 5, 4, 8},
                  {1, 1, 1, 2, 1, 1, 2, 2, 3, 3, 3, 2, 4, 5, 4, 8},
                  {1, 1, 2, 3, 3, 3, 4, 4, 3, 3, 7, 6, 4, 7, 12, 12},
                  {1, 2, 3, 2, 4, 6, 4, 4, 2, 2, 6, 8, 4, 6, 12, 12},
                  {1, 2, 1, 2, 2, 2, 2, 4, 4, 4, 4, 4, 8, 8, 8, 16},
                  {1, 1, 2, 3, 3, 3, 4, 4, 5, 5, 7, 6, 8, 13, 12, 24},
                  {1, 2, 3, 4, 6, 6, 6, 8, 4, 4, 12, 12, 8, 12, 24, 24},
                  {1, 2, 3, 4, 6, 6, 6, 8, 8, 8, 12, 12, 16, 24, 24, 48}};
    g.h_tilde = IntMatrix{{1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
                          {0, 1, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1, 1, 0, 1, 1},
                          {0, 0, 1, 0, 1, 2, 1, 0, 0, 0, 1, 2, 0, 1, 2, 2},
                          {0, 0, 0, 1, 0, 0, 1, 1, 1, 1, 2, 1, 1, 2, 3, 3},
                          {0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 1, 1, 1, 3, 3},
                          {0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 2, 2, 0, 4},
                          {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 4}};
    g.image_column_keys = {{1, 1}, {2, 1}, {2, 12}, {3, 8}, {4, 6}, {6, 8}, {8, 6}, {8, 6}};
    g.image_rows = {{1, 1, 1, 1, 1, 1, 1, 1},
                    {1, 1, -1, 1, 1, 1, -1, -1},
                    {2, 2, 0, -1, 2, -1, 0, 0},
                    {3, 3, 1, 0, -1, 0, -1, -1},
                    {3, 3, -1, 0, -1, 0, 1, 1},
                    {4, -4, 0, 1, 0, -1, 0, 0},
                    {4, -4, 0, -2, 0, 2, 0, 0}};
    g.coker_rational = quot(0, {});
    g.coker_real = quot(0, {});
    g.coker_complex = quot(1, {});
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

const std::vector<ReferenceGroup>& reference_groups() {
  static const std::vector<ReferenceGroup> groups = build_reference_groups();
  return groups;
}

const ReferenceGroup& reference_group(const std::string& name) {
  for (const auto& g : reference_groups())
    if (g.name == name) return g;
  throw std::invalid_argument("reference_group: no data for " + name);
}

const std::vector<std::string>& integral_real_vanishing_set() {
  static const std::vector<std::string> names = {"C2",  "C3",   "C4",   "2D4", "2D6",
                                                 "2D8", "2D10", "2D12", "2T",  "2O",
                                                 "2I",  "GL2F3", "2D14", "2D16"};
  return names;
}

namespace {

using Tuple4 = std::array<long, 4>;

// All bijections between equal-key position groups, applied to `perm` which
// maps reference positions to computed positions.  Invokes visit for every
// complete assignment until it returns true.
template <typename Key>
bool match_assignments(const std::vector<Key>& ref_keys, const std::vector<Key>& my_keys,
                       const std::function<bool(const std::vector<int>&)>& visit) {
  if (ref_keys.size() != my_keys.size()) return false;
  std::map<Key, std::vector<int>> ref_by, my_by;
  for (int i = 0; i < int(ref_keys.size()); ++i) ref_by[ref_keys[i]].push_back(i);
  for (int i = 0; i < int(my_keys.size()); ++i) my_by[my_keys[i]].push_back(i);
  if (ref_by.size() != my_by.size()) return false;
  for (const auto& [k, v] : ref_by) {
    auto it = my_by.find(k);
    if (it == my_by.end() || it->second.size() != v.size()) return false;
  }
  std::vector<std::pair<std::vector<int>, std::vector<int>>> blocks;
  for (const auto& [k, v] : ref_by) blocks.push_back({v, my_by[k]});
  std::vector<int> perm(ref_keys.size(), -1);
  std::function<bool(size_t)> rec = [&](size_t b) -> bool {
    if (b == blocks.size()) return visit(perm);
    std::vector<int> targets = blocks[b].second;
    std::sort(targets.begin(), targets.end());
    do {
      for (size_t i = 0; i < targets.size(); ++i) perm[blocks[b].first[i]] = targets[i];
      if (rec(b + 1)) return true;
    } while (std::next_permutation(targets.begin(), targets.end()));
    return false;
  };
  return rec(0);
}

std::string quotient_string(int free_rank, const std::vector<long>& torsion) {
  std::ostringstream os;
  os << "free " << free_rank << ", torsion (";
  for (size_t i = 0; i < torsion.size(); ++i) os << (i ? "," : "") << torsion[i];
  os << ")";
  return os.str();
}

}  // namespace

std::vector<ReferenceCheckResult> run_reference_checks() {
  std::vector<ReferenceCheckResult> results;
  for (const auto& ref : reference_groups()) {
    auto add = [&](const std::string& check, bool passed, const std::string& detail) {
      results.push_back({ref.name, check, passed, detail});
    };
    BetaReport rep;
    try {
      rep = analyze(parse_catalog_name(ref.name).value(),
                    {FieldTag::Rational, FieldTag::Real, FieldTag::Complex});
    } catch (const std::exception& e) {
      add("pipeline", false, e.what());
      continue;
    }
    const int m = int(rep.marks.classes.size());

    // Subgroup tuples, compared in the decreasing presentation order.
    std::vector<Tuple4> my_tuples;
    for (int i = m - 1; i >= 0; --i) {
      const SubgroupClass& c = rep.marks.classes[i];
      my_tuples.push_back({long(c.order), long(c.index), long(c.conjugate_count),
                           c.is_cyclic ? 1L : 0L});
    }
    {
      std::vector<Tuple4> a = my_tuples, b = ref.subgroup_tuples;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      add("subgroup tuples", a == b, a == b ? "" : "tuple multisets differ");
    }

    // Multiplicity matrix up to permutations within equal-tuple blocks.
    bool m_ok =
        int(ref.subgroup_tuples.size()) == m &&
        match_assignments<Tuple4>(ref.subgroup_tuples, my_tuples,
                                  [&](const std::vector<int>& perm) {
                                    for (int i = 0; i < m; ++i)
                                      for (int j = 0; j < m; ++j)
                                        if (rep.image.multiplicities.at(perm[i], perm[j]) !=
                                            ref.multiplicities.at(i, j))
                                          return false;
                                    return true;
                                  });
    add("multiplicities", m_ok, m_ok ? "" : "no tuple-respecting match");

    // Reduced form of the published matrix must reproduce the published rows.
    {
      bool h_ok = false;
      std::string detail;
      try {
        RowReduction red = row_reduce_upper(ref.multiplicities);
        h_ok = red.h_tilde == ref.h_tilde;
        if (!h_ok) detail = "reduced rows differ";
      } catch (const std::exception& e) {
        detail = e.what();
      }
      add("reduced form", h_ok, detail);
    }

    // Image characters as a multiset of rows, columns matched by
    // (element order, class size).
    {
      std::vector<std::pair<int, int>> my_keys;
      for (int c = 0; c < rep.classes.count(); ++c)
        my_keys.push_back({rep.classes.element_orders[c], rep.classes.sizes[c]});
      std::vector<std::vector<long>> ref_rows = ref.image_rows;
      std::sort(ref_rows.begin(), ref_rows.end());
      bool rows_ok =
          ref.image_rows.size() == rep.image_chars.size() &&
          match_assignments<std::pair<int, int>>(
              ref.image_column_keys, my_keys, [&](const std::vector<int>& perm) {
                std::vector<std::vector<long>> mine;
                for (const auto& chi : rep.image_chars) {
                  std::vector<long> row;
                  for (size_t j = 0; j < perm.size(); ++j) {
                    const Cyclotomic& v = chi.values[perm[j]];
                    if (!v.is_integer()) return false;
                    row.push_back(long(v.rational_value().get_num().get_si()));
                  }
                  mine.push_back(std::move(row));
                }
                std::sort(mine.begin(), mine.end());
                return mine == ref_rows;
              });
      add("image characters", rows_ok, rows_ok ? "" : "no column-respecting row match");
    }

    // Cokernel invariants over the recorded fields.
    auto check_coker = [&](const char* label, FieldTag tag,
                           const std::optional<ReferenceQuotient>& want) {
      if (!want) return;
      const CokernelPresentation& got = rep.cokernels.at(tag);
      std::vector<long> factors;
      for (const auto& f : got.quotient.invariant_factors) factors.push_back(f.get_si());
      bool ok = got.quotient.free_rank == want->free_rank && factors == want->torsion;
      add(label, ok,
          ok ? "" : "got " + quotient_string(got.quotient.free_rank, factors) + ", want " +
                        quotient_string(want->free_rank, want->torsion));
    };
    check_coker("cokernel over Q", FieldTag::Rational, ref.coker_rational);
    check_coker("cokernel over R", FieldTag::Real, ref.coker_real);
    check_coker("cokernel over C", FieldTag::Complex, ref.coker_complex);
  }
  return results;
}

}  // namespace burnside
