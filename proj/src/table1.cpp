/*
 * Copyright 2026 The meshscramble Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "meshscramble/table1.hpp"

namespace meshscramble {

namespace {

constexpr std::array<Table1Entry, 99> kTable1{{
    {2, 3}, {3, 7}, {4, 7}, {5, 20}, {6, 23}, {7, 19},
    {8, 27}, {9, 79}, {10, 31}, {11, 88}, {12, 46}, {13, 150},
    {14, 180}, {15, 103}, {16, 197}, {17, 242}, {18, 270}, {19, 121},
    {20, 220}, {21, 438}, {22, 402}, {23, 367}, {24, 455}, {25, 478},
    {26, 362}, {27, 667}, {28, 514}, {29, 262}, {30, 678}, {31, 697},
    {32, 414}, {33, 507}, {34, 620}, {35, 512}, {36, 492}, {37, 1357},
    {38, 687}, {39, 751}, {40, 1110}, {41, 1065}, {42, 824}, {43, 813},
    {44, 1221}, {45, 912}, {46, 1435}, {47, 1347}, {48, 877}, {49, 2015},
    {50, 1391}, {51, 1341}, {52, 1090}, {53, 2370}, {54, 2182}, {55, 974},
    {56, 2508}, {57, 2064}, {58, 2955}, {59, 2146}, {60, 2392}, {61, 2452},
    {62, 2171}, {63, 1448}, {64, 2687}, {65, 1957}, {66, 4046}, {67, 3069},
    {68, 1116}, {69, 1501}, {70, 3539}, {71, 2219}, {72, 2064}, {73, 2542},
    {74, 3191}, {75, 3194}, {76, 5085}, {77, 5329}, {78, 2831}, {79, 6060},
    {80, 3140}, {81, 5390}, {82, 3007}, {83, 4786}, {84, 6970}, {85, 4012},
    {86, 3213}, {87, 5143}, {88, 7488}, {89, 7685}, {90, 5941}, {91, 3383},
    {92, 6903}, {93, 2521}, {94, 4930}, {95, 5869}, {96, 6214}, {97, 4419},
    {98, 3173}, {99, 5150}, {100, 7984},
}};

}  // namespace

std::span<const Table1Entry> table1() { return kTable1; }

bool table1_well_formed(std::span<const Table1Entry> fixture) {
  if (fixture.size() != 99) return false;
  for (std::size_t i = 0; i < fixture.size(); ++i) {
    if (fixture[i].order != i + 2) return false;
  }
  return true;
}

}  // namespace meshscramble
